"""Left-ideal Groebner bases in the quantum plane ``Q(t)[l, m]``, ``lm = t^2 ml``.

Polynomials are stored in monomial coordinates ``sum c_{p,q} l^p m^q`` and
ordered lexicographically with ``l > m``, so a power product is just the tuple
``(p, q)`` and Python tuple comparison is the monomial order.

Every engine entry point takes an optional ``t0``.  With ``t0=None`` the
parameter is symbolic; with a number the coefficients are specialized first
and the commutation twist becomes ``t0^{-2bp}`` (at ``t0 = -1`` the ring is
commutative).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coefficients import TPoly, TRat, as_coeff, simplify

__all__ = [
    "PlanePoly",
    "GroebnerBasis",
    "lex_less",
    "mono_left_mul",
    "plane_mul",
    "reduce",
    "s_polynomial",
    "buchberger",
    "saturate_monomials",
    "specialize_poly",
]


class PlanePoly:
    """Element of the quantum plane in monomial coordinates."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for (p, q), c in terms.items():
                if p < 0 or q < 0:
                    raise ValueError(f"negative exponent ({p}, {q}) in a quantum plane polynomial")
                c = simplify(as_coeff(c))
                if c:
                    clean[(int(p), int(q))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "PlanePoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, p: int, q: int, c=1) -> "PlanePoly":
        return cls({(p, q): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms from the leading power product down."""
        return sorted(self._terms.items(), reverse=True)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, PlanePoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @property
    def lpp(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading power product")
        return max(self._terms)

    @property
    def lc(self):
        return self._terms[self.lpp]

    def __add__(self, other):
        res = dict(self._terms)
        for k, c in other._terms.items():
            v = simplify(res[k] + c) if k in res else c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return PlanePoly._raw(res)

    def __neg__(self):
        return PlanePoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PlanePoly":
        c = as_coeff(c)
        if not c:
            return PlanePoly._raw({})
        return PlanePoly._raw({k: simplify(v * c) for k, v in self._terms.items()})

    def monic(self) -> "PlanePoly":
        lc = self.lc
        if lc == 1:
            return self
        return self.scale(TRat(1) / lc)

    def map_coefficients(self, fn) -> "PlanePoly":
        return PlanePoly({k: fn(c) for k, c in self._terms.items()})

    def to_qt(self):
        from .quantum_torus import QTElement

        return QTElement.from_monomials(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for (p, q), c in self.items():
            mono = "*".join(
                s for s in (
                    "" if p == 0 else ("l" if p == 1 else f"l^{p}"),
                    "" if q == 0 else ("m" if q == 1 else f"m^{q}"),
                ) if s
            )
            cs = str(c)
            if not mono:
                out.append(f"({cs})" if " " in cs.strip("-") or "/" in cs else cs)
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append(f"-{mono}")
            else:
                out.append(f"({cs})*{mono}" if " " in cs.strip("-") or "/" in cs else f"{cs}*{mono}")
        s = out[0]
        for piece in out[1:]:
            s += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return s

    def __repr__(self):
        return f"PlanePoly({str(self)!r})"


def lex_less(pp1: tuple, pp2: tuple) -> bool:
    """``l^p m^q < l^r m^s`` iff ``p < r``, or ``p == r`` and ``q < s``."""
    return tuple(pp1) < tuple(pp2)


def _twist_factor(k: int, t0):
    if t0 is None:
        return TPoly.monomial(k)
    return TPoly.const(Fraction(t0) ** k)


def _twisted(c, k: int, t0):
    if not k:
        return c
    if t0 is None:
        return c.shift(k)
    return c * _twist_factor(k, t0)


def mono_left_mul(a: int, b: int, f: PlanePoly, t0=None) -> PlanePoly:
    """``(l^a m^b) * f``, using ``m^b l^p = t^{-2bp} l^p m^b``."""
    if a < 0 or b < 0:
        raise ValueError("monomial exponents must be nonnegative")
    if not a and not b:
        return f
    return PlanePoly._raw({(p + a, q + b): _twisted(c, -2 * b * p, t0) for (p, q), c in f._terms.items()})


def plane_mul(f: PlanePoly, g: PlanePoly, t0=None) -> PlanePoly:
    """Full product in the quantum plane."""
    acc = PlanePoly()
    for (a, b), c in f._terms.items():
        acc = acc + mono_left_mul(a, b, g, t0).scale(c)
    return acc


def specialize_poly(f: PlanePoly, t0) -> PlanePoly:
    """Evaluate every coefficient at ``t = t0``."""
    return PlanePoly({k: TPoly.const(c.specialize(t0)) for k, c in f._terms.items()})


def _divides(small: tuple, big: tuple) -> bool:
    return small[0] <= big[0] and small[1] <= big[1]


def _div(c, d):
    if isinstance(c, TPoly) and isinstance(d, TPoly) and d.is_monomial():
        return c * d ** -1
    return simplify(c / d)


def reduce(f: PlanePoly, G: Sequence[PlanePoly], t0=None) -> PlanePoly:
    """Full left reduction of ``f`` modulo ``G``.

    No power product of the remainder is divisible by a leading power product
    of ``G``, and ``f - remainder`` lies in the left ideal generated by ``G``.
    """
    G = [g for g in G if g]
    if not G:
        return f
    leads = [(g.lpp, g) for g in G]
    work = dict(f._terms)
    rem: dict = {}
    while work:
        pp = max(work)
        c = work[pp]
        for lp, g in leads:
            if _divides(lp, pp):
                h = mono_left_mul(pp[0] - lp[0], pp[1] - lp[1], g, t0)
                factor = _div(c, h._terms[pp])
                for k, v in h._terms.items():
                    nv = simplify(work[k] - factor * v) if k in work else simplify(-factor * v)
                    if nv:
                        work[k] = nv
                    else:
                        work.pop(k, None)
                work.pop(pp, None)
                break
        else:
            rem[pp] = c
            del work[pp]
    return PlanePoly._raw(rem)


def s_polynomial(f: PlanePoly, g: PlanePoly, t0=None) -> PlanePoly:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    (pf, qf), (pg, qg) = f.lpp, g.lpp
    P, Q = max(pf, pg), max(qf, qg)
    fl = mono_left_mul(P - pf, Q - qf, f, t0)
    gl = mono_left_mul(P - pg, Q - qg, g, t0)
    return fl.monic() - gl.monic()


@dataclass(frozen=True)
class GroebnerBasis:
    """Minimal reduced monic basis, sorted by leading power product."""

    polys: tuple

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def reduce(self, f: PlanePoly, t0=None) -> PlanePoly:
        return reduce(f, self.polys, t0)

    def contains(self, f: PlanePoly, t0=None) -> bool:
        return not reduce(f, self.polys, t0)

    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].lpp == (0, 0)

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.polys) + "}"


def _prepare(gens: Iterable[PlanePoly], t0) -> list:
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    if t0 is not None:
        gens = [specialize_poly(g, t0) for g in gens]
    gens = [g.monic() for g in gens if g]
    if not gens:
        raise ValueError("all generators are zero")
    return gens


def _minimal_reduced(G: list, t0) -> GroebnerBasis:
    G = sorted(G, key=lambda g: g.lpp)
    minimal = []
    for g in G:
        if not any(_divides(h.lpp, g.lpp) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = PlanePoly._raw({g.lpp: g.lc})
        tail = reduce(g - lead, others, t0)
        out.append((lead + tail).monic())
    return GroebnerBasis(tuple(sorted(out, key=lambda g: g.lpp)))


def buchberger(gens: Iterable[PlanePoly], t0=None) -> GroebnerBasis:
    """The unique minimal reduced monic Groebner basis of a left ideal."""
    G = _prepare(gens, t0)
    G = [reduce(g, G[:i], t0) for i, g in enumerate(G)]
    G = [g.monic() for g in G if g]

    def lcm(i, j):
        a, b = G[i].lpp, G[j].lpp
        return (max(a[0], b[0]), max(a[1], b[1]))

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        # normal strategy: smallest lcm first, ties broken by index
        i, j = min(pairs, key=lambda ij: (lcm(*ij), ij))
        pairs.discard((i, j))
        r = reduce(s_polynomial(G[i], G[j], t0), G, t0)
        if r:
            G.append(r.monic())
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
            if G[k].lpp == (0, 0):
                break
    return _minimal_reduced(G, t0)


def _strip(g: PlanePoly, t0) -> PlanePoly:
    terms = dict(g._terms)
    a = min(p for p, _ in terms)
    if a:
        terms = {(p - a, q): c for (p, q), c in terms.items()}
    b = min(q for _, q in terms)
    if b:
        # m^b * l^p m^{q-b} = t^{-2bp} l^p m^q
        terms = {(p, q - b): _twisted(c, 2 * b * p, t0) for (p, q), c in terms.items()}
    return PlanePoly._raw(terms)


def saturate_monomials(gens: Iterable[PlanePoly], t0=None) -> GroebnerBasis:
    """Groebner basis after repeatedly stripping left monomial factors.

    Whenever a basis element is a left multiple ``l^a m^b * h`` it is replaced
    by ``h``; since monomials are units in the torus this enlarges the ideal
    only inside its contraction.  Iterates to a fixpoint.
    """
    G = buchberger(gens, t0)
    while True:
        stripped = [_strip(g, t0) for g in G]
        if all(s == g for s, g in zip(stripped, G)):
            return G
        G = buchberger(stripped, t0)
