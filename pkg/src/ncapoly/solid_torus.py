"""Action of the torus skein algebra on the skein module of the solid torus.

Basis: ``S_c`` (the c-th Jones-Wenzl closure), ``c = 0, 1, 2, ...``.  The curve
``(0, 1)`` bounds a disk in the solid torus and ``(1, 0)`` runs parallel to the
core.  An operator stores ``entries[(row, col)]`` = coefficient of ``S_row`` in
the image of ``S_col``; only the finite block ``0..size`` is kept.

Base cases:

* ``L(0,q)`` is diagonal with eigenvalue ``(-1)^q (t^{2q(c+1)} + t^{-2q(c+1)})``;
* ``L(1,0)`` sends ``S_c`` to ``S_{c+1} + S_{c-1}``.

Everything else follows from the product-to-sum rule in the quantum torus.
Operators are built on a padded block and cropped, so the entries a builder
returns are exact; products of cropped operators are exact except in the top
``width`` rows/columns.

A functional ``Z`` on the solid torus module is a sequence ``kappa(c) = Z(S_c)``;
a skein acts on it by ``(alpha Z)(S_c) = Z(M(alpha) S_c)``, see :func:`pair_apply`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .coefficients import T, TPoly, as_coeff, simplify
from .linalg import nullspace
from .skein_torus import CurveIndex, SkeinElement, phat_curve

__all__ = [
    "BandOperator",
    "ZSeq",
    "op_identity",
    "op_diag_power",
    "op_core",
    "op_curve",
    "op_of_skein",
    "z_unknot",
    "unknot_kappa",
    "pair_apply",
    "first_nonzero",
    "annihilator_search",
    "AnnihilatorResult",
]


@dataclass(frozen=True)
class BandOperator:
    size: int
    width: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, rc):
        return self.entries.get(rc, TPoly.const(0))

    def actual_width(self) -> int:
        return max((abs(r - c) for r, c in self.entries), default=0)

    def column(self, c: int) -> dict:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def __add__(self, other: "BandOperator") -> "BandOperator":
        n = min(self.size, other.size)
        res = {k: v for k, v in self.entries.items() if max(k) <= n}
        for k, v in other.entries.items():
            if max(k) > n:
                continue
            w = simplify(res[k] + v) if k in res else v
            if w:
                res[k] = w
            else:
                res.pop(k, None)
        return BandOperator(n, max(self.width, other.width), res)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "BandOperator":
        c = as_coeff(c)
        if not c:
            return BandOperator(self.size, 0, {})
        return BandOperator(self.size, self.width, {k: simplify(v * c) for k, v in self.entries.items()})

    def __matmul__(self, other: "BandOperator") -> "BandOperator":
        """Composition ``self o other``; width is at most the sum of widths."""
        n = min(self.size, other.size)
        rows_of = {}
        for (r, k), v in self.entries.items():
            if r <= n and k <= n:
                rows_of.setdefault(k, []).append((r, v))
        acc: dict = {}
        for (k, c), w in other.entries.items():
            if k > n or c > n:
                continue
            for r, v in rows_of.get(k, ()):
                key = (r, c)
                x = v * w
                acc[key] = acc[key] + x if key in acc else x
        res = {k: simplify(v) for k, v in acc.items() if v}
        return BandOperator(n, self.width + other.width, res)

    def crop(self, n: int) -> "BandOperator":
        if n > self.size:
            raise ValueError(f"cannot crop a size-{self.size} operator to {n}")
        return BandOperator(n, self.width, {k: v for k, v in self.entries.items() if max(k) <= n})

    def divide(self, c) -> "BandOperator":
        c = as_coeff(c)
        res = {}
        for k, v in self.entries.items():
            q = v.exact_div(c) if isinstance(v, TPoly) and isinstance(c, TPoly) else None
            res[k] = q if q is not None else simplify(v / c)
        return BandOperator(self.size, self.width, res)

    def apply(self, vec: Sequence) -> list:
        """Image of the vector ``sum vec[c] S_c`` (coefficients 0..size)."""
        out = [TPoly.const(0)] * (self.size + 1)
        for (r, c), v in self.entries.items():
            if c < len(vec) and vec[c]:
                out[r] = out[r] + v * vec[c]
        return [simplify(x) for x in out]

    def equal_within(self, other: "BandOperator", n: int) -> bool:
        """Entrywise equality on the block ``0..n``."""
        keys = {k for k in self.entries if max(k) <= n} | {k for k in other.entries if max(k) <= n}
        return all(self[k] == other[k] for k in keys)


def op_identity(n: int, c=1) -> BandOperator:
    c = as_coeff(c)
    return BandOperator(n, 0, {(i, i): c for i in range(n + 1)} if c else {})


def _diag_eigenvalue(q: int, c: int) -> TPoly:
    k = 2 * q * (c + 1)
    sign = -1 if q % 2 else 1
    return TPoly({k: sign, -k: sign}) if k else TPoly.const(2 * sign)


def op_diag_power(q: int, n: int) -> BandOperator:
    """Operator of ``e_{0,q} + e_{0,-q}``: the curve that bounds, taken q times."""
    if q < 1:
        raise ValueError("q must be positive")
    return BandOperator(n, 0, {(c, c): _diag_eigenvalue(q, c) for c in range(n + 1)})


def op_core(n: int) -> BandOperator:
    """Operator of the core-parallel curve: ``S_c -> S_{c+1} + S_{c-1}``."""
    one = TPoly.const(1)
    ent = {}
    for c in range(n + 1):
        if c + 1 <= n:
            ent[(c + 1, c)] = one
        if c >= 1:
            ent[(c - 1, c)] = one
    return BandOperator(n, 1, ent)


@lru_cache(maxsize=512)
def _curve_matrix(p: int, q: int, n: int) -> BandOperator:
    """Operator of ``e_{p,q} + e_{-p,-q}`` on a block of size n (top rows inexact)."""
    if p < 0:
        p, q = -p, -q
    if p == 0:
        if q == 0:
            return op_identity(n, 2)
        return op_diag_power(abs(q), n)
    core = op_core(n)
    if p == 1:
        if q == 0:
            return core
        # L10 L0q = t^q L1q + t^-q L1,-q  and  L0q L10 = t^-q L1q + t^q L1,-q
        d = _curve_matrix(0, q, n)
        num = (core @ d).scale(T ** q) - (d @ core).scale(T ** -q)
        m = num.divide(T ** (2 * q) - T ** (-2 * q))
        return BandOperator(n, 1, m.entries)
    # L10 L_{p-1,q} = t^q L_{p,q} + t^-q L_{p-2,q}
    prev = _curve_matrix(p - 1, q, n)
    prev2 = _curve_matrix(p - 2, q, n)
    m = (core @ prev).scale(T ** -q) - prev2.scale(T ** (-2 * q))
    return BandOperator(n, p, m.entries)


def op_curve(c, n: int) -> BandOperator:
    """Exact operator of ``p^(L(p,q))`` on ``S_0..S_n``; width ``p``."""
    if not isinstance(c, CurveIndex):
        c = CurveIndex(*c)
    c = c.canonical()
    pad = n + c.p + 2
    m = _curve_matrix(c.p, c.q, pad).crop(n)
    return BandOperator(n, c.p, m.entries)


def op_of_skein(s: SkeinElement, n: int) -> BandOperator:
    """Linear extension of :func:`op_curve` over the curve basis."""
    out = BandOperator(n, 0, {})
    for key, c in s.curve_coefficients().items():
        if key is None:
            out = out + op_identity(n, c)
        else:
            out = out + op_curve(key, n).scale(c)
    return out


@dataclass(frozen=True)
class ZSeq:
    """Colored Kauffman brackets ``kappa(c)``, ``c = 0..len-1``."""

    values: tuple
    name: str = ""
    source: str = "builtin"
    framing: int = 0

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty kappa sequence")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, c):
        return self.values[c]

    @property
    def depth(self) -> int:
        return len(self.values) - 1


def unknot_kappa(c: int) -> TPoly:
    """``(-1)^c (t^{2(c+1)} - t^{-2(c+1)}) / (t^2 - t^-2)``, expanded."""
    sign = -1 if c % 2 else 1
    return TPoly({2 * c - 4 * j: sign for j in range(c + 1)})


def z_unknot(n: int) -> ZSeq:
    return ZSeq(tuple(unknot_kappa(c) for c in range(n + 1)), name="unknot", source="builtin")


def pair_apply(op: BandOperator, z: ZSeq, n: int) -> list:
    """``c -> sum_{c'} kappa(c') op[c', c]`` for ``c = 0..n``."""
    need = n + op.width
    if op.size < need:
        raise ValueError(f"operator of size {op.size} cannot be paired to depth {n}; need {need}")
    if z.depth < need:
        raise ValueError(f"kappa sequence of depth {z.depth} is too short for depth {n}; need {need}")
    out = [TPoly.const(0)] * (n + 1)
    for (r, c), v in op.entries.items():
        if c <= n:
            out[c] = out[c] + z[r] * v
    return [simplify(x) for x in out]


def first_nonzero(seq: Sequence):
    return next((i for i, v in enumerate(seq) if v), None)


@dataclass
class AnnihilatorResult:
    """Nullspace basis over Q(t), verified to ``depth`` only."""

    unknowns: list          # None for the empty skein, else CurveIndex
    vectors: list           # coefficient vectors aligned with ``unknowns``
    depth: int

    def skeins(self) -> list:
        return [vector_to_skein(self.unknowns, v) for v in self.vectors]

    def contains(self, s: SkeinElement) -> bool:
        from .linalg import span_contains

        return span_contains(self.vectors, skein_to_vector(self.unknowns, s))


def vector_to_skein(unknowns, vec) -> SkeinElement:
    out = SkeinElement.scalar(0)
    for key, c in zip(unknowns, vec):
        if not c:
            continue
        out = out + (SkeinElement.scalar(c) if key is None else phat_curve(key) * c)
    return out


def skein_to_vector(unknowns, s: SkeinElement) -> list:
    coeffs = s.curve_coefficients()
    extra = set(coeffs) - set(unknowns)
    if extra:
        raise ValueError(f"skein uses curves outside the search window: {sorted(map(str, extra))}")
    return [coeffs.get(k, TPoly.const(0)) for k in unknowns]


def _search_indices(pmax: int, qmax: int) -> list:
    out = []
    for p in range(0, pmax + 1):
        for q in range(-qmax, qmax + 1):
            if (p, q) != (0, 0) and CurveIndex(p, q).is_canonical():
                out.append(CurveIndex(p, q))
    return out


def annihilator_search(z: ZSeq, pmax: int, qmax: int, n: int) -> AnnihilatorResult:
    """Skeins with ``|p| <= pmax``, ``|q| <= qmax`` whose action kills ``z`` on S_0..S_n."""
    if not any(z.values):
        raise ValueError("kappa sequence is identically zero")
    unknowns = [None] + _search_indices(pmax, qmax)
    if n + 1 < len(unknowns):
        raise ValueError(f"depth {n} gives fewer equations than the {len(unknowns)} unknowns")
    cols = []
    for key in unknowns:
        if key is None:
            cols.append([z[c] for c in range(n + 1)])
        else:
            cols.append(pair_apply(op_curve(key, n + key.p), z, n))
    rows = [[cols[j][c] for j in range(len(unknowns))] for c in range(n + 1)]
    return AnnihilatorResult(unknowns, nullspace(rows, len(unknowns)), n)
