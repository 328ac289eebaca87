"""Peripheral ideal -> A-basis, the t = -1 bridge, and orthogonality checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import sympy as sp

from .quantum_plane import GroebnerBasis, PlanePoly, saturate_monomials
from .quantum_torus import clear_to_plane
from .skein_torus import SkeinElement, parse_skein, swap_curves
from .solid_torus import ZSeq, first_nonzero, op_of_skein, pair_apply, z_unknot

__all__ = [
    "KnotData",
    "ABasisResult",
    "GeneratorCheck",
    "OrthogonalityReport",
    "L",
    "M",
    "unknot",
    "peripheral_to_abasis",
    "specialize_and_swap",
    "classical_from_plane",
    "b_polynomial",
    "a_polynomial",
    "character_cover_check",
    "verify_orthogonality",
]

L, M = sp.symbols("l m")

MERIDIAN_BOUNDS = (0, 1)
LONGITUDE_BOUNDS = (1, 0)


@dataclass
class KnotData:
    """Peripheral-ideal generators of a knot plus the bounding convention.

    ``bounding_curve`` names the torus curve that bounds in the complement-side
    solid torus in the coordinates the generators are written in.  ``(1, 0)``
    is the usual knot convention (longitude first); ``(0, 1)`` means the
    generators were written with the roles of the two curves exchanged.
    """

    name: str
    peripheral_gens: list
    bounding_curve: tuple = MERIDIAN_BOUNDS
    kappa: ZSeq | Callable[[int], ZSeq] | None = None

    def __post_init__(self):
        self.bounding_curve = tuple(self.bounding_curve)
        if self.bounding_curve not in (MERIDIAN_BOUNDS, LONGITUDE_BOUNDS):
            raise ValueError(f"bounding_curve must be (1, 0) or (0, 1), got {self.bounding_curve}")
        if not self.peripheral_gens:
            raise ValueError(f"knot {self.name!r} has no peripheral generators")

    def skeins(self) -> list:
        return [g if isinstance(g, SkeinElement) else parse_skein(g) for g in self.peripheral_gens]


def unknot(with_kappa: bool = True) -> KnotData:
    """The unknot's peripheral ideal with the meridian bounding."""
    return KnotData(
        name="unknot",
        peripheral_gens=["L(0,1) + t^2 + t^-2", "L(1,1) + t^-3*L(1,0)"],
        bounding_curve=MERIDIAN_BOUNDS,
        kappa=z_unknot if with_kappa else None,
    )


@dataclass
class ABasisResult:
    basis: GroebnerBasis
    shifts: list
    convention: tuple = MERIDIAN_BOUNDS
    t_symbolic: bool = True
    cleared: list = field(default_factory=list)


def peripheral_to_abasis(k: KnotData) -> ABasisResult:
    """Extend to the torus, clear denominators, saturate, and take the GB."""
    skeins = k.skeins()
    if not any(skeins):
        raise ValueError("all peripheral generators are zero")
    cleared, shifts = [], []
    for s in skeins:
        if not s:
            continue
        g, sh = clear_to_plane(s.value)
        cleared.append(g)
        shifts.append(sh)
    basis = saturate_monomials(cleared)
    return ABasisResult(basis, shifts, k.bounding_curve, True, cleared)


def classical_from_plane(f: PlanePoly, t0=-1) -> sp.Poly:
    """Specialize at ``t0`` and read as a commutative polynomial in l, m.

    Only meaningful when ``t0^2 = 1``; the ring is commutative there.
    """
    terms = {}
    for (p, q), c in f.terms.items():
        v = c.specialize(t0)
        if v:
            terms[(p, q)] = sp.Rational(v.numerator, v.denominator)
    if not terms:
        return sp.Poly(0, L, M, domain=sp.QQ)
    return sp.Poly.from_dict(terms, L, M, domain=sp.QQ)


def _normalize(p: sp.Poly) -> sp.Poly:
    if p.is_zero:
        return p
    _, prim = p.primitive()
    if prim.LC() < 0:
        prim = -prim
    return prim.set_domain(sp.QQ)


def specialize_and_swap(b: ABasisResult) -> list:
    """Basis at t = -1 moved into character coordinates.

    Skein curves correspond to minus traces, so ``l -> -l, m -> -m`` always;
    when the meridian was the bounding curve the variables are also
    exchanged, giving ``l -> -m, m -> -l``.
    """
    swap = tuple(b.convention) == MERIDIAN_BOUNDS
    out = []
    for f in b.basis:
        p = classical_from_plane(f, -1)
        expr = p.as_expr()
        if swap:
            expr = expr.subs({L: -M, M: -L}, simultaneous=True)
        else:
            expr = expr.subs({L: -L, M: -M}, simultaneous=True)
        out.append(sp.Poly(sp.expand(expr), L, M, domain=sp.QQ))
    return out


def b_polynomial(ps: Sequence[sp.Poly]) -> sp.Poly:
    """Generator of the smallest principal ideal containing ``ps`` (their gcd)."""
    ps = [p for p in ps if not p.is_zero]
    if not ps:
        raise ValueError("all polynomials are zero")
    g = ps[0]
    for p in ps[1:]:
        g = sp.gcd(g, p)
    return _normalize(sp.Poly(g, L, M, domain=sp.QQ))


def a_polynomial(B: sp.Poly) -> sp.Poly:
    """Remove every factor ``l - 1`` from B."""
    B = sp.Poly(B, L, M, domain=sp.QQ)
    if B.is_zero:
        raise ValueError("zero polynomial")
    lm1 = sp.Poly(L - 1, L, M, domain=sp.QQ)
    while True:
        q, r = sp.div(B, lm1)
        if not r.is_zero:
            break
        B = q
    return _normalize(B)


def character_cover_check(constant: int = -4, point=None) -> bool:
    """Check that ``(l + 1/l, m + 1/m, lm + 1/(lm))`` satisfies
    ``x^2 + y^2 + z^2 - xyz + constant = 0``.

    Symbolic by default; pass ``point=(l0, m0)`` to evaluate at a point.
    """
    x = L + 1 / L
    y = M + 1 / M
    z = L * M + 1 / (L * M)
    rel = x**2 + y**2 + z**2 - x * y * z + constant
    if point is not None:
        return sp.nsimplify(rel.subs({L: sp.Rational(point[0]), M: sp.Rational(point[1])})) == 0
    return sp.expand(rel) == 0


@dataclass
class GeneratorCheck:
    generator: SkeinElement
    translated: SkeinElement
    first_failure: int | None
    residual: list

    @property
    def passed(self) -> bool:
        return self.first_failure is None


@dataclass
class OrthogonalityReport:
    knot: str
    depth: int
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list:
        out = []
        for i, c in enumerate(self.checks):
            if c.passed:
                out.append(f"generator {i}: PASS through depth {self.depth}  [{c.translated}]")
            else:
                out.append(f"generator {i}: FAIL at c = {c.first_failure}  [{c.translated}]")
        return out


def _translate(s: SkeinElement, bounding_curve) -> SkeinElement:
    # the acting solid torus has (0, 1) bounding; the complement side must have (1, 0)
    return swap_curves(s) if tuple(bounding_curve) == MERIDIAN_BOUNDS else s


def verify_orthogonality(k: KnotData, depth: int) -> OrthogonalityReport:
    """Pair every translated peripheral generator with kappa through ``depth``."""
    if k.kappa is None:
        raise ValueError(f"knot {k.name!r} has no kappa sequence")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    checks = []
    for s in k.skeins():
        tr = _translate(s, k.bounding_curve)
        width = max((key.p for key in tr.curve_coefficients() if key is not None), default=0)
        op = op_of_skein(tr, depth + width)
        kappa = k.kappa(depth + width) if callable(k.kappa) else k.kappa
        res = pair_apply(op, kappa, depth)
        checks.append(GeneratorCheck(s, tr, first_nonzero(res), res))
    return OrthogonalityReport(k.name, depth, checks)
