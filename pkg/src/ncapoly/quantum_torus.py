"""Laurent quantum torus ``Q(t)[l^±1, m^±1]`` with ``lm = t^2 ml``.

Elements are stored in the Rieffel basis ``e_{p,q} = t^{-pq} l^p m^q``, where
the product is ``e_{p,q} * e_{r,s} = t^{ps - qr} e_{p+r, q+s}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coefficients import TPoly, as_coeff, simplify

__all__ = [
    "QTElement",
    "Shift",
    "qt_mul",
    "qt_theta",
    "clear_to_plane",
    "e",
    "rieffel_det",
]


def rieffel_det(p: int, q: int, r: int, s: int) -> int:
    """Exponent of ``t`` in ``e_{p,q} * e_{r,s}``."""
    return p * s - q * r


def _twist(c, k: int):
    return c.shift(k) if k else c


class QTElement:
    """Finite sum ``sum alpha_{p,q} e_{p,q}`` with coefficients in Q(t)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for (p, q), c in terms.items():
                c = simplify(as_coeff(c))
                if c:
                    clean[(int(p), int(q))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QTElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_monomials(cls, terms: Mapping) -> "QTElement":
        """Build from monomial coordinates ``{(p, q): coeff of l^p m^q}``."""
        return cls({(p, q): as_coeff(c) * TPoly.monomial(p * q) for (p, q), c in terms.items()})

    @classmethod
    def scalar(cls, c) -> "QTElement":
        return cls({(0, 0): c})

    def to_monomials(self) -> dict:
        """Coefficients of ``l^p m^q``; inverse of :meth:`from_monomials`."""
        return {pq: simplify(_twist(c, -pq[0] * pq[1])) for pq, c in self._terms.items()}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self):
        return sorted(self._terms)

    def coeff(self, p: int, q: int):
        return self._terms.get((p, q), TPoly.const(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, QTElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, QTElement):
            other = QTElement.scalar(other)
        res = dict(self._terms)
        for k, c in other._terms.items():
            v = simplify(res[k] + c) if k in res else c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return QTElement._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return QTElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QTElement):
            other = QTElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QTElement":
        c = as_coeff(c)
        if not c:
            return QTElement._raw({})
        return QTElement._raw({k: simplify(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QTElement):
            return qt_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, q), c in sorted(self._terms.items(), reverse=True):
            parts.append(f"({c})*e[{p},{q}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"QTElement({str(self)})"


def e(p: int, q: int, c=1) -> QTElement:
    """The basis element ``c * e_{p,q}``."""
    return QTElement({(p, q): c})


def qt_mul(x: QTElement, y: QTElement) -> QTElement:
    acc: dict = {}
    for (p, q), a in x._terms.items():
        for (r, s), b in y._terms.items():
            key = (p + r, q + s)
            v = _twist(a * b, p * s - q * r)
            acc[key] = acc[key] + v if key in acc else v
    return QTElement._raw({k: simplify(v) for k, v in acc.items() if v})


def qt_theta(x: QTElement) -> QTElement:
    """The automorphism ``e_{p,q} -> e_{-p,-q}``."""
    return QTElement._raw({(-p, -q): c for (p, q), c in x._terms.items()})


@dataclass(frozen=True)
class Shift:
    """Left monomial ``l^a m^b`` used to clear negative exponents."""

    a: int
    b: int

    def as_element(self) -> QTElement:
        return QTElement.from_monomials({(self.a, self.b): 1})


def clear_to_plane(x: QTElement):
    """Left-multiply by the smallest ``l^a m^b`` that makes every exponent >= 0.

    Returns ``(PlanePoly, Shift)``.  Since monomials are units of the torus,
    the left ideal generated in the torus does not change.
    """
    from .quantum_plane import PlanePoly

    if not x:
        raise ValueError("cannot clear the zero element")
    a = max(0, -min(p for p, _ in x._terms))
    b = max(0, -min(q for _, q in x._terms))
    shift = Shift(a, b)
    g = qt_mul(shift.as_element(), x) if (a or b) else x
    return PlanePoly(g.to_monomials()), shift
