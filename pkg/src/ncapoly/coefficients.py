"""Exact coefficient arithmetic in the quantum parameter ``t``.

Two value types live here:

``TPoly``
    Laurent polynomials in ``t`` with rational coefficients, stored sparsely as
    ``{exponent: Fraction}`` with no zero entries.

``TRat``
    Their field of fractions.  A fraction is kept as ``num / den`` where ``den``
    is an ordinary polynomial with nonzero constant term, monic in its top
    power, and coprime to ``num``.  Monomials ``t^k`` are units of the Laurent
    ring, so they are always pushed into the numerator; this makes the
    representation of every value unique.

Both types are immutable and hashable, and mix freely with ``int`` and
``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd

__all__ = [
    "TPoly",
    "TRat",
    "T",
    "ONE",
    "ZERO",
    "tp_normalize",
    "tp_mul",
    "tp_specialize",
    "tp_gcd",
    "as_coeff",
    "simplify",
    "scalar_from_json",
    "scalar_to_json",
]

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class TPoly:
    """Laurent polynomial ``sum c_k t^k`` over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _frac(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "TPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "TPoly":
        c = _frac(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "TPoly":
        c = _frac(c)
        return cls._raw({int(k): c} if c else {})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree()]

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, Fraction(0))

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: Fraction(other)} if other else {})
        if isinstance(other, TRat):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif self.is_constant():
                self._hash = hash(self._terms[0])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, TPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return TPoly.const(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        res = dict(self._terms)
        for k, c in o._terms.items():
            v = res.get(k, 0) + c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return TPoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if not a or not b:
            return TPoly._raw({})
        if len(a) == 1:
            (k, c), = a.items()
            return TPoly._raw({k + j: c * d for j, d in b.items()})
        if len(b) == 1:
            (j, d), = b.items()
            return TPoly._raw({k + j: c * d for k, c in a.items()})
        res: dict = {}
        for k, c in a.items():
            for j, d in b.items():
                res[k + j] = res.get(k + j, 0) + c * d
        return TPoly._raw({k: v for k, v in res.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            (k, c), = self._terms.items()
            return TPoly._raw({k * n: c ** n})
        result = TPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            if not other:
                raise ZeroDivisionError("division by zero")
            return TPoly._raw({k: c / other for k, c in self._terms.items()})
        if isinstance(other, TPoly):
            return TRat(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TRat(o, self)

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t^k``."""
        if not k:
            return self
        return TPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Scalar) -> "TPoly":
        c = _frac(c)
        if not c:
            return TPoly._raw({})
        return TPoly._raw({e: v * c for e, v in self._terms.items()})

    def substitute_inverse(self) -> "TPoly":
        """The bar involution ``t -> t^-1``."""
        return TPoly._raw({-e: c for e, c in self._terms.items()})

    def specialize(self, t0: Scalar) -> Fraction:
        t0 = _frac(t0)
        if not t0:
            raise ValueError("cannot specialize a Laurent polynomial at t = 0")
        return sum((c * t0 ** k for k, c in self._terms.items()), Fraction(0))

    def exact_div(self, other: "TPoly") -> "TPoly | None":
        """Quotient in the Laurent ring if ``other`` divides ``self``, else None."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return self
        if other.is_monomial():
            (j, d), = other._terms.items()
            return TPoly._raw({k - j: c / d for k, c in self._terms.items()})
        va, vb = self.valuation(), other.valuation()
        a = _dense(self, va)
        b = _dense(other, vb)
        q, r = _dense_divmod(a, b)
        if any(r):
            return None
        return _sparse(q, va - vb)

    # -- display ----------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for k, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if a == 1 else f"{a}*{var}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"TPoly({str(self)!r})"

    # -- serialization ----------------------------------------------------
    def to_triples(self) -> list:
        return [[k, c.numerator, c.denominator] for k, c in sorted(self._terms.items())]

    @classmethod
    def from_triples(cls, triples: Iterable) -> "TPoly":
        return tp_normalize((int(k), Fraction(int(n), int(d))) for k, n, d in triples)


def _dense(p: TPoly, shift: int) -> list:
    """Coefficient list (low to high) of ``t^-shift * p``."""
    deg = p.degree() - shift
    out = [Fraction(0)] * (deg + 1)
    for k, c in p._terms.items():
        out[k - shift] = c
    return out


def _sparse(coeffs: list, shift: int = 0) -> TPoly:
    return TPoly._raw({i + shift: c for i, c in enumerate(coeffs) if c})


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a: list, b: list):
    a = list(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    lb = b[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            c = c / lb
            q[i] = c
            for j, bj in enumerate(b):
                if bj:
                    a[i + j] -= c * bj
    return q, _trim(a[: len(b) - 1])


def _to_zz(a: list) -> list:
    """Integer multiple of a low-first Fraction list, high-first for sympy."""
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [ZZ(int(c * den)) for c in reversed(a)]


def _dense_gcd(a: list, b: list) -> list:
    # Euclid over Q blows up coefficients; sympy's heuristic gcd over Z does not
    a, b = _trim(list(a)), _trim(list(b))
    if not a and not b:
        return []
    g = dup_gcd(_to_zz(a), _to_zz(b), ZZ) if a and b else _to_zz(a or b)
    g = [Fraction(int(c)) for c in reversed(g)]
    lc = g[-1]
    return [c / lc for c in g]


def tp_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd in the Laurent ring, as an ordinary polynomial with ``g(0) != 0``."""
    if not a:
        if not b:
            return TPoly._raw({})
        return _sparse(_dense_gcd(_dense(b, b.valuation()), []))
    if not b:
        return _sparse(_dense_gcd(_dense(a, a.valuation()), []))
    if a.is_monomial() or b.is_monomial():
        return TPoly.const(1)
    return _sparse(_dense_gcd(_dense(a, a.valuation()), _dense(b, b.valuation())))


def tp_normalize(raw: Iterable) -> TPoly:
    """Canonical TPoly from ``(exponent, rational)`` pairs; like exponents combine."""
    acc: dict = {}
    for k, c in raw:
        acc[int(k)] = acc.get(int(k), 0) + _frac(c)
    return TPoly._raw({k: c for k, c in acc.items() if c})


def tp_mul(a: TPoly, b: TPoly) -> TPoly:
    return a * b


def tp_specialize(p, t0: Scalar) -> Fraction:
    """Exact value of a TPoly (or TRat) at ``t = t0``."""
    return p.specialize(t0)


class TRat:
    """Element of Q(t), stored as a reduced fraction of Laurent polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_tpoly(num)
        den = TPoly.const(1) if den is None else _as_tpoly(den)
        if not den:
            raise ZeroDivisionError("TRat with zero denominator")
        self._hash = None
        if not num:
            self.num, self.den = num, TPoly.const(1)
            return
        q = num.exact_div(den)
        if q is not None:
            self.num, self.den = q, TPoly.const(1)
            return
        # move the monomial part of den into num, then cancel the gcd
        vd = den.valuation()
        num, den = num.shift(-vd), den.shift(-vd)
        g = tp_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _make(cls, num: TPoly, den: TPoly) -> "TRat":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        if isinstance(other, TRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (TPoly, int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den.is_one() else hash((self.num, self.den))
        return self._hash

    @staticmethod
    def _coerce(x):
        if isinstance(x, TRat):
            return x
        if isinstance(x, (TPoly, int, Fraction)):
            return TRat._make(_as_tpoly(x), TPoly.const(1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den.is_one():
                return TRat._make(self.num + o.num, self.den)
            return TRat(self.num + o.num, self.den)
        return TRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return TRat._make(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return TRat._make(self.num * o.num, self.den)
        return TRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "TRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return TRat(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return TRat(self.num ** n, self.den ** n)

    def shift(self, k: int) -> "TRat":
        return TRat._make(self.num.shift(k), self.den)

    def specialize(self, t0: Scalar) -> Fraction:
        d = self.den.specialize(t0)
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at t = {t0}")
        return self.num.specialize(t0) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"TRat({str(self)!r})"


def _as_tpoly(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a TPoly")


def as_coeff(x):
    """Coerce ints/Fractions to TPoly; TPoly/TRat pass through."""
    if isinstance(x, (TPoly, TRat)):
        return x
    return _as_tpoly(x)


def simplify(c):
    """Collapse a TRat with trivial denominator back to TPoly."""
    if isinstance(c, TRat) and c.den.is_one():
        return c.num
    return as_coeff(c)


def scalar_to_json(c):
    """TPoly -> list of triples; TRat with a real denominator -> {num, den}."""
    c = simplify(c)
    if isinstance(c, TPoly):
        return c.to_triples()
    return {"num": c.num.to_triples(), "den": c.den.to_triples()}


def scalar_from_json(obj):
    if isinstance(obj, dict):
        if set(obj) != {"num", "den"}:
            raise ValueError("rational coefficient needs exactly the keys 'num' and 'den'")
        return simplify(TRat(TPoly.from_triples(obj["num"]), TPoly.from_triples(obj["den"])))
    if isinstance(obj, list):
        for item in obj:
            if not (isinstance(item, list) and len(item) == 3 and all(isinstance(v, int) for v in item)):
                raise ValueError(f"coefficient term {item!r} is not an [exponent, numerator, denominator] triple")
            if item[2] == 0:
                raise ValueError(f"coefficient term {item!r} has zero denominator")
        return TPoly.from_triples(obj)
    raise ValueError(f"cannot read coefficient from {obj!r}")


T = TPoly.monomial(1)
ONE = TPoly.const(1)
ZERO = TPoly.const(0)
