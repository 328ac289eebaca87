"""Kauffman bracket skein algebra of the thickened torus, inside the quantum torus.

A skein is represented by its image under the isomorphism onto the
Theta-invariant subalgebra, ``L_{p,q} -> e_{p,q} + e_{-p,-q}``.

Stacking order: ``skein_mul(a, b)`` is ``qt_mul(b, a)``.  This is the order in
which the Bullock-Przytycki relators hold exactly as printed with
``x = L(0,1)``, ``y = L(1,0)``, ``z = L(1,1)``; the other order leaves relator 2
equal to ``(t^2 - t^-2) (L(1,-1) - L(1,1))``.  The operator calculus in
:mod:`ncapoly.solid_torus` acts through ``qt_mul`` directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coefficients import T, TPoly, TRat, simplify
from .quantum_torus import QTElement, e, qt_mul, qt_theta

__all__ = [
    "CurveIndex",
    "SkeinElement",
    "SkeinParseError",
    "phat_curve",
    "skein_mul",
    "bp_relators",
    "parse_skein",
    "swap_curves",
]


@dataclass(frozen=True, order=True)
class CurveIndex:
    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise ValueError("(0, 0) is not a curve index")

    def canonical(self) -> "CurveIndex":
        if self.p > 0 or (self.p == 0 and self.q > 0):
            return self
        return CurveIndex(-self.p, -self.q)

    def is_canonical(self) -> bool:
        return self == self.canonical()

    def __str__(self):
        return f"L({self.p},{self.q})"


class SkeinElement:
    """A Theta-invariant element of the quantum torus."""

    __slots__ = ("value",)

    def __init__(self, value: QTElement, check: bool = True):
        if check and qt_theta(value) != value:
            raise ValueError(f"{value} is not Theta-invariant")
        self.value = value

    @classmethod
    def scalar(cls, c) -> "SkeinElement":
        return cls(QTElement.scalar(c), check=False)

    def curve_coefficients(self) -> dict:
        """``{CurveIndex or None: coeff}``; ``None`` keys the empty skein."""
        out = {}
        for (p, q), c in self.value.terms.items():
            if (p, q) == (0, 0):
                out[None] = c
            elif CurveIndex(p, q).is_canonical():
                out[CurveIndex(p, q)] = c
        return out

    def __eq__(self, other):
        if isinstance(other, SkeinElement):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return bool(self.value)

    def __add__(self, other):
        if not isinstance(other, SkeinElement):
            other = SkeinElement.scalar(other)
        return SkeinElement(self.value + other.value, check=False)

    __radd__ = __add__

    def __neg__(self):
        return SkeinElement(-self.value, check=False)

    def __sub__(self, other):
        if not isinstance(other, SkeinElement):
            other = SkeinElement.scalar(other)
        return SkeinElement(self.value - other.value, check=False)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SkeinElement):
            return skein_mul(self, other)
        return SkeinElement(self.value.scale(other), check=False)

    def __rmul__(self, other):
        return SkeinElement(self.value.scale(other), check=False)

    def __str__(self):
        coeffs = self.curve_coefficients()
        if not coeffs:
            return "0"
        parts = []
        for key in sorted(coeffs, key=lambda k: (k is not None, k or CurveIndex(0, 1))):
            c = coeffs[key]
            cs = str(c)
            if key is None:
                parts.append(f"({cs})" if " " in cs.strip("-") else cs)
            elif c == 1:
                parts.append(str(key))
            else:
                parts.append(f"({cs})*{key}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkeinElement({str(self)!r})"


def phat_curve(c) -> SkeinElement:
    """``e_{p,q} + e_{-p,-q}`` for the curve index ``(p, q)``."""
    if not isinstance(c, CurveIndex):
        c = CurveIndex(*c)
    c = c.canonical()
    return SkeinElement(e(c.p, c.q) + e(-c.p, -c.q), check=False)


def skein_mul(a: SkeinElement, b: SkeinElement) -> SkeinElement:
    """Stacking product ``a . b``; see the module docstring for the order."""
    return SkeinElement(qt_mul(b.value, a.value), check=False)


def swap_curves(s: SkeinElement) -> SkeinElement:
    """Exchange the roles of the two torus coordinates, ``L(p,q) -> L(q,p)``."""
    return SkeinElement(QTElement({(q, p): c for (p, q), c in s.value.terms.items()}), check=False)


def bp_relators(flipped: bool = False) -> list:
    """The four Bullock-Przytycki relators evaluated in the quantum torus.

    With ``flipped=True`` products are composed in the opposite stacking
    order, which is the negative control for the convention.
    """
    x, y, z = phat_curve((0, 1)), phat_curve((1, 0)), phat_curve((1, 1))
    if flipped:
        def mul(a, b):
            return SkeinElement(qt_mul(a.value, b.value), check=False)
    else:
        mul = skein_mul
    t = T
    t2 = t ** 2
    ti = t ** -1
    ti2 = t ** -2
    r1 = (mul(x, x) * t2 + mul(y, y) * ti2 + mul(z, z) * t2
          - mul(mul(x, y), z) * t - SkeinElement.scalar((t2 + ti2) * 2))
    r2 = mul(x, y) * t - mul(y, x) * ti - z * (t2 - ti2)
    r3 = mul(z, x) * t - mul(x, z) * ti - y * (t2 - ti2)
    r4 = mul(y, z) * t - mul(z, y) * ti - x * (t2 - ti2)
    return [r1, r2, r3, r4]


# -- expression grammar -------------------------------------------------------
#
#   expr   := term (('+' | '-') term)*
#   term   := unary (('*' | '/') unary)*
#   unary  := '-' unary | power
#   power  := atom ('^' '-'? INT)?
#   atom   := INT | 't' | 'L' '(' INT ',' INT ')' | '(' expr ')'
#
# Products of skeins use skein_mul; '/' divides by scalars only.

class SkeinParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|(L)|(t)|([-+*/^(),]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise SkeinParseError("unexpected character", text, len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("<end>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise SkeinParseError(f"expected {expected!r}, found {tok!r}", self.text, pos)
        self.i += 1
        return tok

    def error(self, msg):
        raise SkeinParseError(msg, self.text, self.tokens[self.i][1])

    def integer(self, allow_sign=False) -> int:
        sign = 1
        if allow_sign and self.peek() in "+-" and self.peek() != "<end>":
            sign = -1 if self.take() == "-" else 1
        tok = self.peek()
        if not tok.isdigit():
            self.error(f"expected an integer, found {tok!r}")
        return sign * int(self.take())

    def parse(self) -> QTElement:
        v = self.expr()
        if self.peek() != "<end>":
            self.error(f"unexpected {self.peek()!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            pos = self.tokens[self.i][1]
            w = self.unary()
            if op == "*":
                v = qt_mul(w, v)
            else:
                s = _scalar_of(w)
                if s is None or not s:
                    raise SkeinParseError("can only divide by a nonzero scalar", self.text, pos)
                v = v.scale(simplify(TRat(1) / s))
        return v

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        pos = self.tokens[self.i][1]
        v = self.atom()
        if self.peek() == "^":
            self.take()
            n = self.integer(allow_sign=True)
            s = _scalar_of(v)
            if n < 0:
                if s is None or not s:
                    raise SkeinParseError("negative powers need a nonzero scalar base", self.text, pos)
                return QTElement.scalar(simplify(TRat(1) / s) ** (-n))
            out = QTElement.scalar(1)
            for _ in range(n):
                out = qt_mul(v, out)
            return out
        return v

    def atom(self):
        tok = self.peek()
        if tok.isdigit():
            return QTElement.scalar(int(self.take()))
        if tok == "t":
            self.take()
            return QTElement.scalar(T)
        if tok == "L":
            pos = self.tokens[self.i][1]
            self.take()
            self.take("(")
            p = self.integer(allow_sign=True)
            self.take(",")
            q = self.integer(allow_sign=True)
            self.take(")")
            if p == 0 and q == 0:
                raise SkeinParseError("L(0,0) is not a curve", self.text, pos)
            return phat_curve((p, q)).value
        if tok == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        self.error(f"unexpected {tok!r}")


def _scalar_of(x: QTElement):
    terms = x.terms
    if not terms:
        return TPoly.const(0)
    if set(terms) == {(0, 0)}:
        return terms[(0, 0)]
    return None


def parse_skein(text: str) -> SkeinElement:
    """Parse e.g. ``"L(1,1) + t^-3 * L(1,0)"`` into a skein."""
    value = _Parser(text).parse()
    return SkeinElement(value)
