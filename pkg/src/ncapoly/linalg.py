"""Exact nullspaces over Q(t) via fraction-free elimination."""

from __future__ import annotations

from typing import Sequence

from .coefficients import TPoly, TRat, as_coeff, simplify

__all__ = ["fraction_free_echelon", "nullspace", "span_contains"]


def _exact(a: TPoly, b: TPoly) -> TPoly:
    q = a.exact_div(b)
    if q is None:
        raise ArithmeticError(f"Bareiss step is not exact: ({a}) / ({b})")
    return q


def _to_laurent_rows(rows):
    """Scale each row by a common denominator so all entries are TPolys."""
    out = []
    for row in rows:
        row = [as_coeff(c) for c in row]
        den = TPoly.const(1)
        for c in row:
            if isinstance(c, TRat) and not c.den.is_one():
                den = den * c.den
        out.append([simplify(c * den) for c in row])
    return out


def fraction_free_echelon(rows: Sequence[Sequence]):
    """Bareiss row echelon form over the Laurent ring.

    Returns ``(echelon_rows, pivot_columns)``; every division along the way
    is exact.
    """
    M = _to_laurent_rows(rows)
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    prev = TPoly.const(1)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][col]
        for i in range(r + 1, len(M)):
            a = M[i][col]
            for j in range(col + 1, ncols):
                M[i][j] = _exact(pv * M[i][j] - a * M[r][j], prev)
            M[i][col] = TPoly.const(0)
            # columns left of col are already zero below row r
        pivots.append(col)
        prev = pv
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list:
    """Canonical nullspace basis: one vector per free column, with 1 in that
    column and 0 in every other free column.  Entries are TPoly or TRat."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    E, pivots = fraction_free_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [TPoly.const(0)] * ncols
        x[f] = TPoly.const(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            acc = TRat(0)
            for j in range(pc + 1, ncols):
                if E[k][j] and x[j]:
                    acc = acc + E[k][j] * x[j]
            x[pc] = simplify(-acc / E[k][pc])
        basis.append(x)
    return basis


def span_contains(basis: Sequence[Sequence], target: Sequence) -> bool:
    """Exact membership test of ``target`` in the row span of ``basis``."""
    rows = [list(b) for b in basis]
    E, pivots = fraction_free_echelon(rows)
    E2, pivots2 = fraction_free_echelon(rows + [list(target)])
    return len(pivots2) == len(pivots)
