import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ncapoly.coefficients import T, TPoly, TRat
from ncapoly.linalg import nullspace, span_contains
from ncapoly.quantum_torus import qt_mul
from ncapoly.skein_torus import SkeinElement, bp_relators, phat_curve, skein_mul
from ncapoly.solid_torus import (
    BandOperator,
    ZSeq,
    annihilator_search,
    first_nonzero,
    op_core,
    op_curve,
    op_diag_power,
    op_identity,
    op_of_skein,
    pair_apply,
    unknot_kappa,
    z_unknot,
)

L = phat_curve
ONE = SkeinElement.scalar(1)
TT = T**2 + T**-2


# -- oracle: S_c as the antisymmetric Laurent function X^{c+1} - X^{-(c+1)} ----
#
# l acts by multiplication by X and m by X^k -> -t^{-2k} X^k, so
# e_{p,q} X^k = (-1)^q t^{-pq} t^{-2qk} X^{k+p}.

def oracle_column(p, q, c):
    """Coefficients of S_r in (e_{p,q} + e_{-p,-q}) S_c, as {r: TPoly}."""
    f = {c + 1: TPoly.const(1), -(c + 1): TPoly.const(-1)}
    g = {}
    for sp_, sq in ((p, q), (-p, -q)):
        sign = -1 if sq % 2 else 1
        for k, a in f.items():
            v = a * T ** (-sp_ * sq - 2 * sq * k) * sign
            g[k + sp_] = g.get(k + sp_, TPoly.const(0)) + v
    return {k - 1: v for k, v in g.items() if k >= 1 and v}


def to_sympy_rat(x):
    ts = sp.Symbol("t")

    def poly(p):
        return sum((sp.Rational(c.numerator, c.denominator) * ts**k for k, c in p.items()), sp.Integer(0))

    if isinstance(x, TRat):
        return poly(x.num) / poly(x.den)
    return poly(x)


# -- base cases -------------------------------------------------------------------------

def test_diag_examples():
    D1 = op_diag_power(1, 6)
    assert D1[0, 0] == -TT
    for c in range(7):
        assert D1[c, c] == -(T ** (2 * (c + 1)) + T ** (-2 * (c + 1)))
    assert op_diag_power(2, 3)[0, 0] == T**4 + T**-4
    assert D1.width == 0 and D1.actual_width() == 0


def test_diag_square_via_product_to_sum():
    # L01 L01 = L02 + 2
    n = 8
    D1 = op_diag_power(1, n)
    assert (D1 @ D1).equal_within(op_diag_power(2, n) + op_identity(n, 2), n)


def test_core_examples():
    C = op_core(8)
    assert C.column(0) == {1: 1}
    assert C.column(3) == {4: 1, 2: 1}
    assert (C @ C).width <= 2 and (C @ C).actual_width() == 2


def test_op_curve_base_cases():
    assert op_curve((0, 1), 6) == op_diag_power(1, 6)
    assert op_curve((1, 0), 6) == op_core(6)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(0, 5) for q in range(-3, 4) if (p, q) != (0, 0)])
def test_op_curve_against_laurent_model(p, q):
    n = 10
    M = op_curve((p, q), n)
    assert M.actual_width() <= abs(p)
    for c in range(n + 1):
        want = {r: v for r, v in oracle_column(p, q, c).items() if r <= n}
        assert M.column(c) == want


def test_op_curve_canonicalizes():
    assert op_curve((-2, 1), 7) == op_curve((2, -1), 7)


def test_product_to_sum_identity():
    n = 12
    lhs = op_curve((1, 0), n + 2) @ op_curve((0, 1), n + 2)
    rhs = op_curve((1, 1), n + 2).scale(T) + op_curve((1, -1), n + 2).scale(T**-1)
    assert lhs.equal_within(rhs, n)


curves = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(lambda pq: pq != (0, 0))


@given(curves, curves)
@settings(max_examples=25)
def test_homomorphism(a, b):
    n = 8
    pad = n + 8
    A, B = L(a), L(b)
    prod = SkeinElement(qt_mul(A.value, B.value))
    lhs = op_of_skein(prod, pad)
    rhs = op_of_skein(A, pad) @ op_of_skein(B, pad)
    assert lhs.equal_within(rhs, n)
    # stacking order composes the other way round
    assert op_of_skein(skein_mul(A, B), pad).equal_within(op_of_skein(B, pad) @ op_of_skein(A, pad), n)


def test_relators_as_operator_identities():
    n, pad = 10, 14
    x, y, z = (op_curve(c, pad) for c in ((0, 1), (1, 0), (1, 1)))
    zero = BandOperator(pad, 0, {})

    def st_(a, b):  # operator of the stacked product a . b
        return b @ a

    t2, ti2 = T**2, T**-2
    r1 = (st_(x, x).scale(t2) + st_(y, y).scale(ti2) + st_(z, z).scale(t2)
          - st_(st_(x, y), z).scale(T) - op_identity(pad, 2 * TT))
    r2 = st_(x, y).scale(T) - st_(y, x).scale(T**-1) - z.scale(t2 - ti2)
    r3 = st_(z, x).scale(T) - st_(x, z).scale(T**-1) - y.scale(t2 - ti2)
    r4 = st_(y, z).scale(T) - st_(z, y).scale(T**-1) - x.scale(t2 - ti2)
    for r in (r1, r2, r3, r4):
        assert r.equal_within(zero, n)
    for r in bp_relators():
        assert op_of_skein(r, n).equal_within(zero, n)


def test_op_of_skein_examples():
    assert op_of_skein(ONE, 5) == op_identity(5)
    k1 = L((0, 1)) + SkeinElement.scalar(TT)
    assert op_of_skein(k1, 5).column(0) == {}


def test_band_composition_width():
    a, b = op_curve((2, 1), 12), op_curve((3, -1), 12)
    assert (a @ b).width == 5
    assert (a @ b).actual_width() <= 5


# -- kappa -------------------------------------------------------------------------------------

def test_unknot_kappa_examples():
    z = z_unknot(4)
    assert z[0] == 1
    assert z[1] == -TT
    assert z[2] == T**4 + 1 + T**-4
    assert z.depth == 4 and len(z) == 5


@pytest.mark.parametrize("c", range(0, 30))
def test_unknot_kappa_closed_form(c):
    sign = -1 if c % 2 else 1
    want = TRat((T ** (2 * (c + 1)) - T ** (-2 * (c + 1))) * sign, T**2 - T**-2)
    assert unknot_kappa(c) == want


def test_unknot_kappa_recursion():
    prev, cur = TPoly.const(0), TPoly.const(1)
    for c in range(60):
        assert unknot_kappa(c) == cur
        prev, cur = cur, -TT * cur - prev


def test_zseq_rejects_empty():
    with pytest.raises(ValueError):
        ZSeq(())


# -- pairing ---------------------------------------------------------------------------------

def test_pair_apply_identity():
    z = z_unknot(12)
    assert pair_apply(op_identity(12), z, 12) == list(z.values)


def test_pair_apply_kills_core_generator():
    z = z_unknot(32)
    op = op_of_skein(L((1, 0)) + SkeinElement.scalar(TT), 31)
    assert all(not v for v in pair_apply(op, z, 30))


def test_pair_apply_bounding_generator_is_nonzero():
    z = z_unknot(12)
    op = op_of_skein(L((0, 1)) + SkeinElement.scalar(TT), 10)
    vals = pair_apply(op, z, 10)
    assert not vals[0] and vals[1]
    assert first_nonzero(vals) == 1


def test_pair_apply_rejects_short_inputs():
    with pytest.raises(ValueError):
        pair_apply(op_curve((2, 1), 10), z_unknot(20), 10)
    with pytest.raises(ValueError):
        pair_apply(op_curve((1, 1), 12), z_unknot(10), 10)


# -- annihilator search ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def unknot_search():
    return annihilator_search(z_unknot(24), 1, 1, 20)


def test_search_finds_translated_generators(unknot_search):
    assert unknot_search.contains(L((1, 0)) + SkeinElement.scalar(TT))
    assert unknot_search.contains(L((1, 1)) + L((0, 1)) * T**-3)
    assert not unknot_search.contains(L((0, 1)) + SkeinElement.scalar(TT))


def test_search_results_annihilate(unknot_search):
    z = z_unknot(30)
    for s in unknot_search.skeins():
        vals = pair_apply(op_of_skein(s, 22), z, 20)
        assert all(not v for v in vals)


def test_search_trivial_window():
    res = annihilator_search(z_unknot(4), 0, 0, 3)
    assert res.vectors == [] and res.skeins() == []


def test_search_rejects_bad_input():
    with pytest.raises(ValueError):
        annihilator_search(ZSeq(tuple(TPoly.const(0) for _ in range(10))), 1, 1, 8)
    with pytest.raises(ValueError):
        annihilator_search(z_unknot(10), 1, 1, 2)


# -- linear algebra oracle ----------------------------------------------------------------------

def random_matrix(rng, nrows, ncols):
    def entry():
        if rng.random() < 0.3:
            return TPoly.const(0)
        return TPoly({rng.randint(-2, 2): rng.randint(-2, 2), rng.randint(-2, 2): rng.randint(-2, 2)})

    rows = [[entry() for _ in range(ncols)] for _ in range(nrows)]
    if nrows > 1 and rng.random() < 0.5:
        rows[-1] = [a * T + b for a, b in zip(rows[0], rows[1])]
    return rows


@pytest.mark.parametrize("seed", range(12))
def test_nullspace_matches_sympy(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(2, 4), rng.randint(3, 5)
    rows = random_matrix(rng, nrows, ncols)
    basis = nullspace(rows, ncols)
    S = sp.Matrix([[to_sympy_rat(c) for c in row] for row in rows])
    assert len(basis) == len(S.nullspace())
    for v in basis:
        for row in rows:
            acc = TRat(0)
            for a, b in zip(row, v):
                acc = acc + a * b
            assert acc == 0
    if basis:
        assert span_contains(basis, [sum((v[j] for v in basis), TPoly.const(0)) for j in range(ncols)])
