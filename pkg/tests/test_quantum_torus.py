import pytest
from hypothesis import given

from ncapoly.coefficients import T, TPoly
from ncapoly.quantum_plane import PlanePoly
from ncapoly.quantum_torus import QTElement, Shift, clear_to_plane, e, qt_mul, qt_theta, rieffel_det

from strategies import qt_elements

l, m = e(1, 0), e(0, 1)
l_inv, m_inv = e(-1, 0), e(0, -1)


def monomial_product(x: QTElement, y: QTElement) -> QTElement:
    """Oracle: multiply in monomial form, moving m^b past l^p with t^{-2bp}."""
    acc = {}
    for (a, b), c in x.to_monomials().items():
        for (p, q), d in y.to_monomials().items():
            key = (a + p, b + q)
            acc[key] = acc.get(key, TPoly.const(0)) + c * d * T ** (-2 * b * p)
    return QTElement.from_monomials(acc)


def test_determinant():
    assert rieffel_det(1, 0, 0, 1) == 1
    assert rieffel_det(0, 1, 1, 0) == -1


def test_basis_product_example():
    assert qt_mul(e(1, 0), e(0, 1)) == e(1, 1, T)


def test_lm_commutation():
    assert qt_mul(l, m) - qt_mul(m, l) * T**2 == QTElement()


def test_unit():
    x = e(2, -1, T + 3) + e(0, 4)
    assert qt_mul(x, e(0, 0)) == x
    assert qt_mul(e(0, 0), x) == x


def test_sum_product_example():
    got = qt_mul(e(1, 0) + e(-1, 0), e(0, 1) + e(0, -1))
    want = (e(1, 1) + e(-1, -1)).scale(T) + (e(1, -1) + e(-1, 1)).scale(T**-1)
    assert got == want


@given(qt_elements(), qt_elements())
def test_product_agrees_with_commutation_rule(x, y):
    assert qt_mul(x, y) == monomial_product(x, y)


@given(qt_elements(), qt_elements(), qt_elements())
def test_associative(x, y, z):
    assert qt_mul(qt_mul(x, y), z) == qt_mul(x, qt_mul(y, z))


@given(qt_elements(), qt_elements(), qt_elements())
def test_distributive(x, y, z):
    assert qt_mul(x, y + z) == qt_mul(x, y) + qt_mul(x, z)


def test_theta_examples():
    assert qt_theta(e(2, 3)) == e(-2, -3)


@given(qt_elements())
def test_theta_involution(x):
    assert qt_theta(qt_theta(x)) == x


@given(qt_elements(), qt_elements())
def test_theta_automorphism(x, y):
    assert qt_theta(qt_mul(x, y)) == qt_mul(qt_theta(x), qt_theta(y))


@given(qt_elements())
def test_monomial_dictionary_round_trip(x):
    assert QTElement.from_monomials(x.to_monomials()) == x


def test_monomial_dictionary():
    # l^p m^q = t^{pq} e_{p,q}
    assert QTElement.from_monomials({(2, 3): 1}) == e(2, 3, T**6)
    assert qt_mul(qt_mul(l, l), m) == QTElement.from_monomials({(2, 1): 1})


def test_zero_coefficients_dropped():
    assert QTElement({(1, 1): 0, (0, 0): TPoly.const(0)}) == QTElement()
    assert not QTElement({(1, 1): 0})


# -- clear_to_plane ---------------------------------------------------------------

def test_clear_meridian_generator():
    x = m + m_inv + QTElement.scalar(T**2 + T**-2)
    g, sh = clear_to_plane(x)
    assert sh == Shift(0, 1)
    assert g == PlanePoly({(0, 2): 1, (0, 1): T**2 + T**-2, (0, 0): 1})


def test_clear_second_generator():
    x = e(1, 1) + e(-1, -1) + (e(1, 0) + e(-1, 0)).scale(T**-3)
    g, sh = clear_to_plane(x)
    assert sh == Shift(1, 1)
    assert g == PlanePoly({(2, 2): T**-3, (2, 1): T**-5, (0, 1): T**-1, (0, 0): T})


def test_clear_noop():
    x = QTElement.from_monomials({(2, 1): 1})
    g, sh = clear_to_plane(x)
    assert sh == Shift(0, 0)
    assert g == PlanePoly.monomial(2, 1)


def test_clear_rejects_zero():
    with pytest.raises(ValueError):
        clear_to_plane(QTElement())


@given(qt_elements(nonzero=True))
def test_clear_shift_is_minimal(x):
    g, sh = clear_to_plane(x)
    assert g.to_qt() == qt_mul(sh.as_element(), x)
    assert all(p >= 0 and q >= 0 for p, q in g.terms)
    if sh.a:
        y = qt_mul(Shift(sh.a - 1, sh.b).as_element(), x)
        assert min(p for p, _ in y.terms) < 0
    if sh.b:
        y = qt_mul(Shift(sh.a, sh.b - 1).as_element(), x)
        assert min(q for _, q in y.terms) < 0
