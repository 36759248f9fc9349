from fractions import Fraction

from hypothesis import given
import hypothesis.strategies as st

from tdpairs.exactfield import QQ, Field
from tdpairs.polynomial import Polynomial, eta_poly, reciprocal_clear, tau_at, tau_poly

from strategies import small_rationals

lam = Polynomial.variable(QQ)
polys = st.lists(small_rationals, max_size=6).map(lambda cs: Polynomial(QQ, cs))


def test_basics():
    assert (lam - 3)(3) == 0
    assert (lam + 1) * (lam - 1) == Polynomial(QQ, [-1, 0, 1])
    assert Polynomial(QQ)(Fraction(7)) == 0
    assert Polynomial(QQ, [1, 2, 0, 0]).degree == 1
    assert Polynomial(QQ).degree == -1


def test_tau_and_eta():
    theta = (QQ(2), QQ(5))
    assert tau_poly(0, theta, QQ) == Polynomial.constant(QQ, 1)
    assert tau_poly(2, theta, QQ) == Polynomial(QQ, [10, -7, 1])
    assert eta_poly(1, theta, QQ) == lam - 5
    assert tau_at(1, theta, QQ(2)) == 0


@given(polys, polys, small_rationals)
def test_evaluation_is_a_ring_map(p, r, x):
    assert (p + r)(x) == p(x) + r(x)
    assert (p * r)(x) == p(x) * r(x)


@given(polys, small_rationals, small_rationals, small_rationals)
def test_compose_affine(p, u, v, x):
    assert p.compose_affine(u, v)(x) == p(u * x + v)


@given(st.lists(small_rationals, min_size=1, max_size=5), small_rationals.filter(bool),
       small_rationals.filter(lambda x: x not in (0, -2)))
def test_reciprocal_clear(cs, k, x):
    p = Polynomial(QQ, cs)
    d = len(cs) - 1
    den = Polynomial(QQ, [2, 1])
    cleared = reciprocal_clear(p, d, k, den)
    assert cleared(x) == den(x) ** d * p(k / den(x))


def test_finite_field_polys():
    F = Field("GF4")
    w = F.w()
    x = Polynomial.variable(F)
    p = (x - w) * (x - (w + 1))
    assert p == x * x + x + 1
    assert all(p(y) for y in (F.zero(), F.one()))
