import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from tdpairs import leonard
from tdpairs.drinfeld import normalized_drinfeld
from tdpairs.errors import NotApplicable, NotLeonard
from tdpairs.exactfield import QQ, Field
from tdpairs.params import TypeData
from tdpairs.polynomial import Polynomial
from tdpairs.tdtype import TDType

GF4 = Field("GF4")
GF16 = Field("GF16")
F101 = Field("Fp", 101)

CASES = [(TDType.I, QQ, None), (TDType.I, QQ, "bbcc0"), (TDType.I, QQ, "t0"),
         (TDType.II, QQ, None), (TDType.II, QQ, "cc0"), (TDType.II, F101, None),
         (TDType.III_MINUS, QQ, None)]


def draw(case, d, seed):
    t, F, sub = case
    if t is TDType.III_MINUS:
        d = 2 * (d // 2) + 1
    return leonard.random_leonard(random.Random(seed), t, F, d, subcase=sub)


leonard_data = st.tuples(st.sampled_from(CASES), st.integers(1, 6), st.integers(0, 10 ** 6)).map(
    lambda a: draw(*a))


def test_zeta_from_phi():
    assert leonard.zeta_from_phi([QQ(5)]) == (1, 5)
    assert leonard.zeta_from_phi([QQ(1)] * 4) == (1,) * 5
    assert leonard.zeta_from_phi([QQ(2), QQ(3)]) == (1, 2, 6)


def test_zero_phi_rejected():
    # type II, d=2, phi_1 vanishes when t = b b*/2 - (b c* + c b*) m_1 + c c* m_1^2
    td = TypeData(TDType.II, 0, 2, 0, 0, 1, 0)
    with pytest.raises(NotLeonard):
        leonard.phi_from_params(td, 2, QQ(1), QQ)


def test_no_parameterization_for_iii_plus():
    td = TypeData(TDType.III_PLUS, 0, 1, 1, 0, 1, 1)
    with pytest.raises(NotApplicable):
        leonard.phi_from_params(td, 2, QQ(1), QQ)


def test_type_i_t0_roots_all_zero():
    ld = leonard.random_leonard(random.Random(3), TDType.I, QQ, 4, subcase="t0")
    assert leonard.roots(ld) == [0] * 4
    H = normalized_drinfeld(ld.parameter_array())
    assert H == Polynomial(QQ, [0] * 4 + [H.leading()])


def test_psi_pair_type_ii():
    # psi^2 = 4 t cc* + b^2 c*^2 + b*^2 c^2 = 60 t + 109 with these values
    td = TypeData(TDType.II, 1, 2, 3, 0, 1, 5)
    assert sorted(leonard.solve_psi(td, 3, QQ(Fraction(1, 5)), QQ)) == [-11, 11]
    assert leonard.solve_psi(td, 3, QQ(2), QQ) == []


@given(leonard_data)
def test_roots_and_factorization(ld):
    H = normalized_drinfeld(ld.parameter_array())
    rs = leonard.roots(ld)
    want = ld.d if ld.tdtype in (TDType.I, TDType.II) else (ld.d + 1) // 2
    assert len(rs) == want
    assert all(H(r) == 0 for r in rs)
    prod = Polynomial.constant(ld.field, H.leading())
    for r in rs:
        prod = prod * Polynomial.linear(ld.field, -r, 1)
    assert prod == H


@given(leonard_data)
def test_factored_phi(ld):
    assume(ld.psi is not None)
    assert leonard.factored_phi(ld) == (ld.phi, ld.phi2)


@given(leonard_data)
def test_zeta_down_from_phi2(ld):
    assert ld.parameter_array() is not None
    from tdpairs.params import zeta_downarrow
    assert zeta_downarrow(ld.parameter_array()) == ld.zeta_down()


@settings(max_examples=25)
@given(leonard_data)
def test_oracle(ld):
    pa = ld.parameter_array()
    mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, ld.field)
    assert leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "word") == ld.zeta()
    assert leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "E") == ld.zeta()
    assert leonard.check_tridiagonal_relations(mp, pa.theta, pa.theta_star)
    assert leonard.shape(mp, pa.theta, pa.theta_star) == ([1] * (ld.d + 1),) * 2


def test_relations_d2_and_dense_violation():
    ld = leonard.random_leonard(random.Random(2), TDType.II, QQ, 2)
    pa = ld.parameter_array()
    mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, QQ)
    assert leonard.check_tridiagonal_relations(mp, pa.theta, pa.theta_star)
    rng = random.Random(0)
    dense = [[QQ(rng.randint(1, 9)) for _ in range(3)] for _ in range(3)]
    bad = leonard.MatrixPair(mp.A, dense, QQ, "generic")
    assert not leonard.check_tridiagonal_relations(bad, pa.theta, pa.theta_star)


def test_type_iv_psi_outside_gf4():
    rng = random.Random(4)
    for _ in range(10):
        ld = leonard.random_leonard(rng, TDType.IV, GF4, 3)
        assert ld.psi is None
        big = leonard.lift_to_gf16(ld)
        sols = leonard.solve_psi(big.type_data, 3, big.t, GF16)
        shift = leonard.iv_psi_shift(big.type_data)
        assert set(sols) == {big.psi, big.psi + shift}
        rs = leonard.roots(big)
        H = normalized_drinfeld(big.parameter_array())
        assert len(rs) == 2 and all(H(r) == 0 for r in rs)
        assert not any(leonard._iv_psi_residuals(big.type_data, big.t, big.psi))


def test_type_iv_oracle():
    ld = leonard.random_leonard(random.Random(9), TDType.IV, GF16, 3)
    pa = ld.parameter_array()
    mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, GF16)
    assert leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "E") == ld.zeta()
    assert leonard.check_tridiagonal_relations(mp, pa.theta, pa.theta_star)
