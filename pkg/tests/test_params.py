import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tdpairs.errors import InvalidQ, NotTridiagonalEigenvalues, TDError, ValidationError
from tdpairs.exactfield import QQ, Field
from tdpairs.params import (RELATIVES, ParameterArray, TypeData, classify_type, compute_base,
                            d4_apply, fit_type_data, generate_parameter_array, relatives,
                            zeta_downarrow)
from tdpairs.random_data import random_array
from tdpairs.tdtype import TDType

TYPES = [(TDType.I, QQ), (TDType.II, QQ), (TDType.II, Field("Fp", 11)),
         (TDType.III_PLUS, QQ), (TDType.III_MINUS, QQ), (TDType.IV, Field("GF4"))]


def _d_for(t, d):
    if t is TDType.IV:
        return 3
    if t is TDType.III_PLUS:
        return 2 * (d // 2)
    if t is TDType.III_MINUS:
        return 2 * (d // 2) + 1
    return d


arrays = st.tuples(st.sampled_from(TYPES), st.integers(0, 6), st.integers(0, 10 ** 6)).map(
    lambda a: random_array(random.Random(a[2]), a[0][0], a[0][1], _d_for(a[0][0], a[1])))


def test_compute_base():
    assert compute_base([QQ(x) for x in (3, 1, -1, -3)], [QQ(x) for x in (3, 1, -1, -3)]) == 2
    q = QQ(2)
    geo = [q ** (3 - 2 * i) for i in range(4)]
    assert compute_base(geo, geo) == Fraction(17, 4)
    with pytest.raises(ValidationError):
        compute_base([QQ(1), QQ(2), QQ(3)], [QQ(1), QQ(2), QQ(3)])
    with pytest.raises(NotTridiagonalEigenvalues):
        compute_base([QQ(x) for x in (0, 1, 5, 6)], [QQ(x) for x in (0, 1, 2, 3)])


def test_classify():
    assert classify_type(Fraction(17, 4), QQ, 3) is TDType.I
    assert classify_type(2, QQ, 5) is TDType.II
    assert classify_type(-2, QQ, 4) is TDType.III_PLUS
    assert classify_type(-2, QQ, 5) is TDType.III_MINUS
    assert classify_type(0, Field("GF4"), 3) is TDType.IV


def test_fit():
    q = QQ(2)
    geo = [q ** (3 - 2 * i) for i in range(4)]
    td = fit_type_data(geo, geo, TDType.I, QQ, q)
    assert (td.a, td.b, td.c) == (0, 0, 1)
    lin = [QQ(3 - 2 * i) for i in range(4)]
    td = fit_type_data(lin, lin, TDType.II, QQ)
    assert (td.a, td.b, td.c) == (0, -2, 0)


def test_generate_examples():
    td = TypeData(TDType.I, 0, 1, 0, 0, 0, 1, q=QQ(2))
    pa = generate_parameter_array(td, 2, (QQ(1), QQ(3), QQ(5)), QQ)
    assert pa.theta == (Fraction(1, 4), 1, 4)
    assert pa.theta_star == (4, 1, Fraction(1, 4))
    td0 = TypeData(TDType.II, 5, 1, 0, 7, 1, 0)
    assert generate_parameter_array(td0, 0, (QQ(1),), QQ).zeta == (1,)


def test_type_ii_characteristic_guard():
    td = TypeData(TDType.II, 0, 1, 0, 0, 1, 0)
    F5 = Field("Fp", 5)
    with pytest.raises(TDError):
        generate_parameter_array(td, 7, (F5(1),) * 8, F5)


def test_validation_errors():
    with pytest.raises(ValidationError):
        ParameterArray(QQ, 1, (QQ(1), QQ(1)), (QQ(1), QQ(2)), (QQ(1), QQ(1)), QQ(3))
    with pytest.raises(ValidationError):
        ParameterArray(QQ, 1, (QQ(1), QQ(2)), (QQ(1), QQ(2)), (QQ(2), QQ(1)), QQ(3))
    with pytest.raises(ValidationError):
        ParameterArray(QQ, 1, (QQ(1), QQ(2)), (QQ(1), QQ(2)), (QQ(1), QQ(1)), QQ(0))
    with pytest.raises(InvalidQ):
        ParameterArray(QQ, 1, (QQ(1), QQ(2)), (QQ(1), QQ(2)), (QQ(1), QQ(1)), QQ(3), q=QQ(2))


@given(arrays)
def test_d4_group_laws(pa):
    for w in ("ss", "dd", "DD", "sdsD"):
        assert d4_apply(pa, w) == pa
    # d and D commute, and * conjugates one into the other
    assert d4_apply(pa, "dD") == d4_apply(pa, "Dd")
    assert d4_apply(pa, "sds") == d4_apply(pa, "D")


@given(arrays)
def test_relatives_are_valid_and_keep_type(pa):
    rels = dict(relatives(pa))
    assert set(rels) == set(RELATIVES)
    for rel in rels.values():
        assert rel.tdtype is pa.tdtype
        assert rel.d == pa.d


@given(arrays)
def test_zeta_down_basics(pa):
    zd = zeta_downarrow(pa)
    assert zd[0] == 1
    assert len(zd) == pa.d + 1


def test_zeta_down_d1():
    pa = ParameterArray(QQ, 1, (QQ(1), QQ(-1)), (QQ(1), QQ(-1)), (QQ(1), QQ(2)), QQ(3))
    assert zeta_downarrow(pa) == (1, 6)


@given(arrays)
def test_base_is_d4_invariant(pa):
    for _, rel in relatives(pa):
        assert rel.beta == pa.beta
        if pa.d >= 3:
            assert compute_base(rel.theta, rel.theta_star) == pa.beta


@given(arrays)
def test_fit_inverts_generate(pa):
    if pa.d < 2 or pa.type_data is None:
        return
    td = pa.type_data
    fit = fit_type_data(pa.theta, pa.theta_star, pa.tdtype, pa.field, td.q)
    assert fit == td
