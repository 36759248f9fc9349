import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tdpairs.brackets import bracket, bracket_for, check_double_identity, check_eta_expansion
from tdpairs.exactfield import QQ, Field
from tdpairs.params import relatives
from tdpairs.random_data import random_array
from tdpairs.tdtype import TDType

from test_params import arrays

Q2 = QQ(2)
GF4 = Field("GF4")


def triples(total):
    return [x for x in itertools.product(range(total + 1), repeat=3) if sum(x) <= total]


def test_examples():
    for t in (TDType.I, TDType.II, TDType.III_MINUS):
        assert bracket(3, 0, 2, t, QQ, q=Q2) == 1
    assert bracket(1, 1, 1, TDType.II, QQ) == Fraction(4, 3)
    assert bracket(1, 1, 3, TDType.III_PLUS, QQ) == 0
    assert bracket(1, 1, 1, TDType.IV, GF4) == 0
    assert bracket(2, 0, 1, TDType.IV, GF4) == 1


def test_errors():
    with pytest.raises(ValueError):
        bracket(2, 2, 1, TDType.II, QQ, d=4)
    with pytest.raises(ValueError):
        bracket(2, 1, 1, TDType.IV, GF4)


@pytest.mark.parametrize("t", [TDType.I, TDType.II, TDType.III_PLUS, TDType.III_MINUS])
def test_symmetry_exhaustive(t):
    for r, s, u in triples(10):
        v = bracket(r, s, u, t, QQ, q=Q2)
        for p in itertools.permutations((r, s, u)):
            assert bracket(*p, t, QQ, q=Q2) == v


@given(st.integers(0, 6), st.integers(0, 6), st.sampled_from([Fraction(3), Fraction(-1, 2), Fraction(2, 3)]))
def test_type_i_q_inversion(r, s, q):
    # (q^2;q^2) quotients are unchanged by q -> 1/q
    assert bracket(r, s, 2, TDType.I, QQ, q=q) == bracket(r, s, 2, TDType.I, QQ, q=1 / q)


def test_double_identity_exhaustive():
    quads = [x for x in itertools.product(range(11), repeat=4) if sum(x) <= 10]
    for t in (TDType.I, TDType.II, TDType.III_MINUS):
        for x in quads:
            assert check_double_identity(*x, t, QQ, Q2)[0], (t, x)
    for x in itertools.product(range(4), repeat=4):
        if sum(x) <= 3:
            assert check_double_identity(*x, TDType.IV, GF4)[0]


@given(arrays)
def test_eta_expansion(pa):
    for i in range(pa.d + 1):
        ok, lhs, rhs = check_eta_expansion(pa, i)
        assert ok, (i, lhs, rhs)


def test_eta_expansion_type_i_d5():
    pa = random_array(random.Random(5), TDType.I, QQ, 5)
    assert all(check_eta_expansion(pa, i)[0] for i in range(6))


@given(arrays)
def test_d4_invariant_values(pa):
    ts = triples(pa.d) if pa.tdtype is not TDType.IV else triples(3)
    base = [bracket_for(pa, *x) for x in ts]
    for _, rel in relatives(pa):
        assert [bracket_for(rel, *x) for x in ts] == base
