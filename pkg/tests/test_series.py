import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st

from tdpairs import leonard, series
from tdpairs.errors import UndefinedSeries
from tdpairs.exactfield import QQ, Field
from tdpairs.tdtype import TDType

from strategies import nonzero_rationals, small_rationals


def test_n0_is_one():
    for kind, num, den in (("3F2", (0, 2, 3), (4, 5)), ("2F1", (0, 2), (3,)), ("1F0", (0,), ()),
                           ("3phi2", (1, 2, 3), (4, 5)), ("2phi1", (1, 3), (5,))):
        spec = series.SeriesSpec.build(kind, num, den, 7, QQ, q=2, n=0)
        assert series.evaluate(spec) == 1


@given(small_rationals, nonzero_rationals)
def test_two_term_2f1(b, c):
    spec = series.SeriesSpec.build("2F1", (-1, b), (c,), 1, QQ)
    assert series.evaluate(spec) == (c - b) / c


@given(st.integers(0, 8), small_rationals)
def test_binomial(n, z):
    assert series.check_binomial(n, z, QQ)[0]


def test_inferred_order_and_errors():
    spec = series.SeriesSpec.build("3phi2", (Fraction(1, 16), 3, 5), (7, 11), 2, QQ, q=2)
    assert spec.n == 2
    with pytest.raises(UndefinedSeries):
        series.SeriesSpec.build("3phi2", (Fraction(1, 2), 3, 5), (7, 11), 2, QQ, q=3)
    with pytest.raises(UndefinedSeries):
        series.evaluate(series.SeriesSpec.build("2F1", (-3, 1), (-1,), 1, QQ))
    with pytest.raises(ValueError):
        series.SeriesSpec.build("4F3", (-1,), (), 1, QQ)


@given(st.sampled_from(["3F2", "2F1", "3phi2", "2phi1"]), st.integers(0, 6), st.integers(0, 10 ** 6))
def test_recurrence_matches_direct_terms(kind, n, seed):
    rng = random.Random(seed)
    r, s, basic = series.KINDS[kind]
    q = Fraction(rng.choice([2, -3, 5]), rng.choice([1, 2, 7]))
    first = (q * q) ** -n if basic else QQ(-n)
    num = (first,) + tuple(QQ.random_element(rng, nonzero=True) for _ in range(r - 1))
    den = tuple(QQ.random_element(rng, nonzero=True) for _ in range(s))
    try:
        spec = series.SeriesSpec.build(kind, num, den, QQ.random_element(rng), QQ, q, n)
        ts = series.terms(spec)
    except UndefinedSeries:
        assume(False)
    assert ts == [series.direct_term(spec, k) for k in range(n + 1)]


@pytest.mark.parametrize("identity", sorted(series.IDENTITIES))
@pytest.mark.parametrize("field", [QQ, Field("Fp", 10007)], ids=str)
def test_random_instances(identity, field):
    rng = random.Random(f"{identity}/{field}")
    for _ in range(100):
        kw = series.random_instance(rng, identity, field)
        ok, lhs, rhs = series.IDENTITIES[identity](field=field, **kw)
        assert ok, (kw, lhs, rhs)


def test_n1_saalschutz_by_hand():
    a, b, c = QQ(Fraction(1, 3)), QQ(2), QQ(5)
    # 1 + (-1) a b / (c (a+b-c)) against (c-a)(c-b) / (c (c-a-b))
    ok, lhs, rhs = series.check_saalschutz(1, a, b, c, QQ)
    assert ok and lhs == 1 - a * b / (c * (a + b - c))


def test_regroup_detects_mismatch():
    assert series.regroup_iii([1, 2, 3, 4], [1, 5, 4])
    assert not series.regroup_iii([1, 2, 3, 4], [1, 6, 4])
    assert not series.regroup_iii([1, 2, 3, 4], [1, 5])


PROOF_CASES = [(TDType.I, None), (TDType.I, "bbcc0"), (TDType.I, "t0"),
               (TDType.II, None), (TDType.II, "cc0"), (TDType.III_MINUS, None)]


@settings(max_examples=40)
@given(st.sampled_from(PROOF_CASES), st.integers(1, 6), st.integers(0, 10 ** 6), nonzero_rationals)
def test_proof_instances(case, d, seed, x):
    t, sub = case
    if t is TDType.III_MINUS:
        d = 2 * (d // 2) + 1
    ld = leonard.random_leonard(random.Random(seed), t, QQ, d, subcase=sub)
    try:
        inst = series.proof_instance(ld, x)
    except (UndefinedSeries, ZeroDivisionError, series.NotApplicable):
        assume(False)
    assert inst.ok, inst
