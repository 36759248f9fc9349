from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tdpairs.errors import FieldMismatch, InvalidQ, ParseError
from tdpairs.exactfield import (GF4, QQ, Field, embed_gf4, q_bracket, q_factorial,
                                q_pochhammer, sqrt_in_field)

from strategies import FIELDS, elements, fields

F7 = Field("Fp", 7)
GF4F = Field("GF4")
GF16F = Field("GF16")


def test_characteristic():
    assert QQ.char == 0
    assert F7.char == 7
    assert GF4F.char == 2
    assert GF16F.char == 2


def test_parse_descriptors():
    assert Field.parse("Q") == QQ
    assert Field.parse("Fp:11") == Field("Fp", 11)
    assert Field.parse(" GF4 ") == GF4F
    for bad in ("Fp:9", "Fp:2", "Fp:x", "R", ""):
        with pytest.raises(ParseError):
            Field.parse(bad)


def test_pochhammer():
    assert q_pochhammer(Fraction(5), Fraction(1, 3), 0) == 1
    assert q_pochhammer(Fraction(1), Fraction(2), 3) == 0
    assert q_pochhammer(QQ(2), QQ(3), 2) == 5


def test_q_bracket_and_factorial():
    q = QQ(2)
    assert q_bracket(0, q) == 0
    assert q_bracket(1, q) == 1
    assert q_bracket(2, q) == Fraction(5, 2)
    assert q_factorial(0, q) == 1
    assert q_factorial(3, q) == q_bracket(2, q) * q_bracket(3, q)
    with pytest.raises(InvalidQ):
        q_bracket(2, QQ(-1))


def test_sqrt():
    assert sqrt_in_field(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(Fraction(2)) is None
    assert sqrt_in_field(Fraction(-4)) is None
    assert sqrt_in_field(F7(2)) in (F7(3), F7(4))
    assert sqrt_in_field(F7(3)) is None


def test_gf4_table():
    w = GF4F.w()
    assert w * w == w + 1
    assert w * (w + 1) == 1
    assert w + w == 0
    assert [GF4F.render(x) for x in GF4F.elements()] == ["0", "1", "w", "w+1"]


def test_gf4_embeds_as_subfield():
    xs = list(GF4F.elements())
    for x in xs:
        for y in xs:
            assert embed_gf4(x + y) == embed_gf4(x) + embed_gf4(y)
            assert embed_gf4(x * y) == embed_gf4(x) * embed_gf4(y)


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatch):
        F7(Field("Fp", 11)(3))
    with pytest.raises(FieldMismatch):
        GF4F(F7(1))
    with pytest.raises(ZeroDivisionError):
        F7(Fraction(1, 7))


@given(fields.flatmap(lambda F: st.tuples(st.just(F), elements(F), elements(F), elements(F))))
def test_field_axioms(args):
    F, x, y, z = args
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + F.zero() == x and x * F.one() == x
    assert x - x == 0
    if x:
        assert x * (1 / x) == 1


@given(fields.flatmap(lambda F: st.tuples(st.just(F), elements(F))))
def test_render_parse_roundtrip(args):
    F, x = args
    assert F.parse_element(F.render(x)) == x


@given(st.sampled_from([F for F in FIELDS if F.is_finite]))
def test_frobenius_or_fermat(F):
    for x in F.elements():
        assert x ** F.order == x


def test_parse_element_errors():
    with pytest.raises(ParseError):
        QQ.parse_element("1.5")
    with pytest.raises(ParseError):
        QQ.parse_element("abc")
    with pytest.raises(ParseError):
        F7.parse_element("1/7")
    with pytest.raises(ParseError):
        GF4F.parse_element("g")
    assert GF16F.parse_element("g^3 + g + 1") == GF16F.parse_element("g+1+g^3")
    assert isinstance(GF4F.parse_element("w+1"), GF4)
