"""Exact fields: the rationals, prime fields Z/p (p odd), GF(4) and GF(16).

Rationals are plain ``fractions.Fraction`` values. Prime-field and GF(4)
elements are small immutable classes with the usual operator overloads, so
every formula elsewhere in the package is written once and runs over any
kind. Python ints mix freely with all element types and are read
as their image in the prime subfield.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import FieldMismatch, InvalidQ, ParseError

#: largest prime modulus for which exhaustive scans (square roots, psi search)
#: are allowed
MAX_SCAN_MODULUS = 1_000_003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Mod:
    """Residue class modulo an odd prime."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> Optional["Mod"]:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"Fp:{self.p} vs Fp:{other.p}")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        if isinstance(other, Fraction):
            return Mod(other.numerator, self.p) / Mod(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _gf2_poly_mul(x: int, y: int, modulus: int, bits: int) -> int:
    """Carry-less product of bit-coded polynomials, reduced mod ``modulus``."""
    out = 0
    while y:
        if y & 1:
            out ^= x
        y >>= 1
        x <<= 1
        if x >> bits & 1:
            x ^= modulus
    return out


class _Char2Element:
    """Element of a small field of characteristic 2 given by lookup tables.

    Subclasses set the field size, the multiplication and inverse tables,
    and element names. Ints and odd-denominator rationals coerce via the
    prime subfield.
    """

    __slots__ = ("value",)
    SIZE = 0
    TAG = ""
    _MUL: list = []
    _INV: dict = {}
    _NAMES: tuple = ()

    def __init__(self, value: int):
        if not 0 <= value < self.SIZE:
            raise ValueError(f"{self.TAG} code must be in 0..{self.SIZE - 1}, got {value}")
        self.value = value

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, _Char2Element):
            raise FieldMismatch(f"{cls.TAG} vs {other.TAG}")
        if isinstance(other, int):
            return cls(other & 1)
        if isinstance(other, Fraction):
            if other.denominator % 2 == 0:
                raise ZeroDivisionError("even denominator in characteristic 2")
            return cls(other.numerator & 1)
        if isinstance(other, Mod):
            raise FieldMismatch(f"{cls.TAG} vs prime field")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.value ^ o.value)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self._MUL[self.value][o.value])

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.TAG}")
        return type(self)(self._INV[self.value])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return self

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self)(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == (other & 1)
        return NotImplemented

    def __hash__(self):
        return hash((self.TAG, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.TAG}({self._NAMES[self.value]!r})"

    def __str__(self):
        return self._NAMES[self.value]


def _tables(size: int, modulus: int, bits: int):
    mul = [[_gf2_poly_mul(x, y, modulus, bits) for y in range(size)] for x in range(size)]
    inv = {x: next(y for y in range(1, size) if mul[x][y] == 1) for x in range(1, size)}
    return mul, inv


def _poly_name(v: int, var: str) -> str:
    if not v:
        return "0"
    terms = []
    for k in range(v.bit_length() - 1, -1, -1):
        if v >> k & 1:
            terms.append("1" if k == 0 else var if k == 1 else f"{var}^{k}")
    return "+".join(terms)


class GF4(_Char2Element):
    """Element of the field with four elements, {0, 1, w, w+1} with w^2 = w + 1.

    Code x0 + 2*x1 stands for x0 + x1*w.
    """

    __slots__ = ()
    SIZE = 4
    TAG = "GF4"
    _MUL, _INV = _tables(4, 0b111, 2)
    _NAMES = tuple(_poly_name(v, "w") for v in range(4))


class GF16(_Char2Element):
    """Element of the field with sixteen elements, polynomials in g with g^4 = g + 1.

    Holds the roots of quadratics over GF(4); GF(4) sits inside as
    {0, 1, g^5, g^10} (see ``embed_gf4``).
    """

    __slots__ = ()
    SIZE = 16
    TAG = "GF16"
    _MUL, _INV = _tables(16, 0b10011, 4)
    _NAMES = tuple(_poly_name(v, "g") for v in range(16))


# w -> g^5 = g^2 + g, w + 1 -> g^10 = g^2 + g + 1
_GF4_TO_GF16 = (0, 1, 0b0110, 0b0111)


def embed_gf4(x) -> GF16:
    """Image of a GF(4) element in GF(16) (a field homomorphism)."""
    if not isinstance(x, GF4):
        x = GF4._coerce(x)
    return GF16(_GF4_TO_GF16[x.value])


Element = Union[Fraction, Mod, GF4, GF16]

_CHAR2 = {"GF4": GF4, "GF16": GF16}


def _parse_char2(cls, s: str, text: str):
    """Sum of terms 0, 1, x, x^k in the field's variable (w for GF4, g for GF16)."""
    var = cls._NAMES[2]
    code = 0
    for term in s.split("+"):
        if term in ("0", "1"):
            k = None if term == "0" else 0
        elif term == var:
            k = 1
        elif term.startswith(var + "^") and term[len(var) + 1:].isdigit():
            k = int(term[len(var) + 1:])
        else:
            raise ParseError(f"bad {cls.TAG} element {text!r} (sums of 1, {var}, {var}^k)")
        if k is not None:
            code ^= (cls(2) ** k).value
    return cls(code)


@dataclass(frozen=True)
class Field:
    """Descriptor of an exact field: ``Q``, ``Fp:<p>``, ``GF4`` or ``GF16``."""

    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Q" or self.kind in _CHAR2:
            if self.modulus is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        elif self.kind == "Fp":
            p = self.modulus
            if p is None or p == 2 or not _is_prime(p):
                raise ValueError(f"prime-field modulus must be an odd prime, got {p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        s = text.strip()
        if s == "Q":
            return cls("Q")
        if s in _CHAR2:
            return cls(s)
        if s.startswith("Fp:"):
            try:
                p = int(s[3:])
            except ValueError:
                raise ParseError(f"bad modulus in field descriptor {text!r}") from None
            try:
                return cls("Fp", p)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"unknown field descriptor {text!r} (expected Q, Fp:<p>, GF4 or GF16)")

    def __str__(self):
        return f"Fp:{self.modulus}" if self.kind == "Fp" else self.kind

    @property
    def char(self) -> int:
        return 0 if self.kind == "Q" else 2 if self.kind in _CHAR2 else self.modulus

    @property
    def is_finite(self) -> bool:
        return self.kind != "Q"

    @property
    def order(self) -> Optional[int]:
        if self.kind == "Q":
            return None
        return _CHAR2[self.kind].SIZE if self.kind in _CHAR2 else self.modulus

    def __call__(self, value) -> Element:
        """Image of ``value`` (int, Fraction or element of this field)."""
        if self.kind == "Q":
            if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
                return Fraction(value)
        elif self.kind == "Fp":
            if isinstance(value, Mod):
                if value.p != self.modulus:
                    raise FieldMismatch(f"element of Fp:{value.p} used in {self}")
                return value
            if isinstance(value, int):
                return Mod(value, self.modulus)
            if isinstance(value, Fraction):
                if value.denominator % self.modulus == 0:
                    raise ZeroDivisionError(f"{value} has no image in {self}")
                return Mod(value.numerator, self.modulus) / value.denominator
        else:
            cls = _CHAR2[self.kind]
            if isinstance(value, cls):
                return value
            if isinstance(value, (int, Fraction)):
                return cls._coerce(value)
        raise FieldMismatch(f"cannot interpret {value!r} in {self}")

    def zero(self) -> Element:
        return self(0)

    def one(self) -> Element:
        return self(1)

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        if self.kind == "Fp":
            return isinstance(x, Mod) and x.p == self.modulus
        return isinstance(x, _CHAR2[self.kind])

    def elements(self) -> Iterator[Element]:
        if self.kind == "Q":
            raise ValueError("the rationals are not finite")
        if self.kind in _CHAR2:
            cls = _CHAR2[self.kind]
            return (cls(v) for v in range(cls.SIZE))
        return (Mod(v, self.modulus) for v in range(self.modulus))

    def w(self) -> GF4:
        if self.kind != "GF4":
            raise ValueError("w only exists in GF4")
        return GF4(2)

    def parse_element(self, text: str) -> Element:
        s = text.strip().replace(" ", "")
        if self.kind in _CHAR2:
            return _parse_char2(_CHAR2[self.kind], s, text)
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad element {text!r} for {self}") from None
        if "." in s or "e" in s.lower():
            raise ParseError(f"decimal notation not allowed: {text!r}")
        try:
            return self(value)
        except ZeroDivisionError:
            raise ParseError(f"{text!r} has no image in {self}") from None

    def render(self, x: Element) -> str:
        x = self(x)
        if isinstance(x, Fraction):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def random_element(self, rng: random.Random, nonzero: bool = False, height: int = 9) -> Element:
        """Uniform element of a finite field, or a small-height rational."""
        while True:
            if self.kind == "Q":
                x = Fraction(rng.randint(-height, height), rng.randint(1, height))
            elif self.kind in _CHAR2:
                cls = _CHAR2[self.kind]
                x = cls(rng.randrange(cls.SIZE))
            else:
                x = Mod(rng.randrange(self.modulus), self.modulus)
            if x or not nonzero:
                return x


QQ = Field("Q")


def field_of(x) -> Field:
    if isinstance(x, Mod):
        return Field("Fp", x.p)
    if isinstance(x, _Char2Element):
        return Field(x.TAG)
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return QQ
    raise FieldMismatch(f"not a field element: {x!r}")


def char(field: Field) -> int:
    return field.char


def q_pochhammer(a, q, n: int):
    """(a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}); empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = a * 0 + 1
    term = a
    for _ in range(n):
        result = result * (1 - term)
        term = term * q
    return result


def _check_q(q):
    if not q or q * q == 1:
        raise InvalidQ(f"q={q} makes q - 1/q vanish")


def q_bracket(n: int, q):
    """[n]_q = (q^n - q^-n)/(q - q^-1)."""
    _check_q(q)
    return (q ** n - q ** (-n)) / (q - q ** (-1))


def q_factorial(n: int, q):
    _check_q(q)
    result = q * 0 + 1
    for k in range(1, n + 1):
        result = result * q_bracket(k, q)
    return result


def sqrt_in_field(x) -> Optional[Element]:
    """Some ``y`` with ``y*y == x``, or None when ``x`` is not a square.

    Rationals use an exact integer square-root test on numerator and
    denominator; finite fields are scanned exhaustively.
    """
    if isinstance(x, int) and not isinstance(x, bool):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if x < 0:
            return None
        rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if rn * rn == x.numerator and rd * rd == x.denominator:
            return Fraction(rn, rd)
        return None
    field = field_of(x)
    if field.order > MAX_SCAN_MODULUS:
        raise ValueError(f"{field} too large for exhaustive square-root scan")
    for y in field.elements():
        if y * y == x:
            return y
    return None
