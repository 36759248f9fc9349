"""Dense univariate polynomials in lambda over an exact field."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatch
from .exactfield import Field


class Polynomial:
    """Immutable polynomial, coefficients in ascending degree.

    The zero polynomial has no coefficients and degree ``-1`` (standing in
    for minus infinity). Equality is coefficient-wise and exact.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def variable(cls, field: Field) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def linear(cls, field: Field, const, slope) -> "Polynomial":
        """const + slope * lambda"""
        return cls(field, [const, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero()

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
            return other
        return Polynomial(self.field, [other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self.field, [self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return Polynomial(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.field, 1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self.field, [c * x for x in self.coeffs])

    def __call__(self, x):
        """Horner evaluation."""
        x = self.field(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, u, v) -> "Polynomial":
        """The polynomial lambda -> self(u*lambda + v)."""
        inner = Polynomial.linear(self.field, v, u)
        acc = Polynomial(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_list(self) -> list:
        return list(self.coeffs)

    def render(self) -> str:
        return "[" + ", ".join(self.field.render(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"Polynomial({self.field}, {self.render()})"


# free-function aliases for the ring operations
def poly_add(p: Polynomial, r: Polynomial) -> Polynomial:
    return p + r


def poly_mul(p: Polynomial, r: Polynomial) -> Polynomial:
    return p * r


def poly_scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def poly_eval(p: Polynomial, x):
    return p(x)


def product(field: Field, factors: Iterable[Polynomial]) -> Polynomial:
    result = Polynomial.constant(field, 1)
    for f in factors:
        result = result * f
    return result


def tau_poly(i: int, theta: Sequence, field: Field) -> Polynomial:
    """(lambda - theta_0)(lambda - theta_1)...(lambda - theta_{i-1})"""
    d = len(theta) - 1
    if not 0 <= i <= d + 1:
        raise IndexError(f"tau index {i} outside 0..{d + 1}")
    return product(field, (Polynomial.linear(field, -theta[k], 1) for k in range(i)))


def eta_poly(i: int, theta: Sequence, field: Field) -> Polynomial:
    """(lambda - theta_d)(lambda - theta_{d-1})...(lambda - theta_{d-i+1})"""
    d = len(theta) - 1
    if not 0 <= i <= d + 1:
        raise IndexError(f"eta index {i} outside 0..{d + 1}")
    return product(field, (Polynomial.linear(field, -theta[d - k], 1) for k in range(i)))


def tau_at(i: int, theta: Sequence, x):
    """tau_i(x) without building the polynomial."""
    result = x * 0 + 1
    for k in range(i):
        result = result * (x - theta[k])
    return result


def eta_at(i: int, theta: Sequence, x):
    d = len(theta) - 1
    result = x * 0 + 1
    for k in range(i):
        result = result * (x - theta[d - k])
    return result


def reciprocal_clear(p: Polynomial, d: int, k, denom: Polynomial) -> Polynomial:
    """denom^d * p(k / denom) as a polynomial; needs deg p <= d."""
    if p.degree > d:
        raise ValueError(f"degree {p.degree} exceeds clearing power {d}")
    acc = Polynomial(p.field)
    k = p.field(k)
    for i, c in enumerate(p.coeffs):
        acc = acc + (denom ** (d - i)).scale(c * k ** i)
    return acc
