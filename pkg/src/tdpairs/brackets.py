"""The trinomial-like scalars [r, s, t] attached to each type.

Type I uses q explicitly (as quotients of (q^2; q^2)_n), types II and III
use factorials mapped into the field, type IV is a two-valued table valid
for diameter 3.
"""

from __future__ import annotations

import math
from typing import Optional

from .errors import InvalidQ, TDError
from .exactfield import Field, q_pochhammer
from .polynomial import Polynomial, eta_at, eta_poly, tau_poly
from .tdtype import TDType


def _int_factorial(field: Field, n: int):
    value = field(math.factorial(n))
    # guaranteed by the characteristic constraints; checked rather than assumed
    if not value:
        raise TDError(f"{n}! vanishes in {field}")
    return value


def bracket(r: int, s: int, t: int, tdtype: TDType, field: Field,
            d: Optional[int] = None, q=None):
    if min(r, s, t) < 0:
        raise ValueError("bracket arguments must be nonnegative")
    if d is not None and r + s + t > d:
        raise ValueError(f"r+s+t={r + s + t} exceeds d={d}")
    if min(r, s, t) == 0:
        return field.one()

    if tdtype is TDType.I:
        if q is None:
            raise InvalidQ("type I brackets need q")
        q = field(q)
        q2 = q * q
        for k in range(1, r + s + t + 1):
            if q2 ** k == 1:
                raise InvalidQ(f"q^{2 * k} = 1")

        def qf(n):
            return q_pochhammer(q2, q2, n)

        num = qf(r + s) * qf(r + t) * qf(s + t)
        den = qf(r) * qf(s) * qf(t) * qf(r + s + t)
        if not den:
            raise TDError("vanishing denominator in type I bracket")
        return num / den

    if tdtype is TDType.II:
        f = lambda n: _int_factorial(field, n)  # noqa: E731
        return f(r + s) * f(r + t) * f(s + t) / (f(r) * f(s) * f(t) * f(r + s + t))

    if tdtype.is_III:
        if r % 2 and s % 2 and t % 2:
            return field.zero()
        f = lambda n: _int_factorial(field, n // 2)  # noqa: E731
        return f(r + s) * f(r + t) * f(s + t) / (f(r) * f(s) * f(t) * f(r + s + t))

    if tdtype is TDType.IV:
        if r + s + t > 3:
            raise ValueError("type IV brackets are only defined for r+s+t <= 3")
        # all of r, s, t are positive here, so (1, 1, 1)
        return field.zero()

    raise ValueError(f"unknown type {tdtype}")


def bracket_for(pa, r: int, s: int, t: int):
    """bracket with the type context (type, field, d, q) of a parameter array."""
    return bracket(r, s, t, pa.tdtype, pa.field, pa.d, pa.q)


def eta_expansion_rhs(pa, i: int) -> Polynomial:
    """sum_h [h, i-h, d-i] eta_{i-h}(theta_0) tau_h"""
    field, d, theta = pa.field, pa.d, pa.theta
    acc = Polynomial(field)
    for h in range(i + 1):
        coef = bracket_for(pa, h, i - h, d - i) * eta_at(i - h, theta, theta[0])
        acc = acc + tau_poly(h, theta, field).scale(coef)
    return acc


def check_eta_expansion(pa, i: int):
    """(ok, lhs, rhs) for the expansion of eta_i in the tau basis."""
    lhs = eta_poly(i, pa.theta, pa.field)
    rhs = eta_expansion_rhs(pa, i)
    return lhs == rhs, lhs, rhs


def check_double_identity(r: int, s: int, t: int, u: int, tdtype: TDType, field: Field, q=None):
    """[r,s,t+u][t,u,r+s] == [s,u,r+t][r,t,s+u]; returns (ok, lhs, rhs)."""
    b = lambda x, y, z: bracket(x, y, z, tdtype, field, q=q)  # noqa: E731
    lhs = b(r, s, t + u) * b(t, u, r + s)
    rhs = b(s, u, r + t) * b(r, t, s + u)
    return lhs == rhs, lhs, rhs
