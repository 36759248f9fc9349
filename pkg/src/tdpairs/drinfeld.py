"""Drinfel'd polynomials of sharp tridiagonal systems.

P is built from the linear polynomials p_1..p_d and the split sequence;
the normalized variant P-hat uses the per-type scalar packs and is related
to P by an affine change of variable P-hat(x) = P(u x + v).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Tuple

from .errors import NotApplicable, ValidationError
from .exactfield import QQ, Field, q_factorial
from .params import ParameterArray, TypeData, d4_apply, generate_parameter_array, RELATIVES, zeta_downarrow
from .polynomial import Polynomial, reciprocal_clear
from .tdtype import TDType


def _lam(field: Field) -> Polynomial:
    return Polynomial.variable(field)


def alpha(i: int, tdtype: TDType, field: Field, d: int, q=None):
    if not 1 <= i <= d:
        raise IndexError(f"alpha index {i} outside 1..{d}")
    if i == d and tdtype is not TDType.III_PLUS:
        return field.one()
    if tdtype is TDType.I:
        if q is None:
            raise NotApplicable("type I alpha needs q")
        q = field(q)
        return ((q ** i - q ** -i) / (q ** d - q ** -d)) ** 2
    if tdtype is TDType.II:
        return field(i * i) / field(d * d)
    if tdtype in (TDType.III_MINUS, TDType.IV):
        return field(i % 2)
    raise NotApplicable("alpha is not defined for type III+")


def alpha_list(pa: ParameterArray) -> Optional[list]:
    if pa.tdtype is TDType.III_PLUS:
        return None
    return [alpha(i, pa.tdtype, pa.field, pa.d, pa.q) for i in range(1, pa.d + 1)]


def _ends(pa: ParameterArray):
    """(theta_0 theta*_0 + theta_d theta*_d, theta_0 theta*_d + theta_d theta*_0)"""
    th, ts, d = pa.theta, pa.theta_star, pa.d
    return th[0] * ts[0] + th[d] * ts[d], th[0] * ts[d] + th[d] * ts[0]


def p_poly(i: int, pa: ParameterArray) -> Polynomial:
    d, F = pa.d, pa.field
    if not 1 <= i <= d:
        raise IndexError(f"p index {i} outside 1..{d}")
    lam = _lam(F)
    same, cross = _ends(pa)
    th, ts = pa.theta, pa.theta_star
    diff = (th[0] - th[i]) * (ts[0] - ts[i])
    if pa.tdtype is TDType.III_PLUS:
        if i % 2:
            return cross - lam
        return (same - lam).scale(F(i * i) / (d * d))
    return (cross - lam).scale(alpha(i, pa.tdtype, F, d, pa.q)) + diff


def _split_sum(field: Field, zeta, factors: List[Polynomial]) -> Polynomial:
    """sum_i zeta_i f_{i+1} ... f_d, by a Horner-like backward pass."""
    d = len(factors)
    acc = Polynomial.constant(field, zeta[d])
    tail = Polynomial.constant(field, 1)
    for i in range(d - 1, -1, -1):
        tail = tail * factors[i]
        acc = acc + tail.scale(zeta[i])
    return acc


def drinfeld_poly(pa: ParameterArray) -> Polynomial:
    F = pa.field
    ps = [p_poly(i, pa) for i in range(1, pa.d + 1)]
    if pa.tdtype is TDType.III_PLUS:
        out = Polynomial.constant(F, 1)
        for p in ps:
            out = out * p
        return out
    return _split_sum(F, pa.zeta, ps)


def iii_plus_closed_form(pa: ParameterArray) -> Polynomial:
    """D^-d (D!)^2 (same - x)^D (cross - x)^D with D = d/2."""
    if pa.tdtype is not TDType.III_PLUS:
        raise NotApplicable("closed form is for type III+ only")
    F, d = pa.field, pa.d
    D = d // 2
    lam = _lam(F)
    same, cross = _ends(pa)
    coef = F(factorial(D) ** 2) / F(D) ** d if D else F(1)
    return ((same - lam) ** D * (cross - lam) ** D).scale(coef)


def normalized_p(i: int, td: TypeData, d: int, field: Field) -> Polynomial:
    if not 1 <= i <= d:
        raise IndexError(f"p-hat index {i} outside 1..{d}")
    t = td.tdtype
    lam = _lam(field)
    a, b, c, a2, b2, c2 = td.a, td.b, td.c, td.a_star, td.b_star, td.c_star
    if t is TDType.I:
        q = td.q
        k = (q ** i - q ** -i) ** 2
        return (b * b2 * q ** (2 * i - 2 * d) + c * c2 * q ** (2 * d - 2 * i) - lam).scale(k)
    if t is TDType.II:
        return (b * b2 / 2 + (b * c2 + c * b2) * (d - i) + c * c2 * (d - i) ** 2 - lam).scale(field(i * i))
    if t is TDType.III_MINUS:
        if i % 2 == 0:
            return Polynomial.constant(field, c * c2 * (i * i))
        return 2 * b * b2 + (b * c2 + c * b2) * (2 * (i - d)) + c * c2 * (i - d) ** 2 - lam
    if t is TDType.IV:
        if i == 1:
            return a * b2 + b * a2 + (a + b + c) * (a2 + b2 + c2) + lam
        if i == 2:
            return Polynomial.constant(field, c * c2)
        return a * b2 + b * a2 + (a + b) * (a2 + b2) + lam
    raise NotApplicable("type III+ has no normalized p_i; P-hat is P itself")


def normalized_drinfeld(pa: ParameterArray, td: Optional[TypeData] = None) -> Polynomial:
    if pa.tdtype is TDType.III_PLUS:
        return drinfeld_poly(pa)
    td = td or pa.fitted()
    ps = [normalized_p(i, td, pa.d, pa.field) for i in range(1, pa.d + 1)]
    return _split_sum(pa.field, pa.zeta, ps)


def anchor_points(td: TypeData, field: Field):
    """The two scalars sent by x -> u x + v to the two special points."""
    t = td.tdtype
    bb, cc = td.b * td.b_star, td.c * td.c_star
    if t is TDType.I:
        return bb + cc, td.b * td.c_star + td.c * td.b_star
    if t is TDType.II:
        return bb / 2, -bb / 2
    if t is TDType.III_MINUS:
        return 2 * bb, -2 * bb
    if t is TDType.IV:
        return td.a * td.a_star + bb, td.a * td.b_star + td.b * td.a_star
    raise NotApplicable(f"no anchor points for type {t}")


def affine_uv(pa: ParameterArray, td: Optional[TypeData] = None) -> Tuple:
    """(u, v) with P-hat(x) = P(u x + v), checked against both anchor points."""
    F, d = pa.field, pa.d
    t = pa.tdtype
    if t in (TDType.III_PLUS, TDType.IV):
        return F(1), F(0)
    td = td or pa.fitted()
    a, b, c, a2, b2, c2 = td.a, td.b, td.c, td.a_star, td.b_star, td.c_star
    if t is TDType.I:
        q = td.q
        s = q ** d + q ** -d
        u = (q ** d - q ** -d) ** 2
        v = 2 * a * a2 + 2 * (b + c) * (b2 + c2) + s * a * (b2 + c2) + s * a2 * (b + c)
    elif t is TDType.II:
        u, v = F(d * d), 2 * a * a2
    else:
        u, v = F(1), (2 * a - c * d) * (2 * a2 - c2 * d) / 2
    x1, x2 = anchor_points(td, F)
    same, cross = _ends(pa)
    if u * x1 + v != same or u * x2 + v != cross:
        raise ValidationError("affine (u, v) misses the anchor points; type data is inconsistent")
    return u, v


@dataclass(frozen=True)
class DrinfeldResult:
    P: Polynomial
    P_hat: Polynomial
    u: object
    v: object
    p_list: tuple
    p_hat_list: Optional[tuple]
    alpha_list: Optional[tuple]

    def affine_ok(self) -> bool:
        return self.P.compose_affine(self.u, self.v) == self.P_hat


def compute(pa: ParameterArray) -> DrinfeldResult:
    F, d = pa.field, pa.d
    P = drinfeld_poly(pa)
    if pa.tdtype is TDType.III_PLUS:
        return DrinfeldResult(P, P, F(1), F(0), tuple(p_poly(i, pa) for i in range(1, d + 1)), None, None)
    td = pa.fitted()
    u, v = affine_uv(pa, td)
    al = alpha_list(pa)
    return DrinfeldResult(
        P, normalized_drinfeld(pa, td), u, v,
        tuple(p_poly(i, pa) for i in range(1, d + 1)),
        tuple(normalized_p(i, td, d, F) for i in range(1, d + 1)),
        tuple(al))


def check_d4_invariance(pa: ParameterArray, normalized: bool = True):
    """(ok, witness). The witness names the first relative whose P or P-hat differs."""
    P0 = drinfeld_poly(pa)
    H0 = normalized_drinfeld(pa) if normalized else None
    for word in RELATIVES[1:]:
        rel = d4_apply(pa, word)
        P = drinfeld_poly(rel)
        if P != P0:
            return False, (word, "P", P0, P)
        if normalized:
            H = normalized_drinfeld(rel)
            if H != H0:
                return False, (word, "P_hat", H0, H)
    return True, None


def evaluate_specials(pa: ParameterArray):
    """P at the two special points theta_0 theta*_0 + theta_d theta*_d and theta_0 theta*_d + theta_d theta*_0."""
    if pa.d == 0:
        one = pa.field.one()
        return one, one
    P = drinfeld_poly(pa)
    same, cross = _ends(pa)
    return P(same), P(cross)


def expected_specials(pa: ParameterArray):
    if pa.d == 0:
        return pa.field.one(), pa.field.one()
    if pa.tdtype is TDType.III_PLUS and pa.d >= 2:
        return pa.field.zero(), pa.field.zero()
    return pa.zeta[pa.d], zeta_downarrow(pa)[pa.d]


def check_specials(pa: ParameterArray):
    got, want = evaluate_specials(pa), expected_specials(pa)
    return got == want, got, want


def check_normalized_specials(pa: ParameterArray):
    """P-hat at the two anchor points against zeta_d and zeta-Down_d."""
    if pa.tdtype is TDType.III_PLUS or pa.d == 0:
        return check_specials(pa)
    td = pa.fitted()
    H = normalized_drinfeld(pa, td)
    x1, x2 = anchor_points(td, pa.field)
    got = (H(x1), H(x2))
    want = (pa.zeta[pa.d], zeta_downarrow(pa)[pa.d])
    return got == want, got, want


# relations with the classical Drinfel'd polynomials of two special families

def krawtchouk_array(zeta, d: int, field: Field = QQ) -> ParameterArray:
    td = TypeData(TDType.II, 0, -2, 0, 0, 2, 0)
    return generate_parameter_array(td, d, zeta, field)


def krawtchouk_drinfeld(zeta, d: int, field: Field = QQ) -> Polynomial:
    """sum_i (-1)^i zeta_i x^i / ((i!)^2 4^i)"""
    coeffs = [field((-1) ** i) * field(zeta[i]) / field(factorial(i) ** 2 * 4 ** i) for i in range(d + 1)]
    return Polynomial(field, coeffs)


def krawtchouk_rhs(zeta, d: int, field: Field = QQ) -> Polynomial:
    """(-1)^d (d!)^2 (x+2)^d P_K(4/(x+2)) with the denominator cleared."""
    PK = krawtchouk_drinfeld(zeta, d, field)
    cleared = reciprocal_clear(PK, d, 4, Polynomial(field, [2, 1]))
    return cleared.scale(field((-1) ** d * factorial(d) ** 2))


def check_krawtchouk_relation(zeta, d: int, field: Field = QQ):
    pa = krawtchouk_array(zeta, d, field)
    lhs = normalized_drinfeld(pa)
    rhs = krawtchouk_rhs(zeta, d, field)
    return lhs == rhs, lhs, rhs


def qgeometric_array(zeta, d: int, q, field: Field = QQ) -> ParameterArray:
    td = TypeData(TDType.I, 0, 1, 0, 0, 0, 1, q=q)
    return generate_parameter_array(td, d, zeta, field)


def qgeometric_drinfeld(zeta, d: int, q, field: Field = QQ) -> Polynomial:
    """sum_i (-1)^i zeta_i q^i x^i / ([i]!_q)^2"""
    q = field(q)
    coeffs = [field((-1) ** i) * field(zeta[i]) * q ** i / q_factorial(i, q) ** 2 for i in range(d + 1)]
    return Polynomial(field, coeffs)


def qgeometric_rhs(zeta, d: int, q, field: Field = QQ) -> Polynomial:
    """(-1)^d ([d]!_q)^2 (q-q^-1)^(2d) x^d P_G(1/(x q (q-q^-1)^2)) with x^d cleared."""
    q = field(q)
    PG = qgeometric_drinfeld(zeta, d, q, field)
    g = q - q ** -1
    cleared = reciprocal_clear(PG, d, 1 / (q * g * g), Polynomial.variable(field))
    return cleared.scale(field((-1) ** d) * q_factorial(d, q) ** 2 * g ** (2 * d))


def check_qgeometric_relation(zeta, d: int, q, field: Field = QQ):
    pa = qgeometric_array(zeta, d, q, field)
    lhs = normalized_drinfeld(pa)
    rhs = qgeometric_rhs(zeta, d, q, field)
    return lhs == rhs, lhs, rhs
