"""Parameter arrays of sharp tridiagonal systems.

A parameter array is (theta; theta*; zeta) together with the base beta and,
for type I, the scalar q with q^2 + q^-2 = beta. This module validates
arrays, classifies them by type, fits the per-type scalar packs
(a, b, c, a*, b*, c*) and implements the D4 action on arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from functools import cached_property
from typing import Optional, Sequence, Tuple

from . import linalg
from .brackets import bracket
from .errors import DataNotInField, FitFailure, InvalidQ, NotTridiagonalEigenvalues, ValidationError
from .exactfield import Field
from .polynomial import eta_at
from .tdtype import TDType

# the eight relatives of a system as words in s (= *), d (= down), D (= Down),
# applied left to right
RELATIVES = ("", "d", "D", "dD", "s", "ds", "Ds", "dDs")

_LETTERS = {"s": "s", "*": "s", "d": "d", "↓": "d", "D": "D", "⇓": "D"}


@dataclass(frozen=True)
class TypeData:
    """Scalars fitting theta and theta* to the closed form of their type.

    ``q`` is only used for type I. For type IV the field is GF(4) and d = 3.
    """

    tdtype: TDType
    a: object
    b: object
    c: object
    a_star: object
    b_star: object
    c_star: object
    q: object = None

    def dual(self) -> "TypeData":
        return replace(self, a=self.a_star, b=self.b_star, c=self.c_star,
                       a_star=self.a, b_star=self.b, c_star=self.c)

    def theta(self, d: int, field: Field) -> tuple:
        return tuple(eigenvalue(self.tdtype, self.a, self.b, self.c, i, d, field, self.q)
                     for i in range(d + 1))

    def theta_star(self, d: int, field: Field) -> tuple:
        return tuple(eigenvalue(self.tdtype, self.a_star, self.b_star, self.c_star, i, d, field, self.q)
                     for i in range(d + 1))

    def coerce(self, field: Field) -> "TypeData":
        q = None if self.q is None else field(self.q)
        return TypeData(self.tdtype, *(field(x) for x in
                        (self.a, self.b, self.c, self.a_star, self.b_star, self.c_star)), q=q)


def eigenvalue(tdtype: TDType, a, b, c, i: int, d: int, field: Field, q=None):
    """The i-th entry of the closed-form eigenvalue sequence of a type."""
    a, b, c = field(a), field(b), field(c)
    if tdtype is TDType.I:
        q = field(q)
        return a + b * q ** (2 * i - d) + c * q ** (d - 2 * i)
    if tdtype is TDType.II:
        return a + b * field(2 * i - d) / 2 + c * i * (d - i)
    if tdtype.is_III:
        m = field(2 * i - d) / 2
        return a + b + c * m if i % 2 == 0 else a - b - c * m
    if tdtype is TDType.IV:
        if d != 3:
            raise ValidationError("type IV requires d = 3")
        return (a, b + c, a + c, b)[i]
    raise ValueError(tdtype)


def base_for_type(tdtype: TDType, field: Field, q=None):
    if tdtype is TDType.I:
        q = field(q)
        return q * q + q ** (-2)
    return field({TDType.II: 2, TDType.III_PLUS: -2, TDType.III_MINUS: -2, TDType.IV: 0}[tdtype])


def compute_base(theta: Sequence, theta_star: Sequence):
    """beta such that beta + 1 is the common three-term ratio (d >= 3)."""
    d = len(theta) - 1
    if len(theta_star) != d + 1:
        raise ValidationError("theta and theta* have different lengths")
    if d < 3:
        raise ValidationError(f"the base is not determined for d={d}; supply beta explicitly")
    ratio = None
    for seq, name in ((theta, "theta"), (theta_star, "theta*")):
        for i in range(2, d):
            den = seq[i - 1] - seq[i]
            if not den:
                raise NotTridiagonalEigenvalues(f"{name} has repeated entries")
            r = (seq[i - 2] - seq[i + 1]) / den
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise NotTridiagonalEigenvalues(
                    f"{name} ratio at i={i} is {r}, expected {ratio}")
    return ratio - 1


def classify_type(beta, field: Field, d: int) -> TDType:
    beta = field(beta)
    if field.char == 2:
        if beta:
            return TDType.I
        if d != 3:
            raise ValidationError(f"beta=0 in characteristic 2 needs d=3 (type IV), got d={d}")
        return TDType.IV
    if beta == 2:
        return TDType.II
    if beta == -2:
        return TDType.III_PLUS if d % 2 == 0 else TDType.III_MINUS
    return TDType.I


def check_q(q, beta, d: int, field: Field):
    q = field(q)
    if not q:
        raise InvalidQ("q must be nonzero")
    if q * q + q ** (-2) != field(beta):
        raise InvalidQ(f"q={field.render(q)} does not satisfy q^2 + q^-2 = beta")
    for i in range(1, max(d, 2) + 1):
        if q ** (2 * i) == 1:
            raise InvalidQ(f"q^{2 * i} = 1")


def check_characteristic(tdtype: TDType, field: Field, d: int):
    p = field.char
    if tdtype is TDType.II and p and p <= d:
        raise ValidationError(f"type II needs characteristic 0 or a prime > d; got {p} with d={d}")
    if tdtype.is_III and p and 2 * p <= d:
        raise ValidationError(f"type III needs characteristic 0 or a prime > d/2; got {p} with d={d}")


def check_type_data(td: TypeData, d: int, field: Field):
    """Nondegeneracy conditions on the scalar pack of each type."""
    t = td.tdtype
    if t is TDType.II and d >= 1 and (not td.b or not td.b_star):
        raise ValidationError("type II needs b, b* nonzero")
    if t.is_III:
        if not td.c or not td.c_star:
            raise ValidationError("type III needs c, c* nonzero")
        if d % 2 and (not td.b or not td.b_star):
            raise ValidationError("type III with d odd needs b, b* nonzero")
    if t is TDType.IV:
        for x, y, z in ((td.a, td.b, td.c), (td.a_star, td.b_star, td.c_star)):
            if not (x + y) or not (x + y + z) or not z:
                raise ValidationError("type IV needs a+b, a+b+c, c nonzero (and starred)")


@dataclass(frozen=True)
class ParameterArray:
    """(theta_0..theta_d; theta*_0..theta*_d; zeta_0..zeta_d) with base beta.

    Validated on construction. ``q`` is required for type I wherever
    brackets or the normalized polynomial are needed; ``type_data`` is an
    optional pre-fitted scalar pack (refitted on demand otherwise).
    """

    field: Field
    d: int
    theta: Tuple
    theta_star: Tuple
    zeta: Tuple
    beta: object
    q: object = None
    type_data: Optional[TypeData] = dc_field(default=None, compare=False)

    def __post_init__(self):
        f = self.field
        d = self.d
        if d < 0:
            raise ValidationError("d must be nonnegative")
        conv = {}
        for name in ("theta", "theta_star", "zeta"):
            seq = getattr(self, name)
            if len(seq) != d + 1:
                raise ValidationError(f"{name} has {len(seq)} entries, expected d+1={d + 1}")
            conv[name] = tuple(f(x) for x in seq)
        for name, value in conv.items():
            object.__setattr__(self, name, value)
        object.__setattr__(self, "beta", f(self.beta))
        if self.q is not None:
            object.__setattr__(self, "q", f(self.q))

        for name in ("theta", "theta_star"):
            seq = getattr(self, name)
            if len(set(seq)) != len(seq):
                raise ValidationError(f"{name} entries are not mutually distinct")
        if self.zeta[0] != 1:
            raise ValidationError("zeta_0 must be 1")
        if d >= 3:
            beta = compute_base(self.theta, self.theta_star)
            if beta != self.beta:
                raise ValidationError(
                    f"stored beta {f.render(self.beta)} differs from computed {f.render(beta)}")
        elif not self.beta:
            raise ValidationError("beta must be nonzero when d <= 2")

        t = classify_type(self.beta, f, d)
        check_characteristic(t, f, d)
        if self.q is not None:
            if t is not TDType.I:
                raise ValidationError(f"q is only meaningful for type I (this array is type {t})")
            check_q(self.q, self.beta, d, f)
        if self.type_data is not None:
            td = self.type_data.coerce(f)
            if td.tdtype is not t:
                raise ValidationError(f"type data is for {td.tdtype}, array is type {t}")
            if t is TDType.I and (td.q != self.q):
                raise ValidationError("type data q differs from the array's q")
            if td.theta(d, f) != self.theta or td.theta_star(d, f) != self.theta_star:
                raise ValidationError("type data does not reproduce theta / theta*")
            check_type_data(td, d, f)
            object.__setattr__(self, "type_data", td)

    @cached_property
    def tdtype(self) -> TDType:
        return classify_type(self.beta, self.field, self.d)

    def fitted(self) -> TypeData:
        """The stored type data, or a fresh fit."""
        if self.type_data is not None:
            return self.type_data
        return fit_type_data(self.theta, self.theta_star, self.tdtype, self.field, self.q)

    def with_zeta(self, zeta) -> "ParameterArray":
        return replace(self, zeta=tuple(zeta))


def _fit_one(seq, tdtype: TDType, field: Field, q=None):
    d = len(seq) - 1
    F = field
    if tdtype is TDType.I:
        if d == 0:
            return seq[0], F(0), F(0)
        if d == 1:
            # canonical completion a = 0
            m = [[q ** -1, q], [q, q ** -1]]
            try:
                b, c = linalg.solve(m, seq, F)
            except ValueError:
                raise FitFailure("type I fit is singular for this q") from None
            return F(0), b, c
        rows = [[F(1), q ** (2 * i - d), q ** (d - 2 * i)] for i in range(3)]
        try:
            return tuple(linalg.solve(rows, seq[:3], F))
        except ValueError:
            raise FitFailure("type I fit is singular for this q") from None
    if tdtype is TDType.II:
        if d == 0:
            return seq[0], F(0), F(0)
        a = (seq[0] + seq[d]) / 2
        b = (seq[d] - seq[0]) / d
        if d == 1:
            # canonical completion c = 0 (c does not enter when d = 1)
            return a, b, F(0)
        c = (seq[1] - a - b * F(2 - d) / 2) / (d - 1)
        return a, b, c
    if tdtype.is_III:
        if d == 0:
            # canonical completion c = 1, b = 0
            return seq[0], F(0), F(1)
        if d == 1:
            # canonical completion c = 1
            c = F(1)
            return (seq[0] + seq[1] + c) / 2, (seq[0] - seq[1]) / 2, c
        c = (seq[2] - seq[0]) / 2
        apb = seq[0] + c * d / 2
        amb = seq[1] + c * F(2 - d) / 2
        return (apb + amb) / 2, (apb - amb) / 2, c
    if tdtype is TDType.IV:
        if d != 3:
            raise FitFailure("type IV needs d = 3")
        a, b = seq[0], seq[3]
        return a, b, seq[2] - a
    raise ValueError(tdtype)


def fit_type_data(theta, theta_star, tdtype: TDType, field: Field, q=None) -> TypeData:
    """Scalar pack reproducing theta and theta* (unique for d >= 2).

    For d <= 1 a canonical completion is used: type I takes a = 0, type II
    takes c = 0, type III takes c = 1 (and b = 0 when d = 0), and d = 0
    always puts the single eigenvalue into a.
    """
    d = len(theta) - 1
    if tdtype is TDType.I:
        if q is None:
            raise DataNotInField("type I fitting needs q in the field; none was supplied")
        q = field(q)
    a, b, c = _fit_one(theta, tdtype, field, q)
    a2, b2, c2 = _fit_one(theta_star, tdtype, field, q)
    td = TypeData(tdtype, a, b, c, a2, b2, c2, q=q if tdtype is TDType.I else None)
    if td.theta(d, field) != tuple(theta) or td.theta_star(d, field) != tuple(theta_star):
        raise FitFailure(f"sequences are not of type {tdtype}")
    return td


def generate_parameter_array(type_data: TypeData, d: int, zeta, field: Field) -> ParameterArray:
    """Evaluate the closed forms and assemble a validated array."""
    td = type_data.coerce(field)
    if td.tdtype is TDType.IV and d != 3:
        raise ValidationError("type IV requires d = 3")
    if td.tdtype.is_III and (d % 2 == 0) != (td.tdtype is TDType.III_PLUS):
        raise ValidationError(f"type {td.tdtype} does not match the parity of d={d}")
    check_characteristic(td.tdtype, field, d)
    if td.tdtype is TDType.I:
        q = td.q
        if q is None or not q:
            raise InvalidQ("type I needs a nonzero q")
        if q ** 4 == 1:
            raise InvalidQ("q^4 = 1 does not give type I")
    check_type_data(td, d, field)
    beta = base_for_type(td.tdtype, field, td.q)
    return ParameterArray(field, d, td.theta(d, field), td.theta_star(d, field), tuple(zeta),
                          beta, q=td.q, type_data=td)


def zeta_downarrow(pa: ParameterArray) -> tuple:
    """Split sequence of the relative with the eigenvalue order reversed."""
    d, th, ths, z = pa.d, pa.theta, pa.theta_star, pa.zeta
    out = []
    for i in range(d + 1):
        den = eta_at(d - i, ths, ths[0])
        acc = pa.field.zero()
        for h in range(i + 1):
            br = bracket(h, i - h, d - i, pa.tdtype, pa.field, d, pa.q)
            if not br:
                continue
            acc = acc + br * eta_at(d - h, ths, ths[0]) * eta_at(i - h, th, th[0]) * z[h]
        out.append(acc / den)
    return tuple(out)


def reversed_type_data(td: TypeData, d: int) -> TypeData:
    """Type data of the reversed eigenvalue sequence theta_d..theta_0."""
    t = td.tdtype
    if t is TDType.I:
        return replace(td, b=td.c, c=td.b)
    if t is TDType.II:
        return replace(td, b=-td.b)
    if t.is_III:
        return replace(td, c=-td.c) if d % 2 == 0 else replace(td, b=-td.b)
    return replace(td, a=td.b, b=td.a)


def _star(pa: ParameterArray) -> ParameterArray:
    td = pa.type_data.dual() if pa.type_data is not None else None
    return replace(pa, theta=pa.theta_star, theta_star=pa.theta, type_data=td)


def _Down(pa: ParameterArray) -> ParameterArray:
    # transport the type data rather than refit: for d <= 1 the fit is not unique
    td = reversed_type_data(pa.type_data, pa.d) if pa.type_data is not None else None
    return replace(pa, theta=tuple(reversed(pa.theta)), zeta=zeta_downarrow(pa), type_data=td)


def _down(pa: ParameterArray) -> ParameterArray:
    return _star(_Down(_star(pa)))


_ACTIONS = {"s": _star, "D": _Down, "d": _down}


def d4_apply(pa: ParameterArray, word: str) -> ParameterArray:
    """Parameter array of the relative named by ``word``.

    Letters: ``s``/``*`` (swap the roles of A and A*), ``D``/``⇓`` (reverse
    the eigenvalue order), ``d``/``↓`` (reverse the dual eigenvalue order).
    Letters act left to right, so ``"ds"`` is down followed by star.
    """
    out = pa
    for ch in word:
        if ch not in _LETTERS:
            raise ValueError(f"bad letter {ch!r} in D4 word {word!r}")
        out = _ACTIONS[_LETTERS[ch]](out)
    return out


def relatives(pa: ParameterArray):
    return [(w, d4_apply(pa, w)) for w in RELATIVES]
