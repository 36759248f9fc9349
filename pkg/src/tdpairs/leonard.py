"""Leonard systems: split sequences from (t, psi), roots of P-hat, and a
matrix-realization oracle that recomputes zeta from explicit matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .errors import InvalidPsi, MissingPsi, NotApplicable, NotLeonard, NotSharp, NotSplitConsistent
from .exactfield import Field, sqrt_in_field, MAX_SCAN_MODULUS
from .params import ParameterArray, TypeData, generate_parameter_array
from .tdtype import TDType


@dataclass(frozen=True)
class LeonardData:
    """Split-sequence data of a Leonard system.

    ``t`` is the free scalar of types I, II, III-; for type IV it holds the
    scalar phi = phi_1. ``phi`` / ``phi2`` are the first and second split
    sequences (phi_1..phi_d).
    """

    type_data: TypeData
    d: int
    field: Field
    t: object
    psi: object
    phi: tuple
    phi2: tuple

    @property
    def tdtype(self) -> TDType:
        return self.type_data.tdtype

    def zeta(self) -> tuple:
        return zeta_from_phi(self.phi, self.field)

    def zeta_down(self) -> tuple:
        """Running products of the second split sequence."""
        return zeta_from_phi(self.phi2, self.field)

    def parameter_array(self) -> ParameterArray:
        return generate_parameter_array(self.type_data, self.d, self.zeta(), self.field)


def _m(field: Field, i: int, d: int):
    """i - (d+1)/2"""
    return field(2 * i - d - 1) / 2


def zeta_from_phi(phi: Sequence, field: Optional[Field] = None) -> tuple:
    out = [field.one() if field else 1]
    for x in phi:
        out.append(out[-1] * x)
    return tuple(out)


def psi_residual(td: TypeData, d: int, t, psi, field: Field):
    """Zero iff psi satisfies its defining equation for (type data, t)."""
    F = field
    bb, cc = td.b * td.b_star, td.c * td.c_star
    tt = td.tdtype
    if tt is TDType.I:
        if not psi:
            return F.one()
        return psi + bb * cc / psi - t
    if tt is TDType.II:
        return psi * psi - (4 * t * cc + td.b ** 2 * td.c_star ** 2 + td.b_star ** 2 * td.c ** 2)
    if tt is TDType.III_MINUS:
        return psi * psi - (t * cc + td.b ** 2 * td.c_star ** 2 + td.b_star ** 2 * td.c ** 2)
    if tt is TDType.IV:
        return sum(_iv_psi_residuals(td, t, psi), F.zero())
    raise NotApplicable(f"no psi for type {tt}")


def _iv_split(td: TypeData, phi1):
    a, b, c, a2, b2, c2 = td.a, td.b, td.c, td.a_star, td.b_star, td.c_star
    phi = (phi1, c * c2, phi1 + (a + b) * c2 + c * (a2 + b2))
    phi2 = (phi1 + (a + b) * (a2 + b2 + c2), c * c2, phi1 + (a + b + c) * (a2 + b2))
    return phi, phi2


def _iv_psi_residuals(td: TypeData, phi1, psi):
    """The four product equations, as residuals (all zero for a valid psi)."""
    a, b, c, a2, b2, c2 = td.a, td.b, td.c, td.a_star, td.b_star, td.c_star
    cc = c * c2
    phi, phi2 = _iv_split(td, phi1)
    return (
        cc * phi[0] - (a * c2 + a2 * c + cc * psi) * (b * c2 + b2 * c + cc + cc * psi),
        cc * phi[2] - (b * c2 + b2 * c + cc * psi) * (a * c2 + a2 * c + cc + cc * psi),
        cc * phi2[0] - (b * c2 + a2 * c + cc * psi) * (a * c2 + b2 * c + cc + cc * psi),
        cc * phi2[2] - (a * c2 + b2 * c + cc * psi) * (b * c2 + a2 * c + cc + cc * psi),
    )


def _check_psi(td, d, t, psi, field):
    if psi is None:
        return
    if psi_residual(td, d, t, field(psi), field):
        raise InvalidPsi(f"psi={field.render(psi)} does not satisfy its defining equation")
    if td.tdtype is TDType.IV and any(_iv_psi_residuals(td, t, field(psi))):
        raise InvalidPsi("psi fails one of the four product equations")


def phi_from_params(td: TypeData, d: int, t, field: Field, psi=None) -> LeonardData:
    td = td.coerce(field)
    t = field(t)
    F = field
    tt = td.tdtype
    b, c, b2, c2 = td.b, td.c, td.b_star, td.c_star
    _check_psi(td, d, t, psi, F)
    phi, phi2 = [], []
    if tt is TDType.I:
        q = td.q
        for i in range(1, d + 1):
            pre = (q ** i - q ** -i) * (q ** (d - i + 1) - q ** (i - d - 1))
            lo, hi = q ** (2 * i - d - 1), q ** (d + 1 - 2 * i)
            phi.append(pre * (t - b * b2 * lo - c * c2 * hi))
            phi2.append(pre * (t - c * b2 * lo - b * c2 * hi))
    elif tt is TDType.II:
        for i in range(1, d + 1):
            m = _m(F, i, d)
            pre = F(i * (d - i + 1))
            phi.append(pre * (t - b * b2 / 2 + (b * c2 + c * b2) * m - c * c2 * m * m))
            phi2.append(pre * (t + b * b2 / 2 + (c * b2 - b * c2) * m - c * c2 * m * m))
    elif tt is TDType.III_MINUS:
        for i in range(1, d + 1):
            m = _m(F, i, d)
            if i % 2 == 0:
                x = c * c2 * (i * (d - i + 1))
                phi.append(x)
                phi2.append(x)
            else:
                phi.append(t - 2 * b * b2 - 2 * (b * c2 + c * b2) * m - c * c2 * m * m)
                phi2.append(t + 2 * b * b2 + 2 * (b * c2 - c * b2) * m - c * c2 * m * m)
    elif tt is TDType.IV:
        if d != 3:
            raise NotApplicable("type IV needs d = 3")
        phi, phi2 = (list(x) for x in _iv_split(td, t))
    else:
        raise NotApplicable("no Leonard parameterization is available for type III+")
    for name, seq in (("phi", phi), ("phi2", phi2)):
        for i, x in enumerate(seq, 1):
            if not x:
                raise NotLeonard(f"{name}_{i} = 0; not a Leonard system for these parameters")
    return LeonardData(td, d, F, t, None if psi is None else F(psi), tuple(phi), tuple(phi2))


def factored_phi(ld: LeonardData):
    """phi, phi2 recomputed from the factored forms that use psi.

    Available for type I with bb*cc* != 0, type II with cc* != 0 and type
    III- (odd indices; even indices are returned unchanged).
    """
    td, d, F, psi = ld.type_data, ld.d, ld.field, ld.psi
    if psi is None:
        raise MissingPsi("factored forms need psi")
    b, c, b2, c2 = td.b, td.c, td.b_star, td.c_star
    cc = c * c2
    phi, phi2 = [], []
    if ld.tdtype is TDType.I:
        if not (b * b2 * cc):
            raise NotApplicable("type I factored form needs bb*cc* != 0")
        q = td.q
        for i in range(1, d + 1):
            pre = (q ** i - q ** -i) * (q ** (d - i + 1) - q ** (i - d - 1))
            for out, x, y in ((phi, b * b2, cc), (phi2, c * b2, b * c2)):
                out.append(pre * (q ** -i - x / psi * q ** (i - d - 1)) * (q ** i * psi - y * q ** (d - i + 1)))
    elif ld.tdtype is TDType.II:
        if not cc:
            raise NotApplicable("type II factored form needs cc* != 0")
        for i in range(1, d + 1):
            m = _m(F, i, d)
            pre = F(i * (d - i + 1)) / cc
            B, C = b * c2 + c * b2, c * b2 - b * c2
            phi.append(pre * ((psi + B) / 2 - cc * m) * ((psi - B) / 2 + cc * m))
            phi2.append(pre * ((psi + C) / 2 - cc * m) * ((psi - C) / 2 + cc * m))
    elif ld.tdtype is TDType.III_MINUS:
        for i in range(1, d + 1):
            if i % 2 == 0:
                phi.append(ld.phi[i - 1])
                phi2.append(ld.phi2[i - 1])
                continue
            m = _m(F, i, d)
            B, C = b * c2 + c * b2, b * c2 - c * b2
            phi.append((psi - B - cc * m) * (psi + B + cc * m) / cc)
            phi2.append((psi + C - cc * m) * (psi - C + cc * m) / cc)
    else:
        raise NotApplicable(f"no factored form for type {ld.tdtype}")
    return tuple(phi), tuple(phi2)


def _scan(field: Field, pred) -> list:
    if not field.is_finite or field.order > MAX_SCAN_MODULUS:
        raise NotApplicable(f"exhaustive search is not available over {field}")
    return [x for x in field.elements() if pred(x)]


def _sqrt_pair(field: Field, x) -> list:
    if field.char == 2:
        return _scan(field, lambda y: y * y == x)
    r = sqrt_in_field(x)
    if r is None:
        return []
    return [r] if not r else [r, -r]


def solve_psi(td: TypeData, d: int, t, field: Field) -> list:
    """All in-field psi for (type data, t); empty when psi lies outside the field."""
    td = td.coerce(field)
    t = field(t)
    F = field
    bb, cc = td.b * td.b_star, td.c * td.c_star
    tt = td.tdtype
    if tt is TDType.I:
        # psi^2 - t psi + bb*cc* = 0 with psi != 0
        if F.char == 2:
            sols = _scan(F, lambda y: y and y * y - t * y + bb * cc == 0)
        else:
            sols = [(t + r) / 2 for r in _sqrt_pair(F, t * t - 4 * bb * cc)]
        return [x for x in sols if x]
    if tt is TDType.II:
        return _sqrt_pair(F, 4 * t * cc + td.b ** 2 * td.c_star ** 2 + td.b_star ** 2 * td.c ** 2)
    if tt is TDType.III_MINUS:
        return _sqrt_pair(F, t * cc + td.b ** 2 * td.c_star ** 2 + td.b_star ** 2 * td.c ** 2)
    if tt is TDType.IV:
        return _scan(F, lambda y: not any(_iv_psi_residuals(td, t, y)))
    raise NotApplicable(f"no psi for type {tt}")


def lift_to_gf16(ld: LeonardData) -> LeonardData:
    """Type IV data over GF(4) moved into GF(16), where psi always exists.

    The psi equation is a quadratic over GF(4), so both of its roots lie in
    GF(16); the returned data carries the first of them.
    """
    from .exactfield import embed_gf4

    if ld.field.kind != "GF4":
        raise NotApplicable("lifting starts from GF4 data")
    big = Field("GF16")
    td = ld.type_data
    td16 = TypeData(td.tdtype, *(embed_gf4(x) for x in
                    (td.a, td.b, td.c, td.a_star, td.b_star, td.c_star)))
    t = embed_gf4(ld.t)
    sols = solve_psi(td16, ld.d, t, big)
    if not sols:
        raise NotApplicable("no psi in GF16")
    return phi_from_params(td16, ld.d, t, big, sols[0])


def iv_psi_shift(td: TypeData):
    """(a+b)/c + (a*+b*)/c* + 1, the difference of the two psi solutions."""
    return (td.a + td.b) / td.c + (td.a_star + td.b_star) / td.c_star + 1


def roots(ld: LeonardData) -> list:
    """Roots of P-hat in closed form, following the per-type case split."""
    td, d, F, t, psi = ld.type_data, ld.d, ld.field, ld.t, ld.psi
    a, b, c, a2, b2, c2 = td.a, td.b, td.c, td.a_star, td.b_star, td.c_star
    bb, cc = b * b2, c * c2
    tt = td.tdtype

    def need_psi():
        if psi is None:
            raise MissingPsi(f"type {tt} roots need psi here")

    if tt is TDType.I:
        q = td.q
        if bb * cc:
            need_psi()
            return [psi * q ** (d + 1 - 2 * i) + bb * cc / psi * q ** (2 * i - d - 1) for i in range(1, d + 1)]
        return [t * q ** (d + 1 - 2 * i) for i in range(1, d + 1)]
    if tt is TDType.II:
        if cc:
            need_psi()
            return [t + psi * _m(F, i, d) + cc * _m(F, i, d) ** 2 for i in range(1, d + 1)]
        return [t + (b * c2 + c * b2) * _m(F, i, d) for i in range(1, d + 1)]
    if tt is TDType.III_MINUS:
        need_psi()
        return [t + 2 * psi * _m(F, i, d) + cc * _m(F, i, d) ** 2 for i in range(1, d + 1, 2)]
    if tt is TDType.IV:
        need_psi()
        base = a * b2 + b * a2
        x, y = cc * psi + a * c2 + b2 * c, cc * psi + a2 * c + b * c2
        return [base + x * y / cc, base + (x + cc) * (y + cc) / cc]
    raise NotApplicable("no root formula for type III+")


# matrix realization and the oracle

@dataclass(frozen=True)
class MatrixPair:
    A: list
    A_star: list
    field: Field
    basis: str = "split"

    @property
    def size(self) -> int:
        return len(self.A)


def realize_matrices(theta, theta_star, phi, field: Field) -> MatrixPair:
    """A lower bidiagonal (diag theta, subdiag 1); A* upper bidiagonal (diag theta*, superdiag phi)."""
    n = len(theta)
    if len(theta_star) != n or len(phi) != n - 1:
        raise ValueError("need d+1 eigenvalues, d+1 dual eigenvalues and d split entries")
    A = linalg.zeros(field, n)
    As = linalg.zeros(field, n)
    for i in range(n):
        A[i][i] = field(theta[i])
        As[i][i] = field(theta_star[i])
        if i:
            A[i][i - 1] = field.one()
            As[i - 1][i] = field(phi[i - 1])
    return MatrixPair(A, As, field)


def idempotents(M, eigenvalues, field: Field) -> list:
    """E_i = prod_{j != i} (M - ev_j)/(ev_i - ev_j)."""
    n = len(M)
    out = []
    for i, ei in enumerate(eigenvalues):
        E = linalg.identity(field, n)
        for j, ej in enumerate(eigenvalues):
            if j != i:
                E = linalg.scale(linalg.matmul(E, linalg.shift(M, ej)), 1 / (ei - ej))
        out.append(E)
    return out


def _word_vector(mp: MatrixPair, theta, theta_star, i: int, v):
    """(A*-th*_1)...(A*-th*_i)(A-th_{i-1})...(A-th_0) v"""
    for k in range(i):
        v = linalg.matvec(linalg.shift(mp.A, theta[k]), v)
    for k in range(i, 0, -1):
        v = linalg.matvec(linalg.shift(mp.A_star, theta_star[k]), v)
    return v


def _ratio(w, u, field: Field):
    """The scalar z with w = z u, or raise."""
    k = next(j for j, x in enumerate(u) if x)
    z = w[k] / u[k]
    if any(w[j] != z * u[j] for j in range(len(u))):
        raise NotSplitConsistent("operator word leaves the U_0 line")
    return z


def split_decomposition(mp: MatrixPair, theta, theta_star) -> list:
    """Bases of U_i = (E*_0V+...+E*_iV) cap (E_iV+...+E_dV), with the checks
    that each U_i is a line and that the sum is direct."""
    F, n = mp.field, mp.size
    d = n - 1
    E = idempotents(mp.A, theta, F)
    Es = idempotents(mp.A_star, theta_star, F)
    for name, idem in (("E", E), ("E*", Es)):
        check_idempotent_system(idem, F, name)
    spaces = []
    low = linalg.zeros(F, n)
    for i in range(n):
        low = linalg.add(low, Es[i])
        high = linalg.zeros(F, n)
        for j in range(i, n):
            high = linalg.add(high, E[j])
        U = linalg.intersect(linalg.column_space(low), linalg.column_space(high), n, F)
        if len(U) != 1:
            raise NotSharp(f"dim U_{i} = {len(U)}, expected 1")
        spaces.append(U[0])
    if linalg.rank(linalg.span_matrix(spaces, n, F)) != d + 1:
        raise NotSharp("the U_i do not form a direct sum")
    return spaces


def check_idempotent_system(idem: list, field: Field, name: str = "E"):
    n = len(idem[0])
    total = linalg.zeros(field, n)
    for i, Ei in enumerate(idem):
        total = linalg.add(total, Ei)
        for j, Ej in enumerate(idem):
            prod = linalg.matmul(Ei, Ej)
            want = Ei if i == j else linalg.zeros(field, n)
            if prod != want:
                raise NotLeonard(f"{name}_{i} {name}_{j} != {'%s_%d' % (name, i) if i == j else '0'}")
    if total != linalg.identity(field, n):
        raise NotLeonard(f"sum of {name}_i is not the identity")


def oracle_split_sequence(mp: MatrixPair, theta, theta_star, path: str = "word") -> tuple:
    """zeta recomputed from the matrices.

    ``word``: apply the operator words to e_0 (U_0 is the first coordinate
    line in the split basis). ``E``: build U_0 from the primitive
    idempotents first, then apply the words to a vector spanning it.
    """
    F, n = mp.field, mp.size
    theta = [F(x) for x in theta]
    theta_star = [F(x) for x in theta_star]
    if path == "word":
        u = [F.one()] + [F.zero()] * (n - 1)
    elif path == "E":
        u = split_decomposition(mp, theta, theta_star)[0]
    else:
        raise ValueError(f"unknown oracle path {path!r}")
    return tuple(_ratio(_word_vector(mp, theta, theta_star, i, u), u, F) for i in range(n))


def shape(mp: MatrixPair, theta, theta_star):
    """(rho, rho*) from the ranks of the primitive idempotents."""
    F = mp.field
    E = idempotents(mp.A, [F(x) for x in theta], F)
    Es = idempotents(mp.A_star, [F(x) for x in theta_star], F)
    return [linalg.rank(x) for x in E], [linalg.rank(x) for x in Es]


def check_tridiagonal_relations(mp: MatrixPair, theta, theta_star) -> bool:
    """E*_i A^k E*_j = 0 and E_i A*^k E_j = 0 whenever k < |i-j|, the
    idempotent relations, and a symmetric shape shared by A and A*."""
    F, n = mp.field, mp.size
    theta = [F(x) for x in theta]
    theta_star = [F(x) for x in theta_star]
    E = idempotents(mp.A, theta, F)
    Es = idempotents(mp.A_star, theta_star, F)
    try:
        check_idempotent_system(E, F, "E")
        check_idempotent_system(Es, F, "E*")
    except NotLeonard:
        return False
    for idem, M in ((Es, mp.A), (E, mp.A_star)):
        for i in range(n):
            left = idem[i]  # idem_i M^k, for k = 0, 1, ...
            for k in range(max(i, n - 1 - i)):
                for j in range(n):
                    if k < abs(i - j) and not linalg.is_zero(linalg.matmul(left, idem[j])):
                        return False
                left = linalg.matmul(left, M)
    rho = [linalg.rank(x) for x in E]
    rho_s = [linalg.rank(x) for x in Es]
    return rho == rho_s and rho == rho[::-1]


# random Leonard data, psi first

def random_leonard(rng, tdtype: TDType, field: Field, d: int, height: int = 6, q=None,
                   subcase: Optional[str] = None, tries: int = 500) -> LeonardData:
    """Random Leonard data of a type.

    ``subcase`` forces a branch of the root case split: ``"bbcc0"`` (type I
    with bb*cc* = 0), ``"t0"`` (type I with bb*cc* = 0 and t = 0) or
    ``"cc0"`` (type II with cc* = 0). psi is drawn first and t derived
    from it, so psi always lies in the field.
    """
    from .errors import TDError
    from .random_data import random_type_data

    el = lambda nz=False: field.random_element(rng, nonzero=nz, height=height)  # noqa: E731
    last = None
    for _ in range(tries):
        td = random_type_data(rng, tdtype, field, height, q).coerce(field)
        if subcase in ("bbcc0", "t0"):
            td = TypeData(td.tdtype, td.a, td.b, td.c, td.a_star, field.zero(), td.c_star, q=td.q)
        elif subcase == "cc0":
            td = TypeData(td.tdtype, td.a, td.b, field.zero(), td.a_star, td.b_star, td.c_star)
        bb, cc = td.b * td.b_star, td.c * td.c_star
        psi = None
        try:
            if tdtype is TDType.I:
                if bb * cc:
                    psi = el(True)
                    t = psi + bb * cc / psi
                else:
                    t = field.zero() if subcase == "t0" else el()
            elif tdtype is TDType.II:
                if cc:
                    psi = el()
                    t = (psi * psi - td.b ** 2 * td.c_star ** 2 - td.b_star ** 2 * td.c ** 2) / (4 * cc)
                else:
                    t = el()
            elif tdtype is TDType.III_MINUS:
                psi = el()
                t = (psi * psi - td.b ** 2 * td.c_star ** 2 - td.b_star ** 2 * td.c ** 2) / cc
            elif tdtype is TDType.IV:
                # psi usually lies outside the field here (always, over GF(4)),
                # so draw phi_1 directly; see lift_to_gf16
                t = el()
                found = solve_psi(td, d, t, field)
                psi = found[0] if found else None
            else:
                raise NotApplicable("no Leonard parameterization is available for type III+")
            ld = phi_from_params(td, d, t, field, psi)
            generate_parameter_array(td, d, ld.zeta(), field)
            return ld
        except (TDError, ZeroDivisionError) as exc:
            if isinstance(exc, NotApplicable):
                raise
            last = exc
    raise RuntimeError(f"could not draw Leonard data of type {tdtype}, d={d}: {last}")
