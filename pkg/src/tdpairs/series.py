"""Terminating hypergeometric and basic hypergeometric series.

Ordinary series use rising factorials (a)_k = a(a+1)...(a+k-1). Basic
series take a parameter ``q`` and run in base Q = q^2: the k-th term of
r+1 phi r is prod (a_i; Q)_k / prod (b_j; Q)_k * z^k / (Q; Q)_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .errors import NotApplicable, UndefinedSeries
from .exactfield import Field, q_pochhammer

KINDS = {"3F2": (3, 2, False), "2F1": (2, 1, False), "1F0": (1, 0, False),
         "3phi2": (3, 2, True), "2phi1": (2, 1, True)}

# largest termination order searched for when n is not given
MAX_INFERRED_ORDER = 64


def rising(a, n: int):
    out = a * 0 + 1
    for k in range(n):
        out = out * (a + k)
    return out


@dataclass(frozen=True)
class SeriesSpec:
    kind: str
    num: tuple
    den: tuple
    arg: object
    n: int
    field: Field
    q: object = None

    @property
    def basic(self) -> bool:
        return KINDS[self.kind][2]

    @property
    def base(self):
        return self.q * self.q

    def terminator(self, n: int):
        return self.base ** (-n) if self.basic else self.field(-n)

    @classmethod
    def build(cls, kind: str, num: Sequence, den: Sequence, arg, field: Field,
              q=None, n: Optional[int] = None) -> "SeriesSpec":
        if kind not in KINDS:
            raise ValueError(f"unknown series kind {kind!r}; expected one of {', '.join(KINDS)}")
        r, s, basic = KINDS[kind]
        if len(num) != r or len(den) != s:
            raise ValueError(f"{kind} takes {r} numerator and {s} denominator parameters")
        if basic:
            if q is None:
                raise ValueError(f"{kind} needs q")
            q = field(q)
            if not q:
                raise ValueError("q must be nonzero")
        num = tuple(field(x) for x in num)
        den = tuple(field(x) for x in den)
        proto = cls(kind, num, den, field(arg), 0, field, q)
        if n is None:
            hits = [k for k in range(MAX_INFERRED_ORDER + 1) if proto.terminator(k) in num]
            if not hits:
                raise UndefinedSeries("series does not terminate: no numerator parameter of the form "
                                      + ("q^(-2n)" if basic else "-n"))
            n = hits[0]
        elif proto.terminator(n) not in num:
            raise UndefinedSeries(f"no numerator parameter terminates the series at n={n}")
        return cls(kind, num, den, field(arg), n, field, q)


def terms(spec: SeriesSpec) -> List:
    """term_0, ..., term_n, built incrementally from the term ratios."""
    F = spec.field
    out = [F.one()]
    cur = F.one()
    Q = spec.base if spec.basic else None
    for k in range(spec.n):
        # ratio term_{k+1} / term_k
        if spec.basic:
            numr = [1 - a * Q ** k for a in spec.num]
            denr = [1 - b * Q ** k for b in spec.den] + [1 - Q ** (k + 1)]
        else:
            numr = [a + k for a in spec.num]
            denr = [b + k for b in spec.den] + [F(k + 1)]
        for x in denr:
            if not x:
                raise UndefinedSeries(f"denominator factor vanishes at k={k + 1}")
        for x in numr:
            cur = cur * x
        for x in denr:
            cur = cur / x
        cur = cur * spec.arg
        out.append(cur)
    return out


def direct_term(spec: SeriesSpec, k: int):
    """term_k from the closed Pochhammer quotient (no recurrence)."""
    F = spec.field
    if spec.basic:
        Q = spec.base
        num = [q_pochhammer(a, Q, k) for a in spec.num]
        den = [q_pochhammer(b, Q, k) for b in spec.den] + [q_pochhammer(Q, Q, k)]
    else:
        num = [rising(a, k) for a in spec.num]
        den = [rising(b, k) for b in spec.den] + [rising(F.one(), k)]
    out = spec.arg ** k
    for x in num:
        out = out * x
    for x in den:
        if not x:
            raise UndefinedSeries(f"denominator vanishes at k={k}")
        out = out / x
    return out


def partial_sums(spec: SeriesSpec) -> List:
    acc = spec.field.zero()
    out = []
    for t in terms(spec):
        acc = acc + t
        out.append(acc)
    return out


def evaluate(spec: SeriesSpec):
    return partial_sums(spec)[-1]


# identity certificates; each returns (ok, lhs, rhs)

def _guard(value, what):
    if not value:
        raise NotApplicable(f"{what} vanishes")
    return value


def q_saalschutz(n: int, A, B, C, q, field: Field):
    """3phi2[Q^-n, A, B; C, A B Q^(1-n)/C; Q, Q] and its product value, Q = q^2."""
    q = field(q)
    Q = q * q
    A, B, C = field(A), field(B), field(C)
    _guard(C, "C")
    D = A * B * Q ** (1 - n) / C
    spec = SeriesSpec.build("3phi2", (Q ** -n, A, B), (C, D), Q, field, q, n)
    _guard(A * B, "AB")
    rhs = q_pochhammer(C / A, Q, n) * q_pochhammer(C / B, Q, n) / _guard(
        q_pochhammer(C, Q, n) * q_pochhammer(C / (A * B), Q, n), "product denominator")
    return spec, rhs


def check_q_saalschutz(n: int, A, B, C, q, field: Field):
    spec, rhs = q_saalschutz(n, A, B, C, q, field)
    lhs = evaluate(spec)
    return lhs == rhs, lhs, rhs


def saalschutz(n: int, a, b, c, field: Field):
    """3F2[-n, a, b; c, 1+a+b-c-n; 1] and (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)."""
    a, b, c = field(a), field(b), field(c)
    spec = SeriesSpec.build("3F2", (-n, a, b), (c, 1 + a + b - c - n), 1, field, n=n)
    rhs = rising(c - a, n) * rising(c - b, n) / _guard(rising(c, n) * rising(c - a - b, n), "product denominator")
    return spec, rhs


def check_saalschutz(n: int, a, b, c, field: Field):
    spec, rhs = saalschutz(n, a, b, c, field)
    lhs = evaluate(spec)
    return lhs == rhs, lhs, rhs


def chu_vandermonde(n: int, b, c, field: Field):
    """2F1[-n, b; c; 1] and (c-b)_n / (c)_n."""
    b, c = field(b), field(c)
    spec = SeriesSpec.build("2F1", (-n, b), (c,), 1, field, n=n)
    return spec, rising(c - b, n) / _guard(rising(c, n), "(c)_n")


def check_chu_vandermonde(n: int, b, c, field: Field):
    spec, rhs = chu_vandermonde(n, b, c, field)
    lhs = evaluate(spec)
    return lhs == rhs, lhs, rhs


def q_chu_vandermonde(n: int, a, c, q, field: Field, form: int = 1):
    """Two terminating forms, Q = q^2:

    form 1: 2phi1(a, Q^-n; c; Q, c Q^n / a) = (c/a; Q)_n / (c; Q)_n
    form 2: 2phi1(a, Q^-n; c; Q, Q) = a^n (c/a; Q)_n / (c; Q)_n

    Form 2 with c = 0 reads 2phi1(a, Q^-n; 0; Q, Q) = a^n.
    """
    q = field(q)
    Q = q * q
    a, c = field(a), field(c)
    den = _guard(q_pochhammer(c, Q, n), "(c; Q)_n")
    if form == 1:
        _guard(a, "a")
        spec = SeriesSpec.build("2phi1", (a, Q ** -n), (c,), c * Q ** n / a, field, q, n)
        return spec, q_pochhammer(c / a, Q, n) / den
    if form == 2:
        spec = SeriesSpec.build("2phi1", (a, Q ** -n), (c,), Q, field, q, n)
        if not c:
            return spec, a ** n
        _guard(a, "a")
        return spec, a ** n * q_pochhammer(c / a, Q, n) / den
    raise ValueError("form must be 1 or 2")


def check_q_chu_vandermonde(n: int, a, c, q, field: Field, form: int = 1):
    spec, rhs = q_chu_vandermonde(n, a, c, q, field, form)
    lhs = evaluate(spec)
    return lhs == rhs, lhs, rhs


def check_binomial(n: int, z, field: Field):
    """1F0[-n; ; z] = (1 - z)^n"""
    z = field(z)
    lhs = evaluate(SeriesSpec.build("1F0", (-n,), (), z, field, n=n))
    rhs = (1 - z) ** n
    return lhs == rhs, lhs, rhs


IDENTITIES = {
    "q-saalschutz": check_q_saalschutz,
    "saalschutz": check_saalschutz,
    "chu-vandermonde": check_chu_vandermonde,
    "q-chu-vandermonde": check_q_chu_vandermonde,
    "binomial": check_binomial,
}


# random admissible instances

def random_instance(rng, identity: str, field: Field, max_n: int = 8, height: int = 7):
    """Keyword arguments for a random admissible instance of ``identity``.

    Parameters are redrawn until no denominator on either side vanishes.
    """
    from .errors import TDError
    from .random_data import Q_CHOICES

    el = lambda: field.random_element(rng, nonzero=True, height=height)  # noqa: E731
    check = IDENTITIES[identity]
    for _ in range(1000):
        n = rng.randint(0, max_n)
        if identity == "q-saalschutz":
            kw = dict(n=n, A=el(), B=el(), C=el(), q=rng.choice(Q_CHOICES))
        elif identity == "saalschutz":
            kw = dict(n=n, a=el(), b=el(), c=el())
        elif identity == "chu-vandermonde":
            kw = dict(n=n, b=el(), c=el())
        elif identity == "q-chu-vandermonde":
            form = rng.choice((1, 2))
            c = field.zero() if form == 2 and rng.random() < 0.2 else el()
            kw = dict(n=n, a=el(), c=c, q=rng.choice(Q_CHOICES), form=form)
        else:
            kw = dict(n=n, z=el())
        try:
            check(field=field, **kw)
        except (TDError, ZeroDivisionError):
            continue
        return kw
    raise RuntimeError(f"no admissible {identity} instance found")


# the series behind the closed-form roots of P-hat

def adj_terms(ld, lam) -> list:
    """Summands of sum_n p-hat_d...p-hat_{d-n+1} / (phi_d...phi_{d-n+1}) at lam."""
    from .drinfeld import normalized_p

    F, d = ld.field, ld.d
    out = [F.one()]
    cur = F.one()
    for k in range(d, 0, -1):
        cur = cur * normalized_p(k, ld.type_data, d, F)(lam) / ld.phi[k - 1]
        out.append(cur)
    return out


@dataclass
class ProofInstance:
    """One instantiation of a root proof at a point lam.

    ``adj`` is the sum above (P-hat(lam) divided by zeta_d), ``series`` its
    hypergeometric form, ``closed`` the summation-formula value and
    ``p_hat`` the direct evaluation P-hat(lam).
    """

    label: str
    lam: object
    spec: SeriesSpec
    adj: object
    series: object
    closed: object
    p_hat: object
    zeta_d: object
    regrouped: Optional[bool] = None

    @property
    def ok(self) -> bool:
        base = self.adj == self.series == self.closed and self.p_hat == self.zeta_d * self.closed
        return base and self.regrouped is not False


def _flip_type_i(td):
    """Same eigenvalues with q -> 1/q, which swaps (b, b*) with (c, c*)."""
    from .params import TypeData

    return TypeData(td.tdtype, td.a, td.c, td.b, td.a_star, td.c_star, td.b_star, q=1 / td.q)


def regroup_iii(adj: Sequence, series_terms: Sequence) -> bool:
    """Pairing of the (odd d) adj summands with the 3F2 summands:
    s_0 = T_0, s_{n-1} + s_n = T_{n/2} for even 0 < n < d, s_d = T_N."""
    d = len(adj) - 1
    N = (d + 1) // 2
    if len(series_terms) != N + 1:
        return False
    if adj[0] != series_terms[0] or adj[d] != series_terms[N]:
        return False
    return all(adj[n - 1] + adj[n] == series_terms[n // 2] for n in range(2, d, 2))


def proof_instance(ld, x) -> ProofInstance:
    """Instantiate the series step of the root proof for Leonard data ``ld``.

    ``x`` is the free point: for type I with bb*cc* != 0 lam = x + bb*cc*/x,
    for types II (cc* != 0) and III- x^2 is the discriminant, otherwise lam = x.
    """
    from .drinfeld import normalized_drinfeld
    from .leonard import phi_from_params
    from .tdtype import TDType

    F, d = ld.field, ld.d
    x = F(x)
    td = ld.type_data
    tt = td.tdtype
    zeta_d = ld.zeta()[d]
    t, psi = ld.t, ld.psi
    regrouped = None

    if tt is TDType.I:
        q = td.q
        if td.b * td.b_star * td.c * td.c_star:
            if psi is None:
                raise NotApplicable("type I with bb*cc* != 0 needs psi")
            bb, cc = td.b * td.b_star, td.c * td.c_star
            lam = x + bb * cc / x
            spec, closed = q_saalschutz(d, x / bb, cc / x, q ** (1 - d) * psi / bb, q, F)
            label = "I: 3phi2 / q-Saalschutz"
        else:
            if td.b * td.b_star:
                td = _flip_type_i(td)
                ld = phi_from_params(td, d, t, F)
                q = td.q
            cc = td.c * td.c_star
            if t:
                lam = x
                Q = q * q
                spec = SeriesSpec.build("2phi1", (Q ** -d, cc / lam), (q ** (1 - d) * cc / t,),
                                        q ** (d + 1) * lam / t, F, q, d)
                closed = q_pochhammer(q ** (1 - d) * lam / t, Q, d) / _guard(
                    q_pochhammer(q ** (1 - d) * cc / t, Q, d), "denominator")
                label = "I: 2phi1 / q-Chu-Vandermonde (t != 0)"
            else:
                lam = x
                spec, closed = q_chu_vandermonde(d, lam / cc, 0, 1 / q, F, form=2)
                label = "I: 2phi1 / q-Chu-Vandermonde (t = 0)"
    elif tt is TDType.II:
        b, c, b2, c2 = td.b, td.c, td.b_star, td.c_star
        cc = c * c2
        if cc:
            if psi is None:
                raise NotApplicable("type II with cc* != 0 needs psi")
            B = b * c2 + c * b2
            lam = (x * x - b * b * c2 * c2 - b2 * b2 * c * c) / (4 * cc)
            half = F(1 - d) / 2
            spec, closed = saalschutz(d, (B + x) / (2 * cc), (B - x) / (2 * cc), (B + psi) / (2 * cc) + half, F)
            label = "II: 3F2 / Saalschutz"
        else:
            if c:
                td = td.dual()
                ld = phi_from_params(td, d, t, F)
                b, c, b2, c2 = td.b, td.c, td.b_star, td.c_star
            lam = x
            if c2:
                half = F(1 - d) / 2
                spec, closed = chu_vandermonde(d, b2 / (2 * c2) - lam / (b * c2),
                                               b2 / (2 * c2) - t / (b * c2) + half, F)
                label = "II: 2F1 / Chu-Vandermonde"
            else:
                z = (b * b2 - 2 * lam) / _guard(b * b2 - 2 * t, "bb* - 2t")
                spec = SeriesSpec.build("1F0", (-d,), (), z, F, n=d)
                closed = F(2) ** d * (lam - t) ** d / (b * b2 - 2 * t) ** d
                label = "II: 1F0 / binomial"
    elif tt is TDType.III_MINUS:
        if psi is None:
            raise NotApplicable("type III- needs psi")
        b, c, b2, c2 = td.b, td.c, td.b_star, td.c_star
        cc = c * c2
        B = b * c2 + c * b2
        N = (d + 1) // 2
        lam = (x * x - b * b * c2 * c2 - b2 * b2 * c * c) / cc
        quarter = F(1 - d) / 4
        spec, closed = saalschutz(N, (x - B) / (2 * cc), -(x + B) / (2 * cc), quarter - (B - psi) / (2 * cc), F)
        label = "III-: 3F2 / Saalschutz after regrouping"
    else:
        raise NotApplicable(f"no series proof for type {tt}")

    adj = adj_terms(ld, lam)
    series_terms = terms(spec)
    if tt is TDType.III_MINUS:
        regrouped = regroup_iii(adj, series_terms)
    pa = ld.parameter_array()
    return ProofInstance(label, lam, spec, sum(adj[1:], adj[0]), sum(series_terms[1:], series_terms[0]),
                         closed, normalized_drinfeld(pa)(lam), zeta_d, regrouped)
