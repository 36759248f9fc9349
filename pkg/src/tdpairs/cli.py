"""Command-line interface.

Exit codes: 0 success / PASS, 1 FAIL (with a diff on stdout), 2 input error
(message on stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import random
import sys
from typing import List, Optional

from . import drinfeld, leonard, series, textio
from .brackets import bracket
from .errors import TDError
from .exactfield import Field
from .params import d4_apply
from .polynomial import Polynomial
from .tdtype import TDType


class Fail(Exception):
    """A check ran and did not hold."""


def _field(text: Optional[str]) -> Optional[Field]:
    return Field.parse(text) if text else None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise TDError(f"cannot read {path}: {exc.strerror}") from None


def _load_array(args):
    pa = textio.read_array(_read(args.file), _field(args.field))
    if getattr(args, "relative", None):
        pa = d4_apply(pa, args.relative)
    return pa


def _poly_diff(p: Polynomial, r: Polynomial) -> str:
    F = p.field
    for k in range(max(len(p.coeffs), len(r.coeffs))):
        if p.coeff(k) != r.coeff(k):
            return f"coefficient of x^{k}: {F.render(p.coeff(k))} vs {F.render(r.coeff(k))}"
    return "identical"


def _list(F: Field, xs) -> str:
    return "[" + ", ".join(F.render(x) for x in xs) + "]"


def cmd_validate(args, out):
    pa = _load_array(args)
    F = pa.field
    print(f"d: {pa.d}", file=out)
    print(f"type: {pa.tdtype}", file=out)
    print(f"beta: {F.render(pa.beta)}", file=out)
    if args.echo:
        out.write(textio.format_array(pa))


def cmd_drinfeld(args, out):
    pa = _load_array(args)
    if not args.normalized:
        print(drinfeld.drinfeld_poly(pa).render(), file=out)
        return
    res = drinfeld.compute(pa)
    F = pa.field
    print(f"P: {res.P.render()}", file=out)
    print(f"P_hat: {res.P_hat.render()}", file=out)
    print(f"u: {F.render(res.u)}", file=out)
    print(f"v: {F.render(res.v)}", file=out)
    if not res.affine_ok():
        print(f"FAIL P_hat(x) != P(u x + v): {_poly_diff(res.P.compose_affine(res.u, res.v), res.P_hat)}", file=out)
        raise Fail


def cmd_d4(args, out):
    pa = _load_array(args)
    normalized = not args.plain
    if normalized and pa.tdtype is TDType.I and pa.q is None and pa.type_data is None:
        print("note: no q given, checking P only", file=out)
        normalized = False
    ok, witness = drinfeld.check_d4_invariance(pa, normalized=normalized)
    if ok:
        print("PASS", file=out)
        return
    word, which, ref, got = witness
    print(f"FAIL relative {word!r}: {which} differs, {_poly_diff(ref, got)}", file=out)
    raise Fail


def cmd_specials(args, out):
    pa = _load_array(args)
    F = pa.field
    ok, got, want = drinfeld.check_specials(pa)
    print(f"P(theta_0 theta*_0 + theta_d theta*_d) = {F.render(got[0])}  expected {F.render(want[0])}", file=out)
    print(f"P(theta_0 theta*_d + theta_d theta*_0) = {F.render(got[1])}  expected {F.render(want[1])}", file=out)
    print("PASS" if ok else "FAIL", file=out)
    if not ok:
        raise Fail


def cmd_bracket(args, out):
    F = Field.parse(args.field or "Q")
    t = TDType.parse(args.type)
    q = F.parse_element(args.q) if args.q else None
    print(F.render(bracket(args.r, args.s, args.t, t, F, args.d, q)), file=out)


def _leonard_data(args):
    td, d, F = textio.read_type_data(_read(args.data), _field(args.field))
    if args.type and TDType.parse(args.type) is not td.tdtype:
        raise TDError(f"--type {args.type} does not match the data file ({td.tdtype})")
    t = F.parse_element(args.t)
    psi = F.parse_element(args.psi) if args.psi else None
    if psi is None and getattr(args, "solve_psi", False):
        found = leonard.solve_psi(td, d, t, F)
        if not found:
            raise TDError(f"no psi in {F} for t={F.render(t)}")
        psi = found[0]
    return leonard.phi_from_params(td, d, t, F, psi)


def cmd_leonard(args, out):
    if args.action == "oracle":
        mp, theta, theta_star = textio.read_matrix_pair(_read(args.file), _field(args.field))
        F = mp.field
        path = args.path or ("word" if mp.basis == "split" else "E")
        zeta = leonard.oracle_split_sequence(mp, theta, theta_star, path)
        print(f"zeta: {_list(F, zeta)}", file=out)
        if args.relations:
            ok = leonard.check_tridiagonal_relations(mp, theta, theta_star)
            print("relations: " + ("PASS" if ok else "FAIL"), file=out)
            if not ok:
                raise Fail
        return
    ld = _leonard_data(args)
    F = ld.field
    if args.action == "phi":
        print(f"phi: {_list(F, ld.phi)}", file=out)
        print(f"phi2: {_list(F, ld.phi2)}", file=out)
        print(f"zeta: {_list(F, ld.zeta())}", file=out)
    elif args.action == "roots":
        rs = leonard.roots(ld)
        print(f"roots: {_list(F, rs)}", file=out)
        H = drinfeld.normalized_drinfeld(ld.parameter_array())
        bad = [r for r in rs if H(r)]
        if bad:
            print(f"FAIL P_hat does not vanish at {_list(F, bad)}", file=out)
            raise Fail
    elif args.action == "realize":
        pa = ld.parameter_array()
        mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, F)
        out.write(textio.format_matrix_pair(mp, pa.theta, pa.theta_star))


def _parse_kv(F: Field, text: str) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise TDError(f"expected key=value in --params, got {item!r}")
        k, v = (s.strip() for s in item.split("=", 1))
        out[k] = int(v) if k in ("n", "form") else F.parse_element(v)
    return out


def cmd_series(args, out):
    F = Field.parse(args.field or "Q")
    if args.action == "eval":
        num = textio.parse_list(F, args.num or "")
        den = textio.parse_list(F, args.den or "")
        q = F.parse_element(args.q) if args.q else None
        spec = series.SeriesSpec.build(args.kind, num, den, F.parse_element(args.arg), F, q, args.n)
        print(F.render(series.evaluate(spec)), file=out)
        return
    check = series.IDENTITIES.get(args.identity)
    if check is None:
        raise TDError(f"unknown identity {args.identity!r}; expected one of {', '.join(series.IDENTITIES)}")
    if args.random:
        rng = random.Random(args.seed)
        fails = 0
        for _ in range(args.random):
            kw = series.random_instance(rng, args.identity, F)
            ok, lhs, rhs = check(field=F, **kw)
            if not ok:
                fails += 1
                print(f"FAIL {kw}: {F.render(lhs)} vs {F.render(rhs)}", file=out)
        print(f"{args.random - fails}/{args.random} PASS", file=out)
        if fails:
            raise Fail
        return
    kw = _parse_kv(F, args.params or "")
    if args.n is not None:
        kw["n"] = args.n
    try:
        ok, lhs, rhs = check(field=F, **kw)
    except TypeError as exc:
        raise TDError(f"bad parameters for {args.identity}: {exc}") from None
    print(f"lhs: {F.render(lhs)}", file=out)
    print(f"rhs: {F.render(rhs)}", file=out)
    print("PASS" if ok else "FAIL", file=out)
    if not ok:
        raise Fail


def _zeta_arg(F: Field, text: str, d: int) -> tuple:
    zeta = textio.parse_list(F, text)
    if len(zeta) == d:
        zeta = (F.one(),) + zeta
    if len(zeta) != d + 1 or zeta[0] != 1:
        raise TDError(f"--zeta needs zeta_1..zeta_d (or zeta_0..zeta_d with zeta_0 = 1) for d={d}")
    return zeta


def _relation(out, ok, lhs, rhs, name, poly):
    print(f"{name}: {poly.render()}", file=out)
    print(f"P_hat: {lhs.render()}", file=out)
    print("PASS" if ok else f"FAIL {_poly_diff(lhs, rhs)}", file=out)
    if not ok:
        raise Fail


def cmd_krawtchouk(args, out):
    F = Field.parse(args.field or "Q")
    zeta = _zeta_arg(F, args.zeta or "", args.d)
    ok, lhs, rhs = drinfeld.check_krawtchouk_relation(zeta, args.d, F)
    _relation(out, ok, lhs, rhs, "P_K", drinfeld.krawtchouk_drinfeld(zeta, args.d, F))


def cmd_qgeometric(args, out):
    F = Field.parse(args.field or "Q")
    zeta = _zeta_arg(F, args.zeta or "", args.d)
    q = F.parse_element(args.q)
    ok, lhs, rhs = drinfeld.check_qgeometric_relation(zeta, args.d, q, F)
    _relation(out, ok, lhs, rhs, "P_G", drinfeld.qgeometric_drinfeld(zeta, args.d, q, F))


def cmd_oracle(args, out):
    """Random Leonard data -> matrices -> zeta, against the running products of phi."""
    F = Field.parse(args.field or "Q")
    t = TDType.parse(args.type)
    rng = random.Random(args.seed)
    fails = 0
    for k in range(args.count):
        d = 3 if t is TDType.IV else args.d
        ld = leonard.random_leonard(rng, t, F, d)
        pa = ld.parameter_array()
        mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, F)
        want = ld.zeta()
        got = leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "word")
        got_e = leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "E")
        rel = leonard.check_tridiagonal_relations(mp, pa.theta, pa.theta_star)
        ok = got == want == got_e and rel
        if not ok:
            fails += 1
        print(f"#{k} d={d} zeta={_list(F, want)} {'PASS' if ok else 'FAIL'}", file=out)
    if fails:
        raise Fail


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tdpairs", description="Drinfel'd polynomials of sharp tridiagonal systems")
    sub = ap.add_subparsers(dest="command", required=True)

    def array_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="parameter-array record")
        p.add_argument("--field", help="override the field: Q, Fp:<p>, GF4 or GF16")
        p.add_argument("--relative", help="D4 word over s (star), d (down), D (Down), applied left to right")
        p.set_defaults(func=func)
        return p

    p = array_cmd("validate", cmd_validate, "check a parameter array; print d, type and beta")
    p.add_argument("--echo", action="store_true", help="also print the normalized record")
    p = array_cmd("drinfeld", cmd_drinfeld, "coefficients of P (ascending)")
    p.add_argument("--normalized", action="store_true", help="also P_hat and (u, v)")
    p = array_cmd("d4-check", cmd_d4, "P and P_hat agree on all 8 relatives")
    p.add_argument("--plain", action="store_true", help="check P only")
    array_cmd("specials", cmd_specials, "P at the two special points")

    p = sub.add_parser("bracket", help="the scalar [r, s, t]")
    for k in ("r", "s", "t"):
        p.add_argument(k, type=int)
    p.add_argument("--type", required=True)
    p.add_argument("--field")
    p.add_argument("--d", type=int)
    p.add_argument("--q")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("leonard", help="Leonard-system data, roots, realization, oracle")
    lsub = p.add_subparsers(dest="action", required=True)
    for name in ("phi", "roots", "realize"):
        q = lsub.add_parser(name)
        q.add_argument("--type", help="expected type; checked against the data file")
        q.add_argument("--data", required=True, help="type-data record (field, d, type, q, a..c_star)")
        q.add_argument("--t", required=True, help="t (types I, II, III-) or phi_1 (type IV)")
        q.add_argument("--psi")
        q.add_argument("--solve-psi", action="store_true", help="use the first in-field psi")
        q.add_argument("--field")
        q.set_defaults(func=cmd_leonard)
    q = lsub.add_parser("oracle")
    q.add_argument("file", help="matrix-pair record")
    q.add_argument("--path", choices=("word", "E"))
    q.add_argument("--relations", action="store_true", help="also check the triple-product relations")
    q.add_argument("--field")
    q.set_defaults(func=cmd_leonard)

    p = sub.add_parser("series", help="terminating (basic) hypergeometric series")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("eval")
    q.add_argument("--kind", required=True, choices=sorted(series.KINDS))
    q.add_argument("--num")
    q.add_argument("--den")
    q.add_argument("--arg", required=True)
    q.add_argument("--q")
    q.add_argument("--n", type=int)
    q.add_argument("--field")
    q.set_defaults(func=cmd_series)
    q = ssub.add_parser("check")
    q.add_argument("--identity", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--params", help="comma-separated key=value, e.g. A=2,B=1/3,C=5,q=2")
    q.add_argument("--random", type=int, default=0, help="check this many random instances instead")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--field")
    q.set_defaults(func=cmd_series)

    for name, func, extra in (("krawtchouk", cmd_krawtchouk, False), ("qgeometric", cmd_qgeometric, True)):
        p = sub.add_parser(name, help=f"the {name} relation for a given split sequence")
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--zeta", help="zeta_1..zeta_d, comma-separated")
        if extra:
            p.add_argument("--q", required=True)
        p.add_argument("--field")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="matrix oracle on random Leonard data")
    p.add_argument("--type", required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field")
    p.set_defaults(func=cmd_oracle)
    return ap


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        args.func(args, out)
    except Fail:
        return 1
    except (TDError, ZeroDivisionError, ValueError, IndexError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=err)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
