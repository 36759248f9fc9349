"""Leonard data -> matrices -> zeta, and closed-form roots, swept over d.

Prints one row per (type, d) with the number of draws that pass every
check (word-path zeta, idempotent-path zeta, triple products, roots).
"""

import argparse
import random

from tdpairs import leonard
from tdpairs.drinfeld import normalized_drinfeld
from tdpairs.exactfield import QQ, Field
from tdpairs.tdtype import TDType

FAMILIES = {
    "I": (TDType.I, QQ),
    "II": (TDType.II, QQ),
    "II/F101": (TDType.II, Field("Fp", 101)),
    "III-": (TDType.III_MINUS, QQ),
    "IV/GF16": (TDType.IV, Field("GF16")),
}


def one(ld):
    pa = ld.parameter_array()
    F = ld.field
    mp = leonard.realize_matrices(pa.theta, pa.theta_star, ld.phi, F)
    z = ld.zeta()
    ok = (leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "word") == z
          and leonard.oracle_split_sequence(mp, pa.theta, pa.theta_star, "E") == z
          and leonard.check_tridiagonal_relations(mp, pa.theta, pa.theta_star))
    if ld.psi is not None or ld.tdtype in (TDType.I, TDType.II):
        H = normalized_drinfeld(pa)
        ok = ok and all(H(r) == 0 for r in leonard.roots(ld))
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-d", type=int, default=6)
    ap.add_argument("--draws", type=int, default=5)
    ap.add_argument("--only", choices=sorted(FAMILIES))
    args = ap.parse_args()

    rng = random.Random(args.seed)
    fails = 0
    for name, (t, F) in FAMILIES.items():
        if args.only and name != args.only:
            continue
        ds = [3] if t is TDType.IV else range(1, args.max_d + 1, 2 if t is TDType.III_MINUS else 1)
        for d in ds:
            good = sum(one(leonard.random_leonard(rng, t, F, d)) for _ in range(args.draws))
            fails += args.draws - good
            print(f"{name:8s} d={d}  {good}/{args.draws}")
    raise SystemExit(1 if fails else 0)


if __name__ == "__main__":
    main()
