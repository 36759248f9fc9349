"""Run the polynomial checks over a seeded random corpus and tabulate.

    python3 scripts/run_corpus.py --per-type 100 --seed 7
"""

import argparse
import collections
import time

from tdpairs import drinfeld
from tdpairs.brackets import check_eta_expansion
from tdpairs.random_data import CorpusConfig, corpus

CHECKS = {
    "d4": lambda pa: drinfeld.check_d4_invariance(pa)[0],
    "specials": lambda pa: drinfeld.check_specials(pa)[0],
    "anchors": lambda pa: drinfeld.check_normalized_specials(pa)[0],
    "affine": lambda pa: drinfeld.compute(pa).affine_ok(),
    "eta": lambda pa: all(check_eta_expansion(pa, i)[0] for i in range(pa.d + 1)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--per-type", type=int, default=50)
    ap.add_argument("--max-d", type=int, default=8)
    ap.add_argument("--prime", type=int, default=11)
    args = ap.parse_args()

    cfg = CorpusConfig(seed=args.seed, per_type=args.per_type, max_d=args.max_d, prime=args.prime)
    passed = collections.Counter()
    total = collections.Counter()
    bad = []
    t0 = time.time()
    for label, pa in corpus(cfg):
        fam = label.split("#")[0]
        total[fam] += 1
        for name, check in CHECKS.items():
            if check(pa):
                passed[fam, name] += 1
            else:
                bad.append((label, name))
    print(f"{'family':8s} {'n':>4s} " + " ".join(f"{c:>8s}" for c in CHECKS))
    for fam in total:
        print(f"{fam:8s} {total[fam]:4d} " + " ".join(f"{passed[fam, c]:8d}" for c in CHECKS))
    print(f"{sum(total.values())} arrays in {time.time() - t0:.1f}s")
    for label, name in bad[:20]:
        print("FAIL", label, name)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
