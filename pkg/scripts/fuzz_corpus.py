"""Run every check over a seeded random corpus and tabulate the worst residuals.

    python3 scripts/fuzz_corpus.py --per-class 100 --max-dim 8 --seed 1
"""

import argparse
import time
from collections import defaultdict

from linrel import run_suite
from linrel.generate import CLASSES, FIELDS, RandomSpec, random_relation, trial_seed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-class", type=int, default=100)
    ap.add_argument("--max-dim", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-10)
    args = ap.parse_args()

    worst = defaultdict(lambda: (0.0, ""))
    failures = 0
    start = time.perf_counter()
    idx = 0
    for fld in FIELDS:
        for cls in CLASSES:
            t_cls = time.perf_counter()
            for i in range(args.per_class):
                seed = trial_seed(args.seed, idx)
                idx += 1
                T = random_relation(RandomSpec(args.max_dim, cls, seed, fld))
                rep = run_suite(T, args.tol, summary=False, seed=seed, generation_class=cls)
                failures += not rep.passed
                for r in rep.records:
                    if r.applicable and r.residual >= worst[r.name][0]:
                        worst[r.name] = (r.residual, f"{cls}/{fld} seed={seed}")
            print(f"{cls:<28} {fld:<8} {args.per_class} relations in {time.perf_counter() - t_cls:6.2f}s")

    print(f"\n{idx} relations, {failures} with a failing check, {time.perf_counter() - start:.1f}s total\n")
    print(f"{'check':<36} {'worst residual':>14}  where")
    for name, (res, where) in sorted(worst.items(), key=lambda kv: -kv[1][0]):
        print(f"{name:<36} {res:14.3e}  {where}")


if __name__ == "__main__":
    main()
