"""Round-trip sweep for the D2 Engel triangularization.

Conjugates random triangular D2-matrix families and checks that the
triangular form is recovered. Reports failures and timing.
"""

import argparse
import random
import time

from duallie.engel import engel_triangularize, is_eps_triangular, random_nilpotent_family
from duallie.errors import NotTriangularizable


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-rank", type=int, default=4)
    ap.add_argument("--eps-diagonal", action="store_true", help="allow eR entries on the diagonal")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = []
    t0 = time.perf_counter()
    for trial in range(args.trials):
        m = rng.randint(2, args.max_rank)
        mats, _ = random_nilpotent_family(rng, m, rng.randint(1, 3), eps_diagonal=args.eps_diagonal)
        try:
            res = engel_triangularize(mats, m, seed=trial)
        except NotTriangularizable:
            failures.append((trial, m))
            continue
        assert all(is_eps_triangular(C) for C in res.conjugated)
    dt = time.perf_counter() - t0
    print(f"{args.trials} families, {len(failures)} not triangularized, {dt:.2f} s")
    for trial, m in failures:
        print(f"  trial {trial} (rank {m})")


if __name__ == "__main__":
    main()
