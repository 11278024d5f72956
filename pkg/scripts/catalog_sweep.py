"""Validate every catalog entry, compare golden fingerprint fragments, run the
randomized checks, and print a one-line summary per algebra."""

import argparse
import time

from duallie import structure as st
from duallie.algebra import validate
from duallie.catalog import CATALOG, catalog
from duallie.checks import run_checks


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = 0
    for name, entry in CATALOG.items():
        t0 = time.perf_counter()
        L = catalog(name)
        ok = validate(L).ok
        fp = st.fingerprint(L).as_dict()
        mism = [k for k, v in entry.expected.items() if (tuple(fp[k]) if isinstance(fp[k], list) else fp[k]) != v]
        checks = run_checks(L, trials=args.trials, seed=args.seed)
        info = checks.get("saturation_of_subspace")
        dt = time.perf_counter() - t0
        status = "ok" if ok and not mism and checks.ok else "FAIL"
        bad += status != "ok"
        print(f"{name:22s} dim {L.dim:2d}  {status}  goldens {'match' if not mism else mism}  "
              f"arbitrary-subspace saturation {info.violations}/{info.trials}  {dt:.2f} s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
