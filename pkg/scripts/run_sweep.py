"""Construct and verify every tuple with n <= q+2 and dims <= D for several fields.

    python3 scripts/run_sweep.py                       # q in 3 4 5 7 8 9, D = 6
    python3 scripts/run_sweep.py 4 8 --max-dim 9 --jobs 4 --out runs/
"""

from __future__ import annotations

import argparse
import os
import time
from collections import Counter

from mdsintersect import export
from mdsintersect.cli import run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("q", nargs="*", type=int, default=[3, 4, 5, 7, 8, 9])
    ap.add_argument("--max-dim", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="directory for one sweep_q<q>.json per field")
    args = ap.parse_args()

    failures = 0
    print(f"{'q':>3} {'tuples':>7} {'verified':>9} {'gap':>5} {'defect':>7} {'infeasible':>11} {'out of scope':>13} {'s':>6}")
    for q in args.q:
        t0 = time.perf_counter()
        results = run_sweep(q, args.max_dim, args.jobs)
        dt = time.perf_counter() - t0
        outcome = Counter(r[3] for r in results)
        status = Counter(r[1] for r in results)
        failures += outcome["gap"] + outcome["defect"]
        print(
            f"{q:>3} {len(results):>7} {outcome['verified']:>9} {outcome['gap']:>5} {outcome['defect']:>7} "
            f"{status['InfeasibleProven']:>11} {status['OutOfScope']:>13} {dt:>6.1f}"
        )
        for t, _, route, o, _ in results:
            if o in ("gap", "defect"):
                print(f"      {o}: {t} route={route}")
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            report = export.RunReport(
                command="sweep",
                request={"q": q, "max_dim": args.max_dim, "jobs": args.jobs},
                artifacts={"results": [list(r) for r in results]},
                verification=dict(outcome),
                timing={"seconds": dt},
                exit_code=4 if outcome["gap"] + outcome["defect"] else 0,
            )
            with open(os.path.join(args.out, f"sweep_q{q}.json"), "w") as fh:
                fh.write(export.dumps(export.report_to_dict(report)) + "\n")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
