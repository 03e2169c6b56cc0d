"""Run the four default verification scans and print one summary line each.

Exit status is 1 if any scan reports violations, 0 otherwise.
"""

import argparse

from cosmax.series import Tolerance
from cosmax.verify import (
    SCAN_KINDS,
    consistency_scan,
    default_grid,
    identity_scan,
    inequality_scan,
    monotonicity_scan,
)

RUNNERS = {
    "consistency": consistency_scan,
    "monotonicity": monotonicity_scan,
    "inequality": inequality_scan,
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-10,
                    help="absolute tolerance handed to the evaluation routes")
    ap.add_argument("--inset", type=float, default=1e-3,
                    help="grid inset from the excluded domain edges")
    ap.add_argument("--max-violations", type=int, default=5,
                    help="violations to print per failing scan")
    args = ap.parse_args(argv)

    tol = Tolerance(args.tol)
    failed = False
    for kind in SCAN_KINDS:
        if kind == "identity":
            rep = identity_scan(tol)
        else:
            rep = RUNNERS[kind](default_grid(kind, args.inset), tol)
        status = "pass" if rep.passed else "FAIL"
        print(
            f"{kind:<13} {status:<5} points={rep.points_checked:<6d} "
            f"min_margin={rep.min_margin:.6e} "
            f"worst=({rep.worst_point[0]:.6g}, {rep.worst_point[1]:.6g}) "
            f"elapsed={rep.elapsed:.2f}s"
        )
        for v in rep.violations[: args.max_violations]:
            print(f"    violation at (var={v.var:.6g}, r={v.r:.6g}): "
                  f"observed={v.observed:.6e} bound={v.bound:.6e}")
        if len(rep.violations) > args.max_violations:
            print(f"    ... and {len(rep.violations) - args.max_violations} more")
        failed = failed or not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
