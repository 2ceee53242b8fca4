"""Exhaustive search for nested MDS pairs C1 ⊂ C2 of codimension one at length q+1.

A [q+1, k] MDS code C contains an MDS subcode of dimension k-1 exactly when some
u in F^k avoids every hyperplane spanned by k-1 columns of a generator of C
(a "free point").  All length-(q+1) GRS codes are monomially equivalent, so
one extended RS code per (q, k) settles the GRS case.  The search runs on the
smaller of the two dual sides, l+1 or q+1-l.

    python3 scripts/nested_gap_search.py            # q in 3 4 5 7 8 9
    python3 scripts/nested_gap_search.py 11 16      # bigger fields, slower
"""

from __future__ import annotations

import argparse
import time

from mdsintersect.code import LinearCode, is_mds
from mdsintersect.construct import NESTED_SEARCH_BOUND, SearchTooLarge, extended_rs, free_points
from mdsintersect.field import field_of_order
from mdsintersect.matrix import Matrix


def glynn_code() -> LinearCode:
    """A [10, 5] MDS code over GF(9) whose columns form a non-conic 10-arc:
    (1, t, t^2 + eta t^6, t^3, t^4) for t in GF(9), plus (0, 0, 0, 0, 1)."""
    F = field_of_order(9)
    eta = F.generator  # primitive, so eta^4 = -1
    cols = []
    for t in F.element_order:
        cols.append([1, t, F.add(F.pow(t, 2), F.mul(eta, F.pow(t, 6))), F.pow(t, 3), F.pow(t, 4)])
    cols.append([0, 0, 0, 0, 1])
    G = Matrix(F, [[c[i] for c in cols] for i in range(5)])
    return LinearCode(G, tag="glynn")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("q", nargs="*", type=int, default=[3, 4, 5, 7, 8, 9])
    ap.add_argument("--bound", type=int, default=NESTED_SEARCH_BOUND, help="cap on q^k points searched")
    args = ap.parse_args()

    print(f"{'q':>3} {'l':>3} {'search k':>8} {'free points':>12} {'seconds':>8}")
    for q in args.q:
        F = field_of_order(q)
        for l in range(1, q):
            k = min(l + 1, q + 1 - l)
            t0 = time.perf_counter()
            try:
                found = str(len(free_points(extended_rs(F, k), bound=args.bound)))
            except SearchTooLarge:
                found = "too large"
            print(f"{q:>3} {l:>3} {k:>8} {found:>12} {time.perf_counter() - t0:>8.2f}")

    C = glynn_code()
    print(f"non-GRS [10,5]_9 arc: mds={is_mds(C)} free points={len(free_points(C))}")


if __name__ == "__main__":
    main()
