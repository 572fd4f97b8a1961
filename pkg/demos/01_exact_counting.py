"""Exact counting walkthrough.

Counts galled trees with the memoized recursions: single cells, whole
tables, row totals, and the dedicated simplex-totals recursion that reaches
n = 25 in milliseconds.
"""

from galledtrees import (
    GENERAL_LABELED,
    GENERAL_UNLABELED,
    SIMPLEX_LABELED,
    SIMPLEX_UNLABELED,
    TC_UNLABELED,
    build_table,
    count,
    simplex_total_direct,
    total,
    wedderburn,
)
from galledtrees.counts import simplex_total_sequence


def main():
    print("Single cells: networks with n leaves and g galls")
    print(f"  general, unlabeled, n=5, g=2      -> {count(GENERAL_UNLABELED, 5, 2)}")
    print(f"  general, leaf-labeled, n=5, g=2   -> {count(GENERAL_LABELED, 5, 2):,}")
    print(f"  simplex, unlabeled, n=9, g=4      -> {count(SIMPLEX_UNLABELED, 9, 4)}")
    print(f"  simplex, leaf-labeled, n=7, g=3   -> {count(SIMPLEX_LABELED, 7, 3):,}")
    print(f"  out-of-range gall counts are 0    -> {count(SIMPLEX_UNLABELED, 4, 2)}")

    print("\nGall-free networks are plain binary trees:")
    print(f"  unlabeled shapes, n=1..10: {[wedderburn(n) for n in range(1, 11)]}")

    print("\nA full table: unlabeled general galled trees")
    table = build_table(GENERAL_UNLABELED, 8)
    for n in range(1, 9):
        row = " ".join(f"{v:>6}" for v in table.row(n))
        print(f"  n={n}: {row}   total {table.row_totals[n]:,}")

    print("\nThe time-consistent subclass is dominated cell by cell:")
    for n in (5, 6, 7):
        gen = [count(GENERAL_UNLABELED, n, g) for g in range(n)]
        tc = [count(TC_UNLABELED, n, g) for g in range(n)]
        print(f"  n={n}: general {gen}  >=  time-consistent {tc}")

    print("\nRow totals grow fast; the labeled general family fastest:")
    for n in (8, 10, 12):
        print(f"  n={n}: {total(GENERAL_LABELED, n):,}")

    print("\nSimplex totals via the dedicated recursion (no per-gall split):")
    seq = simplex_total_sequence(25)
    print(f"  n=7  -> {simplex_total_direct(7)}")
    print(f"  n=16 -> {seq[16]:,}")
    print(f"  n=25 -> {seq[25]:,}")


if __name__ == "__main__":
    main()
