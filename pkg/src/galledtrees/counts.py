"""Memoized exact counting recursions for galled trees.

Covers all six (network class x labeling) families.  Each count is assembled
from four structural contributions: a root split into two subtrees, the
symmetric-half correction (unlabeled only), a root gall whose two node
sequences are both nonempty, and -- for the general class only -- a root gall
with one empty sequence.  Time-consistent counts reuse the general recursion
with the one-empty-side contribution dropped.

Everything here is exact big-integer arithmetic; a table row is computed in
one pass over leaf compositions, with the gall distributions of a composition
evaluated as a bounded convolution over the children's legal gall ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from .comb import double_factorial_odd, palindromic_compositions


class NetworkClass(Enum):
    GENERAL = "general"
    TIME_CONSISTENT = "time-consistent"
    SIMPLEX_TC = "simplex-tc"


class Labeling(Enum):
    UNLABELED = "unlabeled"
    LEAF_LABELED = "labeled"


@dataclass(frozen=True)
class TreeClassSpec:
    network_class: NetworkClass
    labeling: Labeling

    def max_galls(self, n: int) -> int:
        """Largest legal gall count for n leaves in this class."""
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if self.network_class is NetworkClass.GENERAL:
            return n - 1
        return (n - 1) // 2

    @property
    def is_labeled(self) -> bool:
        return self.labeling is Labeling.LEAF_LABELED


GENERAL_UNLABELED = TreeClassSpec(NetworkClass.GENERAL, Labeling.UNLABELED)
GENERAL_LABELED = TreeClassSpec(NetworkClass.GENERAL, Labeling.LEAF_LABELED)
TC_UNLABELED = TreeClassSpec(NetworkClass.TIME_CONSISTENT, Labeling.UNLABELED)
TC_LABELED = TreeClassSpec(NetworkClass.TIME_CONSISTENT, Labeling.LEAF_LABELED)
SIMPLEX_UNLABELED = TreeClassSpec(NetworkClass.SIMPLEX_TC, Labeling.UNLABELED)
SIMPLEX_LABELED = TreeClassSpec(NetworkClass.SIMPLEX_TC, Labeling.LEAF_LABELED)

ALL_SPECS = (
    GENERAL_UNLABELED,
    GENERAL_LABELED,
    TC_UNLABELED,
    TC_LABELED,
    SIMPLEX_UNLABELED,
    SIMPLEX_LABELED,
)

# Practical ceilings for the exact recursions (the composition sums are
# exponential in n); larger n is served by the generating-function engine.
EXACT_ENGINE_LIMIT = {
    (NetworkClass.GENERAL, Labeling.UNLABELED): 16,
    (NetworkClass.GENERAL, Labeling.LEAF_LABELED): 16,
    (NetworkClass.TIME_CONSISTENT, Labeling.UNLABELED): 16,
    (NetworkClass.TIME_CONSISTENT, Labeling.LEAF_LABELED): 16,
    (NetworkClass.SIMPLEX_TC, Labeling.UNLABELED): 26,
    (NetworkClass.SIMPLEX_TC, Labeling.LEAF_LABELED): 26,
}

_row_cache: Dict[Tuple[NetworkClass, Labeling, int], Tuple[int, ...]] = {}


def _conv(a: List[int], b, cap: int) -> List[int]:
    out = [0] * min(cap, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= cap:
                break
            if y:
                out[i + j] += x * y
    return out


def _stretch2(row) -> List[int]:
    # Gall polynomial of a mirrored child: every gall appears on both sides.
    out = [0] * (2 * len(row) - 1)
    for b, v in enumerate(row):
        out[2 * b] = v
    return out


def _comp_sum(total: int, parts: int, poly_of, cap: int, label_pool: int | None = None):
    """Sum over compositions c of `total` into `parts` positive parts of the
    convolution of the children's gall polynomials poly_of(c_i).

    With label_pool = L, each composition is additionally weighted by the
    multinomial coefficient distributing L labels as (c_1, ..., c_parts).
    Returns a vector indexed by total gall count.
    """
    out = [0] * cap

    def rec(rem, k, acc, weight):
        if k == 1:
            vec = _conv(acc, poly_of(rem), cap)
            if weight == 1:
                for h, v in enumerate(vec):
                    if v:
                        out[h] += v
            else:
                for h, v in enumerate(vec):
                    if v:
                        out[h] += weight * v
            return
        for first in range(1, rem - k + 2):
            w = weight if label_pool is None else weight * math.comb(rem, first)
            rec(rem - first, k - 1, _conv(acc, poly_of(first), cap), w)

    if parts >= 1 and total >= parts:
        rec(total, parts, [1], 1)
    return out


def _compute_row(spec: TreeClassSpec, n: int) -> Tuple[int, ...]:
    """Row of counts (g = 0 .. max_galls(n)) for n leaves, from smaller rows."""
    if n == 1:
        return (1,)
    rows = [None] + [list(_get_row(spec, m)) for m in range(1, n)]
    width = n  # scratch is wider than any legal row; the tail must stay zero
    general = spec.network_class is NetworkClass.GENERAL
    simplex = spec.network_class is NetworkClass.SIMPLEX_TC

    sym = [0] * width  # contributions halved by left-right symmetry
    extra = [0] * width  # the general-only one-empty-side root gall

    # Root split into two subtrees, ordered, galls distributed freely.
    for a in range(1, n):
        left, right = rows[a], rows[n - a]
        if spec.is_labeled:
            w = math.comb(n, a)
            for g1, x in enumerate(left):
                if x:
                    for g2, y in enumerate(right):
                        if y:
                            sym[g1 + g2] += w * x * y
        else:
            for g1, x in enumerate(left):
                if x:
                    for g2, y in enumerate(right):
                        if y:
                            sym[g1 + g2] += x * y

    # Identical-subtree correction (a pair of equal halves is one structure).
    if not spec.is_labeled and n % 2 == 0:
        for h, v in enumerate(rows[n // 2]):
            sym[2 * h] += v

    # Root gall, both node sequences nonempty: k non-root nodes in the gall,
    # k - 2 possible positions for the reticulation node.  In the simplex
    # class the reticulation subtree is a single leaf, so only k - 1 children
    # receive the remaining n - 1 leaves.
    for k in range(3, n + 1):
        if simplex:
            vec = _comp_sum(
                n - 1,
                k - 1,
                lambda m: rows[m],
                width,
                label_pool=(n - 1) if spec.is_labeled else None,
            )
            w = (k - 2) * (n if spec.is_labeled else 1)
        else:
            vec = _comp_sum(
                n,
                k,
                lambda m: rows[m],
                width,
                label_pool=n if spec.is_labeled else None,
            )
            w = k - 2
        for h, v in enumerate(vec[: width - 1]):
            if v:
                sym[h + 1] += w * v

    # Mirror-symmetric root galls (unlabeled only): the reticulation sits at
    # the center and one side determines the other, so side galls count twice.
    if not spec.is_labeled:
        if simplex:
            if n % 2 == 1:
                half = (n - 1) // 2
                for a in range(1, half + 1):
                    vec = _comp_sum(half, a, lambda m: _stretch2(rows[m]), width)
                    for h, v in enumerate(vec[: width - 1]):
                        if v:
                            sym[h + 1] += v
        else:
            for a in range(1, (n - 1) // 2 + 1):
                for c in palindromic_compositions(n, 2 * a + 1):
                    acc = [1]
                    for ci in c[:a]:
                        acc = _conv(acc, _stretch2(rows[ci]), width)
                    acc = _conv(acc, rows[c[a]], width)
                    for h, v in enumerate(acc[: width - 1]):
                        if v:
                            sym[h + 1] += v

    # General class only: root gall with an empty sequence on one side.  The
    # reticulation node is pinned at the bottom of the single path, so the two
    # sides are distinguishable: no 1/2 factor, no palindromic correction.
    if general:
        for k in range(2, n + 1):
            vec = _comp_sum(
                n,
                k,
                lambda m: rows[m],
                width,
                label_pool=n if spec.is_labeled else None,
            )
            for h, v in enumerate(vec[: width - 1]):
                if v:
                    extra[h + 1] += v

    gmax = spec.max_galls(n)
    row = []
    for g in range(width):
        assert sym[g] % 2 == 0, f"odd symmetric sum at n={n}, g={g}"
        value = sym[g] // 2 + extra[g]
        if g <= gmax:
            row.append(value)
        else:
            assert value == 0, f"nonzero count outside gall range at n={n}, g={g}"
    return tuple(row)


def _get_row(spec: TreeClassSpec, n: int) -> Tuple[int, ...]:
    key = (spec.network_class, spec.labeling, n)
    row = _row_cache.get(key)
    if row is None:
        for m in range(1, n):  # build bottom-up so recursion depth stays O(1)
            if (spec.network_class, spec.labeling, m) not in _row_cache:
                _row_cache[(spec.network_class, spec.labeling, m)] = _compute_row(spec, m)
        row = _compute_row(spec, n)
        _row_cache[key] = row
    return row


def count(spec: TreeClassSpec, n: int, g: int) -> int:
    """Exact number of networks with n leaves and g galls.

    Returns 0 for g outside the legal gall range (so convolution sums need no
    boundary guards); rejects n <= 0 or g < 0 as input errors.
    """
    if n <= 0:
        raise ValueError(f"need n >= 1, got {n}")
    if g < 0:
        raise ValueError(f"need g >= 0, got {g}")
    if g > spec.max_galls(n):
        return 0
    return _get_row(spec, n)[g]


def total(spec: TreeClassSpec, n: int) -> int:
    """Row sum over the legal gall range."""
    if n <= 0:
        raise ValueError(f"need n >= 1, got {n}")
    return sum(_get_row(spec, n))


def wedderburn(n: int) -> int:
    """Number of unlabeled non-plane rooted binary trees with n leaves."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return wedderburn_sequence(n)[n]


def wedderburn_sequence(max_n: int) -> List[int]:
    """[U_0 .. U_max_n] via the split recursion with symmetric-half correction."""
    u = [0] * (max_n + 1)
    if max_n >= 1:
        u[1] = 1
    for n in range(2, max_n + 1):
        s = sum(u[a] * u[n - a] for a in range(1, n))
        if n % 2 == 0:
            s += u[n // 2]
        assert s % 2 == 0
        u[n] = s // 2
    return u


def labeled_tree_count(n: int) -> int:
    """Number of leaf-labeled rooted binary trees: (2n-3)!! for n >= 2, else 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    return double_factorial_odd(n - 1)


def simplex_total_sequence(max_n: int) -> List[int]:
    """Totals over all gall counts for unlabeled simplex time-consistent trees,
    via the dedicated arbitrary-gall recursion (index 0 is 0).

    The composition sums are evaluated as convolution powers of the prefix
    sequence, which keeps n ~ 25 cheap.
    """
    a = [0] * (max_n + 1)
    if max_n >= 1:
        a[1] = 1
    # S[(j, v)] = sum over compositions of v into j parts of prod a[c_i]
    memo: Dict[Tuple[int, int], int] = {}

    def comp_power(j, v):
        if j == 1:
            return a[v] if v >= 1 else 0
        key = (j, v)
        got = memo.get(key)
        if got is None:
            got = sum(comp_power(j - 1, v - i) * a[i] for i in range(1, v - j + 2))
            memo[key] = got
        return got

    for n in range(2, max_n + 1):
        s = sum(a[m] * a[n - m] for m in range(1, n))
        if n % 2 == 0:
            s += a[n // 2]
        s += sum((k - 2) * comp_power(k - 1, n - 1) for k in range(3, n + 1))
        if n % 2 == 1:
            half = (n - 1) // 2
            s += sum(comp_power(q, half) for q in range(1, half + 1))
        assert s % 2 == 0
        a[n] = s // 2
    return a


def simplex_total_direct(n: int) -> int:
    """Total count of unlabeled simplex time-consistent galled trees with n
    leaves, computed without per-gall resolution."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return simplex_total_sequence(n)[n]


@dataclass
class CountTable:
    spec: TreeClassSpec
    max_n: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    row_totals: Dict[int, int] = field(default_factory=dict)

    def row(self, n: int) -> Tuple[int, ...]:
        return tuple(self.entries[(n, g)] for g in range(self.spec.max_galls(n) + 1))


def build_table(spec: TreeClassSpec, max_n: int) -> CountTable:
    """Fill all legal (n, g) cells and row totals for n = 1 .. max_n."""
    if max_n < 1:
        raise ValueError(f"need max_n >= 1, got {max_n}")
    table = CountTable(spec=spec, max_n=max_n)
    for n in range(1, max_n + 1):
        row = _get_row(spec, n)
        for g, v in enumerate(row):
            table.entries[(n, g)] = v
        table.row_totals[n] = sum(row)
    return table


def clear_cache() -> None:
    _row_cache.clear()
