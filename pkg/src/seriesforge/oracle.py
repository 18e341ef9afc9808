"""Brute-force enumerators of the actual combinatorial objects.

Everything here counts by direct construction (set partitions, exhaustive
maps, canonical codes) with no Bell-polynomial or series machinery, so it
can independently validate the formula modules at small sizes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, Iterator, Tuple

from .rings import factorial
from .weights import WeightPoly

MAX_LABELED_LEAVES = 8
MAX_ULTRA_POINTS = 5
MAX_UNLABELED_LEAVES = 9
MAX_CHAINS = 7
MAX_MOBILE_LEAVES = 7


def set_partitions(items: list) -> Iterator[list]:
    """All partitions of a list into unordered nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


# ---------------------------------------------------------------------------
# Labeled m-partite series-reduced trees.
# ---------------------------------------------------------------------------

def _weight_sum(labels: frozenset, forbidden: int, m: int, memo: dict) -> WeightPoly:
    """Sum of tree weights over all m-partite series-reduced trees on the
    given leaf-label set whose root color differs from `forbidden`
    (0 = no restriction).  A single label is a bare leaf of weight 1."""
    if len(labels) == 1:
        return WeightPoly.const(1)
    key = (labels, forbidden)
    if key in memo:
        return memo[key]
    total = WeightPoly()
    items = sorted(labels)
    for part in set_partitions(items):
        if len(part) < 2:
            continue  # out-degree >= 2 at every inner vertex
        for c in range(1, m + 1):
            if c == forbidden:
                continue
            w = WeightPoly.gen(c, len(part))
            for block in part:
                w = w * _weight_sum(frozenset(block), c, m, memo)
                if w.is_zero():
                    break
            total = total + w
    memo[key] = total
    return total


def enum_labeled_trees(s: int, m: int) -> Tuple[int, WeightPoly]:
    """Count and summed weight of labeled m-partite series-reduced trees."""
    if not (1 <= s <= MAX_LABELED_LEAVES) or m < 1 or m > 4:
        raise ValueError("size beyond enumeration bounds")
    weight = _weight_sum(frozenset(range(1, s + 1)), 0, m, {})
    count = weight.substitute(lambda c, k: 1)
    return count, weight


def enum_mobiles(s: int, m: int) -> int:
    """Labeled m-partite series-reduced mobiles: each inner vertex of
    out-degree k contributes (k-1)! cyclic arrangements of its branches."""
    if not (1 <= s <= MAX_MOBILE_LEAVES) or m < 1 or m > 4:
        raise ValueError("size beyond enumeration bounds")
    weight = _weight_sum(frozenset(range(1, s + 1)), 0, m, {})
    return weight.substitute(lambda c, k: factorial(k - 1))


# ---------------------------------------------------------------------------
# Symbolic ultrametrics.
# ---------------------------------------------------------------------------

def enum_ultrametrics(s: int, m: int) -> int:
    """Exhaustively count symmetric maps on unordered distinct pairs of
    {1..s} into {1..m} satisfying:

    - every triple of points uses at most 2 distinct values;
    - no four distinct points a,b,c,d with
      D(a,b) = D(b,c) = D(c,d) != D(b,d) = D(d,a) = D(a,c).
    """
    if not (1 <= s <= MAX_ULTRA_POINTS) or not (1 <= m <= 3):
        raise ValueError("size beyond enumeration bounds")
    if s == 1:
        return 1
    pairs = list(combinations(range(s), 2))
    triples = list(combinations(range(s), 3))
    quads = list(permutations(range(s), 4)) if s >= 4 else []
    count = 0
    for values in product(range(1, m + 1), repeat=len(pairs)):
        d = dict(zip(pairs, values))

        def D(x, y):
            return d[(x, y)] if x < y else d[(y, x)]

        ok = all(len({D(x, y), D(x, z), D(y, z)}) <= 2 for x, y, z in triples)
        if ok:
            for a, b, c, e in quads:
                if (
                    D(a, b) == D(b, c) == D(c, e)
                    and D(b, e) == D(e, a) == D(a, c)
                    and D(a, b) != D(b, e)
                ):
                    ok = False
                    break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Unlabeled series-reduced trees.
# ---------------------------------------------------------------------------

_LEAF = ()


def _unlabeled_trees(n: int, memo: dict) -> tuple:
    """Canonical codes of rooted unlabeled series-reduced trees with n
    leaves.  A code is () for a leaf, else the sorted tuple of child codes."""
    if n in memo:
        return memo[n]
    if n == 1:
        memo[1] = (_LEAF,)
        return memo[1]
    smaller = []
    for j in range(1, n):
        smaller.extend((j, code) for code in _unlabeled_trees(j, memo))
    found = set()

    def extend(children, start, remaining):
        if remaining == 0:
            if len(children) >= 2:
                found.add(tuple(sorted(children)))
            return
        for idx in range(start, len(smaller)):
            leaves, code = smaller[idx]
            if leaves > remaining:
                continue
            extend(children + [code], idx, remaining - leaves)

    extend([], 0, n)
    memo[n] = tuple(found)
    return memo[n]


def _inner_vertices(code) -> int:
    if code == _LEAF:
        return 0
    return 1 + sum(_inner_vertices(child) for child in code)


def enum_unlabeled_trees(s: int) -> Dict[int, int]:
    """Counts of rooted unlabeled series-reduced trees with s leaves,
    bucketed by number of inner vertices."""
    if not (1 <= s <= MAX_UNLABELED_LEAVES):
        raise ValueError("size beyond enumeration bounds")
    buckets: Dict[int, int] = {}
    for code in _unlabeled_trees(s, {}):
        k = _inner_vertices(code)
        buckets[k] = buckets.get(k, 0) + 1
    return buckets


# ---------------------------------------------------------------------------
# Chain-increasing binary trees.
# ---------------------------------------------------------------------------

def _chain_junction_counts(labels: frozenset) -> Iterator[int]:
    """Yields the junction count of every uncolored chain-increasing
    binary tree on the given chain-label set (one yield per tree).

    The root is either a chain (necessarily carrying the minimum label,
    with at most one child) or a junction over an unordered pair of
    nonempty subtrees.
    """
    lo = min(labels)
    if len(labels) == 1:
        yield 0
    else:
        yield from _chain_junction_counts(labels - {lo})
    rest = sorted(labels - {lo})
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            left = frozenset((lo,) + extra)
            right = labels - left
            if not right:
                continue
            for a in _chain_junction_counts(left):
                for b in _chain_junction_counts(right):
                    yield 1 + a + b


def enum_chain_increasing(s: int, m: int) -> int:
    """Count m-colored chain-increasing binary trees with s chains by
    enumerating uncolored shapes and coloring the junctions."""
    if not (1 <= s <= MAX_CHAINS) or not (0 <= m <= 3):
        raise ValueError("size beyond enumeration bounds")
    return sum(m ** j for j in _chain_junction_counts(frozenset(range(1, s + 1))))


# ---------------------------------------------------------------------------
# Definitional partial Bell polynomial (partition-sum form).
# ---------------------------------------------------------------------------

def bell_partial_partition_sum(n: int, k: int, x, ring):
    """B_{n,k} straight from the definition: a sum over all multiplicity
    vectors alpha with sum alpha_i = k and sum i*alpha_i = n."""
    if k == 0:
        return ring.one if n == 0 else ring.zero
    width = n - k + 1
    total = ring.zero

    def rec(i, parts_left, weight_left, alpha):
        nonlocal total
        if i > width:
            if parts_left == 0 and weight_left == 0:
                coeff = Fraction(factorial(n))
                term = ring.one
                for j, a in enumerate(alpha, start=1):
                    coeff /= factorial(a) * factorial(j) ** a
                    for _ in range(a):
                        xj = x[j - 1] if j <= len(x) else ring.zero
                        term = term * xj
                assert coeff.denominator == 1
                total = total + int(coeff) * term
            return
        for a in range(min(parts_left, weight_left // i) + 1):
            rec(i + 1, parts_left - a, weight_left - i * a, alpha + [a])

    rec(1, k, n, [])
    return total


def enum_derangements(n: int, k: int) -> int:
    """Count fixed-point-free permutations of n elements with k cycles by
    scanning all n! permutations."""
    count = 0
    for perm in permutations(range(n)):
        if any(perm[i] == i for i in range(n)):
            continue
        seen = [False] * n
        cycles = 0
        for i in range(n):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        if cycles == k:
            count += 1
    return count


def enum_set_partitions_min_block(n: int, k: int, min_size: int) -> int:
    """Count partitions of {1..n} into k blocks of size >= min_size."""
    count = 0
    for part in set_partitions(list(range(n))):
        if len(part) == k and all(len(b) >= min_size for b in part):
            count += 1
    return count
