"""Exact ground truth by exhaustive search.

``sigma_exact`` runs a dynamic program over all vertex subsets: the optimum
for a subset X peels off one stable class containing the lowest-indexed
vertex of X (some class must contain it, so restricting the choice loses
nothing and roughly halves the 3^n submask enumeration). Everything else in
the package is validated against these routines, so they stay deliberately
independent of the polynomial solvers.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InstanceTooLarge, PreconditionViolated
from .graph import WeightedGraph

DEFAULT_CAP = 22
_INF = float("inf")


def _check_cap(g: WeightedGraph, cap: int) -> None:
    if g.n > cap:
        raise InstanceTooLarge(f"n={g.n} exceeds cap {cap}")


def _stability_table(g: WeightedGraph) -> bytearray:
    """stab[mask] == 1 iff mask is a stable set of g."""
    n = g.n
    adj = g.adjacency
    stab = bytearray(1 << n)
    stab[0] = 1
    idx = [0] * (1 << n)
    for v in range(n):
        idx[1 << v] = v
    for x in range(1, 1 << n):
        low = x & -x
        rest = x ^ low
        stab[x] = stab[rest] and not (adj[idx[low]] & rest)
    return stab


def _max_weight_table(g: WeightedGraph) -> list[int]:
    """maxw[mask] = heaviest vertex weight inside mask (0 for the empty mask)."""
    n = g.n
    w = g.weights
    maxw = [0] * (1 << n)
    for v in range(n):
        wv = w[v]
        bit = 1 << v
        step = bit << 1
        for base in range(0, 1 << n, step):
            for x in range(base + bit, base + step):
                prev = maxw[x ^ bit]
                maxw[x] = prev if prev > wv else wv
    return maxw


def sigma_exact(g: WeightedGraph, cap: int = DEFAULT_CAP) -> int:
    """Minimum weight over all proper colorings of ``g``.

    Memoized over all 2^n vertex subsets; about 3^n/2 submask visits, so the
    default cap keeps the instance size where that is tractable.
    """
    _check_cap(g, cap)
    n = g.n
    if n == 0:
        return 0
    stab = _stability_table(g)
    maxw = _max_weight_table(g)
    table = [0] * (1 << n)
    for x in range(1, 1 << n):
        low = x & -x
        rest = x ^ low
        best = _INF
        s = rest
        while True:
            sub = s | low
            if stab[sub]:
                c = table[x ^ sub] + maxw[sub]
                if c < best:
                    best = c
            if not s:
                break
            s = (s - 1) & rest
        table[x] = best
    return table[-1]


def sigma_exact_bounded(
    g: WeightedGraph, r: int, cap: int = DEFAULT_CAP
) -> int | None:
    """Minimum coloring weight using at most ``r`` classes, or None if the
    graph has no coloring with that few classes."""
    _check_cap(g, cap)
    if r < 1:
        raise PreconditionViolated(f"r={r} must be >= 1")
    n = g.n
    if n == 0:
        return 0
    stab = _stability_table(g)
    maxw = _max_weight_table(g)
    size = 1 << n
    prev = [_INF] * size
    prev[0] = 0
    for _ in range(min(r, n)):
        cur = [_INF] * size
        cur[0] = 0
        for x in range(1, size):
            low = x & -x
            rest = x ^ low
            best = prev[x]
            s = rest
            while True:
                sub = s | low
                if stab[sub]:
                    c = prev[x ^ sub] + maxw[sub]
                    if c < best:
                        best = c
                if not s:
                    break
                s = (s - 1) & rest
            cur[x] = best
        prev = cur
    return None if prev[-1] == _INF else int(prev[-1])


def decide_dual_oracle(g: WeightedGraph, k: int, cap: int = DEFAULT_CAP) -> bool:
    """True iff some proper coloring saves at least ``k`` below the vertex-weight sum."""
    if k < 1:
        raise PreconditionViolated(f"k={k} must be >= 1")
    return sigma_exact(g, cap) <= g.weight_sum - k


def maximum_matching_bruteforce(g: WeightedGraph, cap: int = 12) -> int:
    """Exact maximum matching cardinality by exhaustive search (test oracle)."""
    _check_cap(g, cap)
    adj = g.adjacency

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        low = free & -free
        u = low.bit_length() - 1
        free ^= low
        r = best(free)  # leave u unmatched
        avail = adj[u] & free
        while avail:
            b = avail & -avail
            r = max(r, 1 + best(free ^ b))
            avail ^= b
        return r

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result
