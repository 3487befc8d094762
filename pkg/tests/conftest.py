"""Shared helpers: small named graphs and independent brute-force oracles.

The oracles here enumerate colorings or matchings directly and never touch
the package's dynamic programs, so they can vouch for them.
"""

from __future__ import annotations

import itertools
import random

from dwcolor import WeightedGraph, build_graph


def path_graph(n: int, weights=None) -> WeightedGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], weights or [1] * n)


def cycle_graph(n: int, weights=None) -> WeightedGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], weights or [1] * n)


def complete_graph(n: int, weights=None) -> WeightedGraph:
    edges = list(itertools.combinations(range(n), 2))
    return build_graph(n, edges, weights or [1] * n)


def star_graph(leaves: int) -> WeightedGraph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], [1] * (leaves + 1))


def petersen_graph() -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes, [1] * 10)


def all_labeled_graphs(n: int, weights=None):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bm in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bm >> i & 1]
        yield build_graph(n, edges, weights or [1] * n)


def random_graph(rng: random.Random, n: int, p: float, wmax: int = 4) -> WeightedGraph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges, [rng.randint(1, wmax) for _ in range(n)])


def _partitions(items: list[int]):
    """All set partitions, by placing each item into an existing or new block."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]
        yield [[first]] + part


def sigma_partition_bruteforce(g: WeightedGraph, r: int | None = None):
    """Minimum coloring weight by enumerating all set partitions (n <= ~9).

    With ``r`` given, only partitions into at most r blocks count; returns
    None when no proper one exists.
    """
    best = None
    for part in _partitions(list(range(g.n))):
        if r is not None and len(part) > r:
            continue
        ok = True
        for block in part:
            for u, v in itertools.combinations(block, 2):
                if g.has_edge(u, v):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        weight = sum(max(g.weights[v] for v in block) for block in part)
        if best is None or weight < best:
            best = weight
    if g.n == 0:
        return 0
    return best


def chromatic_number_bruteforce(g: WeightedGraph) -> int:
    """Smallest r admitting a proper r-coloring, by backtracking."""
    if g.n == 0:
        return 0

    def colorable(r: int) -> bool:
        color = [-1] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            used = {color[u] for u in g.neighbors(v) if color[u] >= 0}
            for c in range(min(r, v + 1)):
                if c not in used:
                    color[v] = c
                    if place(v + 1):
                        return True
                    color[v] = -1
            return False

        return place(0)

    r = 1
    while not colorable(r):
        r += 1
    return r


def all_antimatchings_bruteforce(g: WeightedGraph) -> int:
    """Largest number of vertex-disjoint non-edges, by direct recursion."""
    non_edges = [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.has_edge(u, v)
    ]

    def grow(idx: int, used: set[int]) -> int:
        best = 0
        for i in range(idx, len(non_edges)):
            u, v = non_edges[i]
            if u not in used and v not in used:
                best = max(best, 1 + grow(i + 1, used | {u, v}))
        return best

    return grow(0, set())
