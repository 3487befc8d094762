"""Fixed-parameter solver for the savings decision.

Given (G, w) and a savings target k, the solver first computes a maximum
antimatching M of G. If M has at least k pairs, merging each pair into one
color class already saves one unit per pair (weights are at least 1), so the
answer is yes and a certificate coloring is emitted without touching sigma.
Otherwise the uncovered vertices K form a clique, each needing its own
color, and a dynamic program over the at most 2(k-1) covered vertices
assigns them either to the clique colors or to fresh ones. The table value
for the full covered set and all clique colors is exactly sigma(G, w).
"""

from __future__ import annotations

import time
from array import array
from dataclasses import dataclass

from .errors import PreconditionViolated
from .graph import Coloring, WeightedGraph, is_clique
from .matching import Antimatching, maximum_antimatching

_INF = float("inf")


@dataclass(frozen=True)
class DualInstance:
    """A weighted graph together with the savings parameter k >= 1."""

    graph: WeightedGraph
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise PreconditionViolated(f"k={self.k} must be >= 1")

    @property
    def threshold(self) -> int:
        return self.graph.weight_sum - self.k


@dataclass(frozen=True)
class SolveStats:
    antimatching_size: int | None
    clique_size: int | None
    n: int
    m: int
    runtime_ms: float


@dataclass(frozen=True)
class DualAnswer:
    verdict: bool
    sigma: int | None
    certificate: Coloring | None
    stats: SolveStats


@dataclass
class DPTable:
    """Filled table of the clique-color assignment program.

    ``ground`` lists the antimatching-covered vertices (bit j of a subset
    mask stands for ``ground[j]``); ``clique_order`` fixes the color order
    of the residual clique. ``final`` holds the last layer of values;
    ``parents[i][X]`` records the class content chosen at layer i (-1 for
    "color i unused on X", otherwise the chosen subset mask). ``layers``
    retains every value layer when requested, for diagnostics.
    """

    graph: WeightedGraph
    ground: tuple[int, ...]
    clique_order: tuple[int, ...]
    base: int
    final: list[int]
    parents: list[array]
    layers: list[list[int]] | None

    @property
    def sigma(self) -> int:
        return self.final[-1]


def shortcut_certificate(g: WeightedGraph, m: Antimatching, k: int) -> Coloring:
    """Coloring that merges every antimatching pair; weight <= weight_sum - k.

    Requires at least k pairs: each merged pair saves the lighter endpoint's
    weight, which is at least one.
    """
    if m.size < k:
        raise PreconditionViolated(f"antimatching size {m.size} < k={k}")
    classes = [tuple(sorted(p)) for p in m.pairs]
    classes.extend((v,) for v in m.residual_clique)
    return Coloring(tuple(classes))


def build_dp(
    g: WeightedGraph, m: Antimatching, *, keep_layers: bool = False
) -> DPTable:
    """Fill the assignment table; requires ``m`` to be a maximum antimatching.

    The uncovered vertices must induce a clique, which is checked. Work is
    O(3^t * |K|) for t covered vertices.
    """
    ground = tuple(sorted(m.vertices))
    clique = m.residual_clique
    if not is_clique(g, clique):
        raise PreconditionViolated(
            "uncovered vertices do not induce a clique; antimatching not maximum"
        )
    w = g.weights
    t = len(ground)
    size = 1 << t
    full = size - 1

    # ground-local conflict masks, stability and class-weight tables
    pos = {v: j for j, v in enumerate(ground)}
    conflict = [0] * t
    for j, v in enumerate(ground):
        a = g.adjacency[v]
        for u, i in pos.items():
            if a >> u & 1:
                conflict[j] |= 1 << i
    stab = bytearray(size)
    stab[0] = 1
    maxw = [0] * size
    for x in range(1, size):
        low = x & -x
        j = low.bit_length() - 1
        rest = x ^ low
        stab[x] = stab[rest] and not (conflict[j] & rest)
        maxw[x] = max(maxw[rest], w[ground[j]])

    base = sum(w[v] for v in clique)

    # layer 0: only fresh colors may touch the covered vertices
    prev = [0] * size
    prev[0] = base
    p0 = array("l", [0]) * size
    for x in range(1, size):
        low = x & -x
        rest = x ^ low
        best = _INF
        best_s = 0
        s = rest
        while True:
            sub = s | low
            if stab[sub]:
                c = prev[x ^ sub] + maxw[sub]
                if c < best:
                    best = c
                    best_s = sub
            if not s:
                break
            s = (s - 1) & rest
        prev[x] = best
        p0[x] = best_s

    parents = [p0]
    layers = [list(prev)] if keep_layers else None

    nonadj_ground = []
    for v in clique:
        mask = 0
        a = g.adjacency[v]
        for u, i in pos.items():
            if not a >> u & 1:
                mask |= 1 << i
        nonadj_ground.append(mask)

    for i, v in enumerate(clique):
        allowed = nonadj_ground[i]
        wv = w[v]
        cur = prev[:]  # skip branch: color of v stays a singleton
        pi = array("l", [-1]) * size
        if allowed:
            for x in range(1, size):
                rest = x & allowed
                if not rest:
                    continue
                best = prev[x]
                best_s = -1
                s = rest
                while s:
                    if stab[s]:
                        mw = maxw[s]
                        c = prev[x ^ s] + (mw - wv if mw > wv else 0)
                        if c < best:
                            best = c
                            best_s = s
                    s = (s - 1) & rest
                if best_s >= 0:
                    cur[x] = best
                    pi[x] = best_s
        parents.append(pi)
        if keep_layers:
            layers.append(list(cur))
        prev = cur

    return DPTable(g, ground, clique, base, prev, parents, layers)


def extract_certificate(t: DPTable) -> Coloring:
    """Walk the parent pointers into an optimal proper coloring."""
    ground = t.ground
    x = (1 << len(ground)) - 1
    classes: list[tuple[int, ...]] = []
    for i in range(len(t.clique_order), 0, -1):
        v = t.clique_order[i - 1]
        s = t.parents[i][x]
        if s < 0:
            classes.append((v,))
        else:
            members = [ground[j] for j in range(len(ground)) if s >> j & 1]
            classes.append(tuple(sorted(members + [v])))
            x ^= s
    classes.reverse()
    while x:
        s = t.parents[0][x]
        classes.append(tuple(ground[j] for j in range(len(ground)) if s >> j & 1))
        x ^= s
    return Coloring(tuple(classes))


def solve_dual(inst: DualInstance) -> DualAnswer:
    """Decide whether sigma(G, w) <= weight_sum - k, with certificate.

    Branches:
      * empty graph: sigma = 0, answer no (k >= 1);
      * k >= weight_sum: answer no without further work (sigma >= 1), sigma
        left unknown;
      * maximum antimatching of size >= k: answer yes via the pair-merging
        certificate, sigma left unknown;
      * otherwise the table computes sigma exactly and the verdict follows.
    """
    g = inst.graph
    k = inst.k
    start = time.perf_counter()

    def stats(am_size: int | None, clique_size: int | None) -> SolveStats:
        ms = (time.perf_counter() - start) * 1000.0
        return SolveStats(am_size, clique_size, g.n, g.m, ms)

    if g.n == 0:
        return DualAnswer(False, 0, Coloring(()), stats(0, 0))
    if k >= g.weight_sum:
        return DualAnswer(False, None, None, stats(None, None))

    am = maximum_antimatching(g)
    clique_size = g.n - 2 * am.size
    if am.size >= k:
        cert = shortcut_certificate(g, am, k)
        return DualAnswer(True, None, cert, stats(am.size, clique_size))

    table = build_dp(g, am)
    sigma = table.sigma
    cert = extract_certificate(table)
    verdict = sigma <= inst.threshold
    return DualAnswer(verdict, sigma, cert, stats(am.size, clique_size))
