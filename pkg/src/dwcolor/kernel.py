"""Reduction rules with certified size bounds.

Two rules shrink an instance without changing the answer:

* delete any universal vertex (it is a singleton class in every coloring,
  so it contributes its own weight on both sides of the comparison);
* group the residual-clique vertices by their neighborhood among the
  antimatching-covered vertices, and inside each group keep only the
  |M| heaviest members (a swap argument shows the rest can always be
  recolored as singletons).

Interleaved with the antimatching shortcut, exhaustive application leaves
at most (2^(k-1)+1)(k-1) vertices: the covered set has at most 2(k-1)
vertices, singleton "blind" groups number at most the non-edges they blind,
and the remaining groups realize distinct proper neighborhoods in a set of
at most k-1 designated endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClaimViolation, NonMaximalAntimatchingWitness, PreconditionViolated
from .fpt import DualInstance
from .graph import WeightedGraph, build_graph, induced_subgraph, is_universal
from .matching import Antimatching, maximum_antimatching

RULE_UNIVERSAL = "delete_universal"
RULE_TRUNCATE = "truncate_class"


def kernel_size_limit(k: int) -> int:
    """Vertex bound guaranteed for reduced instances with parameter k >= 2."""
    return (2 ** (k - 1) + 1) * (k - 1)


@dataclass(frozen=True)
class NeighborhoodClass:
    """Residual-clique vertices sharing one neighborhood among covered vertices."""

    vertices: tuple[int, ...]
    signature: frozenset[int]
    special: bool


@dataclass(frozen=True)
class ClassPartition:
    """Residual clique split into neighborhood classes, with non-edge tags.

    ``missing[i]`` is the endpoint of pair ``pairs[i]`` that some class fails
    to see (None when every class sees both endpoints); it is only set for
    normal pairs. ``k_s + k_n`` equals the number of pairs.
    """

    clique: tuple[int, ...]
    classes: tuple[NeighborhoodClass, ...]
    pairs: tuple[tuple[int, int], ...]
    special_pair: tuple[bool, ...]
    missing: tuple[int | None, ...]
    k_s: int
    k_n: int


@dataclass(frozen=True)
class RuleApplication:
    rule: str
    deleted: tuple[int, ...]  # original vertex ids


@dataclass(frozen=True)
class KernelTrace:
    """Reduced instance plus the log needed to reproduce it.

    ``vertex_map[new_id] = original_id``; it is None when the reduction
    resolved the instance outright and ``reduced`` is one of the canonical
    instances (``verdict_shortcut`` then carries the answer).
    """

    reduced: DualInstance
    log: tuple[RuleApplication, ...]
    vertex_map: tuple[int, ...] | None
    verdict_shortcut: bool | None


def canonical_yes_instance(k: int) -> DualInstance:
    """Two non-adjacent vertices of weight k: merging them saves exactly k."""
    return DualInstance(build_graph(2, [], [k, k]), k)


def canonical_no_instance(k: int) -> DualInstance:
    """A single vertex of weight 1: nothing can be saved."""
    return DualInstance(build_graph(1, [], [1]), k)


def remove_universal_vertices(
    inst: DualInstance,
) -> tuple[DualInstance, tuple[int, ...]]:
    """Delete universal vertices until none remains; k is unchanged."""
    g, deleted = _remove_universal(inst.graph)
    return DualInstance(g, inst.k), deleted


def _remove_universal(g: WeightedGraph) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Worker returning the reduced graph and deleted ids (original labels)."""
    ids = tuple(range(g.n))
    deleted: list[int] = []
    while True:
        for v in range(g.n):
            if is_universal(g, v):
                deleted.append(ids[v])
                keep = [u for u in range(g.n) if u != v]
                g, kept = induced_subgraph(g, keep)
                ids = tuple(ids[u] for u in kept)
                break
        else:
            return g, tuple(deleted)


def compute_classes(
    g: WeightedGraph, m: Antimatching, *, validate: bool = True
) -> ClassPartition:
    """Partition the residual clique by neighborhood among covered vertices.

    With ``validate`` (the default), structural consequences of maximality
    are checked: a class of two or more vertices seeing neither endpoint of
    a pair, or two classes each missing opposite endpoints of one pair, both
    witness a larger antimatching and raise
    :class:`NonMaximalAntimatchingWitness`.
    """
    covered = m.covered_mask
    clique = m.residual_clique

    groups: dict[int, list[int]] = {}
    for v in clique:
        groups.setdefault(g.adjacency[v] & covered, []).append(v)
    ordered = sorted(groups.items(), key=lambda kv: kv[1][0])

    pairs = tuple(tuple(sorted(p)) for p in m.pairs)
    special_pair = []
    missing: list[int | None] = []
    class_special = [False] * len(ordered)

    for x, y in pairs:
        bx, by = 1 << x, 1 << y
        miss_x = [i for i, (sig, _) in enumerate(ordered) if not sig & bx]
        miss_y = [i for i, (sig, _) in enumerate(ordered) if not sig & by]
        blind = set(miss_x) & set(miss_y)
        if blind:
            if validate:
                for i in blind:
                    if len(ordered[i][1]) >= 2:
                        raise NonMaximalAntimatchingWitness(
                            f"class {ordered[i][1]} sees neither endpoint of ({x},{y})"
                        )
                if len(set(miss_x) | set(miss_y)) > len(blind) or len(blind) > 1:
                    raise NonMaximalAntimatchingWitness(
                        f"conflicting blind spots on pair ({x},{y})"
                    )
            for i in blind:
                class_special[i] = True
            special_pair.append(True)
            missing.append(None)
        else:
            if validate and miss_x and miss_y:
                raise NonMaximalAntimatchingWitness(
                    f"classes miss opposite endpoints of ({x},{y})"
                )
            special_pair.append(False)
            if miss_x:
                missing.append(x)
            elif miss_y:
                missing.append(y)
            else:
                missing.append(None)

    classes = tuple(
        NeighborhoodClass(
            vertices=tuple(vs),
            signature=frozenset(u for u in range(g.n) if sig >> u & 1),
            special=class_special[i],
        )
        for i, (sig, vs) in enumerate(ordered)
    )
    k_s = sum(special_pair)
    return ClassPartition(
        clique=clique,
        classes=classes,
        pairs=pairs,
        special_pair=tuple(special_pair),
        missing=tuple(missing),
        k_s=k_s,
        k_n=len(pairs) - k_s,
    )


def truncate_classes(
    g: WeightedGraph, m: Antimatching, part: ClassPartition
) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Keep only the |M| heaviest vertices of each oversized class.

    Ties break toward lower vertex ids. Requires at least one pair, which
    exhaustive universal-vertex deletion guarantees on non-empty graphs.
    """
    if m.size < 1:
        raise PreconditionViolated("truncation needs a non-empty antimatching")
    doomed: list[int] = []
    for cls in part.classes:
        if len(cls.vertices) > m.size:
            ranked = sorted(cls.vertices, key=lambda v: (-g.weights[v], v))
            doomed.extend(sorted(ranked[m.size :]))
    if not doomed:
        return g, ()
    keep = [v for v in range(g.n) if v not in set(doomed)]
    reduced, _ = induced_subgraph(g, keep)
    return reduced, tuple(doomed)


def kernelize(inst: DualInstance) -> KernelTrace:
    """Apply both rules to a fixpoint, resolving trivial outcomes inline.

    Loop: exhaust universal-vertex deletion; recompute a maximum
    antimatching; with >= k pairs emit the canonical yes-instance, on an
    empty graph the canonical no-instance; otherwise truncate oversized
    classes and repeat until nothing changes.
    """
    k = inst.k
    g = inst.graph
    ids = tuple(range(g.n))
    log: list[RuleApplication] = []

    while True:
        g2, deleted = _remove_universal(g)
        if deleted:
            gone = set(deleted)
            log.append(RuleApplication(RULE_UNIVERSAL, tuple(ids[v] for v in deleted)))
            ids = tuple(ids[i] for i in range(g.n) if i not in gone)
            g = g2

        am = maximum_antimatching(g)
        if am.size >= k:
            return KernelTrace(canonical_yes_instance(k), tuple(log), None, True)
        if g.n == 0:
            return KernelTrace(canonical_no_instance(k), tuple(log), None, False)

        part = compute_classes(g, am)
        g2, doomed = truncate_classes(g, am, part)
        if not doomed:
            return KernelTrace(DualInstance(g, k), tuple(log), ids, None)
        log.append(RuleApplication(RULE_TRUNCATE, tuple(ids[v] for v in doomed)))
        kept = [i for i in range(g.n) if i not in set(doomed)]
        ids = tuple(ids[i] for i in kept)
        g = g2


def replay_log(g: WeightedGraph, log: tuple[RuleApplication, ...]) -> WeightedGraph:
    """Apply the logged deletions to the original graph."""
    gone = {v for app in log for v in app.deleted}
    reduced, _ = induced_subgraph(g, [v for v in range(g.n) if v not in gone])
    return reduced


@dataclass(frozen=True)
class ClaimReport:
    """Counts backing the audited structure of a reduced instance."""

    antimatching_size: int
    class_count: int
    special_class_count: int
    normal_class_count: int
    special_pairs: int
    normal_pairs: int
    largest_class: int


def audit_claims(
    g: WeightedGraph, m: Antimatching, part: ClassPartition
) -> ClaimReport:
    """Re-derive and assert the class-structure facts used by the size bound.

    Checks, raising :class:`ClaimViolation` with the failed check's name:

    * ``blind_class``: a class with >= 2 vertices sees at least one endpoint
      of every pair;
    * ``crossed_missing``: no two classes miss opposite endpoints of a pair;
    * ``special_count``: blind singleton classes number at most the pairs
      that blind them;
    * ``normal_count``: remaining classes number at most 2^(normal pairs)-1.

    The count bounds presuppose a graph with no universal vertex and a
    maximum antimatching, as produced by :func:`kernelize`.
    """
    sigs = {frozenset(c.signature) for c in part.classes}
    if len(sigs) != len(part.classes):
        raise ClaimViolation("class_partition", "duplicate neighborhood signature")

    special_classes = 0
    for cls in part.classes:
        blind_pairs = [
            (x, y)
            for x, y in part.pairs
            if x not in cls.signature and y not in cls.signature
        ]
        if blind_pairs:
            special_classes += 1
            if len(cls.vertices) >= 2:
                raise ClaimViolation(
                    "blind_class",
                    f"class {cls.vertices} of size >= 2 sees neither endpoint "
                    f"of {blind_pairs[0]}",
                )
        if bool(blind_pairs) != cls.special:
            raise ClaimViolation("class_partition", "special tag inconsistent")

    for x, y in part.pairs:
        missers_x = [c for c in part.classes if x not in c.signature]
        missers_y = [c for c in part.classes if y not in c.signature]
        for cx in missers_x:
            for cy in missers_y:
                if cx is not cy:
                    raise ClaimViolation(
                        "crossed_missing",
                        f"classes {cx.vertices} and {cy.vertices} miss opposite "
                        f"endpoints of ({x},{y})",
                    )

    normal_classes = len(part.classes) - special_classes
    if special_classes > part.k_s:
        raise ClaimViolation(
            "special_count", f"{special_classes} special classes > {part.k_s} pairs"
        )
    if normal_classes > 2**part.k_n - 1:
        raise ClaimViolation(
            "normal_count",
            f"{normal_classes} normal classes > 2^{part.k_n}-1",
        )

    return ClaimReport(
        antimatching_size=m.size,
        class_count=len(part.classes),
        special_class_count=special_classes,
        normal_class_count=normal_classes,
        special_pairs=part.k_s,
        normal_pairs=part.k_n,
        largest_class=max((len(c.vertices) for c in part.classes), default=0),
    )
