import random

import pytest

from dwcolor import (
    ArityMismatch,
    Coloring,
    DuplicateEdge,
    InvalidColoring,
    InvalidVertex,
    InvalidWeight,
    MalformedEdge,
    are_true_twins,
    are_twins,
    build_graph,
    coloring_weight,
    complement,
    induced_subgraph,
    is_clique,
    is_proper,
    is_stable,
    is_universal,
    singleton_coloring,
)
from conftest import complete_graph, path_graph, random_graph, star_graph


def test_single_vertex():
    g = build_graph(1, [], [5])
    assert g.n == 1 and g.m == 0 and g.weight_sum == 5


def test_path_construction():
    g = build_graph(3, [(0, 1), (1, 2)], [1, 2, 1])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert g.degree(1) == 2


def test_build_errors():
    with pytest.raises(InvalidWeight):
        build_graph(2, [(0, 1)], [3, 0])
    with pytest.raises(InvalidWeight):
        build_graph(1, [], [1.5])
    with pytest.raises(InvalidWeight):
        build_graph(1, [], [True])
    with pytest.raises(MalformedEdge):
        build_graph(2, [(0, 0)], [1, 1])
    with pytest.raises(MalformedEdge):
        build_graph(2, [(0, 2)], [1, 1])
    with pytest.raises(DuplicateEdge):
        build_graph(2, [(0, 1), (1, 0)], [1, 1])
    with pytest.raises(ArityMismatch):
        build_graph(3, [], [1, 1])


def test_complement_small():
    assert complement(complete_graph(3)).m == 0
    assert complement(build_graph(2, [], [1, 1])).edges() == [(0, 1)]


def test_complement_involution_preserves_weights():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert complement(complement(g)) == g


def test_predicates():
    p3 = path_graph(3)
    assert is_stable(p3, {0, 2})
    assert not is_stable(p3, {0, 1})
    assert is_clique(p3, {0, 1})
    assert not is_clique(p3, {0, 2})
    assert is_clique(p3, {1})
    assert is_stable(p3, [])
    star = star_graph(3)
    assert is_universal(star, 0)
    assert not is_universal(star, 1)
    assert are_twins(star, 1, 2)
    assert not are_twins(star, 0, 1)
    with pytest.raises(InvalidVertex):
        is_universal(star, 5)
    with pytest.raises(InvalidVertex):
        is_stable(star, {9})


def test_twins_vs_true_twins():
    # adjacent clique vertices share all other neighbors: true twins, not twins
    g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)], [1] * 4)
    assert are_true_twins(g, 0, 1)
    assert not are_twins(g, 0, 1)
    # the two leaves of a star: twins and (being non-adjacent) not true twins
    star = star_graph(3)
    assert are_twins(star, 1, 2)
    assert not are_true_twins(star, 1, 2)


def test_coloring_weight_and_proper():
    g = path_graph(3, [1, 2, 1])
    c = Coloring(((0, 2), (1,)))
    assert is_proper(g, c)
    assert coloring_weight(g, c) == 3
    assert coloring_weight(g, singleton_coloring(g)) == g.weight_sum
    g2 = build_graph(3, [(0, 2)], [1, 2, 1])
    assert not is_proper(g2, c)


def test_invalid_colorings():
    g = path_graph(3)
    with pytest.raises(InvalidColoring):
        coloring_weight(g, Coloring(((0,), (1,))))
    with pytest.raises(InvalidColoring):
        coloring_weight(g, Coloring(((0, 1), (1, 2))))
    with pytest.raises(InvalidColoring):
        is_proper(g, Coloring(((0, 1, 2), ())))


def test_proper_coloring_never_beats_singletons():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        # greedy proper coloring
        classes: list[list[int]] = []
        for v in range(g.n):
            for cls in classes:
                if all(not g.has_edge(v, u) for u in cls):
                    cls.append(v)
                    break
            else:
                classes.append([v])
        c = Coloring(tuple(tuple(cls) for cls in classes))
        assert is_proper(g, c)
        assert coloring_weight(g, c) <= g.weight_sum


def test_induced_subgraph():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)], [4, 3, 2, 1])
    sub, old = induced_subgraph(g, [1, 3])
    assert old == (1, 3)
    assert sub.n == 2 and sub.m == 0
    assert sub.weights == (3, 1)
    sub2, old2 = induced_subgraph(g, [2, 1])
    assert old2 == (1, 2) and sub2.edges() == [(0, 1)]
