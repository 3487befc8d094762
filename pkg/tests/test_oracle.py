import random

import pytest

from dwcolor import (
    InstanceTooLarge,
    build_graph,
    decide_dual_oracle,
    induced_subgraph,
    sigma_exact,
    sigma_exact_bounded,
)
from conftest import (
    chromatic_number_bruteforce,
    path_graph,
    random_graph,
    sigma_partition_bruteforce,
)


def test_examples():
    k2 = build_graph(2, [(0, 1)], [3, 5])
    assert sigma_exact(k2) == 8
    assert sigma_exact(build_graph(2, [], [3, 5])) == 5
    p3 = path_graph(3, [1, 2, 1])
    assert sigma_partition_bruteforce(p3) == 3
    assert sigma_exact(p3) == 3


def test_bounded():
    k2 = build_graph(2, [(0, 1)], [3, 5])
    assert sigma_exact_bounded(k2, 1) is None
    assert sigma_exact_bounded(k2, 2) == 8
    p3 = path_graph(3, [1, 2, 1])
    assert sigma_partition_bruteforce(p3, r=2) == 3
    assert sigma_exact_bounded(p3, 2) == 3
    assert sigma_exact_bounded(p3, 1) is None


def test_empty_graph():
    g = build_graph(0, [], [])
    assert sigma_exact(g) == 0
    assert sigma_exact_bounded(g, 1) == 0


def test_cap():
    g = build_graph(5, [], [1] * 5)
    with pytest.raises(InstanceTooLarge):
        sigma_exact(g, cap=4)
    with pytest.raises(InstanceTooLarge):
        sigma_exact_bounded(g, 2, cap=4)


def test_against_partition_bruteforce():
    rng = random.Random(41)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        want = sigma_partition_bruteforce(g)
        assert sigma_exact(g) == want
        r = rng.randint(1, g.n)
        assert sigma_exact_bounded(g, r) == sigma_partition_bruteforce(g, r=r)


def test_min_over_r_equals_sigma():
    rng = random.Random(43)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        values = [sigma_exact_bounded(g, r) for r in range(1, g.n + 1)]
        finite = [v for v in values if v is not None]
        assert min(finite) == sigma_exact(g)
        # more classes never hurt
        assert values[-1] == sigma_exact(g)


def test_monotone_under_vertex_deletion():
    rng = random.Random(47)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        s = sigma_exact(g)
        v = rng.randrange(g.n)
        sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        assert sigma_exact(sub) <= s


def test_unit_weights_give_chromatic_number():
    rng = random.Random(53)
    for _ in range(40):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.random(), wmax=1)
        assert sigma_exact(g) == chromatic_number_bruteforce(g)


def test_decide_examples():
    assert not decide_dual_oracle(build_graph(2, [(0, 1)], [3, 5]), 1)
    assert decide_dual_oracle(build_graph(2, [], [4, 4]), 4)
    assert decide_dual_oracle(path_graph(3, [1, 2, 1]), 1)


def test_matching_bruteforce_cap():
    g = build_graph(13, [], [1] * 13)
    from dwcolor import maximum_matching_bruteforce

    with pytest.raises(InstanceTooLarge):
        maximum_matching_bruteforce(g)
