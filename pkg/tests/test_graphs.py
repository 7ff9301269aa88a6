"""Graph primitives against dense eigensolver and exhaustive-cut oracles."""

import itertools
import math
import random

import numpy as np
import pytest

from qsurgery.errors import CapacityError, ParameterError
from qsurgery.graphs import (
    MultiGraph,
    bfs_forest,
    cheeger_bruteforce,
    lambda2,
    relative_cheeger_bruteforce,
    tree_path,
)


def random_connected_graph(rng, n, extra_edges):
    g = MultiGraph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)])
    for _ in range(extra_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            g.add_edge(u, v)
    return g


def cheeger_oracle(g):
    """Plain-python subset minimization, independent of the vectorized path."""
    n = g.num_vertices
    best = math.inf
    for r in range(1, n):
        for subset in itertools.combinations(range(n), r):
            inside = set(subset)
            boundary = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
            best = min(best, boundary / min(r, n - r))
    return best


def test_lambda2_single_edge():
    g = MultiGraph.from_edges(2, [(0, 1)])
    assert lambda2(g) == pytest.approx(2.0, abs=1e-9)


def test_lambda2_disconnected_is_zero():
    g = MultiGraph(4)
    assert lambda2(g) == pytest.approx(0.0, abs=1e-9)


def test_lambda2_complete_graph_matches_eig_oracle():
    g = MultiGraph.from_edges(4, itertools.combinations(range(4), 2))
    expected = np.sort(np.linalg.eigvalsh(g.laplacian()))[1]
    assert lambda2(g) == pytest.approx(4.0, abs=1e-9)
    assert lambda2(g) == pytest.approx(expected, abs=1e-9)


def test_lambda2_counts_parallel_edges():
    single = MultiGraph.from_edges(2, [(0, 1)])
    double = MultiGraph.from_edges(2, [(0, 1), (0, 1)])
    assert lambda2(double) == pytest.approx(2 * lambda2(single), abs=1e-9)


def test_lambda2_too_small_graph():
    with pytest.raises(ParameterError):
        lambda2(MultiGraph(1))


def test_lambda2_monotone_under_insertions():
    rng = random.Random(21)
    for _ in range(10):
        n = rng.randrange(4, 9)
        g = MultiGraph(n)
        prev = 0.0
        for _ in range(12):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            g.add_edge(u, v)
            cur = lambda2(g)
            assert cur >= prev - 1e-9
            prev = cur


def test_cheeger_cycle_c4():
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert cheeger_bruteforce(g) == pytest.approx(1.0)


def test_cheeger_complete_k4():
    g = MultiGraph.from_edges(4, itertools.combinations(range(4), 2))
    assert cheeger_bruteforce(g) == pytest.approx(2.0)


def test_cheeger_single_edge():
    g = MultiGraph.from_edges(2, [(0, 1)])
    assert cheeger_bruteforce(g) == pytest.approx(1.0)


def test_cheeger_matches_python_oracle():
    rng = random.Random(5)
    for _ in range(12):
        n = rng.randrange(3, 8)
        g = random_connected_graph(rng, n, rng.randrange(0, 5))
        assert cheeger_bruteforce(g) == pytest.approx(cheeger_oracle(g))


def test_cheeger_capacity_error():
    with pytest.raises(CapacityError):
        cheeger_bruteforce(MultiGraph(25))


def test_cheeger_inequality_on_random_graphs():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randrange(3, 13)
        g = random_connected_graph(rng, n, rng.randrange(0, 2 * n))
        assert lambda2(g) / 2 <= cheeger_bruteforce(g) + 1e-9


def test_relative_cheeger_reduces_to_cheeger():
    rng = random.Random(17)
    for _ in range(8):
        n = rng.randrange(3, 8)
        g = random_connected_graph(rng, n, rng.randrange(0, 4))
        full = relative_cheeger_bruteforce(g, range(n), n)
        assert full == pytest.approx(cheeger_bruteforce(g))


def test_relative_cheeger_single_port_skips_degenerate_cuts():
    # With one port, every cut has min(t, |U&P|, |P\U|) <= 0, so no subset
    # constrains the constant and the result is +inf.
    g = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    assert relative_cheeger_bruteforce(g, [0], 1) == math.inf


def test_relative_cheeger_oracle_small():
    # Path 0-1-2-3 with ports {0, 3}: only cuts separating the ports count.
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    got = relative_cheeger_bruteforce(g, [0, 3], 2)
    # Exhaustive check: min over subsets with both sides holding a port.
    best = math.inf
    for r in range(1, 4):
        for subset in itertools.combinations(range(4), r):
            inside = set(subset)
            denom = min(2, len(inside & {0, 3}), len({0, 3} - inside))
            if denom <= 0:
                continue
            boundary = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
            best = min(best, boundary / denom)
    assert got == pytest.approx(best)


def test_bfs_forest_path_graph():
    g = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    f = bfs_forest(g)
    assert f.tree_edges == {0, 1, 2}
    assert f.depth[3] == 3
    assert tree_path(f, 0, 3) == [0, 1, 2]


def test_bfs_forest_star_depth_on_k4():
    g = MultiGraph.from_edges(4, itertools.combinations(range(4), 2))
    f = bfs_forest(g)
    assert max(f.depth) == 1


def test_bfs_forest_two_components():
    g = MultiGraph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    f = bfs_forest(g)
    assert f.num_components() == 2
    assert f.comp[0] != f.comp[2]
    assert tree_path(f, 0, 4) is None


def test_tree_path_trivial_and_adjacent():
    g = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    f = bfs_forest(g)
    assert tree_path(f, 1, 1) == []
    assert tree_path(f, 0, 1) == [0]


def test_tree_path_length_bounded_by_twice_eccentricity():
    rng = random.Random(31)
    for _ in range(10):
        n = rng.randrange(4, 10)
        g = random_connected_graph(rng, n, rng.randrange(0, 6))
        f = bfs_forest(g)
        ecc = max(f.depth)
        for u in range(n):
            for v in range(n):
                path = tree_path(f, u, v)
                assert path is not None
                assert len(path) <= 2 * ecc


def test_circuit_rank_formula():
    rng = random.Random(41)
    for _ in range(10):
        n = rng.randrange(3, 9)
        g = random_connected_graph(rng, n, rng.randrange(0, 8))
        f = bfs_forest(g)
        fundamental = g.num_edges - len(f.tree_edges)
        assert fundamental == g.num_edges - g.num_vertices + g.num_components()


def test_self_loop_rejected():
    g = MultiGraph(3)
    with pytest.raises(ParameterError):
        g.add_edge(1, 1)


def test_degree_sum_is_twice_edges():
    rng = random.Random(8)
    g = random_connected_graph(rng, 7, 5)
    assert sum(g.degrees()) == 2 * g.num_edges
