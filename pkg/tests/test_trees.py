import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from oracles import laplacian_det, weighted_tree_count
from pftrees.config import CapExceededError, DisconnectedGraphError
from pftrees.trees import (
    Multigraph,
    RootedPlaneTree,
    RootedTree,
    VertexOrder,
    acyclic_orientations_unique_source,
    all_multigraphs,
    all_orders,
    avo_count,
    complete_graph,
    enumerate_avo,
    enumerate_gamma,
    enumerate_labeled_trees,
    enumerate_rpt,
    gamma_to_rpt,
    inversions,
    is_gamma,
    is_rooted_plane_tree,
    kappa,
    labeled_to_plane_pair,
    order_inversions,
    plane_pair_to_labeled,
    rpt_to_gamma,
    spanning_trees,
)

SAMPLE_GRAPH = Multigraph(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)])


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def random_labeled_tree(n, rng):
    while True:
        parent = [rng.randrange(0, n + 1) for _ in range(n)]
        try:
            return RootedTree(parent)
        except ValueError:
            continue


# --- multigraphs -----------------------------------------------------------


def test_multigraph_basics():
    assert SAMPLE_GRAPH.num_edges == 11
    assert SAMPLE_GRAPH.degree(2) == 5 and SAMPLE_GRAPH.degree(0) == 5
    assert SAMPLE_GRAPH.weight(4, 0) == 3
    assert SAMPLE_GRAPH.degree_outside({2, 3}, 2) == 3
    assert SAMPLE_GRAPH.is_connected()
    assert Multigraph.from_json_obj(SAMPLE_GRAPH.to_json_obj()) == SAMPLE_GRAPH
    assert SAMPLE_GRAPH.to_json_obj()["edges"][0] == [0, 1, 2]


def test_multigraph_rejects_bad_input():
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 0, 1)])
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 3, 1)])
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 1, -1)])


def test_disconnected_detected():
    g = Multigraph(2, [(0, 1, 1)])
    assert not g.is_connected()
    with pytest.raises(DisconnectedGraphError):
        g.require_connected()


def test_all_multigraphs_counts():
    # connected labeled graphs on 3 vertices with weights in {0,1}: 4
    assert sum(1 for _ in all_multigraphs(2, 1)) == 4
    assert sum(1 for _ in all_multigraphs(2, 1, connected_only=False)) == 8


# --- rooted trees ----------------------------------------------------------


def test_rooted_tree_validation():
    RootedTree([2, 4, 4, 0])
    with pytest.raises(ValueError):
        RootedTree([2, 1])  # cycle 1-2
    with pytest.raises(ValueError):
        RootedTree([1])  # self loop
    with pytest.raises(ValueError):
        RootedTree([5, 0])


def test_tree_order_relation():
    t = RootedTree([2, 4, 4, 0])
    assert t.leq(4, 1) and t.leq(2, 1) and t.leq(1, 1)
    assert not t.leq(3, 1)
    assert t.children(4) == [2, 3]
    assert t.outdeg(0) == 1


def test_plane_tree_predicate():
    assert is_rooted_plane_tree([0, 1, 1])
    assert is_rooted_plane_tree([0, 1, 2, 2, 0, 5, 5, 7])
    assert not is_rooted_plane_tree([0, 0, 1])  # 3 under 1 after the root moved on to 2
    with pytest.raises(ValueError):
        RootedPlaneTree([0, 0, 1])


@pytest.mark.parametrize("n", range(1, 8))
def test_catalan_counts(n):
    assert len(enumerate_rpt(n)) == catalan(n)
    assert len(enumerate_gamma(n)) == catalan(n)


def test_rpt_matches_filtered_parent_arrays():
    for n in range(1, 6):
        brute = []
        for parent in itertools.product(range(n), repeat=n):
            if all(parent[v - 1] < v for v in range(1, n + 1)) and is_rooted_plane_tree(parent):
                brute.append(tuple(parent))
        assert sorted(brute) == [t.parent for t in enumerate_rpt(n)]


def test_gamma_definition():
    assert is_gamma((2, 0)) and is_gamma((1, 1))
    assert not is_gamma((0, 2)) and not is_gamma((1, 0))
    for n in range(1, 6):
        brute = [c for c in itertools.product(range(n + 1), repeat=n) if is_gamma(c)]
        assert brute == enumerate_gamma(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_gamma_bijection_roundtrip(n):
    for t in enumerate_rpt(n):
        assert gamma_to_rpt(rpt_to_gamma(t)) == t
    for c in enumerate_gamma(n):
        assert rpt_to_gamma(gamma_to_rpt(c)) == c


def test_labeled_tree_pair_known_value():
    labeled = RootedTree([4, 0, 4, 7, 2, 5, 0, 2])
    t, o = labeled_to_plane_pair(labeled)
    assert t.parent == (0, 1, 2, 2, 0, 5, 5, 7)
    assert o.sequence == (4, 5, 3, 2, 7, 8, 1, 6)
    assert o.is_admissible(t)
    assert plane_pair_to_labeled(t, o) == labeled
    assert rpt_to_gamma(t) == (2, 1, 2, 0, 0, 2, 0, 1)


def test_admissible_orders_small():
    t = RootedPlaneTree([0, 1, 1])
    assert [o.sequence for o in enumerate_avo(t)] == [(1, 3, 2), (3, 1, 2), (3, 2, 1)]
    assert avo_count(RootedPlaneTree([0, 0])) == 1
    assert avo_count(RootedPlaneTree([0, 1])) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_avo_matches_filter(n):
    for t in enumerate_rpt(n):
        brute = [o for o in all_orders(n) if o.is_admissible(t)]
        assert enumerate_avo(t) == brute
        assert avo_count(t) == len(brute)


@pytest.mark.parametrize("n", range(1, 7))
def test_pairs_count_cayley(n):
    assert sum(avo_count(t) for t in enumerate_rpt(n)) == (n + 1) ** (n - 1)
    assert len(enumerate_labeled_trees(n)) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_pair_bijection_exhaustive(n):
    images = set()
    for t in enumerate_rpt(n):
        for o in enumerate_avo(t):
            lab = plane_pair_to_labeled(t, o)
            assert labeled_to_plane_pair(lab) == (t, o)
            images.add(lab)
    assert images == set(enumerate_labeled_trees(n))


@given(st.integers(1, 9), st.integers(0, 10**6))
def test_pair_bijection_random(n, seed):
    lab = random_labeled_tree(n, random.Random(seed))
    t, o = labeled_to_plane_pair(lab)
    assert t.is_plane() and o.is_admissible(t)
    assert plane_pair_to_labeled(t, o) == lab


def test_pair_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        plane_pair_to_labeled(RootedPlaneTree([0, 1, 1]), VertexOrder((1, 2, 3)))


def test_caps():
    with pytest.raises(CapExceededError):
        enumerate_rpt(11)


# --- statistics -------------------------------------------------------------


def test_inversions_n2():
    counts = sorted(len(inversions(t)) for t in enumerate_labeled_trees(2))
    assert counts == [0, 0, 1]


def test_order_inversions_natural_equal_inversions():
    for t in enumerate_labeled_trees(4):
        swapped = {(j, i) for i, j in inversions(t)}
        assert order_inversions(t, VertexOrder.natural(4)) == swapped


def test_kappa_example():
    t = RootedTree([2, 4, 4, 0])
    assert kappa(SAMPLE_GRAPH, t, VertexOrder.natural(4)) == 2


def test_kappa_rejects_non_edges():
    with pytest.raises(ValueError):
        kappa(Multigraph(2, [(0, 1, 1), (1, 2, 1)]), RootedTree([0, 0]), VertexOrder.natural(2))


def test_kappa_is_weighted_order_inversion_sum():
    rng = random.Random(3)
    for _ in range(200):
        g = Multigraph(4, [(i, j, rng.randint(1, 3)) for i, j in itertools.combinations(range(5), 2)])
        t = random_labeled_tree(4, rng)
        o = VertexOrder(tuple(rng.sample(range(1, 5), 4)))
        expected = sum(g.weight(t.par(i), j) for i, j in order_inversions(t, o))
        assert kappa(g, t, o) == expected


# --- spanning trees and orientations ---------------------------------------


def test_spanning_trees_cayley():
    for n in range(1, 6):
        assert len(spanning_trees(complete_graph(n))) == (n + 1) ** (n - 1)


def test_spanning_trees_weighted_count_oracles():
    rng = random.Random(7)
    graphs = list(all_multigraphs(3, 2))
    for g in rng.sample(graphs, 60) + [SAMPLE_GRAPH]:
        total = sum(math.prod(g.weight(p, v) for p, v in t.edges()) for t in spanning_trees(g))
        assert total == laplacian_det(g) == weighted_tree_count(g)


def test_spanning_trees_are_trees_of_support():
    for t in spanning_trees(SAMPLE_GRAPH):
        assert all(SAMPLE_GRAPH.weight(p, v) > 0 for p, v in t.edges())
    assert len(set(spanning_trees(SAMPLE_GRAPH))) == len(spanning_trees(SAMPLE_GRAPH))


def test_orientations_unique_source():
    # K_n+1 simple: every acyclic orientation with 0 the unique source; n! of them
    for n in range(1, 5):
        assert len(acyclic_orientations_unique_source(complete_graph(n))) == math.factorial(n)
    for o in acyclic_orientations_unique_source(SAMPLE_GRAPH):
        assert o.is_acyclic(4)
        assert o.indegree[0] == 0 and all(d >= 1 for d in o.indegree[1:])


def test_vertex_order_validation():
    with pytest.raises(ValueError):
        VertexOrder((1, 1, 2))
    o = VertexOrder((3, 1, 2))
    assert o.precedes(3, 1) and o.rank(2) == 2 and o.descending() == (2, 1, 3)
    assert VertexOrder.from_json_obj(o.to_json_obj()) == o
