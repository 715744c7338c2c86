import itertools
import math
import random
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from oracles import three_var_composition_side, three_var_tree_side
from pftrees.burning import build_gx
from pftrees.config import DisconnectedGraphError
from pftrees.core import QPoly, q_number
from pftrees.enumerators import (
    corollary_count,
    descent_class_size,
    exceptional_count_check,
    exceptional_vector,
    inversion_enum_labeled_trees,
    minus_one_prediction,
    multinomial,
    partitions_inside,
    pitman_stanley_count,
    rsum_enum_graphical_brute,
    rsum_enum_increasing,
    rsum_enum_kungyan,
    rsum_enum_main,
    rsum_enum_tree_side,
    rsum_enum_vector_brute,
    specialization_report,
)
from pftrees.parking import enumerate_vector_pf
from pftrees.trees import Multigraph, VertexOrder, all_multigraphs, all_orders, complete_graph

GOLDEN = Path(__file__).parent / "golden"
SAMPLE_GRAPH = Multigraph(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (2, 4, 1), (3, 4, 1), (0, 4, 3)])
TWO_PLUS_Q = QPoly.from_coefficients([2, 1])


def test_small_values():
    assert rsum_enum_vector_brute((1, 1)) == TWO_PLUS_Q
    assert rsum_enum_vector_brute((0, 1)) == 0
    assert rsum_enum_graphical_brute(complete_graph(2)) == TWO_PLUS_Q
    assert inversion_enum_labeled_trees(1) == 1
    assert inversion_enum_labeled_trees(2) == TWO_PLUS_Q
    for o in all_orders(2):
        assert rsum_enum_tree_side(complete_graph(2), o) == TWO_PLUS_Q


def test_golden_131():
    golden = QPoly.from_json((GOLDEN / "rsum_x131.json").read_text())
    x = (1, 3, 1)
    assert rsum_enum_vector_brute(x) == golden
    assert rsum_enum_main(x) == golden
    assert rsum_enum_kungyan(x) == golden


def test_gx_enumerator_differs_from_x_enumerator():
    # PF(G_x) and PF(x) are different sets; only the tree-side bijection links them
    x = (1, 3, 1)
    assert rsum_enum_graphical_brute(build_gx(x)) != rsum_enum_vector_brute(x)


def test_single_edge():
    for w in range(1, 5):
        g = Multigraph(1, [(0, 1, w)])
        assert rsum_enum_tree_side(g, VertexOrder.natural(1)) == q_number(w)
        assert rsum_enum_graphical_brute(g) == q_number(w)


def test_sample_graph_enumerators():
    brute = rsum_enum_graphical_brute(SAMPLE_GRAPH)
    assert brute.coefficient(4) >= 1
    assert brute.eval(1) == 116
    for o in all_orders(4):
        assert rsum_enum_tree_side(SAMPLE_GRAPH, o) == brute


def test_disconnected_raises():
    g = Multigraph(2, [(0, 1, 1)])
    with pytest.raises(DisconnectedGraphError):
        rsum_enum_graphical_brute(g)
    with pytest.raises(DisconnectedGraphError):
        rsum_enum_tree_side(g, VertexOrder.natural(2))


def test_two_variable_formulas():
    for x1, x2 in itertools.product(range(5), repeat=2):
        a, b = q_number(x1), q_number(x2)
        ky = QPoly.monomial(x2) * a * a + 2 * a * b
        main = a * a + (1 + QPoly.monomial(x1)) * a * b
        assert rsum_enum_kungyan((x1, x2)) == ky
        assert rsum_enum_main((x1, x2)) == main
        assert rsum_enum_vector_brute((x1, x2)) == main


@pytest.mark.parametrize("x", list(itertools.product(range(5), repeat=3)))
def test_three_variable_identity(x):
    brute = rsum_enum_vector_brute(x)
    main = rsum_enum_main(x)
    ky = rsum_enum_kungyan(x)
    assert brute == main == ky
    # the explicit expansions, evaluated at several integers, pin both sides
    for q in (-2, -1, 0, 1, 2, 3):
        assert three_var_composition_side(x, q) == ky.eval(q)
        assert three_var_tree_side(x, q) == main.eval(q)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_three_way_random(x):
    b = rsum_enum_vector_brute(x)
    assert rsum_enum_main(x) == b == rsum_enum_kungyan(x)


def test_zero_first_entry():
    for x in [(0,), (0, 3), (0, 1, 2)]:
        assert rsum_enum_main(x) == 0 and rsum_enum_kungyan(x) == 0
        assert pitman_stanley_count(x) == 0 == corollary_count(x)


def test_graph_identity_sample():
    rng = random.Random(11)
    graphs = list(all_multigraphs(3, 2))
    for g in rng.sample(graphs, 120):
        lhs = rsum_enum_graphical_brute(g)
        for o in all_orders(3):
            assert rsum_enum_tree_side(g, o) == lhs


# --- counts -------------------------------------------------------------------


def test_count_examples():
    assert pitman_stanley_count((1, 1, 1, 1)) == 125
    assert pitman_stanley_count((3, 0, 0)) == 27
    assert pitman_stanley_count((1, 0, 0, 1)) == 5
    assert corollary_count((1, 1, 1)) == 16
    assert corollary_count((2, 1, 1)) == 50


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_counts_agree(x):
    assert pitman_stanley_count(x) == corollary_count(x) == rsum_enum_main(x).eval(1)


def test_special_forms():
    for n in range(1, 5):
        for a in range(1, 4):
            assert pitman_stanley_count((a,) + (0,) * (n - 1)) == a**n
            if n >= 2:
                assert pitman_stanley_count((a,) + (0,) * (n - 2) + (a,)) == (n + 1) * a**n
            for b in range(1, 4):
                assert pitman_stanley_count((a,) + (b,) * (n - 1)) == a * (a + n * b) ** (n - 1)


def test_multinomial():
    assert multinomial((2, 1, 0)) == 3
    assert multinomial((1, 1, 1)) == 6
    assert multinomial(()) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_inversion_enumerator_is_classical(n):
    assert inversion_enum_labeled_trees(n) == rsum_enum_vector_brute((1,) * n)
    assert inversion_enum_labeled_trees(n).eval(1) == (n + 1) ** (n - 1)


# --- increasing, specializations, exceptional ---------------------------------


def test_partitions_inside():
    assert partitions_inside((1, 0)) == [(0, 0), (1, 0)]
    assert len(partitions_inside((2, 1, 0))) == 5


def test_increasing_examples():
    lhs, rhs = rsum_enum_increasing((1, 1))
    assert lhs == rhs == QPoly.from_coefficients([1, 1])
    assert rsum_enum_increasing((0, 2)) == (QPoly(), QPoly())
    lhs, rhs = rsum_enum_increasing((2, 1))
    assert lhs == rhs


def test_increasing_grid():
    for n in range(1, 4):
        for x in itertools.product(range(4), repeat=n):
            lhs, rhs = rsum_enum_increasing(x)
            assert lhs == rhs


def test_descent_class_size():
    assert descent_class_size(2, frozenset()) == 1
    assert descent_class_size(3, frozenset({1})) == 2
    assert sum(descent_class_size(4, frozenset(s)) for r in range(4) for s in itertools.combinations((1, 2, 3), r)) == 24


def test_specialization_examples():
    r = specialization_report((1, 1))
    assert (r.at1, r.at0, abs(r.atMinus1)) == (3, 2, 1) and r.consistent
    assert specialization_report((1, 1, 1)).at0 == 6
    r = specialization_report((2, 1))
    assert r.atMinus1 == 0 and r.consistent


def test_minus_one_on_classical_case_gives_alternating_counts():
    # |value at q=-1| for ordinary parking functions is the Euler zigzag number
    for n, e in zip(range(1, 7), (1, 1, 2, 5, 16, 61)):
        assert abs(rsum_enum_vector_brute((1,) * n).eval(-1)) == e == minus_one_prediction((1,) * n)


def test_specialization_grid():
    for n in range(1, 4):
        for x in itertools.product(range(4), repeat=n):
            assert specialization_report(x).consistent


def test_exceptional():
    assert exceptional_vector(2, 3) == (2, 0, 2, 0, 2)
    for a, m, count in [(1, 2, 4), (2, 2, 32), (1, 3, 81)]:
        r = exceptional_count_check(a, m)
        assert r.ok and r.graph_count == count == a ** (2 * m - 1) * m ** (2 * m - 2)
    assert not exceptional_count_check(1, 3).sets_equal
    with pytest.raises(ValueError):
        exceptional_count_check(1, 1)
