import json

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_alpha, brute_chromatic, brute_odd_girth
from sparsehalves.andrasfai import blow_up, generalized_andrasfai
from sparsehalves.errors import CapExceeded
from sparsehalves.graphs import (
    Graph,
    bits,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    independence_number,
    induced_edge_count,
    is_independent,
    mask_of,
    named_graph,
    odd_girth,
    petersen,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_induced_edge_count_examples():
    c5 = cycle(5)
    assert induced_edge_count(c5, [0, 1, 2]) == 2
    assert induced_edge_count(c5, [0, 2]) == 0
    assert induced_edge_count(c5, []) == 0
    assert induced_edge_count(c5, mask_of([0, 1, 2, 3, 4])) == 5
    with pytest.raises(IndexError):
        induced_edge_count(c5, [0, 5])


def test_graph_construction_errors():
    with pytest.raises(IndexError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])


def test_graph_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])
    assert g.num_edges == 2
    assert g.edges == ((0, 1), (2, 3))
    assert g.neighbors(1) == [0]
    assert g.is_regular(1)
    assert bits(0b1011) == [0, 1, 3]
    assert is_independent(g, [0, 2])
    assert not is_independent(g, [2, 3])


def test_serialisation_round_trip():
    g = petersen()
    assert Graph.from_json(json.dumps(g.to_json())) == g
    dot = cycle(3).to_dot()
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot and "1 -- 2;" in dot and "0 -- 2;" in dot


def test_twin_classes():
    b = blow_up(cycle(5), [2, 1, 3, 1, 1])
    assert b.result.twin_classes() == [0, 0, 2, 3, 3, 3, 6, 7]


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle(5), 5),
        (cycle(6), None),
        (complete_bipartite(3, 3), None),
        (petersen(), 5),
        (complete(3), 3),
        (Graph.from_edges(4, []), None),
    ],
    ids=["C5", "C6", "K33", "petersen", "K3", "empty"],
)
def test_odd_girth_examples(g, expected):
    assert odd_girth(g) == expected


def test_odd_girth_drops_when_chord_added():
    g = cycle(9)
    assert odd_girth(g) == 9
    g2 = Graph.from_edges(9, list(g.edges) + [(0, 4)])
    assert odd_girth(g2) == 5


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_odd_girth_matches_brute_force(g):
    assert odd_girth(g) == brute_odd_girth(g)


@pytest.mark.parametrize(
    "g, expected",
    [(cycle(5), 2), (cycle(6), 3), (complete_bipartite(5, 5), 5), (petersen(), 4),
     (Graph.from_edges(0, []), 0)],
    ids=["C5", "C6", "K55", "petersen", "null"],
)
def test_alpha_examples(g, expected):
    a, witness = independence_number(g)
    assert a == expected
    assert len(witness) == a and is_independent(g, witness)


def test_alpha_witness_is_lex_least():
    assert independence_number(cycle(5))[1] == [0, 2]
    assert independence_number(petersen()) == brute_alpha(petersen())


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_alpha_matches_brute_force(g):
    assert independence_number(g) == brute_alpha(g)


def test_alpha_on_blow_ups():
    # alpha of a blow-up equals the maximum class-weighted independent set of the base
    b = blow_up(generalized_andrasfai(2, 3), [1, 3, 1, 2, 1, 1, 2, 1])
    assert independence_number(b.result) == brute_alpha(b.result)


def test_caps():
    with pytest.raises(CapExceeded):
        independence_number(cycle(70))
    with pytest.raises(CapExceeded):
        chromatic_number(cycle(70))
    assert independence_number(cycle(70), cap=70)[0] == 35


@pytest.mark.parametrize(
    "g, expected",
    [(cycle(5), 3), (cycle(6), 2), (petersen(), 3), (complete(4), 4),
     (Graph.from_edges(3, []), 1), (Graph.from_edges(0, []), 0)],
    ids=["C5", "C6", "petersen", "K4", "empty", "null"],
)
def test_chromatic_examples(g, expected):
    assert chromatic_number(g) == expected


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_chi_two_iff_bipartite_with_edge(g):
    assert (chromatic_number(g) == 2) == (g.num_edges > 0 and odd_girth(g) is None)


def test_named_graph():
    assert named_graph("cycle", 5) == cycle(5)
    assert named_graph("petersen") == petersen()
    assert named_graph("complete_bipartite", 2, 3).num_edges == 6
    with pytest.raises(ValueError):
        named_graph("heawood")
