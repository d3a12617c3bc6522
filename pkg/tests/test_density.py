import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_arrangement
from oracles import brute_min_edges, edges_in
from sparsehalves.andrasfai import blow_up, generalized_andrasfai, random_multiplicities
from sparsehalves.circle import represent_blow_up
from sparsehalves.density import (
    BETA_COLUMNS,
    SearchBudget,
    arc_sweep,
    beta_table,
    beta_table_csv,
    eq1_target,
    eq2_target,
    is_dense,
    min_edges_over_subsets,
    sweep_bound,
)
from sparsehalves.errors import BudgetExceeded, PreconditionError
from sparsehalves.graphs import Graph, complete_bipartite, cycle, petersen


def c5_blow_up(t):
    return blow_up(generalized_andrasfai(2, 2), t).result


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@pytest.mark.parametrize(
    "t, s, expected",
    [(2, 5, 2), (4, 10, 8), (6, 15, 18)],
    ids=["n10", "n20", "n30"],
)
def test_c5_blow_up_halves(t, s, expected):
    value, witness = min_edges_over_subsets(c5_blow_up(t), s)
    assert value == expected
    assert edges_in(c5_blow_up(t), witness) == value and len(witness) == s


def test_c7_and_petersen_halves():
    c7 = lambda t: blow_up(generalized_andrasfai(3, 2), t).result  # noqa: E731
    assert min_edges_over_subsets(c7(2), 7)[0] == 2
    assert min_edges_over_subsets(c7(4), 14)[0] == 8
    assert min_edges_over_subsets(blow_up(petersen(), 2).result, 10)[0] == 8


def test_c5_witness_frozen():
    assert min_edges_over_subsets(c5_blow_up(2), 5) == (2, [0, 1, 2, 3, 4])


@pytest.mark.parametrize("use_twins", [True, False])
@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12), st.integers(0, 12))
def test_matches_brute_force(use_twins, g, s):
    s = min(s, g.n)
    assert min_edges_over_subsets(g, s, use_twins=use_twins) == brute_min_edges(g, s)


def test_matches_brute_force_on_blow_ups():
    rng = random.Random(11)
    for _ in range(15):
        mult = random_multiplicities(8, rng, max_t=2)
        g = blow_up(generalized_andrasfai(2, 3), mult).result
        if g.n > 14:
            continue
        s = g.n // 2
        assert min_edges_over_subsets(g, s) == brute_min_edges(g, s)


def test_blow_up_invariance():
    # doubling every class scales the sparsest half by 4
    for t in (1, 2, 3):
        small = min_edges_over_subsets(c5_blow_up(2 * t), 5 * t)[0]
        large = min_edges_over_subsets(c5_blow_up(4 * t), 10 * t,
                                       SearchBudget(max_n=60))[0]
        assert large == 4 * small


def test_search_errors():
    with pytest.raises(PreconditionError):
        min_edges_over_subsets(cycle(5), 6)
    with pytest.raises(BudgetExceeded):
        min_edges_over_subsets(cycle(31), 10)
    with pytest.raises(BudgetExceeded):
        min_edges_over_subsets(c5_blow_up(4), 10, SearchBudget(max_n=30, max_nodes=5),
                               use_twins=False)
    with pytest.raises(ValueError):
        SearchBudget(max_n=0)
    assert min_edges_over_subsets(cycle(5), 0) == (0, [])


@pytest.mark.parametrize(
    "t, alpha, s, edges, ratio",
    [
        (5, F(3, 5), 6, 5, F(1, 20)),
        (5, F(7, 10), 7, 10, F(1, 10)),
        (5, F(4, 5), 8, 15, F(3, 20)),
        (10, F(3, 5), 12, 20, F(1, 20)),
        (10, F(7, 10), 14, 40, F(1, 10)),
        (10, F(4, 5), 16, 60, F(3, 20)),
    ],
)
def test_complete_bipartite_closed_form(t, alpha, s, edges, ratio):
    g = complete_bipartite(t, t)
    verdict = is_dense(g, alpha, 0)
    assert (verdict.s, verdict.min_edges) == (s, edges)
    # s = 2 alpha t exactly, so the ratio is the closed form (2 alpha - 1) / 4
    assert F(edges, 4 * t * t) == ratio == eq1_target(alpha)


def test_density_verdicts():
    k10 = complete_bipartite(10, 10)
    v = is_dense(k10, F(3, 5), F(1, 20))
    assert not v.dense and v.min_edges == 20 and v.bound == 20
    assert v.witness is not None and len(v.witness) == 12
    assert is_dense(k10, F(7, 10), F(1, 20)).dense
    v = is_dense(k10, F(7, 10), F(1, 10))
    assert not v.dense and v.min_edges == 40
    data = is_dense(k10, F(7, 10), F(1, 20)).to_json()
    assert data["dense"] is True and data["bound"] == "20/1" and "witness" not in data
    with pytest.raises(PreconditionError):
        is_dense(k10, F(0), F(0))
    with pytest.raises(PreconditionError):
        is_dense(k10, F(1, 2), F(-1, 2))


def test_targets():
    assert eq1_target(F(1, 2)) == 0
    assert eq2_target(F(2, 5)) == 0
    assert eq2_target(F(1, 2)) == F(1, 50)
    assert sweep_bound(2, 10) == 2
    assert sweep_bound(3, 14) == 2


def test_sweep_examples(c5x2):
    report = arc_sweep(c5x2)
    assert report.min_edges == 2
    assert report.witness_start == 0 and report.witness == (0, 1, 2, 3, 4)
    assert len(report.per_start) == 10
    json_ = report.to_json()
    assert json_["witness_interval"] == ["0/1", "2/5"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_oracle_never_exceeds_sweep(seed):
    arr = random_arrangement(random.Random(seed), ks=(2, 3), ds=(1, 2, 3))
    if arr.n > 22:
        return
    report = arc_sweep(arr)
    assert edges_in(arr.graph, report.witness) == report.min_edges
    assert len(report.witness) == arr.n // 2
    assert min_edges_over_subsets(arr.graph, arr.n // 2)[0] <= report.min_edges


def test_sweep_within_bound_on_divisible_blow_ups():
    rng = random.Random(7)
    for k in (2, 3):
        for d in (1, 2, 3):
            base = generalized_andrasfai(k, d)
            mult = random_multiplicities(base.n, rng, total=2 * (2 * k + 1) * 2)
            arr = represent_blow_up(blow_up(base, mult), k)
            assert arc_sweep(arr).min_edges <= sweep_bound(k, arr.n)


def test_beta_table():
    rows = beta_table([("K(5,5)", complete_bipartite(5, 5))], [F(3, 5), F(4, 5)])
    assert [r["min_edges"] for r in rows] == [5, 15]
    assert rows[0]["ratio"] == F(1, 20)
    text = beta_table_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(BETA_COLUMNS)
    assert lines[1] == "\"K(5,5)\",10,3/5,6,5,1/20,1/20,1/25"
    capped = beta_table([("C(31)", cycle(31))], [F(1, 2)])
    assert capped[0]["min_edges"] == "budget_exceeded" and capped[0]["ratio"] is None
    assert beta_table_csv(capped).splitlines()[1].endswith(",budget_exceeded,,0/1,1/50")
