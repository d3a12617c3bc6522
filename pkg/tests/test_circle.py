import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_arrangement
from oracles import doubled_weight
from sparsehalves.andrasfai import blow_up, generalized_andrasfai
from sparsehalves.circle import (
    CircularArrangement,
    arc_edges,
    arrangement_from_positions,
    lambda_count,
    represent_blow_up,
    step,
    threshold,
    verify_angle_property,
    z_xi,
)
from sparsehalves.errors import PreconditionError
from sparsehalves.exact import MODE_WEIGHT, arc, point_weight, wrap
from sparsehalves.graphs import cycle
from sparsehalves.homomorphism import recognize_blow_up

seeds = st.integers(0, 10**6)


def test_thresholds():
    assert threshold(2) == F(1, 3) and step(2) == F(1, 3)
    assert threshold(3) == F(2, 5) and step(3) == F(1, 5)


def test_single_blow_up_positions(c5x1):
    assert c5x1.positions == tuple(F(i, 5) for i in range(5))
    assert verify_angle_property(c5x1) == (True, None)


def test_double_blow_up_positions(c5x2):
    expected = []
    for i in range(5):
        expected += [F(i, 5), F(i, 5) + F(1, 60)]
    assert c5x2.positions == tuple(expected)
    assert verify_angle_property(c5x2)[0]


def test_zero_multiplicity_classes():
    b = blow_up(generalized_andrasfai(3, 3), [0, 2, 1, 0, 3, 1, 0, 0, 2, 1, 1, 0])
    assert verify_angle_property(represent_blow_up(b, 3))[0]


def test_angle_violation_reported():
    arr = represent_blow_up(blow_up(generalized_andrasfai(2, 2), 1), 2)
    bad = CircularArrangement(2, cycle(5), arr.positions)
    ok, pair = verify_angle_property(bad)
    assert not ok and pair == (0, 1)


def test_non_andrasfai_base_rejected():
    with pytest.raises(PreconditionError):
        represent_blow_up(blow_up(cycle(6), 1), 2)


def test_arrangement_validation():
    with pytest.raises(ValueError):
        CircularArrangement(2, cycle(5), (F(0),) * 4)
    with pytest.raises(ValueError):
        CircularArrangement(1, cycle(3), (F(0), F(1, 3), F(2, 3)))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_angle_property_random_blow_ups(seed):
    assert verify_angle_property(random_arrangement(random.Random(seed)))[0]


def test_arrangement_from_positions_recovers_graph(c5x2):
    arr = arrangement_from_positions(c5x2.positions, 2)
    assert arr.graph == c5x2.graph


def test_lambda_examples(c5x2):
    assert c5x2.lam(arc(0, F(1, 3))) == 8
    assert lambda_count(c5x2, arc(0, F(1, 5), "<", ">")) == 1 + 2 + 1
    assert c5x2.lam(arc(0, F(1, 5), "(", ")")) == 2
    assert c5x2.lam(arc(0, 1, "<", ">")) == 20
    assert c5x2.lam(arc(F(1, 2), F(1, 2))) == 0


@settings(max_examples=150, deadline=None)
@given(seeds, st.fractions(0, 1, max_denominator=240), st.fractions(0, 1, max_denominator=240),
       st.sampled_from("[(<"), st.sampled_from("])>"))
def test_lambda_matches_pointwise_recount(seed, a, length, left, right):
    arr = random_arrangement(random.Random(seed))
    interval = arc(a, a + length, left, right)
    lw = {"[": 2, "(": 0, "<": 1}[left]
    rw = {"]": 2, ")": 0, ">": 1}[right]
    expected = sum(doubled_weight(a, length, lw, rw, p) for p in arr.positions)
    assert arr.lam(interval) == expected
    assert sum(point_weight(interval, p) for p in arr.positions) == expected
    assert set(arr.members(interval)) == {
        v for v, p in enumerate(arr.positions) if doubled_weight(a, length, lw, rw, p)
    }


@settings(max_examples=80, deadline=None)
@given(seeds, st.fractions(0, 1, max_denominator=300),
       st.fractions(0, 1, max_denominator=300).filter(bool))
def test_lambda_is_additive(seed, a, length):
    arr = random_arrangement(random.Random(seed))
    split = a + length / 3
    whole = arr.lam(arc(a, a + length, "<", ">"))
    parts = arr.lam(arc(a, split, "<", ">")) + arr.lam(arc(split, a + length, "<", ">"))
    assert whole == parts


@settings(max_examples=100, deadline=None)
@given(seeds, st.fractions(0, 1, max_denominator=500))
def test_z_xi_definition(seed, xi):
    arr = random_arrangement(random.Random(seed))
    order = sorted(range(arr.n), key=lambda v: (arr.positions[v] - xi) % 1)
    half = arr.n // 2
    assert z_xi(arr, xi) == order[half - 1]
    assert sorted(arr.half_arc_vertices(xi)) == sorted(order[:half])
    # the closed arc [xi, z_xi] holds exactly floor(n/2) vertices
    assert arr.lam(arr.half_arc(xi)) == 2 * half
    assert arc_edges(arr, xi) >= 0


def test_z_xi_examples(c5x2):
    assert c5x2.z_xi(0) == 4
    assert c5x2.positions[c5x2.z_xi(F(1, 100))] == F(5, 12)
    assert c5x2.z_mirror(F(1, 60)) == 7


def test_rotation_preserves_lambda(c5x2):
    rot = c5x2.rotated(F(1, 7))
    assert rot.lam(arc(0, F(1, 3))) == c5x2.lam(arc(F(1, 7), F(1, 7) + F(1, 3)))


def test_json_round_trip(c5x2):
    data = json.loads(json.dumps(c5x2.to_json()))
    assert data["positions"][1] == "1/60"
    assert data["positions"][0] == "0/1"
    back = CircularArrangement.from_json(data)
    assert back.positions == c5x2.positions and back.graph == c5x2.graph


def test_alpha_cached(c5x2):
    assert c5x2.alpha == 4


def test_recognition_of_represented_blow_up(c5x2):
    d, hom = recognize_blow_up(c5x2.graph, 2)
    assert d == 2


def test_wrap_is_used_on_input():
    arr = arrangement_from_positions([F(6, 5), F(-1, 5), F(2, 5)], 2)
    assert arr.positions == (F(1, 5), F(4, 5), F(2, 5))
    assert wrap(F(-1, 5)) == F(4, 5)
    assert MODE_WEIGHT["half"] == 1
