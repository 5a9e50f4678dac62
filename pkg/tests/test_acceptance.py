"""Acceptance criteria A1-A11.

Each test enforces one criterion at its stated tolerance (exact integer
equality unless noted) and prints a single PASS/FAIL line; run with
`pytest -s tests/test_acceptance.py` to see the lines as they happen.
The K_10 instance of A6 is a long optional test, enabled by setting
QWIND_LONG_TESTS=1.
"""

import math
import os
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import random_points, restricted_drawing
from oracles import (
    brute_force_is_winding,
    outerplanar_by_apex_planarity,
    winding_by_angles,
    winding_by_quadrants,
)
from qwind.bounds import d2_winding_bound, hell_bound, sierksma_bound
from qwind.complexes import admissible_shapes, enumerate_face_families
from qwind.drawings import (
    Graph,
    alternating_linear_drawing,
    random_drawing,
    sierksma_configuration,
)
from qwind.exactgeom import ClosedPLCurve, Rational2, point_on_curve, winding_number
from qwind.qwinding import (
    convex_position_drawing,
    delta_to_y,
    has_q_winding_partition,
    is_outerplanar,
    isomorphic,
    preset_graph,
    y_to_delta,
)
from qwind.tverberg import PointConfig, count_tverberg, points_in_general_position
from qwind.winding import (
    enumerate_winding,
    is_winding_partition,
    winding_partitions_1d,
)
from test_winding import fam

P = Rational2.of


@contextmanager
def criterion(name: str, description: str):
    try:
        yield
    except BaseException:
        print(f"{name} FAIL  {description}")
        raise
    print(f"{name} PASS  {description}")


@pytest.fixture(scope="module")
def alternating_results():
    """Counts and wall time for the alternating drawings (shared A2/A10)."""
    out = {}
    for q in (2, 3, 4):
        t0 = time.monotonic()
        certs = enumerate_winding(alternating_linear_drawing(3 * q - 2), q)
        out[q] = (len(certs), time.monotonic() - t0)
    return out


def test_a1_one_dimensional_counts():
    with criterion("A1", "(q-1)! winding partitions on the line, 50 random configs each"):
        rng = random.Random(101)
        t0 = time.monotonic()
        for q in (2, 3, 4, 5):
            expected = math.factorial(q - 1)
            for _ in range(50):
                values = rng.sample(range(-10_000, 10_000), 2 * q - 1)
                values = [Fraction(v, 7) for v in values]
                assert len(winding_partitions_1d(values, q)) == expected
        assert time.monotonic() - t0 < 1.0


def test_a2_alternating_drawing_counts(alternating_results):
    with criterion("A2", "alternating K_{3q-2} has ((q-1)!)^2 winding partitions, q=2,3,4"):
        assert alternating_results[2][0] == 1
        assert alternating_results[3][0] == 4
        assert alternating_results[4][0] == 36
        assert alternating_results[4][1] < 300.0


def test_a3_example_witness():
    with criterion("A3", "K_7 family {5},{1,2,7},{3,4,6} certified at position(5)"):
        dr = alternating_linear_drawing(7)
        cert = is_winding_partition(dr, fam((4,), (0, 1, 6), (2, 3, 5)))
        assert cert is not None
        assert cert.witness == P(5, 0)


def test_a4_sierksma_configuration_counts():
    with criterion("A4", "tight-cluster configuration counts: (2,3) -> 4, (2,2) -> 1"):
        t0 = time.monotonic()
        cfg23 = PointConfig(2, 3, tuple(sierksma_configuration(2, 3)))
        assert count_tverberg(cfg23, 3) == 4
        cfg22 = PointConfig(2, 2, tuple(sierksma_configuration(2, 2)))
        assert count_tverberg(cfg22, 2) == 1
        assert time.monotonic() - t0 < 10.0


def test_a5_prime_q_floor():
    with criterion("A5", "100 random 7-point configurations all have >= 2 Tverberg partitions"):
        rng = random.Random(505)
        assert math.ceil(hell_bound(2, 3)) == 2
        produced = 0
        while produced < 100:
            pts = random_points(rng, 7, span=30)
            if not points_in_general_position(pts, 2):
                continue
            produced += 1
            config = PointConfig(2, 3, tuple(pts))
            count = count_tverberg(config, 3)
            assert count >= 2, f"soundness failure: config {pts} has only {count}"


def test_a6_star_refutation_k7():
    with criterion("A6", "alternating K_7 - X has no 3-winding partition (exhaustive)"):
        t0 = time.monotonic()
        dr = restricted_drawing(alternating_linear_drawing(7), preset_graph("K7_minus_star2"))
        assert has_q_winding_partition(dr, 3, max_len=7) is None
        assert time.monotonic() - t0 < 60.0


@pytest.mark.skipif(
    not os.environ.get("QWIND_LONG_TESTS"),
    reason="long optional instance; set QWIND_LONG_TESTS=1",
)
def test_a6_star_refutation_k10_long():
    with criterion("A6+", "alternating K_10 - X has no 4-winding partition (optional)"):
        dr = restricted_drawing(alternating_linear_drawing(10), preset_graph("K10_minus_star3"))
        assert has_q_winding_partition(dr, 4, max_len=10) is None


def test_a7_two_winding_classification():
    with criterion("A7", "K_4/K_{2,3} always 2-winding; outerplanar never; minor search matches oracle"):
        k23 = Graph.of(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        for seed in range(100):
            dr = random_drawing(Graph.complete(4), seed, box=20)
            assert has_q_winding_partition(dr, 2, max_len=4) is not None
        for seed in range(100):
            dr = random_drawing(k23, seed, box=20)
            assert has_q_winding_partition(dr, 2, max_len=5) is not None

        rng = random.Random(707)
        found = 0
        while found < 10:
            n = rng.randint(3, 7)
            edges = [
                (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45
            ]
            g = Graph.of(n, edges)
            if not outerplanar_by_apex_planarity(g):
                continue
            found += 1
            dr = convex_position_drawing(g)
            assert has_q_winding_partition(dr, 2, max_len=n) is None

        import networkx as nx

        for atlas in nx.graph_atlas_g():
            if atlas.number_of_nodes() == 0:
                continue
            g = Graph.of(max(atlas.number_of_nodes(), 1), list(atlas.edges()))
            assert is_outerplanar(g).outerplanar == outerplanar_by_apex_planarity(g)


def test_a8_winding_number_oracle():
    with criterion("A8", "winding number matches angle-summation oracle on 500 instances"):
        rng = random.Random(808)
        checked = 0
        while checked < 500:
            k = rng.randint(3, 9)
            pts = [
                Rational2(Fraction(rng.randint(-60, 60), 6), Fraction(rng.randint(-60, 60), 6))
                for _ in range(k)
            ]
            loops = rng.choice((1, 1, 1, 2, 3))
            try:
                curve = ClosedPLCurve(tuple(pts) * loops)
            except ValueError:
                continue
            p = Rational2(Fraction(rng.randint(-60, 60), 6), Fraction(rng.randint(-60, 60), 6))
            if point_on_curve(p, curve):
                continue
            w = winding_number(curve, p)
            assert w == winding_by_quadrants(curve, p)
            assert w == winding_by_angles(curve, p)
            checked += 1


def test_a9_candidate_completeness():
    with criterion("A9", "candidate witness search agrees with the dense-grid oracle on 200 drawings"):
        rng = random.Random(909)
        shapes4 = admissible_shapes(2, 2)
        families4 = [f for s in shapes4 for f in enumerate_face_families(3, 2, s)]
        for seed in range(140):
            dr = random_drawing(Graph.complete(4), seed, box=12)
            for family in families4:
                got = is_winding_partition(dr, family) is not None
                assert got == brute_force_is_winding(dr, family, steps=8)
        shapes7 = admissible_shapes(2, 3)
        families7 = [f for s in shapes7 for f in enumerate_face_families(6, 3, s)]
        for seed in range(60):
            dr = random_drawing(Graph.complete(7), seed, box=12)
            for family in rng.sample(families7, 12):
                got = is_winding_partition(dr, family) is not None
                assert got == brute_force_is_winding(dr, family, steps=8)


def test_a10_bounds_identities(alternating_results):
    with criterion("A10", "bound identities and formula-vs-observed agreement"):
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert d2_winding_bound(q) * math.factorial(q - 1) == hell_bound(3, q)
        for q in (2, 3, 4):
            assert alternating_results[q][0] == sierksma_bound(2, q)
        cfg23 = PointConfig(2, 3, tuple(sierksma_configuration(2, 3)))
        assert count_tverberg(cfg23, 3) == sierksma_bound(2, 3)
        cfg22 = PointConfig(2, 2, tuple(sierksma_configuration(2, 2)))
        assert count_tverberg(cfg22, 2) == sierksma_bound(2, 2)


def test_a11_delta_wye():
    with criterion("A11", "delta-wye of K_4 is K_{2,3} and wye-delta inverts it"):
        k4 = Graph.complete(4)
        k23 = Graph.of(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        transformed = delta_to_y(k4, (0, 1, 2))
        assert isomorphic(transformed, k23)
        assert y_to_delta(transformed, 4) == k4
