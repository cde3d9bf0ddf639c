"""Hand-checkable values, each recomputed here from first principles."""

from fractions import Fraction

import pytest

from gmfrt.extremal import build_max_gmfrt_graph, build_min_gmfrt_graph, concentrate_step, max_case, min_degree_counts
from gmfrt.graph import from_edge_list, rewire
from gmfrt.metrics import gmfrt, gmfrt_of_degrees, mfrt, stationary
from gmfrt.oracle import brute_force_extrema
from gmfrt.trees import build_path, build_star, flatten_step, starify_step
from gmfrt.walk import estimate_mfrt, frt_histogram

TRIANGLE = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


def _direct(degrees):
    degrees = list(degrees)
    return Fraction(sum(degrees), len(degrees)) * sum(Fraction(1, d) for d in degrees)


def test_stationary_and_mfrt_values():
    assert stationary(build_star(5)) == [Fraction(4, 8)] + [Fraction(1, 8)] * 4
    assert stationary(build_path(3)) == [Fraction(1, 4), Fraction(2, 4), Fraction(1, 4)]
    assert mfrt(build_star(5)) == [2, 8, 8, 8, 8]
    assert mfrt(build_path(4)) == [6, 3, 3, 6]


def test_gmfrt_values():
    assert gmfrt(build_star(5)) == gmfrt_of_degrees([4, 1, 1, 1, 1]) == Fraction(34, 5)
    assert gmfrt(build_star(4)) == 5
    assert gmfrt(build_path(3)) == Fraction(10, 3)
    assert gmfrt(build_path(10)) == Fraction(54, 5)


def test_large_hub_profile_value():
    profile = [11, 5, 5, 4, 4, 3, 1, 1, 1, 1, 1, 1]
    assert gmfrt_of_degrees(profile) == _direct(profile) == Fraction(45923, 1980)
    assert build_max_gmfrt_graph(12, 19).predicted_gmfrt == Fraction(45923, 1980)


def test_rewire_path_to_path():
    g = rewire(build_path(4), remove=[(2, 3)], add=[(0, 3)])
    assert sorted(g.degrees, reverse=True) == [2, 2, 1, 1]


def test_flatten_star5():
    out = flatten_step(build_star(5), 0)
    assert out.predicted_delta == Fraction(6, 5)
    assert gmfrt(out.after) == Fraction(28, 5)


@pytest.mark.parametrize("n", range(4, 15))
def test_flatten_degree_three_delta(n):
    # spider with a degree-3 centre and legs of length 1, 1, n-3
    edges = [(0, 1), (0, 2), (0, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    out = flatten_step(from_edge_list(n, edges), 0)
    assert out.predicted_delta == Fraction(2 * (n - 1), 3 * n)


def test_starify_paths():
    out = starify_step(build_path(4), 1, 2)
    assert out.predicted_delta == Fraction(-1, 2) and gmfrt(out.after) == 5
    for v1, v2 in [(1, 2), (1, 3), (3, 2), (2, 1)]:
        out = starify_step(build_path(5), v1, v2)
        assert out.predicted_delta == Fraction(-8, 15)
        assert gmfrt(out.after) == _direct([3, 2, 1, 1, 1])


def test_min_counts_and_paths():
    assert min_degree_counts(6, 8) == (4, 2)
    assert min_degree_counts(5, 4) == (3, 2)
    assert gmfrt(build_min_gmfrt_graph(5, 4).graph) == 5 + Fraction(3, 5)


def test_max_cases():
    assert max_case(5, 8) == ("II", 2, None)
    res = build_max_gmfrt_graph(5, 8)
    assert res.profile == (4, 4, 3, 3, 2) and res.predicted_gmfrt == Fraction(16, 3)
    assert brute_force_extrema(5, 8).max_gmfrt == Fraction(16, 3)
    assert build_max_gmfrt_graph(6, 5).predicted_gmfrt == Fraction(26, 3)


def test_tree_extrema_n4():
    cert = brute_force_extrema(4, 3, "labeled_graphs")
    assert cert.graph_count == 16
    assert (cert.min_gmfrt, cert.max_gmfrt) == (Fraction(9, 2), 5)
    assert cert.min_profiles == ((2, 2, 1, 1),) and cert.max_profiles == ((3, 1, 1, 1),)


def test_concentrate_path_to_star():
    g = concentrate_step(build_path(4))
    assert sorted(g.degrees) == [1, 1, 1, 3]


def test_triangle_return_at_two_half_the_time():
    hist = frt_histogram(TRIANGLE, 0, 200_000, seed=4)
    assert min(hist.counts) == 2
    assert abs(hist.counts[2] / hist.trials - 0.5) < 0.005


@pytest.mark.slow
@pytest.mark.parametrize("g, start, expected", [(TRIANGLE, 0, 3), (build_star(5), 1, 8)])
def test_million_walks_within_five_se(g, start, expected):
    s = estimate_mfrt(g, start, 10**6, seed=9)
    assert s.predicted == expected and abs(s.z_score) <= 5
