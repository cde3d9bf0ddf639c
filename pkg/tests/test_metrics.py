from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from gmfrt.errors import NotConnectedError, TooSmallError, ZeroDegreeError
from gmfrt.graph import from_edge_list
from gmfrt.metrics import decimal, gmfrt, gmfrt_of_degrees, mfrt, report, stationary
from strategies import connected_graphs


def _mfrt_by_linear_solve(g):
    """Return times from the stationary vector of the transition matrix (float oracle)."""
    p = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in g.adj[u]:
            p[u, v] = 1 / g.degree(u)
    w, vecs = np.linalg.eig(p.T)
    pi = np.real(vecs[:, np.argmin(abs(w - 1))])
    pi /= pi.sum()
    return 1 / pi


@given(connected_graphs())
def test_kac_matches_transition_matrix(g):
    exact = np.array([float(x) for x in mfrt(g)])
    assert np.allclose(exact, _mfrt_by_linear_solve(g), rtol=1e-8)


@given(connected_graphs())
def test_stationary_sums_to_one_and_inverts_mfrt(g):
    pi = stationary(g)
    assert sum(pi) == 1
    assert all(p * mu == 1 for p, mu in zip(pi, mfrt(g)))
    assert gmfrt(g) == sum(mfrt(g)) / g.n == report(g).gmfrt


def test_small_values():
    assert gmfrt(from_edge_list(2, [(0, 1)])) == 2
    assert gmfrt(from_edge_list(3, [(0, 1), (1, 2), (0, 2)])) == 3
    assert gmfrt(from_edge_list(4, [(0, 1), (1, 2), (2, 3)])) == Fraction(9, 2)
    assert gmfrt_of_degrees([3, 2, 2, 1]) == Fraction(14, 3)


def test_errors():
    with pytest.raises(NotConnectedError):
        gmfrt(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(TooSmallError):
        gmfrt(from_edge_list(1, []))
    with pytest.raises(ZeroDegreeError):
        gmfrt_of_degrees([2, 1, 1, 0])


def test_report_json_shape():
    out = report(from_edge_list(4, [(0, 1), (1, 2), (2, 3)])).to_json()
    assert out["gmfrt"] == [9, 2]
    assert out["mfrt"][0] == [6, 1]
    assert out["gmfrt_decimal"] == "4.5"
    assert decimal(Fraction(1, 3)) == "0.333333333333"
