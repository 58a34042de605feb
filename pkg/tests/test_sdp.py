import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar
from scipy.stats import ortho_group

from intervalcut.graph import FormatError, Graph
from intervalcut.oracle import exact_maxcut
from intervalcut.sdp import (
    ANGLE_SLACK, VectorSolution, alpha_gw_constants, angle_profile, default_rank, dual_upper_bound, format_solution,
    gw_ratio, parse_solution, sdp_objective, solve_sdp, solve_sdp_restarts,
)
from reference import golden_section_min, graphs

C5_VALUE = 2.5 * (1 - math.cos(4 * math.pi / 5))


def test_default_rank():
    assert default_rank(8) == 5 and default_rank(50) == 11


def test_k2_antipodal():
    sol = solve_sdp(Graph.complete(2))
    assert sol.objective == pytest.approx(1.0, abs=1e-9)
    assert sol.vectors[0] @ sol.vectors[1] == pytest.approx(-1.0, abs=1e-9)


def test_c5_closed_form():
    assert solve_sdp(Graph.cycle(5)).objective == pytest.approx(C5_VALUE, abs=1e-6)
    assert C5_VALUE == pytest.approx(4.52254, abs=1e-5)


def test_triangle():
    sol = solve_sdp(Graph.complete(3))
    assert sol.objective == pytest.approx(2.25, abs=1e-6)


def test_isolated_vertices_keep_their_start():
    g = Graph.from_edges(4, [(0, 1)])
    k = 3
    X = np.random.default_rng(5).standard_normal((1, 4, k))
    X /= np.linalg.norm(X, axis=-1, keepdims=True)
    sol = solve_sdp(g, rank=k, seed=5)
    np.testing.assert_array_equal(sol.vectors[2:], X[0, 2:])


def test_argument_checks():
    with pytest.raises(ValueError):
        solve_sdp(Graph(0, ()))
    with pytest.raises(ValueError):
        solve_sdp(Graph.path(3), tol=0)
    with pytest.raises(ValueError):
        solve_sdp(Graph.path(3), rank=0)


def test_nonconvergence_is_reported(caplog):
    with caplog.at_level(logging.WARNING, logger="intervalcut.sdp"):
        sol = solve_sdp(Graph.complete(9), max_sweeps=1, tol=1e-15)
    assert not sol.converged and sol.sweeps == 1
    assert "did not converge" in caplog.text


@given(graphs(min_n=2, max_n=12), st.integers(0, 1000))
def test_solution_invariants(g, seed):
    sol = solve_sdp(g, seed=seed)
    norms = np.linalg.norm(sol.vectors, axis=1)
    assert np.all(np.abs(norms - 1) <= 1e-9)
    assert -1e-12 <= sol.objective <= g.m + 1e-12
    assert np.all(np.diff(sol.history) >= -1e-12)
    assert sol.objective == pytest.approx(sdp_objective(g, sol.vectors), abs=1e-9)


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=12), st.integers(0, 1000))
def test_sandwich(g, seed):
    sol = solve_sdp(g, seed=seed)
    best = solve_sdp_restarts(g, seed=seed)
    mc = exact_maxcut(g)[0]
    assert sol.objective >= mc - 1e-6
    assert sol.objective <= best.objective + 1e-6
    assert dual_upper_bound(best) >= max(sol.objective, best.objective) - 1e-9


def test_agrees_with_interior_point_solver():
    cp = pytest.importorskip("cvxpy")
    rng = np.random.default_rng(3)
    for _ in range(6):
        n = int(rng.integers(4, 9))
        keep = rng.random(n * (n - 1) // 2) < 0.6
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])
        if g.m == 0:
            continue
        X = cp.Variable((n, n), PSD=True)
        obj = cp.Maximize(0.5 * sum(1 - X[u, v] for u, v in g.edges))
        value = cp.Problem(obj, [cp.diag(X) == 1]).solve(solver=cp.CLARABEL)
        assert solve_sdp(g).objective == pytest.approx(value, abs=1e-5)


@given(graphs(min_n=2, max_n=10), st.integers(0, 1000))
def test_rotation_invariance(g, seed):
    sol = solve_sdp(g, seed=seed)
    Q = ortho_group.rvs(sol.rank, random_state=seed) if sol.rank > 1 else np.array([[-1.0]])
    rotated = VectorSolution(g, sol.vectors @ Q, sol.objective)
    assert sdp_objective(g, rotated.vectors) == pytest.approx(sol.objective, abs=1e-9)
    if g.m:
        a = angle_profile(sol, 0.01).theta
        b = angle_profile(rotated, 0.01).theta
        # arccos amplifies rounding near 0 and pi; compare dot products there
        np.testing.assert_allclose(np.cos(a), np.cos(b), atol=1e-9)


class TestAngles:
    def _pair(self, y):
        g = Graph.complete(2)
        X = np.array([[1.0, 0.0], y])
        return VectorSolution(g, X, sdp_objective(g, X))

    def test_identical(self):
        p = angle_profile(self._pair([1.0, 0.0]), 0.01)
        assert p.theta[0] == 0.0 and p.near_zero[0] and not p.below_two_thirds[0]

    def test_antipodal(self):
        p = angle_profile(self._pair([-1.0, 0.0]), 0.01)
        assert p.theta[0] == pytest.approx(math.pi) and p.near_pi[0]

    def test_clamps_drift(self):
        p = angle_profile(self._pair([1.0 + 1e-12, 0.0]), 0.01)
        assert not np.isnan(p.theta).any()

    def test_triangle_all_in_e_prime(self):
        solved = angle_profile(solve_sdp(Graph.complete(3)), 1e-4)
        np.testing.assert_allclose(solved.theta, 2 * math.pi / 3, atol=1e-4)
        g = Graph.complete(3)
        phi = 2 * math.pi / 3 * np.arange(3)
        X = np.column_stack([np.cos(phi), np.sin(phi)])
        p = angle_profile(VectorSolution(g, X, sdp_objective(g, X)), 1e-4)
        assert p.counts() == {"E_z": 0, "E_pi": 0, "E_prime": 3}

    @pytest.mark.parametrize("eta", [0.0, -0.1, 0.02])
    def test_eta_range(self, eta):
        with pytest.raises(ValueError):
            angle_profile(solve_sdp(Graph.complete(3)), eta)

    @given(graphs(min_n=2, max_n=10), st.floats(1e-6, 0.01))
    def test_sets_recomputable(self, g, eta):
        p = angle_profile(solve_sdp(g), eta)
        s = ANGLE_SLACK
        assert np.array_equal(p.near_zero, p.theta <= math.pi / 8 * eta + s)
        assert np.array_equal(p.near_pi, np.abs(p.theta - math.pi) <= math.sqrt(eta) + s)
        assert np.array_equal(p.below_two_thirds, (p.theta <= 2 * math.pi / 3 + s) & ~p.near_zero)
        counts, _ = p.histogram()
        assert counts.sum() == g.m


class TestConstants:
    def test_against_independent_minimizers(self):
        alpha, theta = alpha_gw_constants()
        theta_gs = golden_section_min(gw_ratio, 1.0, math.pi)
        res = minimize_scalar(gw_ratio, bounds=(1.0, math.pi), method="bounded", options={"xatol": 1e-12})
        assert theta == pytest.approx(theta_gs, abs=1e-6)
        assert alpha == pytest.approx(gw_ratio(theta_gs), abs=1e-9)
        assert alpha == pytest.approx(res.fun, abs=1e-9)

    def test_rounded_values(self):
        alpha, theta = alpha_gw_constants()
        # the customary three-digit figure is a truncation: 0.87857 would round to 0.879
        assert math.floor(alpha * 1000) / 1000 == 0.878
        assert round(math.degrees(theta)) == 134
        assert round(theta, 2) == 2.33

    def test_is_a_minimum_on_a_grid(self):
        alpha, _ = alpha_gw_constants()
        grid = np.linspace(1e-3, math.pi, 20001)
        assert min(gw_ratio(t) for t in grid) >= alpha - 1e-12


def test_solution_file_round_trip():
    g = Graph.cycle(7)
    sol = solve_sdp(g, seed=2)
    back = parse_solution(format_solution(sol), g)
    np.testing.assert_array_equal(back.vectors, sol.vectors)
    assert back.objective == pytest.approx(sol.objective, abs=1e-12)


@pytest.mark.parametrize("text", ["", "3 2\n1 0\n", "7 2\n" + "1 0\n" * 6 + "1\n", "7 1\n" + "x\n" * 7])
def test_solution_file_errors(text):
    with pytest.raises(FormatError):
        parse_solution(text, Graph.cycle(7))
