"""Low-rank solver for the Max-Cut SDP relaxation.

Maximizes ``1/2 * sum_{uv in E} (1 - x_u . x_v)`` over unit vectors in
``R^k`` by exact coordinate ascent: holding every other vector fixed, the
best ``x_v`` is ``-normalize(sum of neighbor vectors)``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .graph import FormatError, Graph, _data_lines

log = logging.getLogger(__name__)

DEGENERATE_NORM = 1e-12
ANGLE_SLACK = 1e-9  # set boundaries absorb float noise (the K_3 optimum sits exactly at 2pi/3)


@dataclass
class VectorSolution:
    graph: Graph = field(repr=False)
    vectors: np.ndarray
    objective: float
    sweeps: int = 0
    converged: bool = True
    last_improvement: float = 0.0
    history: list[float] = field(default_factory=list, repr=False)

    @property
    def rank(self) -> int:
        return int(self.vectors.shape[1])


@dataclass(frozen=True)
class AngleProfile:
    eta: float
    theta: np.ndarray
    near_zero: np.ndarray  # E_z: theta <= (pi/8) eta
    near_pi: np.ndarray  # E_pi: |theta - pi| <= sqrt(eta)
    below_two_thirds: np.ndarray  # E': theta <= 2pi/3, minus E_z

    def counts(self) -> dict[str, int]:
        return {
            "E_z": int(self.near_zero.sum()),
            "E_pi": int(self.near_pi.sum()),
            "E_prime": int(self.below_two_thirds.sum()),
        }

    def histogram(self, bins: int = 18) -> tuple[np.ndarray, np.ndarray]:
        return np.histogram(self.theta, bins=bins, range=(0.0, math.pi))


def default_rank(n: int) -> int:
    return math.ceil(math.sqrt(2 * n)) + 1


def sdp_objective(g: Graph, vectors: np.ndarray) -> float:
    if g.m == 0:
        return 0.0
    e = np.asarray(g.edges)
    dots = np.einsum("ij,ij->i", vectors[e[:, 0]], vectors[e[:, 1]])
    return float(0.5 * np.sum(1.0 - dots))


def _batch_objective(e: np.ndarray, X: np.ndarray) -> np.ndarray:
    if len(e) == 0:
        return np.zeros(X.shape[0])
    dots = np.einsum("rij,rij->ri", X[:, e[:, 0]], X[:, e[:, 1]])
    return 0.5 * np.sum(1.0 - dots, axis=1)


def _mix(g: Graph, X: np.ndarray, tol: float, max_sweeps: int):
    """Coordinate ascent on a batch ``X`` of shape (restarts, n, k), in place.

    Runs until every member's last sweep improved by less than ``tol``.
    """
    e = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    nbrs = [np.asarray(a, dtype=np.int64) for a in g.adjacency]
    active = [v for v in range(g.n) if len(nbrs[v])]
    obj = _batch_objective(e, X)
    history = [obj.copy()]
    improvement = np.full(X.shape[0], np.inf)
    sweeps = 0
    while sweeps < max_sweeps and np.any(improvement >= tol):
        for v in active:
            s = X[:, nbrs[v], :].sum(axis=1)
            norm = np.linalg.norm(s, axis=1)
            ok = norm > DEGENERATE_NORM
            if ok.all():
                X[:, v, :] = -s / norm[:, None]
            elif ok.any():
                X[ok, v, :] = -s[ok] / norm[ok, None]
        sweeps += 1
        new = _batch_objective(e, X)
        improvement = new - obj
        obj = new
        history.append(obj.copy())
    return obj, sweeps, improvement, history


def _random_unit(rng: np.random.Generator, shape) -> np.ndarray:
    X = rng.standard_normal(shape)
    X /= np.linalg.norm(X, axis=-1, keepdims=True)
    return X


def _snap_to_cut(g: Graph, X: np.ndarray) -> tuple[float, np.ndarray | None]:
    """Best cut read off the vectors: signs against the principal axis and each ``x_v``.

    Coordinate ascent crawls when the relaxation is tight (its optimum is a
    cut); any such cut is itself a feasible point of the relaxation.
    """
    if g.m == 0:
        return 0.0, None
    _, _, vt = np.linalg.svd(X, full_matrices=False)
    dirs = np.vstack([vt[:1], X])
    sides = (X @ dirs.T).T >= 0
    e = np.asarray(g.edges)
    sizes = np.count_nonzero(sides[:, e[:, 0]] != sides[:, e[:, 1]], axis=1)
    i = int(np.argmax(sizes))
    Y = np.zeros_like(X)
    Y[:, 0] = np.where(sides[i], 1.0, -1.0)
    return float(sizes[i]), Y


def dual_upper_bound(sol: "VectorSolution") -> float:
    """Certified upper bound on the relaxation optimum.

    Dual variables ``y_v = (d_v + |sum_{u~v} x_u|) / 4`` match the primal
    value at a stationary point; shifting them by the most negative
    eigenvalue of ``Diag(y) - L/4`` makes them feasible.
    """
    g = sol.graph
    n = g.n
    L = np.zeros((n, n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
    deg = np.asarray(g.degrees(), dtype=float)
    L[np.diag_indices(n)] = deg
    G = -(L - np.diag(deg)) @ sol.vectors  # neighbor sums
    y = (deg + np.linalg.norm(G, axis=1)) / 4
    lam = float(np.linalg.eigvalsh(np.diag(y) - L / 4)[0])
    return float(y.sum() + n * max(0.0, -lam))


def solve_sdp(
    g: Graph,
    rank: int | None = None,
    tol: float | None = None,
    max_sweeps: int = 5000,
    seed: int = 0,
) -> VectorSolution:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    k = default_rank(g.n) if rank is None else int(rank)
    if k < 1:
        raise ValueError("rank must be positive")
    tol = 1e-8 * max(g.m, 1) if tol is None else float(tol)
    if not tol > 0:
        raise ValueError("tol must be positive")
    rng = np.random.default_rng(seed)
    X = _random_unit(rng, (1, g.n, k))
    obj, sweeps, improvement, history = _mix(g, X, tol, max_sweeps)
    converged = bool(improvement[0] < tol)
    if not converged:
        log.warning("SDP did not converge: %d sweeps, last improvement %.3g", sweeps, improvement[0])
    vectors, value = X[0], float(obj[0])
    snapped, Y = _snap_to_cut(g, vectors)
    if snapped > value:
        vectors, value = Y, snapped
    hist = [float(h[0]) for h in history]
    if value > hist[-1]:
        hist.append(value)
    return VectorSolution(g, vectors, value, sweeps, converged, float(improvement[0]), hist)


def solve_sdp_restarts(
    g: Graph,
    restarts: int = 20,
    rank: int | None = None,
    tol: float = 1e-12,
    max_sweeps: int = 20000,
    seed: int = 0,
) -> VectorSolution:
    """Best of several random starts, run as one batch; full rank by default."""
    k = g.n if rank is None else int(rank)
    rng = np.random.default_rng(seed)
    X = _random_unit(rng, (restarts, g.n, k))
    obj, sweeps, improvement, _ = _mix(g, X, tol, max_sweeps)
    best = int(np.argmax(obj))
    return VectorSolution(g, X[best].copy(), float(obj[best]), sweeps, bool(improvement[best] < tol), float(improvement[best]))


def angle_profile(sol: VectorSolution, eta: float) -> AngleProfile:
    if not 0 < eta <= 0.01:
        raise ValueError("eta must lie in (0, 0.01]")
    g = sol.graph
    if g.m:
        e = np.asarray(g.edges)
        dots = np.einsum("ij,ij->i", sol.vectors[e[:, 0]], sol.vectors[e[:, 1]])
        theta = np.arccos(np.clip(dots, -1.0, 1.0))
    else:
        theta = np.zeros(0)
    near_zero = theta <= math.pi / 8 * eta + ANGLE_SLACK
    near_pi = np.abs(theta - math.pi) <= math.sqrt(eta) + ANGLE_SLACK
    below = (theta <= 2 * math.pi / 3 + ANGLE_SLACK) & ~near_zero
    return AngleProfile(float(eta), theta, near_zero, near_pi, below)


def gw_ratio(theta: float) -> float:
    return 2 / math.pi * theta / (1 - math.cos(theta))


def alpha_gw_constants() -> tuple[float, float]:
    """``(alpha_GW, theta_c)`` by bisection on the stationarity condition.

    ``d/dtheta [theta / (1 - cos theta)] = 0`` reduces to
    ``1 - cos theta - theta sin theta = 0``, which changes sign once on
    ``[2, 3]``.
    """
    lo, hi = 2.0, 3.0
    h = lambda t: 1 - math.cos(t) - t * math.sin(t)  # noqa: E731
    while hi - lo > 1e-15:
        mid = 0.5 * (lo + hi)
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
    theta_c = 0.5 * (lo + hi)
    return gw_ratio(theta_c), theta_c


def format_solution(sol: VectorSolution) -> str:
    n, k = sol.vectors.shape
    out = [f"{n} {k}"]
    out += [" ".join(f"{x:.17g}" for x in row) for row in sol.vectors]
    return "\n".join(out) + "\n"


def parse_solution(text: str, g: Graph) -> VectorSolution:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty solution file")
    lineno, toks = lines[0]
    try:
        n, k = (int(t) for t in toks)
    except ValueError:
        raise FormatError("header must be 'n k'", lineno) from None
    if n != g.n:
        raise FormatError(f"solution has {n} vectors, graph has {g.n} vertices", lineno)
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} vector lines, found {len(lines) - 1}", lineno)
    rows = []
    for lineno, toks in lines[1:]:
        if len(toks) != k:
            raise FormatError(f"expected {k} coordinates", lineno)
        try:
            rows.append([float(t) for t in toks])
        except ValueError:
            raise FormatError("non-numeric coordinate", lineno) from None
    X = np.asarray(rows, dtype=float).reshape(n, k)
    return VectorSolution(g, X, sdp_objective(g, X))
