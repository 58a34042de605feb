"""Hyperplane rounding, the perturbed variant, and the end-to-end pipeline.

Randomness: trial ``i`` of a run seeded with ``seed`` draws from
``numpy.random.default_rng(SeedSequence([seed, i]))`` (PCG64). It consumes
the Gaussian direction first (``standard_normal``, numpy's ziggurat
sampler), one coordinate per rank dimension, then one fair coin per vertex
in id order via ``integers(0, 2, n)``. Trials are therefore independent of
how they are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .decompose import PACKED, DecompositionOutcome, interval_maxcut, split_tradeoff
from .graph import Cut, Graph, SplitPartition, two_color_edge_set
from .intervals import IntervalModel
from .sdp import VectorSolution, solve_sdp


@dataclass(frozen=True)
class RoundingConfig:
    eta: float | None = None
    trials: int = 100
    seed: int = 0
    t_packing: float | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.eta is not None and self.eta < 0:
            raise ValueError("eta must be >= 0")
        if self.t_packing is not None and self.t_packing < 0:
            raise ValueError("packing density must be >= 0")

    @classmethod
    def from_packing(cls, t: float, trials: int = 100, seed: int = 0) -> "RoundingConfig":
        return cls(eta_for_packing(t), trials, seed, t)

    @property
    def effective_eta(self) -> float:
        if self.eta is not None:
            return self.eta
        if self.t_packing is not None:
            return eta_for_packing(self.t_packing)
        return 0.0


def eta_for_packing(t: float) -> float:
    return t * t / 1e4


@dataclass(frozen=True)
class RoundingTrial:
    r: np.ndarray
    projections: np.ndarray
    s: np.ndarray
    s_prime: np.ndarray
    cut_S: int
    cut_Sprime: int


def trial_rng(seed: int, i: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(i)]))


def _draw(sol: VectorSolution, seed: int, trials: int, coins: bool):
    n, k = sol.vectors.shape
    R = np.empty((trials, k))
    C = np.empty((trials, n), dtype=bool) if coins else None
    for i in range(trials):
        rng = trial_rng(seed, i)
        R[i] = rng.standard_normal(k)
        if coins:
            C[i] = rng.integers(0, 2, n).astype(bool)
    return R, C


def _cut_sizes(g: Graph, sides: np.ndarray) -> np.ndarray:
    if g.m == 0:
        return np.zeros(sides.shape[0], dtype=np.int64)
    e = np.asarray(g.edges)
    return np.count_nonzero(sides[:, e[:, 0]] != sides[:, e[:, 1]], axis=1)


def _best(g: Graph, sides: np.ndarray, sizes: np.ndarray, provenance: str) -> Cut:
    i = int(np.argmax(sizes))  # first maximal trial wins ties
    return Cut(tuple(bool(x) for x in sides[i]), int(sizes[i]), provenance)


def rounding_trial(sol: VectorSolution, eta: float, seed: int, i: int) -> RoundingTrial:
    """Replay trial ``i`` in full detail."""
    R, C = _draw(sol, seed, i + 1, coins=True)
    proj = sol.vectors @ R[i]
    s = proj >= 0
    sp = np.where(np.abs(proj) < eta, C[i], s)
    sizes = _cut_sizes(sol.graph, np.vstack([s, sp]))
    return RoundingTrial(R[i], proj, s, sp, int(sizes[0]), int(sizes[1]))


def round_gw(sol: VectorSolution, trials: int = 100, seed: int = 0) -> Cut:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    R, _ = _draw(sol, seed, trials, coins=False)
    sides = (R @ sol.vectors.T) >= 0
    return _best(sol.graph, sides, _cut_sizes(sol.graph, sides), "gw-round")


def perturbed_sides(sol: VectorSolution, eta: float, seed: int, trials: int):
    """Plain and perturbed side matrices, shape (trials, n), from shared directions."""
    R, C = _draw(sol, seed, trials, coins=True)
    proj = R @ sol.vectors.T
    s = proj >= 0
    sp = np.where(np.abs(proj) < eta, C, s)
    return proj, s, sp


def round_perturbed(sol: VectorSolution, cfg: RoundingConfig) -> tuple[Cut, Cut]:
    """Best plain cut and best perturbed cut over ``cfg.trials`` shared draws."""
    _, s, sp = perturbed_sides(sol, cfg.effective_eta, cfg.seed, cfg.trials)
    g = sol.graph
    return _best(g, s, _cut_sizes(g, s), "gw-round"), _best(g, sp, _cut_sizes(g, sp), "perturbed-round")


class CutEstimate(NamedTuple):
    p_plain: float
    p_perturbed: float
    se_plain: float
    se_perturbed: float
    samples: int


def _se(p: float, n: int) -> float:
    return math.sqrt(max(p * (1 - p), 1.0 / n) / n)


def estimate_cut_probabilities(theta: float, eta: float, samples: int = 100_000, seed: int = 0) -> CutEstimate:
    """Monte-Carlo cut probabilities of one edge at angle ``theta``.

    Uses ``x_u = (1, 0)`` and ``x_v = (cos theta, sin theta)``; the plain
    estimate should track ``theta / pi``.
    """
    if not 0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi]")
    if samples < 10_000:
        raise ValueError("need at least 10^4 samples")
    rng = np.random.default_rng(seed)
    r = rng.standard_normal((samples, 2))
    coins = rng.integers(0, 2, (samples, 2)).astype(bool)
    pu = r[:, 0]
    pv = r[:, 0] * math.cos(theta) + r[:, 1] * math.sin(theta)
    su, sv = pu >= 0, pv >= 0
    su2 = np.where(np.abs(pu) < eta, coins[:, 0], su)
    sv2 = np.where(np.abs(pv) < eta, coins[:, 1], sv)
    p = float(np.mean(su != sv))
    q = float(np.mean(su2 != sv2))
    return CutEstimate(p, q, _se(p, samples), _se(q, samples), samples)


def estimate_small_gaussian_mass(x: float, samples: int = 1_000_000, seed: int = 0) -> tuple[float, float]:
    """Empirical ``P[|r| <= x]`` for standard normal ``r``, with its standard error."""
    r = np.random.default_rng(seed).standard_normal(samples)
    p = float(np.mean(np.abs(r) <= x))
    return p, _se(p, samples)


@dataclass
class PipelineResult:
    cut: Cut
    branch: str
    eta: float | None = None
    sdp_objective: float | None = None
    packing_density: float | None = None
    outcome: DecompositionOutcome | None = field(default=None, repr=False)
    candidates: tuple[Cut, ...] = field(default=(), repr=False)

    def to_json(self, cfg: RoundingConfig) -> dict:
        ratio = None
        if self.sdp_objective:
            ratio = self.cut.size / self.sdp_objective
        return {
            "size": self.cut.size,
            "side": self.cut.bitstring(),
            "provenance": self.cut.provenance,
            "branch": self.branch,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "eta": self.eta,
            "sdp_objective": self.sdp_objective,
            "ratio_vs_sdp": ratio,
        }


def pipeline_solve(
    g: Graph,
    representation: IntervalModel | SplitPartition | None = None,
    cfg: RoundingConfig = RoundingConfig(),
    *,
    T: float = 200,
    eps: float = 0.01,
    rank: int | None = None,
) -> PipelineResult:
    """Decompose by graph class, then cut directly or round the SDP.

    Without a representation this is plain rounding at ``cfg.eta`` (0 unless
    given). In the packed branch ``eta`` defaults to ``t^2 / 10^4`` with
    ``t`` the packing size over ``|E|``.
    """
    outcome = None
    structural: list[Cut] = []
    if isinstance(representation, IntervalModel):
        if representation.graph.edges != g.edges or representation.n != g.n:
            raise ValueError("interval model does not realize the given graph")
        outcome = interval_maxcut(representation, T, eps)
    elif isinstance(representation, SplitPartition):
        outcome = split_tradeoff(g, representation)
    elif representation is not None:
        raise TypeError(f"unsupported representation {type(representation).__name__}")

    if outcome is not None and outcome.branch != PACKED:
        assert outcome.cut is not None
        return PipelineResult(outcome.cut, outcome.branch, outcome=outcome, candidates=(outcome.cut,))

    density = None
    eta = cfg.effective_eta
    if outcome is not None:
        assert outcome.packing is not None
        density = len(outcome.packing) / g.m
        if cfg.eta is None:
            eta = eta_for_packing(density)
        if isinstance(representation, SplitPartition):
            structural.append(Cut.from_side(g, [v in representation.clique for v in range(g.n)], "structural-cut"))
        if outcome.bridges_A:
            structural.append(Cut.from_side(g, two_color_edge_set(g, outcome.bridges_A), "bridge-augmented"))

    sol = solve_sdp(g, rank=rank, seed=cfg.seed)
    plain, perturbed = round_perturbed(sol, RoundingConfig(eta, cfg.trials, cfg.seed, density))
    candidates = (plain, perturbed, *structural)
    best = max(candidates, key=lambda c: c.size)  # max keeps the first on ties
    branch = outcome.branch if outcome is not None else "plain"
    return PipelineResult(best, branch, eta, sol.objective, density, outcome, candidates)
