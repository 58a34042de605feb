"""Instance factories. Every generator is a pure function of its arguments."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any

import numpy as np

from .graph import Graph, SplitPartition
from .intervals import IntervalModel

KINDS = ("random-interval", "random-split", "segment-tree", "chordal-counterexample", "split-reduction")


def gen_random_interval(n: int, length_scale: int = 8, seed: int = 0) -> IntervalModel:
    """Left endpoints uniform in ``[0, 4n)``, integer lengths uniform in ``[1, length_scale]``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if length_scale < 1:
        raise ValueError("length_scale must be >= 1")
    rng = np.random.default_rng(seed)
    left = rng.integers(0, 4 * n, n)
    length = rng.integers(1, length_scale + 1, n)
    return IntervalModel(tuple(int(x) for x in left), tuple(int(x) for x in left + length))


def gen_random_split(n_clique: int, n_indep: int, attach_prob: float, seed: int = 0) -> tuple[Graph, SplitPartition]:
    if n_clique < 0 or n_indep < 0:
        raise ValueError("part sizes must be non-negative")
    if not 0 <= attach_prob <= 1:
        raise ValueError("attach_prob must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    K = range(n_clique)
    edges = list(combinations(K, 2))
    attach = rng.random((n_indep, n_clique)) < attach_prob
    for i in range(n_indep):
        edges.extend((k, n_clique + i) for k in K if attach[i, k])
    g = Graph.from_edges(n_clique + n_indep, edges)
    return g, SplitPartition(frozenset(K), frozenset(range(n_clique, n_clique + n_indep)))


def small_split_example() -> tuple[Graph, SplitPartition]:
    """Seven-vertex example: k1..k4 -> 0..3, i1..i3 -> 4..6."""
    k1, k2, k3, k4, i1, i2, i3 = range(7)
    edges = list(combinations((k1, k2, k3, k4), 2)) + [(k2, i1), (k4, i1), (k2, i2), (k4, i3)]
    return Graph.from_edges(7, edges), SplitPartition(frozenset({k1, k2, k3, k4}), frozenset({i1, i2, i3}))


def segment_tree_layers(k: int) -> list[list[int]]:
    """Vertex ids per layer; layer ``i`` holds ids ``2^i - 1 .. 2^(i+1) - 2``."""
    return [list(range(2**i - 1, 2 ** (i + 1) - 1)) for i in range(k)]


def gen_segment_tree(k: int) -> IntervalModel:
    """``k`` layers of dyadic intervals over ``[0, 2^(k-1))``; layer ``i`` has ``2^i`` of them."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ivs = []
    for i in range(k):
        w = 2 ** (k - 1 - i)
        ivs.extend((j * w, (j + 1) * w) for j in range(2**i))
    return IntervalModel.from_intervals(ivs)


def gen_chordal_counterexample(k: int) -> Graph:
    """Segment-tree graph with a pendant pair per edge and one universal vertex.

    Ids: the ``2^k - 1`` tree vertices first, then the universal vertex, then
    ``x_e, y_e`` for each tree edge ``e = (u, v)`` in sorted order, with
    ``x_e`` attached to ``u`` and ``y_e`` to ``v``.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    base = gen_segment_tree(k).graph
    w = base.n
    edges = list(base.edges)
    nxt = w + 1
    for u, v in base.edges:
        edges += [(u, nxt), (v, nxt + 1)]
        nxt += 2
    edges += [(z, w) for z in range(nxt) if z != w]
    return Graph.from_edges(nxt, edges)


def split_reduction(g: Graph) -> tuple[Graph, SplitPartition]:
    """Complete the vertex set into a clique and subdivide each edge by an independent vertex."""
    n = g.n
    edges = list(combinations(range(n), 2))
    for i, (u, v) in enumerate(g.edges):
        edges += [(u, n + i), (v, n + i)]
    h = Graph.from_edges(n + g.m, edges)
    return h, SplitPartition(frozenset(range(n)), frozenset(range(n, n + g.m)))


def gen_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@dataclass(frozen=True)
class Instance:
    graph: Graph
    interval: IntervalModel | None = None
    split: SplitPartition | None = None


@dataclass(frozen=True)
class GenSpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")

    def to_json(self) -> dict:
        return asdict(self)

    def build(self) -> Instance:
        p = self.params
        if self.kind == "random-interval":
            m = gen_random_interval(int(p["n"]), int(p.get("length_scale", 8)), self.seed)
            return Instance(m.graph, interval=m)
        if self.kind == "random-split":
            g, part = gen_random_split(int(p["n_clique"]), int(p["n_indep"]), float(p.get("attach_prob", 0.5)), self.seed)
            return Instance(g, split=part)
        if self.kind == "segment-tree":
            m = gen_segment_tree(int(p["k"]))
            return Instance(m.graph, interval=m)
        if self.kind == "chordal-counterexample":
            return Instance(gen_chordal_counterexample(int(p["k"])))
        base = gen_random_graph(int(p["n"]), float(p.get("density", 0.5)), self.seed)
        g, part = split_reduction(base)
        return Instance(g, split=part)
