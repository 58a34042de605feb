"""Win-win structural decompositions: a near-complete cut or a triangle packing."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Cut, Edge, Graph, SplitPartition, bridges_of, norm_edge, two_color_edge_set
from .intervals import IntervalModel, bag_sizes, breakpoints, classify
from .packing import TrianglePacking, pack_bag, pack_clique, verify_packing

BIG_CUT = "BigCut"
PACKED = "Packed"
CUT_FRACTION = 0.9
PACKED_FRACTION = 0.01


@dataclass(frozen=True)
class PackStep:
    t: int
    members: tuple[int, ...]
    degree_sum: int
    triangles: int


@dataclass(frozen=True)
class DecompositionOutcome:
    branch: str
    cut: Cut | None
    packing: TrianglePacking | None
    bridges_A: tuple[Edge, ...]
    packed_edges_T: frozenset[Edge]
    iterations: int
    certified_edges: tuple[Edge, ...] = ()
    steps: tuple[PackStep, ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        out: dict = {"branch": self.branch}
        if self.cut is not None:
            out["cut_side"] = self.cut.bitstring()
            out["cut_size"] = self.cut.size
        if self.packing is not None:
            out["triangles"] = [list(t) for t in self.packing.triangles]
        out["bridges"] = [list(e) for e in self.bridges_A]
        out["packed_edge_count"] = len(self.packed_edges_T)
        out["iterations"] = self.iterations
        return out


def split_tradeoff(g: Graph, part: SplitPartition) -> DecompositionOutcome:
    """Cut at the clique side if it carries 90% of the edges, else pack the clique."""
    part.validate(g)
    clique = part.clique
    cross = tuple(e for e in g.edges if (e[0] in clique) != (e[1] in clique))
    if len(cross) >= CUT_FRACTION * g.m:
        cut = Cut.from_side(g, [v in clique for v in range(g.n)], "structural-cut")
        return DecompositionOutcome(BIG_CUT, cut, None, (), frozenset(), 0, cross)

    if len(clique) < 3:
        # a non-maximal clique side: an I vertex seeing all of K extends it
        grow = [v for v in sorted(part.independent) if all(g.has_edge(v, k) for k in clique)]
        if grow:
            clique = clique | {grow[0]}
    if len(clique) < 3:
        # triangle-free split graphs are forests, so every edge can be cut
        cut = Cut.from_side(g, two_color_edge_set(g, g.edges), "structural-cut")
        return DecompositionOutcome(BIG_CUT, cut, None, (), frozenset(), 0, g.edges)

    packing = pack_clique(sorted(clique), g)
    inner = frozenset(e for e in g.edges if e[0] in clique and e[1] in clique)
    return DecompositionOutcome(PACKED, None, packing, (), inner, 0)


class _WorkingGraph:
    def __init__(self, g: Graph):
        self.adj = [set(a) for a in g.adjacency]
        self.alive = set(range(g.n))

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        for u in self.adj[v]:
            self.adj[u].discard(v)
        self.adj[v] = set()
        self.alive.discard(v)

    def incident(self, v: int) -> set[Edge]:
        return {norm_edge(v, u) for u in self.adj[v]}

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def snapshot(self) -> Graph:
        return Graph(len(self.adj), tuple((u, v) for u in range(len(self.adj)) for v in self.adj[u] if u < v))


def _find_bag(m: IntervalModel, w: _WorkingGraph, small: frozenset[int], eps: float):
    alive = sorted(w.alive)
    pts = breakpoints(m, alive)
    if not pts:
        return None
    total = bag_sizes(m, pts, alive)
    nsmall = bag_sizes(m, pts, sorted(small))
    ok = (nsmall >= 2) & (nsmall >= eps * total)
    for idx in np.flatnonzero(ok):
        t = pts[int(idx)]
        members = [v for v in small if m.left[v] <= t < m.right[v]]
        # an earlier bridge deletion can leave a two-vertex bag non-adjacent
        if all(u in w.adj[v] for i, v in enumerate(members) for u in members[i + 1:]):
            return t, sorted(members)
    return None


def interval_maxcut(m: IntervalModel, T: float = 200, eps: float = 0.01) -> DecompositionOutcome:
    """Run the interval-graph decomposition loop to completion.

    Each round removes a bridge (into ``A``), or packs the small vertices of
    the first qualifying bag and deletes them (their edges go into the packed
    set), or stops with the cut certified by ``delta(S) | A``. The loop ends
    with a packing once more than 1% of the edges are packed.
    """
    g = m.graph
    w = _WorkingGraph(g)
    bridges: list[Edge] = []
    packed: set[Edge] = set()
    triangles: list[tuple[int, int, int]] = []
    steps: list[PackStep] = []
    iterations = 0
    while len(packed) <= PACKED_FRACTION * g.m:
        found = bridges_of(w.adj, w.alive)
        if found:
            # deleting a bridge never creates or destroys other bridges, and the
            # guard only watches the packed set, so one round per bridge is
            # equivalent to handling them together
            for e in found:
                bridges.append(e)
                w.remove_edge(*e)
                iterations += 1
            continue
        cls = classify(m, T, degrees=w.degrees(), alive=sorted(w.alive))
        hit = _find_bag(m, w, cls.small, eps)
        if hit is None:
            certified = {norm_edge(u, v) for u in cls.small for v in w.adj[u] if v in cls.large}
            certified.update(bridges)
            side = two_color_edge_set(g, sorted(certified))
            cut = Cut.from_side(g, side, "bridge-augmented" if bridges else "structural-cut")
            return DecompositionOutcome(
                BIG_CUT, cut, None, tuple(bridges), frozenset(packed), iterations,
                tuple(sorted(certified)), tuple(steps),
            )
        t, members = hit
        iterations += 1
        bag_packing, bridge = pack_bag(members, w.snapshot())
        if bridge is not None:
            bridges.append(bridge)
            w.remove_edge(*bridge)
            continue
        degree_sum = sum(len(w.adj[v]) for v in members)
        for v in members:
            packed |= w.incident(v)
        for v in members:
            w.remove_vertex(v)
        triangles.extend(bag_packing.triangles)
        steps.append(PackStep(t, tuple(members), degree_sum, len(bag_packing)))
    packing = TrianglePacking(tuple(triangles), g)
    return DecompositionOutcome(
        PACKED, None, packing, tuple(bridges), frozenset(packed), iterations, (), tuple(steps)
    )


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    bound: float
    ok: bool


@dataclass(frozen=True)
class AccountingReport:
    branch: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def big_cut_bound(m_edges: int, T: float, eps: float) -> float:
    return 0.99 * (1 - 4 * eps - 8 / T) * m_edges


def accounting_check(outcome: DecompositionOutcome, g: Graph, T: float = 200, eps: float = 0.01) -> AccountingReport:
    checks = []
    if outcome.branch == BIG_CUT:
        cut = outcome.cut
        assert cut is not None
        bound = big_cut_bound(g.m, T, eps)
        checks.append(Check("cut >= 0.99(1-4eps-8/T)|E|", cut.size, bound, cut.size >= bound))
        crossing = sum(1 for u, v in outcome.certified_edges if cut.side[u] != cut.side[v])
        checks.append(
            Check("certified edges all cross", crossing, len(outcome.certified_edges),
                  crossing == len(outcome.certified_edges))
        )
        checks.append(Check("cut >= |certified|", cut.size, len(outcome.certified_edges),
                            cut.size >= len(outcome.certified_edges)))
    else:
        p = outcome.packing
        assert p is not None
        npacked = len(outcome.packed_edges_T)
        checks.append(Check("|T| > 0.01|E|", npacked, PACKED_FRACTION * g.m, npacked > PACKED_FRACTION * g.m))
        rate = math.ceil(eps / (30 * T) * npacked)
        checks.append(Check("packing >= ceil(eps/(30T)|T|)", len(p), rate, len(p) >= rate))
        bad = verify_packing(TrianglePacking(p.triangles, g))
        checks.append(Check("packing valid on input graph", 0 if bad else 1, 1, bad is None))
        for s in outcome.steps:
            need = eps / (30 * T) * s.degree_sum
            if s.triangles < need:
                checks.append(Check(f"bag at t={s.t} packs eps/(30T) of its degree", s.triangles, need, False))
    return AccountingReport(outcome.branch, tuple(checks))
