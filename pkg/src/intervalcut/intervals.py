"""Half-open integer interval models, bags and the small/large split.

Vertex ``v`` owns ``[left[v], right[v])``; ``u ~ v`` iff
``left[u] < right[v] and left[v] < right[u]``. Touching intervals are not
adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import FormatError, Graph, _data_lines, _ints

INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1


@dataclass(frozen=True)
class IntervalModel:
    left: tuple[int, ...]
    right: tuple[int, ...]
    graph: Graph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise ValueError("left and right endpoint lists differ in length")
        for v, (l, r) in enumerate(zip(self.left, self.right)):
            if not (INT64_MIN <= l <= INT64_MAX and INT64_MIN <= r <= INT64_MAX):
                raise ValueError(f"interval of vertex {v} does not fit in int64")
            if not l < r:
                raise ValueError(f"interval of vertex {v} is empty: [{l}, {r})")
        object.__setattr__(self, "graph", _derive_graph(self.left, self.right))

    @classmethod
    def from_intervals(cls, intervals: Iterable[Sequence[int]]) -> "IntervalModel":
        ivs = [(int(l), int(r)) for l, r in intervals]
        return cls(tuple(l for l, _ in ivs), tuple(r for _, r in ivs))

    @classmethod
    def from_real(cls, intervals: Iterable[Sequence[float]]) -> "IntervalModel":
        """Rank-normalize real half-open intervals onto integers.

        Dense ranks keep every ``<``/``==`` relation between endpoints, so the
        intersection pattern is unchanged.
        """
        ivs = [(float(l), float(r)) for l, r in intervals]
        ranks = {x: i for i, x in enumerate(sorted({x for iv in ivs for x in iv}))}
        return cls.from_intervals((ranks[l], ranks[r]) for l, r in ivs)

    @property
    def n(self) -> int:
        return len(self.left)

    def intervals(self) -> list[tuple[int, int]]:
        return list(zip(self.left, self.right))


@dataclass(frozen=True)
class Bag:
    t: int
    members: frozenset[int]


@dataclass(frozen=True)
class Classification:
    small: frozenset[int]
    large: frozenset[int]
    minbag: tuple[int, ...]
    threshold: float


def _derive_graph(left, right) -> Graph:
    order = sorted(range(len(left)), key=lambda v: (left[v], v))
    active: list[int] = []
    edges = []
    for v in order:
        active = [u for u in active if right[u] > left[v]]
        edges.extend((u, v) for u in active)
        active.append(v)
    return Graph.from_edges(len(left), edges)


def event_points(m: IntervalModel) -> list[int]:
    """Sorted distinct left endpoints; maximal bags sit at these points."""
    return sorted(set(m.left))


def breakpoints(m: IntervalModel, alive: Iterable[int] | None = None) -> list[int]:
    """Sorted distinct endpoints (left and right) of the given vertices.

    The bag ``B_t`` is constant on ``[p_i, p_{i+1})`` between consecutive
    breakpoints, so minima and maxima of any bag statistic over an interval
    are attained at breakpoints inside it.
    """
    vs = range(m.n) if alive is None else alive
    pts = set()
    for v in vs:
        pts.add(m.left[v])
        pts.add(m.right[v])
    return sorted(pts)


def bag_at(m: IntervalModel, t: int, alive: Iterable[int] | None = None) -> Bag:
    vs = range(m.n) if alive is None else alive
    return Bag(t, frozenset(v for v in vs if m.left[v] <= t < m.right[v]))


def bag_sizes(m: IntervalModel, points: Sequence[int], alive: Sequence[int] | None = None) -> np.ndarray:
    """``|B_t|`` for every ``t`` in ``points`` (restricted to ``alive``)."""
    vs = np.arange(m.n) if alive is None else np.asarray(list(alive), dtype=np.int64)
    left = np.sort(np.asarray(m.left, dtype=np.int64)[vs])
    right = np.sort(np.asarray(m.right, dtype=np.int64)[vs])
    pts = np.asarray(points, dtype=np.int64)
    started = np.searchsorted(left, pts, side="right")
    ended = np.searchsorted(right, pts, side="right")
    return started - ended


def _min_bags(m: IntervalModel, vs: Sequence[int]) -> dict[int, int]:
    pts = breakpoints(m, vs)
    sizes = bag_sizes(m, pts, vs)
    arr = np.asarray(pts, dtype=np.int64)
    out = {}
    for v in vs:
        lo = int(np.searchsorted(arr, m.left[v], side="left"))
        hi = int(np.searchsorted(arr, m.right[v], side="left"))
        out[v] = int(sizes[lo:hi].min())
    return out


def min_bag(m: IntervalModel, v: int) -> int:
    """Smallest bag over ``v``'s own interval (always >= 1: ``v`` is in it)."""
    return _min_bags(m, range(m.n))[v]


def min_bags(m: IntervalModel, alive: Sequence[int] | None = None) -> dict[int, int]:
    return _min_bags(m, list(range(m.n)) if alive is None else list(alive))


def classify(
    m: IntervalModel,
    T: float,
    degrees: Sequence[int] | None = None,
    alive: Sequence[int] | None = None,
) -> Classification:
    """Small vertices have ``d_v <= T * minbag_v``; the rest are large.

    ``degrees``/``alive`` let the decomposition classify its working graph:
    degrees come from that graph, bags from the intervals still present.
    Dead vertices are left out of both sets and get minbag 0.
    """
    if not T > 0:
        raise ValueError("threshold T must be positive")
    vs = list(range(m.n)) if alive is None else sorted(alive)
    deg = m.graph.degrees() if degrees is None else degrees
    mb = _min_bags(m, vs) if vs else {}
    small = frozenset(v for v in vs if deg[v] <= T * mb[v])
    large = frozenset(vs) - small
    return Classification(small, large, tuple(mb.get(v, 0) for v in range(m.n)), float(T))


def parse_intervals(text: str) -> IntervalModel:
    """Parse ``n`` followed by ``n`` lines ``id l r``."""
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty interval file")
    lineno, toks = lines[0]
    (n,) = _ints(toks, 1, lineno)
    if n < 0:
        raise FormatError("negative vertex count", lineno)
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"header declares {n} intervals, found {len(body)}", body[-1][0] if body else lineno)
    ivs: list[tuple[int, int] | None] = [None] * n
    for lineno, toks in body:
        v, l, r = _ints(toks, 3, lineno)
        if not 0 <= v < n:
            raise FormatError(f"id {v} out of range 0..{n - 1}", lineno)
        if ivs[v] is not None:
            raise FormatError(f"duplicate id {v}", lineno)
        if not l < r:
            raise FormatError(f"empty interval [{l}, {r})", lineno)
        if not (INT64_MIN <= l <= INT64_MAX and INT64_MIN <= r <= INT64_MAX):
            raise FormatError("endpoint does not fit in int64", lineno)
        ivs[v] = (l, r)
    return IntervalModel.from_intervals(ivs)  # type: ignore[arg-type]


def format_intervals(m: IntervalModel) -> str:
    out = [str(m.n)]
    out += [f"{v} {l} {r}" for v, (l, r) in enumerate(m.intervals())]
    return "\n".join(out) + "\n"


# triangle 1-2-3 with pendant vertices 0 and 4
PENDANT_TRIANGLE = IntervalModel.from_intervals([(0, 4), (3, 10), (5, 9), (8, 13), (11, 14)])
