"""Simple undirected graphs, cuts, bridges and split partitions.

Vertices are dense integers ``0..n-1``; every tie-break in the package is by
vertex id so that results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]

PROVENANCES = frozenset(
    {"structural-cut", "bridge-augmented", "gw-round", "perturbed-round", "oracle"}
)


class FormatError(ValueError):
    """Malformed instance file. ``lineno`` is 1-based (0 when unknown)."""

    def __init__(self, msg: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)


class OddCycleError(RuntimeError):
    """An edge set that should be bipartite contains an odd cycle."""

    def __init__(self, cycle_edge: Edge, msg: str):
        self.cycle_edge = cycle_edge
        super().__init__(msg)


class NotSplitError(ValueError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_set: frozenset[Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        edges = tuple(sorted(seen))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_edge_set", frozenset(seen))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple(norm_edge(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def complement(self) -> "Graph":
        present = self.edge_set()
        return Graph(self.n, tuple(e for e in combinations(range(self.n), 2) if e not in present))

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = {norm_edge(*e) for e in removed}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def connected_components(self) -> list[list[int]]:
        return _components(self.adjacency, range(self.n))


@dataclass(frozen=True)
class Cut:
    side: tuple[bool, ...]
    size: int
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @classmethod
    def from_side(cls, g: Graph, side: Sequence[bool], provenance: str) -> "Cut":
        side = tuple(bool(s) for s in side)
        return cls(side, cut_size(g, side), provenance)

    def bitstring(self) -> str:
        return "".join("1" if s else "0" for s in self.side)


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def validate(self, g: Graph) -> None:
        """Raise ``NotSplitError`` unless this is a split partition of ``g``."""
        if self.clique & self.independent:
            raise NotSplitError("clique and independent parts overlap")
        if self.clique | self.independent != frozenset(range(g.n)):
            raise NotSplitError("parts do not cover the vertex set")
        if not g.is_clique(sorted(self.clique)):
            raise NotSplitError("clique part is not a clique")
        for v in self.independent:
            for u in g.neighbors(v):
                if u in self.independent:
                    raise NotSplitError(f"independent part contains edge {norm_edge(u, v)}")


def cut_size(g: Graph, side: Sequence[bool]) -> int:
    if len(side) != g.n:
        raise ValueError(f"side has length {len(side)}, graph has {g.n} vertices")
    return sum(1 for u, v in g.edges if bool(side[u]) != bool(side[v]))


def _components(adj, vertices) -> list[list[int]]:
    seen = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def bridges_of(adj: Mapping[int, Iterable[int]] | Sequence[Iterable[int]], vertices: Iterable[int]) -> list[Edge]:
    """Bridges of the graph given as an adjacency lookup over ``vertices``.

    Iterative low-link DFS, one traversal per component. Works on plain
    adjacency so the decomposition loop can call it on its working graph.
    """
    order: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[Edge] = []
    counter = 0
    for root in sorted(vertices):
        if root in order:
            continue
        order[root] = low[root] = counter
        counter += 1
        # (vertex, parent, neighbor iterator); simple graphs so skipping the
        # parent vertex once is enough
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in order:
                    if order[w] < low[v]:
                        low[v] = order[w]
                else:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] > order[parent]:
                    out.append(norm_edge(parent, v))
    out.sort()
    return out


def find_bridges(g: Graph) -> list[Edge]:
    """Edges whose removal disconnects their component, sorted lexicographically."""
    return bridges_of(g.adjacency, range(g.n))


def two_color_edge_set(g: Graph, edge_subset: Iterable[Sequence[int]]) -> list[bool]:
    """Side assignment under which every edge of ``edge_subset`` crosses.

    Vertices touched by no subset edge get ``False``; each component of the
    subgraph is rooted at its smallest vertex, which also gets ``False``.
    Raises ``OddCycleError`` if the subset is not bipartite.
    """
    adj: dict[int, list[int]] = {}
    for u, v in edge_subset:
        u, v = int(u), int(v)
        if not g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) is not in the graph")
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    side: list[bool | None] = [None] * g.n
    for root in sorted(adj):
        if side[root] is not None:
            continue
        side[root] = False
        stack = [root]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if side[u] is None:
                    side[u] = not side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    e = norm_edge(u, v)
                    raise OddCycleError(
                        e,
                        f"edge subset is not bipartite: edge {e} closes an odd cycle "
                        f"({len(adj)} vertices touched)",
                    )
    return [bool(s) for s in side]


def find_split_partition(g: Graph) -> SplitPartition:
    """Split partition via the degree-sequence test, or ``NotSplitError``.

    With degrees sorted descending and ``m = max{i : d_i >= i-1}``, the graph
    is split iff ``sum(d[:m]) == m(m-1) + sum(d[m:])``; the ``m`` top-degree
    vertices (ties by id) then form the clique.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        raise NotSplitError("degree sequence fails the split characterization")
    clique = set(order[:m])
    indep = set(order[m:])
    # repair: a K vertex missing some K neighbor goes to I if its neighbors all lie in K
    for v in sorted(clique, key=lambda v: (deg[v], v)):
        if all(g.has_edge(v, u) for u in clique if u != v):
            continue
        if all(u in clique for u in g.neighbors(v)):
            clique.discard(v)
            indep.add(v)
    # an I vertex adjacent to all of K may join K (prefer K)
    for v in sorted(indep):
        if len(g.neighbors(v)) == len(clique) and all(u in clique for u in g.neighbors(v)):
            indep.discard(v)
            clique.add(v)
    part = SplitPartition(frozenset(clique), frozenset(indep))
    part.validate(g)
    return part


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, count, lineno):
    if len(tokens) != count:
        raise FormatError(f"expected {count} integers, got {len(tokens)} tokens", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty edge-list file")
    lineno, toks = lines[0]
    n, m = _ints(toks, 2, lineno)
    if n < 0 or m < 0:
        raise FormatError("negative header value", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    edges = []
    seen = set()
    for lineno, toks in body:
        u, v = _ints(toks, 2, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise FormatError("self-loop", lineno)
        if norm_edge(u, v) in seen:
            raise FormatError(f"duplicate edge {norm_edge(u, v)}", lineno)
        seen.add(norm_edge(u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"
