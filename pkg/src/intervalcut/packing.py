"""Edge-disjoint triangle packings.

The clique packing labels the clique's vertices ``0..n-1`` and keeps every
triangle whose label sum lands in the most popular residue mod ``n``. For a
fixed edge ``ij`` and residue ``l`` the third vertex ``(l - i - j) mod n`` is
unique, so one residue class is automatically edge-disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Edge, FormatError, Graph, _data_lines, _ints, norm_edge

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class TrianglePacking:
    triangles: tuple[Triangle, ...]
    host: Graph

    def __len__(self) -> int:
        return len(self.triangles)

    def edges(self) -> set[Edge]:
        return {e for tri in self.triangles for e in triangle_edges(tri)}


@dataclass(frozen=True)
class Violation:
    triangle: Triangle
    edge: Edge
    reason: str


def triangle_edges(tri: Sequence[int]) -> tuple[Edge, Edge, Edge]:
    u, v, w = tri
    return norm_edge(u, v), norm_edge(u, w), norm_edge(v, w)


def residue_counts(n: int) -> np.ndarray:
    """Number of triples ``i<j<k`` of ``range(n)`` with ``i+j+k = l (mod n)``, per ``l``."""
    I, J = np.triu_indices(n, 1)
    s = (I + J) % n
    return np.array([np.count_nonzero((l - s) % n > J) for l in range(n)], dtype=np.int64)


def pack_clique(vertices: Sequence[int], host: Graph) -> TrianglePacking:
    vs = sorted(set(vertices))
    n = len(vs)
    if n < 3:
        raise ValueError(f"clique packing needs at least 3 vertices, got {n}")
    if not host.is_clique(vs):
        raise ValueError("vertices do not form a clique in the host graph")
    label = int(np.argmax(residue_counts(n)))  # argmax returns the smallest maximizing label
    I, J = np.triu_indices(n, 1)
    s = (I + J) % n
    K = (label - s) % n
    keep = K > J
    tris = []
    used: set[tuple[int, int]] = set()
    for i, j, k in zip(I[keep].tolist(), J[keep].tolist(), K[keep].tolist()):
        for e in ((i, j), (i, k), (j, k)):
            assert e not in used, f"label class {label} reuses edge {e}"
            used.add(e)
        tris.append((vs[i], vs[j], vs[k]))
    tris.sort()
    return TrianglePacking(tuple(tris), host)


def pack_bag(bag_small: Iterable[int], host: Graph) -> tuple[TrianglePacking, Edge | None]:
    """Pack triangles into the edges at a clique of small vertices.

    Returns ``(packing, bridge)``. ``bridge`` is set only for a two-vertex
    bag whose endpoints share no neighbor; that edge is then a bridge of a
    chordal host and the packing is empty.
    """
    vs = sorted(set(bag_small))
    if len(vs) < 2:
        raise ValueError("bag needs at least 2 vertices")
    if len(vs) >= 3:
        return pack_clique(vs, host), None
    v1, v2 = vs
    if not host.has_edge(v1, v2):
        raise ValueError(f"bag {vs} is not a clique in the host graph")
    common = sorted(set(host.neighbors(v1)) & set(host.neighbors(v2)))
    if common:
        return TrianglePacking((tuple(sorted((v1, v2, common[0]))),), host), None
    return TrianglePacking((), host), (v1, v2)


def verify_packing(p: TrianglePacking) -> Violation | None:
    """First violation of edge-existence or edge-disjointness, or ``None``."""
    used: dict[Edge, Triangle] = {}
    for tri in p.triangles:
        if len(set(tri)) != 3:
            return Violation(tri, norm_edge(tri[0], tri[1]), "repeated vertex in triangle")
        for e in triangle_edges(tri):
            if not p.host.has_edge(*e):
                return Violation(tri, e, f"edge {e} missing from host")
            if e in used:
                return Violation(tri, e, f"edge {e} already used by {used[e]}")
            used[e] = tri
    return None


def format_packing(p: TrianglePacking) -> str:
    out = [str(len(p))]
    out += [f"{u} {v} {w}" for u, v, w in p.triangles]
    return "\n".join(out) + "\n"


def parse_packing(text: str, host: Graph) -> TrianglePacking:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty packing file")
    lineno, toks = lines[0]
    (t,) = _ints(toks, 1, lineno)
    if len(lines) - 1 != t:
        raise FormatError(f"header declares {t} triangles, found {len(lines) - 1}", lineno)
    tris = []
    for lineno, toks in lines[1:]:
        u, v, w = _ints(toks, 3, lineno)
        tris.append(tuple(sorted((u, v, w))))
    return TrianglePacking(tuple(tris), host)
