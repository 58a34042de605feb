"""Exact brute-force references used as ground truth in tests and benches."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph, norm_edge

CHUNK_BITS = 20


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices_cut: int = 22
    max_edges_packing: int = 30
    time_limit: float | None = None


DEFAULT_BUDGET = OracleBudget()


def _lex_key(masks: np.ndarray, nbits: int) -> np.ndarray:
    # bit j of a mask is the side of the (j+1)-th enumerated vertex; the
    # earliest vertex must be the most significant digit of the key
    key = np.zeros_like(masks)
    for j in range(nbits):
        key |= ((masks >> j) & 1) << (nbits - 1 - j)
    return key


def _enumerate(n_free: int, edge_terms, extra, deadline):
    """Maximize over masks of ``n_free`` bits; returns (best value, best mask).

    ``edge_terms`` is a list of (bit_a, bit_b) pairs where bit -1 means the
    fixed-False vertex. ``extra(masks)`` adds any non-edge contribution.
    Among maximizers the lexicographically smallest side string wins.
    """
    total = 1 << n_free
    chunk = 1 << min(CHUNK_BITS, n_free)
    best_val, best_key, best_mask = -1, None, 0
    for start in range(0, total, chunk):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("oracle time limit exceeded")
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        vals = np.zeros(len(masks), dtype=np.int64)
        for a, b in edge_terms:
            if a < 0:
                vals += (masks >> b) & 1
            else:
                vals += ((masks >> a) ^ (masks >> b)) & 1
        if extra is not None:
            vals += extra(masks)
        top = int(vals.max())
        if top < best_val:
            continue
        cands = masks[vals == top]
        keys = _lex_key(cands, n_free)
        i = int(np.argmin(keys))
        if top > best_val or int(keys[i]) < best_key:
            best_val, best_key, best_mask = top, int(keys[i]), int(cands[i])
    return best_val, best_mask


def exact_maxcut(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, tuple[bool, ...]]:
    """Maximum cut by enumerating the ``2^(n-1)`` cuts with vertex 0 on side False.

    Returns the value and the lexicographically smallest maximizing side
    vector.
    """
    if g.n > budget.max_vertices_cut:
        raise BudgetExceeded(f"{g.n} vertices exceeds exact max-cut cap {budget.max_vertices_cut}")
    if g.n == 0:
        return 0, ()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    terms = [(u - 1, v - 1) for u, v in g.edges]
    val, mask = _enumerate(g.n - 1, terms, None, deadline)
    side = (False,) + tuple(bool((mask >> j) & 1) for j in range(g.n - 1))
    return val, side


def exact_maxcut_with_independent_set(
    g: Graph, independent: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, tuple[bool, ...]]:
    """Maximum cut enumerating only the vertices outside an independent set.

    Once the rest is fixed, each independent vertex independently takes the
    side opposite most of its neighbors, so only ``2^(n-|I|-1)`` cuts need
    to be checked. The cap applies to the enumerated part.
    """
    indep = sorted(set(independent))
    if not g.is_independent(indep):
        raise ValueError("given vertex set is not independent")
    iset = set(indep)
    core = [v for v in range(g.n) if v not in iset]
    if len(core) > budget.max_vertices_cut:
        raise BudgetExceeded(f"{len(core)} enumerated vertices exceeds cap {budget.max_vertices_cut}")
    if not core:
        return 0, tuple(False for _ in range(g.n))
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    pos = {v: i - 1 for i, v in enumerate(core)}  # core[0] is fixed False -> -1
    terms = []
    for u, v in g.edges:
        if u in pos and v in pos:
            a, b = sorted((pos[u], pos[v]))
            terms.append((a, b))
    nbr_bits = [[pos[u] for u in g.neighbors(v)] for v in indep]

    def extra(masks):
        out = np.zeros(len(masks), dtype=np.int64)
        for bits in nbr_bits:
            ones = np.zeros(len(masks), dtype=np.int64)
            for b in bits:
                if b >= 0:
                    ones += (masks >> b) & 1
            out += np.maximum(ones, len(bits) - ones)
        return out

    val, mask = _enumerate(len(core) - 1, terms, extra, deadline)
    side = [False] * g.n
    for v, b in pos.items():
        side[v] = b >= 0 and bool((mask >> b) & 1)
    for v in indep:
        ones = sum(side[u] for u in g.neighbors(v))
        side[v] = ones < len(g.neighbors(v)) - ones
    return val, tuple(side)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        later = [v for v in g.neighbors(u) if v > u]
        for v, w in combinations(later, 2):
            if g.has_edge(v, w):
                out.append((u, v, w))
    return out


def exact_triangle_packing(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum number of edge-disjoint triangles by branch and bound."""
    if g.m > budget.max_edges_packing:
        raise BudgetExceeded(f"{g.m} edges exceeds exact packing cap {budget.max_edges_packing}")
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    index = {e: i for i, e in enumerate(g.edges)}
    tris = triangles(g)
    masks = [(1 << index[norm_edge(u, v)]) | (1 << index[norm_edge(u, w)]) | (1 << index[norm_edge(v, w)])
             for u, v, w in tris]
    by_edge: dict[int, list[int]] = {i: [] for i in range(g.m)}
    for t, mk in enumerate(masks):
        for i in range(g.m):
            if mk >> i & 1:
                by_edge[i].append(t)

    # greedy lower bound in lexicographic order
    used, best = 0, 0
    for mk in masks:
        if not mk & used:
            used |= mk
            best += 1

    def search(blocked: int, count: int) -> None:
        nonlocal best
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("oracle time limit exceeded")
        live = [mk for mk in masks if not mk & blocked]
        if not live:
            best = max(best, count)
            return
        coverable = 0
        for mk in live:
            coverable |= mk
        if count + bin(coverable).count("1") // 3 <= best:
            return
        e = (coverable & -coverable).bit_length() - 1
        for t in by_edge[e]:
            if not masks[t] & blocked:
                search(blocked | masks[t], count + 1)
        search(blocked | (1 << e), count)

    search(0, 0)
    return best


def is_chordal(g: Graph) -> tuple[bool, list[int]]:
    """Maximum-cardinality search plus a perfect-elimination check.

    Returns the verdict and the elimination order (reverse of the search
    order); the order is a perfect elimination ordering iff the graph is
    chordal.
    """
    weight = [0] * g.n
    numbered = [False] * g.n
    visit = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        visit.append(v)
        for u in g.neighbors(v):
            if not numbered[u]:
                weight[u] += 1
    order = visit[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        # the earliest later neighbor must see all the others
        first = min(later, key=pos.__getitem__)
        nbrs = set(g.neighbors(first))
        if any(u != first and u not in nbrs for u in later):
            return False, order
    return True, order
