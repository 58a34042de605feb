from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervalcut.generators import small_split_example, gen_random_split
from intervalcut.graph import (
    Cut, FormatError, Graph, NotSplitError, OddCycleError, SplitPartition, cut_size, find_bridges,
    find_split_partition, format_edge_list, parse_edge_list, two_color_edge_set,
)
from reference import bridges_by_deletion, graphs, to_nx


class TestGraph:
    def test_rejects_self_loop_and_duplicates(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    @given(graphs())
    def test_degree_sum_and_symmetry(self, g):
        assert sum(g.degrees()) == 2 * g.m
        for v in range(g.n):
            for u in g.neighbors(v):
                assert v in g.neighbors(u)
            assert list(g.neighbors(v)) == sorted(g.neighbors(v))

    @given(graphs())
    def test_complement_partitions_pairs(self, g):
        c = g.complement()
        assert g.m + c.m == g.n * (g.n - 1) // 2
        assert not g.edge_set() & c.edge_set()


class TestCutSize:
    def test_small_cases(self):
        assert cut_size(Graph.complete(2), [False, True]) == 1
        assert cut_size(Graph.complete(4), [False, False, True, True]) == 4

    def test_five_cycle_bipartitions(self):
        c5 = Graph.cycle(5)
        sizes = [cut_size(c5, s) for s in product((False, True), repeat=5)]
        assert max(sizes) == 4

    @given(graphs(), st.data())
    def test_complementing_sides_keeps_size(self, g, data):
        s = data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n))
        assert cut_size(g, s) == cut_size(g, [not x for x in s])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cut_size(Graph.path(3), [True])

    def test_cut_record(self):
        g = Graph.cycle(4)
        c = Cut.from_side(g, [0, 1, 0, 1], "oracle")
        assert c.size == 4 and c.bitstring() == "0101"
        with pytest.raises(ValueError):
            Cut((True,), 0, "guess")


class TestBridges:
    def test_path_triangle_pendant(self):
        assert find_bridges(Graph.path(3)) == [(0, 1), (1, 2)]
        assert find_bridges(Graph.complete(3)) == []
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
        assert find_bridges(g) == [(2, 3)]

    @given(graphs(max_n=12))
    def test_matches_deletion_oracle(self, g):
        assert find_bridges(g) == bridges_by_deletion(g)

    @given(graphs(max_n=12))
    def test_matches_networkx(self, g):
        assert find_bridges(g) == sorted(tuple(sorted(e)) for e in nx.bridges(to_nx(g)))

    def test_long_path_no_recursion_limit(self):
        g = Graph.path(5000)
        assert len(find_bridges(g)) == 4999


class TestTwoColor:
    def test_single_edge_of_triangle(self):
        side = two_color_edge_set(Graph.complete(3), [(0, 1)])
        assert side[0] != side[1] and side[2] is False

    def test_odd_cycle_raises(self):
        with pytest.raises(OddCycleError):
            two_color_edge_set(Graph.complete(3), Graph.complete(3).edges)

    def test_edge_not_in_graph(self):
        with pytest.raises(ValueError):
            two_color_edge_set(Graph.path(3), [(0, 2)])

    @given(graphs(), st.data())
    def test_any_cut_subset_is_realized(self, g, data):
        S = data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n))
        subset = [e for e in g.edges if S[e[0]] != S[e[1]]]
        side = two_color_edge_set(g, subset)
        assert all(side[u] != side[v] for u, v in subset)
        assert cut_size(g, side) >= len(subset)
        touched = {v for e in subset for v in e}
        assert all(side[v] is False for v in range(g.n) if v not in touched)


class TestSplitPartition:
    def test_small_split_example(self):
        g, truth = small_split_example()
        part = find_split_partition(g)
        part.validate(g)
        assert len(part.clique) == 4

    def test_four_cycle_is_not_split(self):
        with pytest.raises(NotSplitError):
            find_split_partition(Graph.cycle(4))

    def test_complete(self):
        part = find_split_partition(Graph.complete(5))
        assert part.clique == frozenset(range(5)) and not part.independent

    def test_validate_rejects(self):
        g = Graph.path(3)
        with pytest.raises(NotSplitError):
            SplitPartition(frozenset({0, 2}), frozenset({1})).validate(g)
        with pytest.raises(NotSplitError):
            SplitPartition(frozenset({1}), frozenset({0})).validate(g)

    def test_random_split_graphs_detected(self):
        rng = np.random.default_rng(11)
        for i in range(200):
            nk, ni = int(rng.integers(0, 12)), int(rng.integers(0, 12))
            if nk + ni == 0:
                continue
            g, _ = gen_random_split(nk, ni, float(rng.uniform()), seed=i)
            part = find_split_partition(g)
            assert g.is_clique(sorted(part.clique))
            assert g.is_independent(sorted(part.independent))
            assert part.clique | part.independent == frozenset(range(g.n))

    @given(graphs(max_n=9))
    def test_verdict_matches_forbidden_subgraphs(self, g):
        # split graphs are exactly those with no induced 2K2, C4 or C5
        h = to_nx(g)
        bad = False
        for vs in combinations(range(g.n), 4):
            sub = h.subgraph(vs)
            degs = sorted(d for _, d in sub.degree())
            if sub.number_of_edges() == 2 and degs == [1, 1, 1, 1]:
                bad = True
            if sub.number_of_edges() == 4 and degs == [2, 2, 2, 2]:
                bad = True
        for vs in combinations(range(g.n), 5):
            sub = h.subgraph(vs)
            if sub.number_of_edges() == 5 and all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                bad = True
        if bad:
            with pytest.raises(NotSplitError):
                find_split_partition(g)
        else:
            find_split_partition(g).validate(g)


class TestEdgeListFormat:
    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# header\n3 2\n\n0 1  # first\n1 2\n")
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize(
        "text, lineno",
        [("3 2\n0 1\n", 2), ("2 1\n0 5\n", 2), ("2 1\n1 1\n", 2), ("3 2\n0 1\n1 0\n", 3), ("x y\n", 1), ("3 1\n0 a\n", 2)],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(FormatError) as exc:
            parse_edge_list(text)
        assert exc.value.lineno == lineno

    def test_empty(self):
        with pytest.raises(FormatError):
            parse_edge_list("# nothing\n")
