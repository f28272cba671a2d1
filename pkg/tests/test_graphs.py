import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from icolor import (GraphError, SearchGuardError, build_graph, chromatic_index,
                    family, proper_edge_coloring, stats)
from conftest import brute_proper_feasible


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


class TestBuildGraph:
    def test_canonicalizes(self):
        G = build_graph(4, [(3, 0), (1, 0), (2, 3), (2, 1)])
        assert G.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_c4_shape(self):
        G = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert G.m == 4
        assert nx.is_isomorphic(to_nx(G), nx.cycle_graph(4))

    def test_k2(self):
        G = build_graph(2, [(0, 1)])
        assert G.edges == ((0, 1),)

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            build_graph(3, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            build_graph(2, [(0, 2)])

    def test_duplicate_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            build_graph(3, [(0, 1), (1, 0)])

    @given(st.integers(1, 6), st.data())
    def test_canonical_order_is_stable(self, n, data):
        pool = list(itertools.combinations(range(n), 2))
        edges = data.draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))) if pool else []
        G = build_graph(n, edges)
        again = build_graph(n, reversed(list(G.edges)))
        assert G.edges == again.edges
        assert list(G.edges) == sorted(G.edges)


class TestFamilies:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_hypercube_counts(self, n):
        G = family("hypercube", n)
        assert G.n == 2 ** n
        assert G.m == n * 2 ** (n - 1)
        assert stats(G).regular == n

    def test_path_cycle_complete_star_empty(self):
        assert family("path", 5).m == 4
        assert family("cycle", 6).m == 6
        assert family("complete", 5).m == 10
        assert family("star", 4).m == 4
        assert family("empty", 3).m == 0

    def test_petersen(self):
        G = family("petersen")
        s = stats(G)
        assert (G.n, G.m) == (10, 15)
        assert s.regular == 3 and s.diameter == 2 and not s.bipartite
        assert nx.is_isomorphic(to_nx(G), nx.petersen_graph())

    def test_sylvester_shape(self):
        G = family("sylvester")
        s = stats(G)
        assert (G.n, G.m) == (16, 24)
        assert s.regular == 3 and s.connected

    def test_sylvester_has_no_perfect_matching(self):
        # independent check: maximum matching smaller than n/2
        G = family("sylvester")
        matching = nx.max_weight_matching(to_nx(G), maxcardinality=True)
        assert len(matching) < G.n // 2

    def test_invalid_parameters(self):
        with pytest.raises(GraphError):
            family("cycle", 2)
        with pytest.raises(GraphError):
            family("path", 0)
        with pytest.raises(GraphError):
            family("nonsense", 3)

    def test_stats_isomorphism_fingerprints(self):
        # relabeled copies keep degree-sequence and diameter fingerprints
        for G in [family("hypercube", 3), family("petersen"), family("cycle", 6)]:
            g = to_nx(G)
            relabeled = nx.relabel_nodes(g, {v: (v * 7 + 3) % G.n for v in g})
            edges = [tuple(sorted(e)) for e in relabeled.edges]
            H = build_graph(G.n, edges)
            assert sorted(H.degrees) == sorted(G.degrees)
            assert stats(H).diameter == stats(G).diameter


class TestStats:
    def test_q3(self):
        s = stats(family("hypercube", 3))
        assert s.max_degree == 3 and s.bipartite and s.connected
        assert s.diameter == 3 and s.regular == 3

    def test_k23(self):
        G = build_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], "K23")
        s = stats(G)
        assert s.max_degree == 3 and s.bipartite and s.diameter == 2
        assert s.regular is None

    def test_disconnected(self):
        G = build_graph(4, [(0, 1), (2, 3)])
        s = stats(G)
        assert not s.connected and s.diameter is None


class TestChromaticIndex:
    def test_k4(self):
        assert chromatic_index(family("complete", 4)) == 3

    def test_c5(self):
        assert chromatic_index(family("cycle", 5)) == 3

    def test_petersen_vs_plain_refutation(self):
        P = family("petersen")
        assert not brute_proper_feasible(P, 3)  # the independent oracle
        assert chromatic_index(P) == 4

    def test_sylvester_class_two(self):
        assert chromatic_index(family("sylvester")) == 4

    def test_within_vizing_band(self, catalog):
        for G in catalog.values():
            delta = max(G.degrees)
            assert chromatic_index(G) in (delta, delta + 1)

    def test_guard(self):
        with pytest.raises(SearchGuardError):
            chromatic_index(family("complete", 13), guard=64)

    def test_edgeless(self):
        assert chromatic_index(family("empty", 3)) == 0


class TestProperSearch:
    @pytest.mark.parametrize("kind,n,k,expect", [
        ("complete", 4, 3, True),
        ("complete", 4, 2, False),
        ("cycle", 5, 2, False),
        ("cycle", 6, 2, True),
        ("petersen", None, 3, False),
    ])
    def test_matches_brute(self, kind, n, k, expect):
        G = family(kind, n)
        status, colors = proper_edge_coloring(G, k)
        assert (status == "found") is expect
        assert brute_proper_feasible(G, k) is expect
        if colors is not None:
            seen = [set() for _ in range(G.n)]
            for (u, v), c in zip(G.edges, colors):
                assert 1 <= c <= k and c not in seen[u] and c not in seen[v]
                seen[u].add(c)
                seen[v].add(c)
