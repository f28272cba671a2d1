"""Shared fixtures and independent oracles.

The brute-force helpers here deliberately avoid the package's search
machinery: they walk colorings in canonical edge order with properness-only
pruning and test the interval definition from scratch at the leaves, so they
can referee the solver.
"""

from __future__ import annotations

import pytest

from icolor import Graph, build_graph, family


def brute_interval_feasible(G: Graph, t: int) -> bool:
    """Does G admit an interval t-coloring?  Pure enumeration."""
    m = G.m
    if m == 0:
        return False
    adj_edges: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        adj_edges[u].append(i)
        adj_edges[v].append(i)
    colors = [0] * m

    def leaf_ok() -> bool:
        used = set(colors)
        if used != set(range(1, t + 1)):
            return False
        for v in range(G.n):
            pal = [colors[i] for i in adj_edges[v]]
            if len(set(pal)) != len(pal):
                return False
            if pal and set(pal) != set(range(min(pal), min(pal) + len(pal))):
                return False
        return True

    def rec(i: int) -> bool:
        if i == m:
            return leaf_ok()
        u, v = G.edges[i]
        for c in range(1, t + 1):
            if all(colors[j] != c for j in adj_edges[u] + adj_edges[v] if j < i):
                colors[i] = c
                if rec(i + 1):
                    return True
        colors[i] = 0
        return False

    return rec(0)


def brute_proper_feasible(G: Graph, k: int) -> bool:
    """Does G admit a proper k-edge-coloring?  Plain DFS, no symmetry
    breaking, no palette windows."""
    m = G.m
    if m == 0:
        return True
    adj_edges: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        adj_edges[u].append(i)
        adj_edges[v].append(i)
    colors = [0] * m

    def rec(i: int) -> bool:
        if i == m:
            return True
        u, v = G.edges[i]
        for c in range(1, k + 1):
            if all(colors[j] != c for j in adj_edges[u] + adj_edges[v] if j < i):
                colors[i] = c
                if rec(i + 1):
                    return True
        colors[i] = 0
        return False

    return rec(0)


PRISM_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]


@pytest.fixture(scope="session")
def prism() -> Graph:
    return build_graph(6, PRISM_EDGES, "K3xK2-prism")


@pytest.fixture(scope="session")
def catalog() -> dict[str, Graph]:
    return {
        "P2": family("path", 2),
        "P3": family("path", 3),
        "P4": family("path", 4),
        "P5": family("path", 5),
        "C4": family("cycle", 4),
        "C6": family("cycle", 6),
        "K4": family("complete", 4),
        "K13": family("star", 3),
    }
