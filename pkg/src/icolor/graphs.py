"""Canonical graph representation, named families, and structural queries.

Vertices are dense 0-based integers; edges are stored as a strictly sorted
tuple of (u, v) pairs with u < v.  That order is the contract every coloring
file refers to, so it must never depend on construction order.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from functools import cached_property


class GraphError(ValueError):
    """Input violates the simple-graph contract (loop, range, duplicate)."""


class SearchGuardError(RuntimeError):
    """An exact search was asked to run past its size guard."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``labels``, when present, carries one tuple per vertex (product
    provenance); it never affects identity of the edge list.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = "G"
    labels: tuple[tuple, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted adjacency lists."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map (u, v) with u < v to its position in the canonical edge order."""
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label_of(self, v: int) -> tuple:
        return self.labels[v] if self.labels is not None else (v,)


@dataclass(frozen=True)
class GraphStats:
    degrees: tuple[int, ...]
    max_degree: int
    diameter: int | None  # None marks infinite (disconnected)
    bipartite: bool
    connected: bool
    regular: int | None


def build_graph(
    n: int,
    edges,
    name: str = "G",
    labels=None,
) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Raises GraphError on loops, out-of-range endpoints, or duplicate edges
    (duplicates are an error, not silently merged).
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    norm: list[tuple[int, int]] = []
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        norm.append((u, v) if u < v else (v, u))
    norm.sort()
    for a, b in zip(norm, norm[1:]):
        if a == b:
            raise GraphError(f"duplicate edge {a}")
    if labels is not None:
        labels = tuple(tuple(lbl) for lbl in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    return Graph(n=n, edges=tuple(norm), name=name, labels=labels)


FAMILIES = ("path", "cycle", "complete", "hypercube", "star", "empty", "petersen", "sylvester")


def family(kind: str, n: int | None = None) -> Graph:
    """Construct a named graph family member.

    path/cycle/complete/hypercube/star/empty take a size parameter n;
    petersen and sylvester take none.
    """
    if kind == "path":
        _require_param(kind, n, 1)
        return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")
    if kind == "cycle":
        _require_param(kind, n, 3)
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")
    if kind == "complete":
        _require_param(kind, n, 1)
        return build_graph(
            n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}"
        )
    if kind == "hypercube":
        _require_param(kind, n, 1)
        edges = []
        for v in range(1 << n):
            for b in range(n):
                w = v ^ (1 << b)
                if v < w:
                    edges.append((v, w))
        return build_graph(1 << n, edges, name=f"Q{n}")
    if kind == "star":
        _require_param(kind, n, 1)
        return build_graph(n + 1, [(0, i) for i in range(1, n + 1)], name=f"K_{{1,{n}}}")
    if kind == "empty":
        _require_param(kind, n, 1)
        return build_graph(n, [], name=f"{n}K1")
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, 5 + i) for i in range(5)]
        return build_graph(10, outer + inner + spokes, name="Petersen")
    if kind == "sylvester":
        return _sylvester()
    raise GraphError(f"unknown family {kind!r} (expected one of {FAMILIES})")


def _require_param(kind: str, n: int | None, lo: int) -> None:
    if n is None or n < lo:
        raise GraphError(f"family {kind!r} needs parameter n >= {lo}, got {n}")


def _sylvester() -> Graph:
    # 16-vertex cubic graph with no perfect matching: a central vertex joined
    # to three subdivided-K4 gadgets at their subdivision vertices.  Removing
    # the center leaves three odd components, so no perfect matching exists.
    edges: list[tuple[int, int]] = []
    center = 15
    for g in range(3):
        base = 5 * g  # gadget vertices: a, b, c, d, s = base..base+4
        a, b, c, d, s = base, base + 1, base + 2, base + 3, base + 4
        edges += [(a, s), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
        edges.append((s, center))
    return build_graph(16, edges, name="Sylvester")


def stats(G: Graph) -> GraphStats:
    """Degrees, maximum degree, diameter (all-pairs BFS), bipartiteness,
    connectivity, and the regular degree when all degrees agree."""
    degs = G.degrees
    maxdeg = max(degs, default=0)
    connected, bipartite = _connected_bipartite(G)
    diameter: int | None
    if not connected:
        diameter = None
    elif G.n <= 1:
        diameter = 0
    else:
        diameter = max(max(_bfs_dist(G, s)) for s in range(G.n))
    regular = degs[0] if G.n > 0 and all(d == degs[0] for d in degs) else None
    return GraphStats(
        degrees=degs,
        max_degree=maxdeg,
        diameter=diameter,
        bipartite=bipartite,
        connected=connected,
        regular=regular,
    )


def _bfs_dist(G: Graph, source: int) -> list[int]:
    dist = [-1] * G.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in G.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _connected_bipartite(G: Graph) -> tuple[bool, bool]:
    side = [-1] * G.n
    bipartite = True
    components = 0
    for s in range(G.n):
        if side[s] >= 0:
            continue
        components += 1
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.adj[u]:
                if side[w] < 0:
                    side[w] = side[u] ^ 1
                    q.append(w)
                elif side[w] == side[u]:
                    bipartite = False
    return components <= 1, bipartite


def bipartition(G: Graph) -> tuple[list[int], list[int]] | None:
    """Two-color the vertices; None when an odd cycle exists."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.adj[u]:
                if side[w] < 0:
                    side[w] = side[u] ^ 1
                    q.append(w)
                elif side[w] == side[u]:
                    return None
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


def is_connected(G: Graph) -> bool:
    return _connected_bipartite(G)[0]


# ---------------------------------------------------------------------------
# Exact proper edge-coloring search (chromatic index)
# ---------------------------------------------------------------------------


def line_bfs_edge_order(G: Graph, root: int) -> list[int]:
    """Edge order that grows a connected colored region: BFS from ``root``,
    taking each vertex's incident edges together."""
    seen_e = [False] * G.m
    seen_v = [False] * G.n
    order: list[int] = []
    queue = [root]
    seen_v[root] = True
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in G.adj[u]:
            e = G.edge_index[(u, w) if u < w else (w, u)]
            if not seen_e[e]:
                seen_e[e] = True
                order.append(e)
            if not seen_v[w]:
                seen_v[w] = True
                queue.append(w)
    order += [e for e in range(G.m) if not seen_e[e]]
    return order


def proper_edge_coloring(
    G: Graph,
    k: int,
    timebox: float | None = None,
) -> tuple[str, list[int] | None]:
    """Search for a proper k-edge-coloring.

    Returns ("found", colors) with colors aligned to the canonical edge
    order, ("none", None) after a completed refutation, or ("timeout", None).

    A deterministic alternating-chain insertion pass (recoloring along
    maximal two-color paths when an edge has no free color) runs first; it
    settles most class-1 instances instantly but cannot refute, so complete
    backtracking follows.  The backtracking phase picks the uncolored edge
    with the fewest free colors and pre-colors the star of one
    maximum-degree vertex 1..d, which is sound because color names are
    interchangeable.
    """
    m = G.m
    if k < 0:
        raise ValueError("k must be nonnegative")
    if m == 0:
        return "found", []
    degs = G.degrees
    if max(degs) > k:
        return "none", None

    found = _chain_insertion_find(G, k)
    if found is not None:
        return "found", found

    base = sorted(range(m), key=lambda e: -(degs[G.edges[e][0]] + degs[G.edges[e][1]]))
    eu = [G.edges[e][0] for e in range(m)]
    ev = [G.edges[e][1] for e in range(m)]
    full = (1 << k) - 1
    used = [0] * G.n
    colors = [0] * m
    uncolored = set(range(m))

    # symmetry breaking: fix the colors around one maximum-degree vertex
    v0 = max(range(G.n), key=lambda v: degs[v])
    c = 0
    for e in sorted(G.edge_index[(min(v0, w), max(v0, w))] for w in G.adj[v0]):
        c += 1
        bit = 1 << (c - 1)
        colors[e] = c
        used[eu[e]] |= bit
        used[ev[e]] |= bit
        uncolored.discard(e)

    deadline = None if timebox is None else time.monotonic() + timebox
    tick = 0

    def pick() -> tuple[int, int] | None:
        best_e, best_mask, best_cnt = -1, 0, k + 1
        for e in base:
            if e not in uncolored:
                continue
            mask = full & ~(used[eu[e]] | used[ev[e]])
            cnt = mask.bit_count()
            if cnt < best_cnt:
                best_e, best_mask, best_cnt = e, mask, cnt
                if cnt == 0:
                    break
        return None if best_e < 0 else (best_e, best_mask)

    def extend() -> bool:
        nonlocal tick
        choice = pick()
        if choice is None:
            return True
        e, mask = choice
        if mask == 0:
            return False
        tick += 1
        if deadline is not None and tick % 1024 == 0 and time.monotonic() > deadline:
            raise _SearchTimeout
        u, v = eu[e], ev[e]
        uncolored.discard(e)
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            colors[e] = bit.bit_length()
            used[u] |= bit
            used[v] |= bit
            if extend():
                return True
            used[u] ^= bit
            used[v] ^= bit
        colors[e] = 0
        uncolored.add(e)
        return False

    try:
        ok = extend()
    except _SearchTimeout:
        return "timeout", None
    return ("found", colors) if ok else ("none", None)


class _SearchTimeout(Exception):
    pass


def _chain_insertion_find(G: Graph, k: int, max_roots: int = 64) -> list[int] | None:
    """Find-only proper k-edge-coloring by greedy insertion with
    alternating-chain repair, retried over BFS roots.  Returns None when
    every deterministic attempt gets stuck (not a refutation)."""
    for root in range(min(G.n, max_roots)):
        colors = _chain_insertion_once(G, k, line_bfs_edge_order(G, root))
        if colors is not None:
            return colors
    return None


def _chain_insertion_once(G: Graph, k: int, order: list[int]) -> list[int] | None:
    m = G.m
    full = (1 << k) - 1
    free = [full] * G.n
    pos = [[-1] * k for _ in range(G.n)]  # pos[v][c-1] = edge colored c at v
    colors = [0] * m

    def assign(e: int, c: int) -> None:
        u, v = G.edges[e]
        colors[e] = c
        bit = 1 << (c - 1)
        free[u] &= ~bit
        free[v] &= ~bit
        pos[u][c - 1] = e
        pos[v][c - 1] = e

    def walk(start: int, a: int, b: int) -> tuple[list[int], int]:
        # start misses b and has a, so its two-color component is a path
        x, c = start, a
        chain: list[int] = []
        while True:
            e = pos[x][c - 1]
            if e < 0:
                return chain, x
            chain.append(e)
            u2, v2 = G.edges[e]
            x = v2 if u2 == x else u2
            c = b if c == a else a

    def swap(chain: list[int], a: int, b: int) -> None:
        touched: set[int] = set()
        for e in chain:
            u2, v2 = G.edges[e]
            old = colors[e]
            pos[u2][old - 1] = -1
            pos[v2][old - 1] = -1
            colors[e] = b if old == a else a
            touched.add(u2)
            touched.add(v2)
        for e in chain:
            u2, v2 = G.edges[e]
            pos[u2][colors[e] - 1] = e
            pos[v2][colors[e] - 1] = e
        for y in touched:
            fm = full
            for ci in range(k):
                if pos[y][ci] >= 0:
                    fm &= ~(1 << ci)
            free[y] = fm

    def insert(e: int) -> bool:
        u, v = G.edges[e]
        common = free[u] & free[v]
        if common:
            assign(e, (common & -common).bit_length())
            return True
        for side, other in ((v, u), (u, v)):
            fo = free[other]
            while fo:
                abit = fo & -fo
                fo ^= abit
                a = abit.bit_length()
                fs = free[side]
                while fs:
                    bbit = fs & -fs
                    fs ^= bbit
                    b = bbit.bit_length()
                    chain, end = walk(side, a, b)
                    if end == other:
                        continue  # swapping would steal `other`'s free color
                    swap(chain, a, b)
                    common = free[u] & free[v]
                    if common:
                        assign(e, (common & -common).bit_length())
                        return True
        return False

    stuck = [e for e in order if not insert(e)]
    for _ in range(8):  # deferred retries; swaps keep reshaping free sets
        if not stuck:
            break
        still = [e for e in stuck if not insert(e)]
        if len(still) == len(stuck):
            return None
        stuck = still
    return None if stuck else colors


def chromatic_index(G: Graph, guard: int = 64, timebox: float | None = None) -> int:
    """Exact chromatic index, decided by exhaustive search at Delta colors.

    The Delta+1 fallback is searched too rather than assumed, so the
    dichotomy is asserted, not presumed.
    """
    if G.m == 0:
        return 0
    if G.m > guard:
        raise SearchGuardError(
            f"chromatic_index guard: {G.m} edges exceeds limit {guard}"
        )
    delta = max(G.degrees)
    status, _ = proper_edge_coloring(G, delta, timebox=timebox)
    if status == "timeout":
        raise SearchGuardError("chromatic_index search timed out")
    if status == "found":
        return delta
    status, _ = proper_edge_coloring(G, delta + 1, timebox=timebox)
    if status != "found":
        raise AssertionError(
            f"no proper ({delta + 1})-edge-coloring found for {G.name}; "
            "this contradicts the maximum-degree-plus-one guarantee"
        )
    return delta + 1
