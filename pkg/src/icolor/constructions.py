"""Constructive interval colorings of product graphs.

Every routine here emits a coloring aligned to the product graph built by
``products.product``, and every output is meant to pass ``verify_interval``
with exactly the advertised color count.  The block constructions color the
bipartite subgraph between two fibers matching-by-matching, so each block
occupies one contiguous color window and the windows incident to a vertex
tile an interval.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, verify_interval
from .graphs import Graph, GraphError, bipartition, build_graph, family, proper_edge_coloring
from .products import product


@dataclass(frozen=True)
class BlockPlan:
    """Trace record for one colored block between two fibers."""

    g_edge: tuple[int, int]
    window: tuple[int, int]
    matchings: tuple[tuple[tuple[int, int], ...], ...]


def _assert_valid(G: Graph, c: EdgeColoring, role: str) -> None:
    verdict = verify_interval(G, c)
    if not verdict.valid:
        first = verdict.violations[0].describe()
        raise ValueError(f"invalid {role} coloring for {G.name}: {first}")


def _palette_extremes(G: Graph, c: EdgeColoring) -> tuple[list[int], list[int]]:
    """Per-vertex min and max incident color, recomputed from the coloring."""
    lo = [0] * G.n
    hi = [0] * G.n
    for (u, v), col in zip(G.edges, c.colors):
        for x in (u, v):
            if lo[x] == 0 or col < lo[x]:
                lo[x] = col
            if col > hi[x]:
                hi[x] = col
    return lo, hi


def _regular_degree(H: Graph, least: int = 1) -> int:
    degs = set(H.degrees)
    if len(degs) != 1:
        raise GraphError(f"{H.name} is not regular")
    r = degs.pop()
    if r < least:
        raise GraphError(f"{H.name} must be at least {least}-regular, got {r}")
    return r


# ---------------------------------------------------------------------------
# Matching machinery
# ---------------------------------------------------------------------------


def _hopcroft_karp(adj: list[list[int]], n_right: int) -> list[int]:
    """Maximum matching of a bipartite graph given as left adjacency lists.

    Returns match_left (right index or -1 per left vertex).  Vertices are
    processed in ascending order so results are deterministic.
    """
    INF = float("inf")
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0.0] * n_left

    def bfs() -> bool:
        queue = []
        for u in range(n_left):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w < 0 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] < 0:
                dfs(u)
    return match_l


def _matching_sequence(adj: list[list[int]], r: int, what: str) -> list[list[int]]:
    """Split an r-regular bipartite graph (left adjacency lists, equal sides)
    into r perfect matchings by repeated extraction."""
    n = len(adj)
    work = [sorted(a) for a in adj]
    rounds: list[list[int]] = []
    for _ in range(r):
        match_l = _hopcroft_karp(work, n)
        if any(v < 0 for v in match_l):
            raise GraphError(f"{what}: failed to extract a perfect matching "
                             "(input not regular bipartite?)")
        rounds.append(match_l)
        for u, v in enumerate(match_l):
            work[u].remove(v)
    if any(work[u] for u in range(n)):
        raise GraphError(f"{what}: edges left over after {r} matchings")
    return rounds


def konig_decompose(B: Graph) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Partition a regular bipartite graph's edges into perfect matchings.

    Returns r matchings, each a sorted tuple of (u, v) edges; their union is
    E(B) and each covers every vertex once.
    """
    r = _regular_degree(B, least=1)
    sides = bipartition(B)
    if sides is None:
        raise GraphError(f"{B.name} is not bipartite")
    left, right = sides
    if len(left) != len(right):
        raise GraphError(f"{B.name} is regular bipartite with unequal sides?")
    pos_r = {v: i for i, v in enumerate(right)}
    adj = [[pos_r[w] for w in B.adj[u]] for u in left]
    rounds = _matching_sequence(adj, r, B.name)
    out = []
    for match_l in rounds:
        pairs = [tuple(sorted((left[i], right[j]))) for i, j in enumerate(match_l)]
        out.append(tuple(sorted(pairs)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Complete graphs
# ---------------------------------------------------------------------------


def round_robin(n: int) -> tuple[Graph, EdgeColoring]:
    """Interval (2n-1)-coloring of K_{2n} by the circle method.

    Round i pins the last vertex against vertex i-1 and pairs the rest
    symmetrically around the circle; each round is a perfect matching and
    every vertex ends up seeing all colors 1..2n-1.
    """
    if n < 1:
        raise ValueError(f"round_robin needs n >= 1, got {n}")
    N = 2 * n
    G = family("complete", N)
    colors = [0] * G.m
    mod = N - 1
    for rnd in range(mod):
        pairs = [(N - 1, rnd)]
        for k in range(1, n):
            pairs.append(((rnd + k) % mod, (rnd - k) % mod))
        for a, b in pairs:
            e = G.edge_index[(a, b) if a < b else (b, a)]
            colors[e] = rnd + 1
    coloring = EdgeColoring(tuple(colors), declared_t=mod if n > 1 else 1)
    _assert_valid(G, coloring, "round robin")
    return G, coloring


# ---------------------------------------------------------------------------
# Cartesian constructions
# ---------------------------------------------------------------------------


def combine_cartesian(
    G: Graph, alpha: EdgeColoring, H: Graph, beta: EdgeColoring
) -> tuple[Graph, EdgeColoring]:
    """Merge colorings of G and H into one of the cartesian product.

    G-fiber edges keep alpha shifted up by the H-endpoint's smallest color
    minus one; H-fiber edges get beta shifted past the G-endpoint's largest
    color, so each vertex's two palettes abut into one interval.  Uses
    exactly t_alpha + t_beta colors.
    """
    _assert_valid(G, alpha, "first factor")
    _assert_valid(H, beta, "second factor")
    P = product("cartesian", G, H)
    lo_b, _ = _palette_extremes(H, beta)
    _, hi_a = _palette_extremes(G, alpha)
    nH = H.n
    assign: dict[tuple[int, int], int] = {}
    for (u1, u2), col in zip(G.edges, alpha.colors):
        for v in range(nH):
            assign[(u1 * nH + v, u2 * nH + v)] = col + lo_b[v] - 1
    for u in range(G.n):
        for (v1, v2), col in zip(H.edges, beta.colors):
            assign[(u * nH + v1, u * nH + v2)] = col + hi_a[u]
    return P, _emit(P, assign, alpha.max_color + beta.max_color, "cartesian combine")


def double_regular(G: Graph, alpha: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    """Double a regular graph across K2, stretching the color count by r+1.

    Copy 1 keeps alpha, copy 2 gets alpha shifted by r+1, and the matching
    edge at u takes the color just above u's palette; regularity makes both
    copies' palettes close up into intervals around the matching color.
    """
    _assert_valid(G, alpha, "input")
    degs = set(G.degrees)
    if len(degs) != 1:
        raise GraphError(f"double_regular needs a regular graph, got {G.name}")
    r = degs.pop()
    P = product("cartesian", G, family("complete", 2))
    lo_a, hi_a = _palette_extremes(G, alpha)
    assign: dict[tuple[int, int], int] = {}
    for (u1, u2), col in zip(G.edges, alpha.colors):
        assign[(u1 * 2, u2 * 2)] = col
        assign[(u1 * 2 + 1, u2 * 2 + 1)] = col + r + 1
    for u in range(G.n):
        assign[(u * 2, u * 2 + 1)] = hi_a[u] + 1
    return P, _emit(P, assign, alpha.max_color + r + 1, "regular doubling")


def hypercube_max(n: int) -> tuple[Graph, EdgeColoring]:
    """Greatest-count interval coloring of the n-cube: n(n+1)/2 colors,
    built by doubling the single edge n-1 times."""
    if n < 1:
        raise ValueError(f"hypercube_max needs n >= 1, got {n}")
    G = family("hypercube", 1)
    coloring = EdgeColoring((1,), declared_t=1)
    for _ in range(n - 1):
        G, coloring = double_regular(G, coloring)
    # the iterated doubling reproduces the hypercube's canonical edge list
    Q = family("hypercube", n)
    assert G.edges == Q.edges and G.n == Q.n
    return Q, coloring


# ---------------------------------------------------------------------------
# Block constructions for tensor / strong tensor / strong / lexicographic
# ---------------------------------------------------------------------------


def tensor_blocks(
    G: Graph, alpha: EdgeColoring, H: Graph, trace: list[BlockPlan] | None = None
) -> tuple[Graph, EdgeColoring]:
    """Color the tensor product through per-edge bipartite double covers.

    The block of a G-edge colored c is the double cover of H between the two
    fibers (r-regular bipartite); its r matchings take colors (c-1)r+1..cr,
    so the palette at (u, v) runs from (min_alpha(u)-1)r+1 to max_alpha(u)*r.
    """
    _assert_valid(G, alpha, "first factor")
    r = _regular_degree(H)
    P = product("tensor", G, H)
    adj = [list(H.adj[x]) for x in range(H.n)]
    assign: dict[tuple[int, int], int] = {}
    for (u1, u2), col in zip(G.edges, alpha.colors):
        base = (col - 1) * r
        _color_block(assign, trace, (u1, u2), adj, r, base, H.n, identity=False)
    return P, _emit(P, assign, alpha.max_color * r, "tensor blocks")


def strong_tensor_blocks(
    G: Graph, alpha: EdgeColoring, H: Graph, trace: list[BlockPlan] | None = None
) -> tuple[Graph, EdgeColoring]:
    """Like tensor_blocks but each block also carries the identity matching,
    making it (r+1)-regular and the total count t(r+1)."""
    _assert_valid(G, alpha, "first factor")
    r = _regular_degree(H)
    P = product("strong_tensor", G, H)
    adj = [list(H.adj[x]) + [x] for x in range(H.n)]
    assign: dict[tuple[int, int], int] = {}
    for (u1, u2), col in zip(G.edges, alpha.colors):
        base = (col - 1) * (r + 1)
        _color_block(assign, trace, (u1, u2), adj, r + 1, base, H.n, identity=True)
    return P, _emit(P, assign, alpha.max_color * (r + 1), "strong tensor blocks")


def strong_blocks(
    G: Graph,
    alpha: EdgeColoring,
    H: Graph,
    beta: EdgeColoring | None = None,
    trace: list[BlockPlan] | None = None,
) -> tuple[Graph, EdgeColoring]:
    """Strong product coloring: H-fibers under the blocks, t(r+1)+r colors.

    The H-fiber at u takes a proper r-coloring of H lifted to sit just below
    u's first block window; blocks then follow the strong-tensor layout
    shifted up by r, giving one interval of width d(u)(r+1)+r per vertex.
    """
    _assert_valid(G, alpha, "first factor")
    r = _regular_degree(H)
    beta = _proper_factor_coloring(H, r, beta)
    P = product("strong", G, H)
    lo_a, _ = _palette_extremes(G, alpha)
    nH = H.n
    adj = [list(H.adj[x]) + [x] for x in range(H.n)]
    assign: dict[tuple[int, int], int] = {}
    for u in range(G.n):
        shift = (lo_a[u] - 1) * (r + 1)
        for (v1, v2), col in zip(H.edges, beta.colors):
            assign[(u * nH + v1, u * nH + v2)] = col + shift
    for (u1, u2), col in zip(G.edges, alpha.colors):
        base = (col - 1) * (r + 1) + r
        _color_block(assign, trace, (u1, u2), adj, r + 1, base, nH, identity=True)
    return P, _emit(P, assign, alpha.max_color * (r + 1) + r, "strong blocks")


def lex_blocks(
    G: Graph,
    alpha: EdgeColoring,
    H: Graph,
    beta: EdgeColoring | None = None,
    trace: list[BlockPlan] | None = None,
) -> tuple[Graph, EdgeColoring]:
    """Lexicographic product coloring with t*n + r colors.

    Every G-edge block is a complete K_{n,n} between fibers, decomposed into
    the n cyclic matchings i -> (i+k) mod n for determinism; H-fiber edges
    (absent when H has no edges) sit below the first block window exactly as
    in the strong construction.
    """
    _assert_valid(G, alpha, "first factor")
    n = H.n
    if n < 1:
        raise GraphError("lex_blocks needs a nonempty second factor")
    if H.m == 0:
        r = 0
        beta = None
    else:
        r = _regular_degree(H)
        beta = _proper_factor_coloring(H, r, beta)
    P = product("lexicographic", G, H)
    lo_a, _ = _palette_extremes(G, alpha)
    assign: dict[tuple[int, int], int] = {}
    if beta is not None:
        for u in range(G.n):
            shift = (lo_a[u] - 1) * n
            for (v1, v2), col in zip(H.edges, beta.colors):
                assign[(u * n + v1, u * n + v2)] = col + shift
    for (u1, u2), col in zip(G.edges, alpha.colors):
        base = (col - 1) * n + r
        matchings = []
        for k in range(n):
            pairs = []
            for i in range(n):
                a, b = u1 * n + i, u2 * n + (i + k) % n
                assign[(min(a, b), max(a, b))] = base + 1 + k
                pairs.append((min(a, b), max(a, b)))
            matchings.append(tuple(sorted(pairs)))
        if trace is not None:
            trace.append(BlockPlan((u1, u2), (base + 1, base + n), tuple(matchings)))
    return P, _emit(P, assign, alpha.max_color * n + r, "lexicographic blocks")


def _proper_factor_coloring(
    H: Graph, r: int, beta: EdgeColoring | None
) -> EdgeColoring:
    """Proper r-edge-coloring of the regular second factor, computed when not
    supplied; fails fast with a certificate when none exists."""
    if beta is None:
        status, colors = proper_edge_coloring(H, r)
        if status != "found":
            raise GraphError(
                f"{H.name} admits no proper {r}-edge-coloring (exhaustive "
                "search); this construction needs a class-1 second factor"
            )
        return EdgeColoring(tuple(colors), declared_t=r)
    if len(beta.colors) != H.m:
        raise ValueError(f"factor coloring has {len(beta.colors)} colors for {H.m} edges")
    if beta.max_color > r:
        raise ValueError(f"factor coloring uses color {beta.max_color} > r = {r}")
    seen: list[set[int]] = [set() for _ in range(H.n)]
    for (u, v), col in zip(H.edges, beta.colors):
        if col in seen[u] or col in seen[v]:
            raise ValueError("factor coloring is not proper")
        seen[u].add(col)
        seen[v].add(col)
    return beta


def _color_block(
    assign: dict[tuple[int, int], int],
    trace: list[BlockPlan] | None,
    g_edge: tuple[int, int],
    adj: list[list[int]],
    width: int,
    base: int,
    nH: int,
    identity: bool,
) -> None:
    """König-decompose one fiber-to-fiber block and lay its matchings onto
    colors base+1..base+width."""
    u1, u2 = g_edge
    rounds = _matching_sequence(adj, width, f"block {g_edge}")
    matchings = []
    for k, match_l in enumerate(rounds):
        pairs = []
        for x, y in enumerate(match_l):
            a, b = u1 * nH + x, u2 * nH + y
            assign[(min(a, b), max(a, b))] = base + 1 + k
            pairs.append((min(a, b), max(a, b)))
        matchings.append(tuple(sorted(pairs)))
    if trace is not None:
        trace.append(BlockPlan(g_edge, (base + 1, base + width), tuple(matchings)))


def _emit(P: Graph, assign: dict[tuple[int, int], int], t: int, role: str) -> EdgeColoring:
    """Align an edge->color map to the product's canonical order and verify."""
    missing = [e for e in P.edges if e not in assign]
    if missing or len(assign) != P.m:
        raise AssertionError(f"{role}: colored {len(assign)} of {P.m} edges "
                             f"(first missing: {missing[:3]})")
    coloring = EdgeColoring(tuple(assign[e] for e in P.edges), declared_t=t)
    _assert_valid(P, coloring, role)
    if coloring.max_color != t:
        raise AssertionError(f"{role}: used {coloring.max_color} colors, expected {t}")
    return coloring
