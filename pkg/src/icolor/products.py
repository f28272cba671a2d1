"""The five graph products and Hamming graphs.

Product vertex (u, v) maps to index u*|V(H)| + v so the canonical edge order
is reproducible across runs and implementations; label tuples are
concatenated so iterated products stay readable.
"""

from __future__ import annotations

from functools import reduce

from .graphs import Graph, GraphError, build_graph, family

PRODUCT_KINDS = ("cartesian", "tensor", "strong_tensor", "strong", "lexicographic")


def product(kind: str, G: Graph, H: Graph) -> Graph:
    """Product of G and H on the vertex set V(G) x V(H).

    Edge rules, for (u1,v1)-(u2,v2):
      cartesian      u1 == u2 and v1v2 in E(H), or v1 == v2 and u1u2 in E(G)
      tensor         u1u2 in E(G) and v1v2 in E(H)
      strong_tensor  tensor, or v1 == v2 and u1u2 in E(G)
      strong         cartesian or tensor
      lexicographic  u1u2 in E(G), or u1 == u2 and v1v2 in E(H)
    """
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"unknown product kind {kind!r} (expected one of {PRODUCT_KINDS})")
    nH = H.n
    idx = lambda u, v: u * nH + v
    edges: list[tuple[int, int]] = []

    g_fibers = kind in ("cartesian", "strong_tensor", "strong")
    h_fibers = kind in ("cartesian", "strong", "lexicographic")
    tensor_part = kind in ("tensor", "strong_tensor", "strong")

    if g_fibers:
        for u1, u2 in G.edges:
            for v in range(nH):
                edges.append((idx(u1, v), idx(u2, v)))
    if h_fibers:
        for u in range(G.n):
            for v1, v2 in H.edges:
                edges.append((idx(u, v1), idx(u, v2)))
    if tensor_part:
        for u1, u2 in G.edges:
            for v1, v2 in H.edges:
                edges.append((idx(u1, v1), idx(u2, v2)))
                edges.append((idx(u1, v2), idx(u2, v1)))
    if kind == "lexicographic":
        for u1, u2 in G.edges:
            for v1 in range(nH):
                for v2 in range(nH):
                    edges.append((idx(u1, v1), idx(u2, v2)))

    labels = tuple(
        G.label_of(u) + H.label_of(v) for u in range(G.n) for v in range(nH)
    )
    return build_graph(
        G.n * nH, edges, name=f"{kind}({G.name},{H.name})", labels=labels
    )


def hamming(dims) -> Graph:
    """Iterated cartesian product of complete graphs K_{m1} ... K_{mn}."""
    dims = list(dims)
    if not dims:
        raise GraphError("hamming needs at least one dimension")
    for m in dims:
        if m < 1:
            raise GraphError(f"hamming dimensions must be >= 1, got {m}")
    result = reduce(lambda acc, m: product("cartesian", acc, family("complete", m)),
                    dims[1:], family("complete", dims[0]))
    name = "H(" + ",".join(str(m) for m in dims) + ")"
    return Graph(n=result.n, edges=result.edges, name=name, labels=result.labels)
