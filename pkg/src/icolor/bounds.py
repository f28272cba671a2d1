"""Closed-form evaluators for the cataloged color-count bounds.

Each catalog entry evaluates one published right-hand side exactly as
stated, with its side conditions enforced; no entry claims the bound is
attained.  Entries that need the odd-part decomposition n = p * 2^q compute
it internally from the given parameter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .graphs import Graph, GraphError


class BoundError(ValueError):
    """Missing parameter or violated side condition."""


@dataclass(frozen=True)
class BoundQuery:
    name: str
    params: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    params: tuple[str, ...]
    formula: str
    fn: Callable[[dict[str, int]], int]
    side: str = ""


@dataclass(frozen=True)
class TreeParams:
    centers: tuple[int, ...]
    pendants: tuple[int, ...]
    m_T: int
    M_T: int


def odd_decomposition(n: int) -> tuple[int, int]:
    """Unique (p, q) with n = p * 2^q and p odd."""
    if n < 1:
        raise BoundError(f"odd_decomposition needs n >= 1, got {n}")
    q = (n & -n).bit_length() - 1
    return n >> q, q


def _pq(n: int) -> int:
    p, q = odd_decomposition(n)
    return p + q


def _need(params: dict[str, int], *names: str) -> list[int]:
    vals = []
    for k in names:
        if k not in params:
            raise BoundError(f"missing parameter {k!r}")
        vals.append(int(params[k]))
    return vals


def _seq(params: dict[str, int], prefix: str, n: int) -> list[int]:
    return _need(params, *[f"{prefix}{i}" for i in range(1, n + 1)])


def _ge(value: int, lo: int, what: str) -> int:
    if value < lo:
        raise BoundError(f"side condition violated: {what} must be >= {lo}, got {value}")
    return value


def _cor2(p: dict[str, int]) -> int:
    (n,) = _need(p, "n")
    _ge(n, 1, "n")
    Ws = _seq(p, "W", n)
    rs = _seq(p, "r", n)
    if any(rs[i] < rs[i + 1] for i in range(n - 1)):
        raise BoundError("side condition violated: r1..rn must be non-increasing")
    return sum(Ws) + sum(sum(rs[:k]) for k in range(1, n))


def _thm11_W(p: dict[str, int]) -> int:
    (n,) = _need(p, "n")
    _ge(n, 1, "n")
    ms = _seq(p, "m", n)
    first = sum(4 * m - 2 - _pq(m) for m in ms)
    second = sum(i * (2 * ms[n - i - 1] - 1) for i in range(1, n))
    return first + second


_CATALOG: list[BoundEntry] = [
    BoundEntry("thm2", ("d", "Delta"), "(d+1)(Delta-1)+1",
               lambda p: (lambda d, D: (d + 1) * (D - 1) + 1)(*_need(p, "d", "Delta"))),
    BoundEntry("thm2-bipartite", ("d", "Delta"), "d(Delta-1)+1",
               lambda p: (lambda d, D: d * (D - 1) + 1)(*_need(p, "d", "Delta"))),
    BoundEntry("thm3", ("n",), "4n-2-p-q  [n = p*2^q, p odd]",
               lambda p: (lambda n: 4 * n - 2 - _pq(n))(_ge(*_need(p, "n"), 1, "n"))),
    BoundEntry("thm4", ("n",), "n(n+1)/2",
               lambda p: (lambda n: n * (n + 1) // 2)(_ge(*_need(p, "n"), 1, "n"))),
    BoundEntry("thm7-pm-c2n", ("m", "n"), "3m+n-2",
               lambda p: (lambda m, n: 3 * m + _ge(n, 2, "n") - 2)(*_need(p, "m", "n")),
               side="n >= 2"),
    BoundEntry("thm7-p2m-c2n", ("m", "n"), "4m+2n-2",
               lambda p: (lambda m, n: 4 * m + 2 * _ge(n, 2, "n") - 2)(*_need(p, "m", "n")),
               side="n >= 2"),
    BoundEntry("thm7-p2m-c2n1", ("m", "n"), "4m+2n-1",
               lambda p: (lambda m, n: 4 * m + 2 * n - 1)(*_need(p, "m", "n"))),
    BoundEntry("thm7-c2m-c2n", ("m", "n"), "max(3m+n+2, 3n+m+2)",
               lambda p: (lambda m, n: max(3 * _ge(m, 2, "m") + n + 2,
                                           3 * _ge(n, 2, "n") + m + 2))(*_need(p, "m", "n")),
               side="m, n >= 2"),
    BoundEntry("thm7-c2m-c2n1", ("m", "n"), "2m+2n+3 if m even else 2m+2n+2",
               lambda p: (lambda m, n: 2 * _ge(m, 2, "m") + 2 * n + (3 if m % 2 == 0 else 2))(*_need(p, "m", "n")),
               side="m >= 2"),
    BoundEntry("thm8-w", ("wG", "wH"), "wG + wH",
               lambda p: sum(_need(p, "wG", "wH"))),
    BoundEntry("thm8-W", ("WG", "WH"), "WG + WH",
               lambda p: sum(_need(p, "WG", "WH"))),
    BoundEntry("thm9", ("WG", "WH", "r"), "WG + WH + r",
               lambda p: sum(_need(p, "WG", "WH", "r"))),
    BoundEntry("cor1", ("WG", "WH", "r", "rp"), "WG + WH + max(r, rp)",
               lambda p: (lambda a, b, r, rp: a + b + max(r, rp))(*_need(p, "WG", "WH", "r", "rp"))),
    BoundEntry("cor2", ("n", "W1..Wn", "r1..rn"),
               "sum(Wi) + sum_{k=1}^{n-1} sum_{i=1}^{k} ri  [r non-increasing]",
               _cor2, side="r1 >= r2 >= ... >= rn"),
    BoundEntry("thm10-w", ("m", "n"), "(2m-1)n",
               lambda p: (lambda m, n: (2 * m - 1) * n)(_ge(*_need(p, "m"), 1, "m"), *_need(p, "n"))),
    BoundEntry("thm10-W", ("m", "n"), "(4m-2-p-q)n  [m = p*2^q]",
               lambda p: (lambda m, n: (4 * m - 2 - _pq(m)) * n)(_ge(*_need(p, "m"), 1, "m"), *_need(p, "n"))),
    BoundEntry("thm11-w", ("n", "m1..mn"), "sum(2mi - 1)",
               lambda p: sum(2 * m - 1 for m in _seq(p, "m", _ge(*_need(p, "n"), 1, "n")))),
    BoundEntry("thm11-W", ("n", "m1..mn"),
               "sum(4mi-2-pi-qi) + sum_{i=1}^{n-1} i(2m_{n-i} - 1)", _thm11_W),
    BoundEntry("cor3", ("m", "n"), "(4m-2-p-q)n + n(n-1)(2m-1)/2",
               lambda p: (lambda m, n: (4 * m - 2 - _pq(m)) * n + n * (n - 1) * (2 * m - 1) // 2)(
                   _ge(*_need(p, "m"), 1, "m"), *_need(p, "n"))),
    BoundEntry("thm12", ("WG", "WC", "n", "r"), "WG + WC + n*r",
               lambda p: (lambda WG, WC, n, r: WG + WC + _ge(n, 2, "n") * r)(*_need(p, "WG", "WC", "n", "r")),
               side="n >= 2; WC = greatest count for the even cycle C_{2n}"),
    BoundEntry("thm13", ("WG", "WP", "m", "r"), "WG + WP + (m-1)r",
               lambda p: (lambda WG, WP, m, r: WG + WP + (_ge(m, 1, "m") - 1) * r)(*_need(p, "WG", "WP", "m", "r")),
               side="WP = greatest count for the path P_m"),
    BoundEntry("cor4", ("n",), "2n^2 + 4n - 1 - p - q  [n = p*2^q]",
               lambda p: (lambda n: 2 * n * n + 4 * n - 1 - _pq(n))(_ge(*_need(p, "n"), 1, "n"))),
    BoundEntry("cor5", ("WG", "n", "r"), "WG + n(n+2r+1)/2",
               lambda p: (lambda WG, n, r: WG + n * (n + 2 * r + 1) // 2)(*_need(p, "WG", "n", "r"))),
    BoundEntry("thm14-path", ("m", "n"), "2(mn+m+n) - 1",
               lambda p: (lambda m, n: 2 * (m * n + m + n) - 1)(*_need(p, "m", "n"))),
    BoundEntry("thm14-cube", ("m", "n"), "(m+4n)(m+1)/2",
               lambda p: (lambda m, n: (m + 4 * n) * (m + 1) // 2)(*_need(p, "m", "n"))),
    BoundEntry("cor6", ("n",), "(5n^2+5n)/2",
               lambda p: (lambda n: (5 * n * n + 5 * n) // 2)(*_need(p, "n"))),
    BoundEntry("thm15-w", ("w", "r"), "w*r",
               lambda p: (lambda w, r: w * r)(*_need(p, "w", "r"))),
    BoundEntry("thm15-W", ("W", "r"), "W*r",
               lambda p: (lambda W, r: W * r)(*_need(p, "W", "r"))),
    BoundEntry("thm16-w", ("w", "r"), "w(r+1)",
               lambda p: (lambda w, r: w * (r + 1))(*_need(p, "w", "r"))),
    BoundEntry("thm16-W", ("W", "r"), "W(r+1)",
               lambda p: (lambda W, r: W * (r + 1))(*_need(p, "W", "r"))),
    BoundEntry("thm17-w", ("w", "r"), "w(r+1) + r",
               lambda p: (lambda w, r: w * (r + 1) + r)(*_need(p, "w", "r"))),
    BoundEntry("thm17-W", ("W", "r"), "W(r+1) + r",
               lambda p: (lambda W, r: W * (r + 1) + r)(*_need(p, "W", "r"))),
    BoundEntry("thm18-w", ("w", "n"), "w*n",
               lambda p: (lambda w, n: w * n)(*_need(p, "w", "n"))),
    BoundEntry("thm18-W", ("W", "n"), "(W+1)n - 1",
               lambda p: (lambda W, n: (W + 1) * n - 1)(*_need(p, "W", "n"))),
    BoundEntry("thm19-w", ("w", "n", "r"), "w*n + r",
               lambda p: (lambda w, n, r: w * n + r)(*_need(p, "w", "n", "r"))),
    BoundEntry("thm19-W", ("W", "n", "r"), "W*n + r",
               lambda p: (lambda W, n, r: W * n + r)(*_need(p, "W", "n", "r"))),
    BoundEntry("thm20", ("WP", "nH", "r"), "WP(nH + r) + r",
               lambda p: (lambda WP, nH, r: WP * (nH + r) + r)(*_need(p, "WP", "nH", "r"))),
    BoundEntry("thm21", ("WC", "nH", "r"), "(WC - 1)(nH + r)",
               lambda p: (lambda WC, nH, r: (WC - 1) * (nH + r))(*_need(p, "WC", "nH", "r"))),
    BoundEntry("thm22", ("WP", "nH", "n", "r"), "WP*nH + n*r",
               lambda p: (lambda WP, nH, n, r: WP * nH + n * r)(*_need(p, "WP", "nH", "n", "r"))),
    BoundEntry("thm23", ("WC", "nH", "n", "r"), "(WC - 1)nH + ceil(n/2)*r",
               lambda p: (lambda WC, nH, n, r: (WC - 1) * nH + ((n + 1) // 2) * r)(*_need(p, "WC", "nH", "n", "r"))),
    BoundEntry("thm24-w", ("m", "Delta", "n"), "(m + Delta)n - 1",
               lambda p: (lambda m, D, n: (m + D) * n - 1)(*_need(p, "m", "Delta", "n"))),
    BoundEntry("thm24-W", ("M", "n"), "(M + 1)n - 1",
               lambda p: (lambda M, n: (M + 1) * n - 1)(*_need(p, "M", "n"))),
    BoundEntry("thm25-w", ("m", "Delta", "n"), "(m + Delta)n - 1",
               lambda p: (lambda m, D, n: (m + D) * n - 1)(*_need(p, "m", "Delta", "n"))),
    BoundEntry("thm25-W", ("M", "n"), "(M + 1)n - 1",
               lambda p: (lambda M, n: (M + 1) * n - 1)(*_need(p, "M", "n"))),
]

CATALOG: dict[str, BoundEntry] = {e.name: e for e in _CATALOG}


def bound_eval(query: BoundQuery) -> int:
    """Evaluate a cataloged bound formula at the given parameter bindings."""
    entry = CATALOG.get(query.name)
    if entry is None:
        raise BoundError(f"unknown bound {query.name!r}; see CATALOG for names")
    return entry.fn(query.params)


# ---------------------------------------------------------------------------
# Tree parameters
# ---------------------------------------------------------------------------


def _check_tree(T: Graph) -> None:
    if T.n < 1 or T.m != T.n - 1:
        raise GraphError(f"{T.name} is not a tree (n={T.n}, m={T.m})")
    # connectivity: BFS reach count
    seen = [False] * T.n
    seen[0] = True
    q = deque([0])
    count = 1
    while q:
        u = q.popleft()
        for w in T.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                q.append(w)
    if count != T.n:
        raise GraphError(f"{T.name} is not a tree (disconnected)")


def _tree_path(T: Graph, u: int, v: int) -> list[int]:
    parent = [-1] * T.n
    parent[u] = u
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            break
        for w in T.adj[x]:
            if parent[w] < 0:
                parent[w] = x
                q.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def tree_L(T: Graph, u: int, v: int) -> int:
    """Path length u..v plus the number of edges hanging off its interior.

    In a tree every edge between two path vertices is a path edge, so each
    interior vertex x contributes exactly deg(x) - 2 hanging edges.
    """
    _check_tree(T)
    if u == v:
        raise ValueError("tree_L needs two distinct vertices")
    path = _tree_path(T, u, v)
    hanging = sum(T.degree(x) - 2 for x in path[1:-1])
    return (len(path) - 1) + hanging


def tree_params(T: Graph) -> TreeParams:
    """Centers, pendant vertices, and the two path-weight maxima used by the
    lexicographic tree bounds."""
    _check_tree(T)
    if T.n < 2:
        raise GraphError("tree_params needs a tree with at least 2 vertices")
    ecc = []
    for s in range(T.n):
        dist = [-1] * T.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for w in T.adj[x]:
                if dist[w] < 0:
                    dist[w] = dist[x] + 1
                    q.append(w)
        ecc.append(max(dist))
    best = min(ecc)
    centers = tuple(v for v in range(T.n) if ecc[v] == best)
    pendants = tuple(v for v in range(T.n) if T.degree(v) == 1)
    m_T = max(tree_L(T, u, v) for u in centers for v in pendants if u != v)
    M_T = max(
        tree_L(T, a, b)
        for i, a in enumerate(pendants)
        for b in pendants[i + 1:]
    )
    return TreeParams(centers=centers, pendants=pendants, m_T=m_T, M_T=M_T)
