"""Exact decision and optimization for interval edge-colorings.

``decide_t`` answers "does G admit an interval t-coloring" by complete
backtracking search; ``summary`` sweeps t over the finite certificate range
[Delta, theorem2_upper] so that exhausting it proves non-membership.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import EdgeColoring, verify_interval
from .graphs import Graph, SearchGuardError, is_connected, line_bfs_edge_order, stats

DEFAULT_DECIDE_TIMEBOX = 60.0
DEFAULT_SUMMARY_TIMEBOX = 300.0
DEFAULT_EDGE_GUARD = 40


class Inconclusive(RuntimeError):
    """A timeboxed search ended before reaching a verdict."""


@dataclass(frozen=True)
class DecideResult:
    status: str  # feasible | infeasible | timeout
    witness: EdgeColoring | None = None
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class IntervalSummary:
    member: bool
    w: int | None
    W: int | None
    feasible_t: frozenset[int]
    witnesses: dict[int, EdgeColoring]
    certificate: str
    inconclusive: bool = False
    undecided_t: frozenset[int] = frozenset()


def theorem2_upper(G: Graph) -> int:
    """Search ceiling for the greatest color count of a connected graph,
    from its diameter and maximum degree (tighter when bipartite).

    Any graph that admits an interval coloring satisfies this bound, so
    exhausting t up to it is a complete non-membership certificate.
    """
    st = stats(G)
    if not st.connected:
        raise ValueError("theorem2_upper requires a connected graph")
    d = st.diameter or 0
    delta = st.max_degree
    if st.bipartite:
        return d * (delta - 1) + 1
    return (d + 1) * (delta - 1) + 1


def decide_t(
    G: Graph,
    t: int,
    timebox: float | None = DEFAULT_DECIDE_TIMEBOX,
) -> DecideResult:
    """Decide interval t-colorability of a connected graph.

    Returns a verifier-valid witness, a completed-search infeasibility
    verdict, or a timeout.  The witness, when present, always re-verifies.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if not is_connected(G):
        raise ValueError("decide_t requires a connected graph")
    start = time.monotonic()
    deadline = None if timebox is None else start + timebox
    status, colors, nodes = _search_interval(G, t, deadline)
    elapsed = time.monotonic() - start
    if status != "feasible":
        return DecideResult(status=status, nodes=nodes, elapsed=elapsed)
    witness = EdgeColoring(tuple(colors), declared_t=t)
    verdict = verify_interval(G, witness)
    assert verdict.valid and verdict.t == t, f"witness failed verification at t={t}"
    return DecideResult(status="feasible", witness=witness, nodes=nodes, elapsed=elapsed)


def summary(
    G: Graph,
    timebox: float | None = DEFAULT_SUMMARY_TIMEBOX,
    guard: int = DEFAULT_EDGE_GUARD,
) -> IntervalSummary:
    """Full feasible-t sweep over [Delta, theorem2_upper].

    A timeout on any single t leaves the summary flagged inconclusive
    rather than ever reporting a false verdict.
    """
    if not is_connected(G):
        raise ValueError("summary requires a connected graph")
    if G.m > guard:
        raise SearchGuardError(f"summary guard: {G.m} edges exceeds limit {guard}")
    if G.m == 0:
        return IntervalSummary(
            member=False, w=None, W=None, feasible_t=frozenset(), witnesses={},
            certificate="edgeless graph: no color can be used",
        )
    upper = theorem2_upper(G)
    delta = max(G.degrees)
    deadline = None if timebox is None else time.monotonic() + timebox
    feasible: set[int] = set()
    undecided: set[int] = set()
    witnesses: dict[int, EdgeColoring] = {}
    # every color must appear on some edge, so t can never exceed |E|
    for t in range(delta, min(upper, G.m) + 1):
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            undecided.add(t)
            continue
        res = decide_t(G, t, timebox=remaining)
        if res.status == "feasible":
            feasible.add(t)
            witnesses[t] = res.witness
        elif res.status == "timeout":
            undecided.add(t)
    member = bool(feasible)
    if member:
        cert = (
            f"feasible color counts found by exhaustive search over t in "
            f"[{delta}, {upper}]"
        )
    elif undecided:
        cert = f"inconclusive: t in {sorted(undecided)} timed out"
    else:
        cert = (
            f"exhausted t in [{delta}, {upper}] (diameter-degree ceiling) "
            "with no interval coloring: not interval colorable"
        )
    return IntervalSummary(
        member=member,
        w=min(feasible) if feasible else None,
        W=max(feasible) if feasible else None,
        feasible_t=frozenset(feasible),
        witnesses=witnesses,
        certificate=cert,
        inconclusive=bool(undecided),
        undecided_t=frozenset(undecided),
    )


def least_w(
    G: Graph,
    timebox: float | None = DEFAULT_SUMMARY_TIMEBOX,
    guard: int = DEFAULT_EDGE_GUARD,
) -> int | None:
    """Least feasible color count, or None when not interval colorable.

    Searches upward from Delta; raises Inconclusive on timeout before an
    answer is reached.
    """
    return _directional_scan(G, timebox, guard, upward=True)


def greatest_W(
    G: Graph,
    timebox: float | None = DEFAULT_SUMMARY_TIMEBOX,
    guard: int = DEFAULT_EDGE_GUARD,
) -> int | None:
    """Greatest feasible color count, or None when not interval colorable.

    Searches downward from the theorem2_upper ceiling.
    """
    return _directional_scan(G, timebox, guard, upward=False)


def _directional_scan(G, timebox, guard, upward: bool) -> int | None:
    if not is_connected(G):
        raise ValueError("solver requires a connected graph")
    if G.m > guard:
        raise SearchGuardError(f"solver guard: {G.m} edges exceeds limit {guard}")
    if G.m == 0:
        return None
    delta = max(G.degrees)
    hi = min(theorem2_upper(G), G.m)
    ts = range(delta, hi + 1) if upward else range(hi, delta - 1, -1)
    deadline = None if timebox is None else time.monotonic() + timebox
    for t in ts:
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise Inconclusive(f"timebox exhausted before deciding t={t}")
        res = decide_t(G, t, timebox=remaining)
        if res.status == "feasible":
            return t
        if res.status == "timeout":
            raise Inconclusive(f"search for t={t} timed out")
    return None


# ---------------------------------------------------------------------------
# Search core
# ---------------------------------------------------------------------------


class _SearchTimeout(Exception):
    pass


def _line_bfs_order(G: Graph) -> list[int]:
    """Edge order by BFS over the line graph, seeded at a maximum-degree
    vertex; keeps every new edge adjacent to the colored region."""
    degs = G.degrees
    v0 = max(range(G.n), key=lambda v: degs[v])
    return line_bfs_edge_order(G, v0)


def _search_interval(
    G: Graph, t: int, deadline: float | None
) -> tuple[str, list[int] | None, int]:
    """Complete backtracking search for an interval t-coloring.

    State per vertex v: the window [smin, smax] of admissible starts for its
    color interval, its palette window bitmask, and the mask of colors
    already used at v.  Assigning color c to an edge pinches both endpoint
    windows to starts in [c-d+1, c]; a pinched-empty window can never arise
    because candidate colors are drawn from the window masks.  At a leaf
    every vertex automatically holds exactly degree-many consecutive colors,
    so only global surjectivity remains to check, and the running coverage
    prune (used colors plus all remaining feasible colors must span 1..t)
    discharges it before leaves are reached.
    """
    m, n = G.m, G.n
    degs = G.degrees
    if m == 0 or t > m or (m > 0 and t < max(degs)):
        return "infeasible", None, 0
    full = (1 << t) - 1
    smin = [1] * n
    smax = [t - degs[v] + 1 for v in range(n)]
    if any(s < 1 for s in smax):
        return "infeasible", None, 0  # a vertex degree exceeds t
    wmask = [((1 << t) - 1) for _ in range(n)]
    used = [0] * n
    eu = [e[0] for e in G.edges]
    ev = [e[1] for e in G.edges]
    order = _line_bfs_order(G)
    colors = [0] * m
    uncolored = [True] * m
    remaining = m
    nodes = 0
    tick_mask = 0xFF

    # reversal symmetry (c -> t+1-c maps witnesses to witnesses): the first
    # branching edge only needs colors up to ceil(t/2)
    half_mask = (1 << ((t + 1) // 2)) - 1

    def scan() -> tuple[int, int] | None:
        """Fail-first pick among uncolored edges plus the coverage prune.

        Returns (edge, feasible_mask); mask 0 or missing coverage of 1..t
        returns a poisoned pick so the caller backtracks.
        """
        best_e, best_mask, best_cnt = -1, 0, t + 1
        cover = used_any
        for e in order:
            if not uncolored[e]:
                continue
            fm = wmask[eu[e]] & wmask[ev[e]] & ~(used[eu[e]] | used[ev[e]]) & full
            if fm == 0:
                return e, 0
            cover |= fm
            cnt = fm.bit_count()
            if cnt < best_cnt:
                best_e, best_mask, best_cnt = e, fm, cnt
        if cover != full:
            return best_e, 0
        if best_e < 0:
            return None
        return best_e, best_mask

    used_any = 0

    def extend(depth: int) -> bool:
        nonlocal nodes, remaining, used_any
        if remaining == 0:
            return used_any == full
        pick = scan()
        if pick is None:
            return used_any == full
        e, mask = pick
        if mask == 0:
            return False
        if depth == 0:
            mask &= half_mask
        u, v = eu[e], ev[e]
        du, dv = degs[u], degs[v]
        uncolored[e] = False
        remaining -= 1
        save = (smin[u], smax[u], wmask[u], used[u], smin[v], smax[v], wmask[v], used[v], used_any)
        rest = mask
        ok = False
        while rest:
            bit = rest & -rest
            rest ^= bit
            c = bit.bit_length()
            nodes += 1
            if deadline is not None and nodes & tick_mask == 0 and time.monotonic() > deadline:
                raise _SearchTimeout
            colors[e] = c
            for x, d in ((u, du), (v, dv)):
                lo = smin[x]
                hi = smax[x]
                if c - d + 1 > lo:
                    lo = c - d + 1
                if c < hi:
                    hi = c
                smin[x] = lo
                smax[x] = hi
                wmask[x] = ((1 << (hi - lo + d)) - 1) << (lo - 1)
                used[x] |= bit
            used_any |= bit
            if extend(depth + 1):
                ok = True
                break
            (smin[u], smax[u], wmask[u], used[u],
             smin[v], smax[v], wmask[v], used[v], used_any) = save
        if not ok:
            colors[e] = 0
            uncolored[e] = True
            remaining += 1
        return ok

    try:
        found = extend(0)
    except _SearchTimeout:
        return "timeout", None, nodes
    return ("feasible", colors, nodes) if found else ("infeasible", None, nodes)
