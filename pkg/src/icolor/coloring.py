"""Edge-coloring data model and the interval verifier.

The verifier is the universal oracle in this package: every construction and
every solver witness is accepted only if it passes ``verify_interval``.  It
therefore reports all violations it can find, not just the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """Positive integer colors, one per edge in the graph's canonical order."""

    colors: tuple[int, ...]
    declared_t: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for c in self.colors:
            if c < 1:
                raise ValueError(f"colors must be >= 1, got {c}")

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)


@dataclass(frozen=True)
class Violation:
    kind: str  # not_proper | not_interval | color_gap | min_not_one
    site: int  # vertex for the first two kinds, color for the last two

    def describe(self) -> str:
        if self.kind == "not_proper":
            return f"vertex {self.site}: two incident edges share a color"
        if self.kind == "not_interval":
            return f"vertex {self.site}: incident colors are not consecutive"
        if self.kind == "color_gap":
            return f"color {self.site}: unused (or beyond the declared count)"
        return f"color {self.site}: smallest color used is not 1"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    t: int | None
    violations: tuple[Violation, ...] = ()

    def __post_init__(self):
        assert self.valid == (len(self.violations) == 0)


@dataclass(frozen=True)
class PaletteInfo:
    colors: frozenset[int]
    lo: int
    hi: int
    is_interval: bool


def verify_interval(G: Graph, c: EdgeColoring) -> Verdict:
    """Check that ``c`` is an interval coloring of ``G``.

    Valid iff (a) adjacent edges get distinct colors, (b) each vertex's
    incident colors are exactly degree-many consecutive integers, (c) the
    smallest color used is 1, and (d) every color 1..t is used, where t is
    the largest color (or the declared count when given).
    """
    if len(c.colors) != G.m:
        raise ValueError(f"coloring has {len(c.colors)} colors for {G.m} edges")

    violations: list[Violation] = []
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for (u, v), col in zip(G.edges, c.colors):
        incident[u].append(col)
        incident[v].append(col)

    for v, cols in enumerate(incident):
        if not cols:
            continue
        distinct = set(cols)
        if len(distinct) < len(cols):
            violations.append(Violation("not_proper", v))
        if distinct != set(range(min(cols), min(cols) + len(cols))):
            violations.append(Violation("not_interval", v))

    t = c.declared_t if c.declared_t is not None else c.max_color
    if G.m > 0:
        used = set(c.colors)
        if min(used) != 1:
            violations.append(Violation("min_not_one", min(used)))
        for color in range(1, t + 1):
            if color not in used:
                violations.append(Violation("color_gap", color))
        for color in sorted(used):
            if color > t:
                violations.append(Violation("color_gap", color))

    valid = not violations
    return Verdict(valid=valid, t=t if valid else None, violations=tuple(violations))


def vertex_palette(G: Graph, c: EdgeColoring, v: int) -> PaletteInfo:
    """Set of colors on edges incident to v, with min/max and interval flag."""
    if not (0 <= v < G.n):
        raise ValueError(f"vertex {v} out of range")
    if len(c.colors) != G.m:
        raise ValueError(f"coloring has {len(c.colors)} colors for {G.m} edges")
    cols = [col for (a, b), col in zip(G.edges, c.colors) if v in (a, b)]
    if not cols:
        return PaletteInfo(frozenset(), 0, 0, True)
    lo, hi = min(cols), max(cols)
    distinct = frozenset(cols)
    return PaletteInfo(
        colors=distinct,
        lo=lo,
        hi=hi,
        is_interval=len(distinct) == len(cols) and distinct == frozenset(range(lo, hi + 1)),
    )


def reverse_coloring(c: EdgeColoring, t: int) -> EdgeColoring:
    """Mirror every color x to t+1-x (validity-preserving symmetry)."""
    if any(col > t for col in c.colors):
        raise ValueError(f"a color exceeds t={t}")
    return EdgeColoring(tuple(t + 1 - col for col in c.colors), declared_t=t if c.declared_t is not None else None)
