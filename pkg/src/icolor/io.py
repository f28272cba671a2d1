"""Flat-file interchange: Graph JSON, Coloring JSON, and DOT export.

Graph JSON:    {"name": str, "n": int, "edges": [[u,v],...], "labels": [[..],..]?}
Coloring JSON: {"graph": str, "colors": [c1,...,cm], "t": int?}

Edges are emitted in canonical order; colorings align to that order.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import EdgeColoring
from .graphs import Graph, GraphError, build_graph


class FileFormatError(ValueError):
    pass


def graph_to_json(G: Graph) -> dict:
    doc: dict = {"name": G.name, "n": G.n, "edges": [list(e) for e in G.edges]}
    if G.labels is not None:
        doc["labels"] = [list(lbl) for lbl in G.labels]
    return doc


def graph_from_json(doc: dict) -> Graph:
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
        name = str(doc.get("name", "G"))
        labels = doc.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed graph document: {exc}") from exc
    try:
        return build_graph(n, edges, name=name, labels=labels)
    except GraphError as exc:
        raise FileFormatError(str(exc)) from exc


def coloring_to_json(c: EdgeColoring, graph_name: str) -> dict:
    doc: dict = {"graph": graph_name, "colors": list(c.colors)}
    t = c.declared_t if c.declared_t is not None else (c.max_color or None)
    if t is not None:
        doc["t"] = t
    return doc


def coloring_from_json(doc: dict) -> tuple[EdgeColoring, str]:
    try:
        colors = tuple(int(c) for c in doc["colors"])
        graph_name = str(doc.get("graph", ""))
        t = doc.get("t")
        coloring = EdgeColoring(colors, declared_t=None if t is None else int(t))
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed coloring document: {exc}") from exc
    return coloring, graph_name


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(_read(path))


def save_graph(G: Graph, path: str | Path) -> None:
    _write(graph_to_json(G), path)


def load_coloring(path: str | Path) -> tuple[EdgeColoring, str]:
    return coloring_from_json(_read(path))


def save_coloring(c: EdgeColoring, graph_name: str, path: str | Path) -> None:
    _write(coloring_to_json(c, graph_name), path)


def _read(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError(f"{path}: expected a JSON object")
    return doc


def _write(doc: dict, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def to_dot(G: Graph, coloring: EdgeColoring | None = None) -> str:
    """Graphviz text with one edge per line; colors become labels so the
    output stays diff-friendly."""
    if coloring is not None and len(coloring.colors) != G.m:
        raise FileFormatError("coloring length does not match the graph")
    lines = [f'graph "{G.name}" {{']
    if G.labels is not None:
        for v in range(G.n):
            pretty = ",".join(str(x) for x in G.labels[v])
            lines.append(f'  {v} [label="({pretty})"];')
    for i, (u, v) in enumerate(G.edges):
        if coloring is not None:
            lines.append(f'  {u} -- {v} [label="{coloring.colors[i]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
