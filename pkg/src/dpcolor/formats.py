"""Reading and writing graphs, covers, and verdicts.

JSON output is canonical (sorted keys, sorted edges, fixed indentation), so a
load followed by a dump reproduces the input bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import networkx as nx

from .cover import Cover, build_cover
from .multigraph import Multigraph, build


class FormatError(ValueError):
    def __init__(self, message: str, source: str = "<input>", line: int | None = None, column: int | None = None):
        self.source, self.line, self.column = source, line, column
        where = source if line is None else f"{source}:{line}:{column}"
        super().__init__(f"{where}: {message}")


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _parse_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, source, e.lineno, e.colno) from None


def _schema(cond: bool, msg: str, source: str) -> None:
    if not cond:
        raise FormatError(msg, source)


# --- graph6 -----------------------------------------------------------------------

def graph_from_graph6(text: str, source: str = "<graph6>") -> Multigraph:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if len(lines) != 1:
        raise FormatError(f"expected exactly one graph6 line, found {len(lines)}", source)
    lineno, line = lines[0]
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise FormatError(f"bad graph6 data: {e}", source, lineno, 1) from None
    return build(nxg.number_of_nodes(), [(u, v, 1) for u, v in nxg.edges()])


def graph_to_graph6(g: Multigraph) -> str:
    if not g.is_simple:
        raise ValueError("graph6 holds simple graphs only; use the JSON multigraph format")
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from((u, v) for u, v, _ in g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii")


# --- multigraph JSON ------------------------------------------------------------

def graph_to_doc(g: Multigraph, h=None) -> dict:
    doc = {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}
    if h is not None:
        doc["h"] = [int(x) for x in h]
    return doc


def graph_from_doc(doc: Any, source: str = "<json>") -> tuple[Multigraph, tuple[int, ...] | None]:
    _schema(isinstance(doc, dict), "multigraph document must be an object", source)
    _schema(isinstance(doc.get("n"), int), "field 'n' must be an integer", source)
    edges = doc.get("edges", [])
    _schema(isinstance(edges, list) and all(isinstance(e, list) and len(e) in (2, 3)
                                            and all(isinstance(x, int) for x in e) for e in edges),
            "field 'edges' must be a list of [u, v] or [u, v, mult] integer lists", source)
    try:
        g = build(doc["n"], [tuple(e) if len(e) == 3 else (e[0], e[1], 1) for e in edges])
    except ValueError as e:
        raise FormatError(str(e), source) from None
    h = doc.get("h")
    if h is not None:
        _schema(isinstance(h, list) and len(h) == g.n and all(isinstance(x, int) and x >= 0 for x in h),
                f"field 'h' must list {g.n} non-negative integers", source)
        h = tuple(h)
    return g, h


def dumps_graph(g: Multigraph, h=None) -> str:
    return _dump(graph_to_doc(g, h))


def loads_graph(text: str, source: str = "<json>") -> tuple[Multigraph, tuple[int, ...] | None]:
    return graph_from_doc(_parse_json(text, source), source)


def read_graph(path: str | Path) -> tuple[Multigraph, tuple[int, ...] | None]:
    """Load a graph file: JSON if it ends in .json or starts with '{', else graph6."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise FormatError(e.strerror or str(e), str(path)) from None
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return loads_graph(text, str(path))
    return graph_from_graph6(text, str(path)), None


# --- cover JSON -----------------------------------------------------------------

def cover_to_doc(cover: Cover) -> dict:
    return {
        "graph": graph_to_doc(cover.base),
        "list_sizes": list(cover.list_sizes),
        "matchings": {
            f"{u}-{v}": [sorted([i, j] for i, j in m) for m in ms]
            for (u, v), ms in zip(cover.base.pairs, cover.matchings)
        },
    }


def cover_from_doc(doc: Any, source: str = "<json>") -> Cover:
    _schema(isinstance(doc, dict), "cover document must be an object", source)
    g, _ = graph_from_doc(doc.get("graph"), source)
    sizes = doc.get("list_sizes")
    _schema(isinstance(sizes, list) and all(isinstance(x, int) for x in sizes), "field 'list_sizes' must be integers", source)
    raw = doc.get("matchings")
    _schema(isinstance(raw, dict), "field 'matchings' must be an object keyed 'u-v'", source)
    ms = {}
    for key, val in raw.items():
        parts = key.split("-")
        _schema(len(parts) == 2 and all(p.isdigit() for p in parts), f"bad pair key {key!r}", source)
        _schema(isinstance(val, list) and all(
            isinstance(m, list) and all(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in m)
            for m in val), f"matchings for {key!r} must be lists of [i, j] pairs", source)
        ms[(int(parts[0]), int(parts[1]))] = val
    try:
        return build_cover(g, sizes, ms)
    except ValueError as e:
        raise FormatError(str(e), source) from None


def dumps_cover(cover: Cover) -> str:
    return _dump(cover_to_doc(cover))


def loads_cover(text: str, source: str = "<json>") -> Cover:
    return cover_from_doc(_parse_json(text, source), source)


def read_cover(path: str | Path) -> Cover:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise FormatError(e.strerror or str(e), str(path)) from None
    return loads_cover(text, str(path))


# --- verdict records ------------------------------------------------------------

@dataclass(frozen=True)
class VerdictRecord:
    command: str
    status: str
    detail: dict
    certificate: str | None = None

    def to_json(self) -> str:
        return _dump({"command": self.command, "status": self.status, "detail": self.detail,
                      "certificate": self.certificate})
