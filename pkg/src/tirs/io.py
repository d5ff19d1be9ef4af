"""JSON interchange for all structure kinds, plus DOT export.

JSON is the single interchange format; DOT is export-only.  Kind detection
is by key shape: lattices carry "elements"/"covers", graphs
"vertices"/"edges", frames "x1"/"x2"/"r", morphisms "map" or
"map1"/"map2".
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import UnsupportedKind
from .lattice import FiniteLattice, build_lattice
from .structures import Frame, Graph


def detect_kind(payload: dict) -> str:
    if "elements" in payload and "covers" in payload:
        return "lattice"
    if "vertices" in payload and "edges" in payload:
        return "graph"
    if "x1" in payload and "x2" in payload and "r" in payload:
        return "frame"
    if "map" in payload:
        return "graph-morphism"
    if "map1" in payload and "map2" in payload:
        return "frame-morphism"
    raise UnsupportedKind(f"cannot detect structure kind from keys "
                          f"{sorted(payload)}")


def parse_structure(payload: dict):
    kind = detect_kind(payload)
    if kind == "lattice":
        return build_lattice(payload["elements"],
                             [tuple(p) for p in payload["covers"]])
    if kind == "graph":
        return Graph(tuple(payload["vertices"]),
                     frozenset(tuple(e) for e in payload["edges"]),
                     payload.get("meta", {}))
    if kind == "frame":
        return Frame(tuple(payload["x1"]), tuple(payload["x2"]),
                     frozenset(tuple(e) for e in payload["r"]),
                     payload.get("meta", {}))
    return payload  # morphisms stay raw; they need source/target context


def load_structure(path):
    with open(path) as fh:
        return parse_structure(json.load(fh))


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dump_structure(obj) -> str:
    return json.dumps(obj.to_json(), indent=2, sort_keys=True)


def save_structure(obj, path):
    Path(path).write_text(dump_structure(obj) + "\n")


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def export_dot(obj, include_loops: bool = False) -> str:
    """DOT rendering: graphs as digraphs (loops suppressed by default),
    frames as bipartite digraphs with R edges.  Lattices are rejected; use
    hasse_dot for the cover digraph."""
    if isinstance(obj, Graph):
        lines = ["digraph G {"]
        for v in obj.vertices:
            lines.append(f"  {_quote(v)};")
        for a, b in sorted(obj.edges):
            if a == b and not include_loops:
                continue
            lines.append(f"  {_quote(a)} -> {_quote(b)};")
        lines.append("}")
        return "\n".join(lines)
    if isinstance(obj, Frame):
        lines = ["digraph F {", "  rankdir=LR;"]
        for x in obj.x1:
            lines.append(f"  {_quote('1:' + x)} [shape=box];")
        for y in obj.x2:
            lines.append(f"  {_quote('2:' + y)} [shape=ellipse];")
        for a, b in sorted(obj.r):
            lines.append(f"  {_quote('1:' + a)} -> {_quote('2:' + b)};")
        lines.append("}")
        return "\n".join(lines)
    if isinstance(obj, FiniteLattice):
        raise UnsupportedKind("lattices have no relational DOT form; "
                             "use the Hasse export")
    raise UnsupportedKind(f"cannot export {type(obj).__name__}")


def hasse_dot(L: FiniteLattice) -> str:
    """Cover-only digraph of a lattice (Hasse diagram, drawn upward)."""
    lines = ["digraph H {", "  rankdir=BT;"]
    for e in L.elements:
        lines.append(f"  {_quote(e)};")
    for a, b in L.covers():
        lines.append(f"  {_quote(L.name(a))} -> {_quote(L.name(b))};")
    lines.append("}")
    return "\n".join(lines)
