"""DOT and JSON output for diagrams, posets and crystals.

Everything here is deterministic: nodes are numbered in sorted order and
edges are emitted sorted, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from typing import Iterable

from .crystal import CrystalGraph, Tableau
from .diagram import Diagram, render_grid

SCHEMA_VERSION = 1


def _node_label(v) -> str:
    if isinstance(v, Diagram):
        text = render_grid(v) or "(empty)"
    elif isinstance(v, Tableau):
        text = str(v)
    else:
        text = str(v)
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def _sort_key(v):
    return v.sort_key() if isinstance(v, Diagram) else v


def poset_dot(members: Iterable[Diagram], edges: Iterable[tuple[Diagram, Diagram]], name: str = "kohnert") -> str:
    """Kohnert move poset; an edge ``S -> T`` means ``T`` is one move from ``S``."""
    nodes = sorted(members, key=_sort_key)
    ids = {v: f"n{k}" for k, v in enumerate(nodes)}
    lines = [f"digraph {name} {{", '  node [shape=box fontname="Courier"];']
    for v in nodes:
        lines.append(f'  {ids[v]} [label="{_node_label(v)}"];')
    for a, b in sorted({(ids[a], ids[b]) for a, b in edges}, key=lambda e: (int(e[0][1:]), int(e[1][1:]))):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def crystal_dot(graphs: Iterable[CrystalGraph], name: str = "crystal") -> str:
    """Colored crystal graph; edge ``u -> v`` with ``color=i`` means ``f_i(u) = v``."""
    graphs = list(graphs)
    lines = [f"digraph {name} {{", '  node [shape=box fontname="Courier"];']
    counter = 0
    for k, G in enumerate(graphs):
        nodes = sorted(G.vertices, key=_sort_key)
        ids = {}
        lines.append(f"  subgraph cluster_{k} {{")
        for v in nodes:
            ids[v] = f"n{counter}"
            counter += 1
            lines.append(f'    {ids[v]} [label="{_node_label(v)}"];')
        lines.append("  }")
        edges = sorted(
            ((int(ids[u][1:]), int(ids[w][1:]), i) for (u, i), w in G.edges.items()),
        )
        for a, b, i in edges:
            lines.append(f'  n{a} -> n{b} [color={i} label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cells_json(D: Diagram) -> list[list[int]]:
    return [[r, c] for r, c in D]


def dumps(payload: dict) -> str:
    """Canonical JSON with the schema version stamped in."""
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2)
