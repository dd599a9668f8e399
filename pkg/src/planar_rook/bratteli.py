"""The restriction tower of module classes and its Pascal-simplex structure.

Level n of the tower holds one vertex per isomorphism class (composition of
n into c+1 parts); a level-n vertex connects down to a level-(n-1) vertex
exactly when the smaller composition is the larger one with a single part
decremented.  Vertex dimensions are multinomial coefficients, so the graph
is the (c+1)-simplex analogue of Pascal's triangle and each level has
C(n+c, n) vertices.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .representations import IrrepLabel, VerifyResult, all_labels

#: An edge joins (level, index) of a parent to (level - 1, index) of a child.
IndexPath = tuple[int, int]


@dataclass(frozen=True)
class BratteliGraph:
    c: int
    n_max: int
    levels: tuple[tuple[IrrepLabel, ...], ...]
    edges: tuple[tuple[IndexPath, IndexPath], ...]

    def level(self, n: int) -> tuple[IrrepLabel, ...]:
        return self.levels[n]

    def children_of(self, n: int, index: int) -> list[int]:
        """Indices of level-(n-1) vertices adjacent to vertex (n, index)."""
        memo = self.__dict__.get("_children_index")
        if memo is None:
            memo = {}
            for parent, child in self.edges:
                memo.setdefault(parent, []).append(child[1])
            object.__setattr__(self, "_children_index", memo)
        return memo.get((n, index), [])


def build(c: int, n_max: int) -> BratteliGraph:
    """Build the tower up to level ``n_max``; levels in colex order."""
    if c < 1 or n_max < 0:
        raise ValueError("need c >= 1 and n_max >= 0")
    levels = tuple(all_labels(n, c) for n in range(n_max + 1))
    index_at = [{label: i for i, label in enumerate(level)} for level in levels]
    edges = []
    for n in range(1, n_max + 1):
        for parent_idx, label in enumerate(levels[n]):
            for child in label.children():
                edges.append(((n, parent_idx), (n - 1, index_at[n - 1][child])))
    edges.sort()
    return BratteliGraph(c, n_max, levels, tuple(edges))


def vertex_count(n: int, c: int) -> int:
    """Number of level-n vertices: compositions of n into c+1 parts."""
    if n < 0 or c < 0:
        raise ValueError("need n >= 0 and c >= 0")
    return math.comb(n + c, n)


def adjacency_count(n: int, c: int, x: int) -> int:
    """How many level-n vertices have exactly x children.

    A vertex has x children iff x of its parts are nonzero: choose the
    nonzero positions, then a positive composition of n into x parts.
    """
    if n < 1 or x < 1:
        raise ValueError("need n >= 1 and x >= 1")
    return math.comb(c + 1, x) * math.comb(n - 1, x - 1)


def down_degree_histogram(graph: BratteliGraph, n: int) -> dict[int, int]:
    """Histogram of child counts over the level-n vertices."""
    degrees = [0] * len(graph.levels[n])
    for (level, parent_idx), _ in graph.edges:
        if level == n:
            degrees[parent_idx] += 1
    histogram: dict[int, int] = {}
    for deg in degrees:
        histogram[deg] = histogram.get(deg, 0) + 1
    return histogram


def verify_multinomial_recursion(graph: BratteliGraph) -> VerifyResult:
    """Every non-root vertex dimension equals the sum over its children."""
    failures: list[str] = []
    checked = 0
    for n in range(1, graph.n_max + 1):
        for idx, label in enumerate(graph.levels[n]):
            checked += 1
            child_sum = sum(
                graph.levels[n - 1][child_idx].dimension()
                for child_idx in graph.children_of(n, idx)
            )
            if label.dimension() != child_sum:
                failures.append(
                    f"vertex {label.encode()} at level {n}: dimension {label.dimension()} "
                    f"but children sum to {child_sum}"
                )
    return VerifyResult.collect(checked, failures)


# ---------------------------------------------------------------------------
# Exchange formats.  Both byte streams are deterministic for a fixed graph.

def emit(graph: BratteliGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return emit_dot(graph)
    if fmt == "json":
        return emit_json(graph)
    raise ValueError(f"unknown format {fmt!r} (expected 'dot' or 'json')")


def _node_id(n: int, label: IrrepLabel) -> str:
    return f"W_{n}_({','.join(str(s) for s in label.sizes)})"


def emit_dot(graph: BratteliGraph) -> bytes:
    """DOT rendering: one node per class with its dimension, ranked by level."""
    lines = ["digraph tower {", "  rankdir=TB;", '  node [shape=ellipse];']
    for n, level in enumerate(graph.levels):
        for label in level:
            node = _node_id(n, label)
            dim = label.dimension()
            lines.append(f'  "{node}" [label="{node} dim={dim}", dim={dim}];')
    for n, level in enumerate(graph.levels):
        ids = " ".join(f'"{_node_id(n, label)}";' for label in level)
        lines.append(f"  {{ rank=same; {ids} }}")
    for (pn, pi), (cn, ci) in graph.edges:
        parent = _node_id(pn, graph.levels[pn][pi])
        child = _node_id(cn, graph.levels[cn][ci])
        lines.append(f'  "{parent}" -> "{child}";')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_json(graph: BratteliGraph) -> bytes:
    payload = {
        "c": graph.c,
        "n_max": graph.n_max,
        "levels": [[list(label.sizes) for label in level] for level in graph.levels],
        "edges": [[list(parent), list(child)] for parent, child in graph.edges],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def graph_from_json(raw: bytes) -> BratteliGraph:
    """Rebuild a graph from its JSON byte stream (inverse of emit_json)."""
    payload = json.loads(raw.decode("utf-8"))
    levels = tuple(
        tuple(IrrepLabel(tuple(sizes)) for sizes in level) for level in payload["levels"]
    )
    edges = tuple(
        ((parent[0], parent[1]), (child[0], child[1])) for parent, child in payload["edges"]
    )
    return BratteliGraph(payload["c"], payload["n_max"], levels, edges)
