"""Abelian Rauzy graphs of t_m and the Y-sets used to count them.

Vertices of G_{m,l} are the Parikh vectors of length-l factors; each factor
a U b of length l+1 contributes the edge Psi(aU) -> Psi(Ub) labelled (a, b).
An edge is identified by its source and label, so witnesses that agree on
both collapse to a single edge.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .factors import factor_set
from .words import parikh

Vertex = tuple  # Parikh vector
Edge = tuple  # (source vertex, (a, b))


@dataclass(frozen=True)
class AbelianRauzyGraph:
    m: int
    order: int
    vertices: frozenset
    edges: frozenset

    @staticmethod
    def target(m: int, edge: Edge) -> Vertex:
        src, (a, b) = edge
        out = list(src)
        out[a] -= 1
        out[b] += 1
        return tuple(out)

    def arcs(self) -> list[tuple[Vertex, Vertex, tuple]]:
        """(source, target, label) triples in deterministic order."""
        return [(src, self.target(self.m, (src, lab)), lab) for src, lab in sorted(self.edges)]

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "order": self.order,
            "vertices": [list(v) for v in sorted(self.vertices)],
            "edges": [{"src": list(src), "a": a, "b": b} for src, (a, b) in sorted(self.edges)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "AbelianRauzyGraph":
        d = json.loads(text)
        return cls(
            d["m"],
            d["order"],
            frozenset(tuple(v) for v in d["vertices"]),
            frozenset((tuple(e["src"]), (e["a"], e["b"])) for e in d["edges"]),
        )

    def to_dot(self) -> str:
        def node(v: Vertex) -> str:
            return "v_" + "_".join(map(str, v))

        lines = [f"digraph G_{self.m}_{self.order} {{"]
        for v in sorted(self.vertices):
            lines.append(f'  {node(v)} [label="{"".join(map(str, v))}"];')
        for src, dst, (a, b) in self.arcs():
            lines.append(f'  {node(src)} -> {node(dst)} [label="({a},{b})", colorscheme=set19, color={b + 1}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class YSets:
    m: int
    order: int
    right: frozenset  # (Psi(U), a) with U a in Fac_{l+1}
    left: frozenset  # (a, Psi(U)) with a U in Fac_{l+1}

    @property
    def total(self) -> int:
        return len(self.right) + len(self.left)


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")


def build_graph(m: int, order: int) -> AbelianRauzyGraph:
    _check_order(order)
    vertices = {parikh(w) for w in factor_set(m, order)}
    edges = set()
    for w in factor_set(m, order + 1):
        src = parikh(w[:-1])
        vertices.add(src)
        edges.add((src, (w[0], w[-1])))
    return AbelianRauzyGraph(m, order, frozenset(vertices), frozenset(edges))


def edge_count(m: int, order: int) -> int:
    return len(build_graph(m, order).edges)


def y_sets(m: int, order: int) -> YSets:
    _check_order(order)
    right, left = set(), set()
    for w in factor_set(m, order + 1):
        right.add((parikh(w[:-1]), w[-1]))
        left.add((w[0], parikh(w[1:])))
    return YSets(m, order, frozenset(right), frozenset(left))


def eulerian_check(g: AbelianRauzyGraph) -> bool:
    """Balanced degrees at every vertex and strongly connected."""
    import networkx as nx

    h = nx.MultiDiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((src, dst) for src, dst, _ in g.arcs())
    return nx.is_eulerian(h)


def _shift(v: Vertex, t: int) -> Vertex:
    return tuple(c + t for c in v)


def shift_isomorphism_check(m: int, order: int, t: int) -> bool:
    """v -> v + t(1,...,1) maps G_{m,order} onto G_{m,order+tm}, labels included."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if not m <= order < 2 * m:
        raise ValueError(f"need m <= order < 2m, got m={m}, order={order}")
    g = build_graph(m, order)
    h = build_graph(m, order + t * m)
    vertices = {_shift(v, t) for v in g.vertices}
    edges = {(_shift(src, t), lab) for src, lab in g.edges}
    return vertices == h.vertices and edges == h.edges


def export_graph(g: AbelianRauzyGraph, fmt: str = "json") -> str:
    if fmt == "json":
        return g.to_json() + "\n"
    if fmt == "dot":
        return g.to_dot()
    raise ValueError(f"unknown graph format {fmt!r}")
