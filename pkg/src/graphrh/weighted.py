"""Vertex-weighted graphs (G, w) and their virtual weightless graphs."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .divisors import Divisor
from .errors import InvalidWeight, LoopNotAllowed, UnknownVertex
from .graph import Multigraph, VertexId


def virtual_loop_id(v: VertexId, k: int) -> str:
    return f"vloop:{v}:{k}"


def check_weights(graph: Multigraph, weights: Mapping[VertexId, int]) -> dict[VertexId, int]:
    """Validated weights with zero entries dropped."""
    clean: dict[VertexId, int] = {}
    for v in sorted(weights):
        w = weights[v]
        if not graph.has_vertex(v):
            raise UnknownVertex(v)
        if isinstance(w, bool) or not isinstance(w, int) or w < 0:
            raise InvalidWeight(f"weight at {v!r} must be a non-negative int, got {w!r}")
        if w:
            clean[v] = w
    return clean


def require_loopless(graph: Multigraph, what: str) -> None:
    if graph.loops:
        raise LoopNotAllowed(
            f"{what} must be loopless; loop {graph.loops[0]!r} found "
            "(convert each loop to +1 weight on its vertex)"
        )


@dataclass(frozen=True)
class WeightedGraph:
    graph: Multigraph
    weights: Mapping[VertexId, int]

    def __init__(self, graph: Multigraph, weights: Mapping[VertexId, int] | None = None):
        require_loopless(graph, "a vertex-weighted graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weights", MappingProxyType(check_weights(graph, weights or {})))

    def weight(self, v: VertexId) -> int:
        if not self.graph.has_vertex(v):
            raise UnknownVertex(v)
        return self.weights.get(v, 0)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())


def attach_virtual_loops(graph: Multigraph, weights: Mapping[VertexId, int]) -> Multigraph:
    edges = dict(graph.edges)
    for v in graph.vertices:
        for k in range(weights.get(v, 0)):
            edges[virtual_loop_id(v, k)] = (v, v)
    return Multigraph(graph.vertices, edges)


def virtual_graph(wg: WeightedGraph) -> Multigraph:
    """The graph with one extra loop per unit of weight at every vertex."""
    return attach_virtual_loops(wg.graph, wg.weights)


def genus_weighted(wg: WeightedGraph) -> int:
    """g(G, w) = b1(G) + total weight."""
    return wg.graph.genus + wg.total_weight


def canonical_divisor_weighted(wg: WeightedGraph) -> Divisor[VertexId]:
    g = wg.graph
    return Divisor({v: 2 * wg.weight(v) - 2 + g.valency(v) for v in g.vertices})
