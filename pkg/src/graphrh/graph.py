"""Finite connected multigraphs with loops.

Vertices and edges carry string ids. An edge is an unordered pair of
endpoints; equal endpoints make a loop, which contributes 2 to the valency
of its base vertex. Vertex ids and edge ids must not overlap so that a
morphism's edge map (whose values may be either kind) is unambiguous.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType

from .errors import (
    DanglingEndpoint,
    Disconnected,
    EmptyGraph,
    IdCollision,
    UnknownEdge,
    UnknownVertex,
)

VertexId = str
EdgeId = str

LOOP_MIDPOINT_PREFIX = "loopmid:"


def _check_id(kind: str, ident: object) -> None:
    if not isinstance(ident, str) or not ident:
        raise IdCollision(f"{kind} id must be a non-empty string, got {ident!r}")


def connected_components(
    vertices: Iterable[VertexId], edges: Mapping[EdgeId, tuple[VertexId, VertexId]]
) -> list[list[VertexId]]:
    """Components as sorted vertex lists, ordered by their least vertex."""
    parent = {v: v for v in vertices}

    def find(x: VertexId) -> VertexId:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges.values():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[VertexId, list[VertexId]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def validate(
    vertices: Iterable[VertexId], edges: Mapping[EdgeId, Iterable[VertexId]]
) -> None:
    """Raise unless the data describes a finite connected multigraph.

    A single vertex without edges is connected.

    Raises:
        DanglingEndpoint: an edge endpoint is not a declared vertex.
        Disconnected: more than one connected component.
        IdCollision: malformed, duplicated or overlapping ids.
        EmptyGraph: no vertices at all.
    """
    vlist = list(vertices)
    for v in vlist:
        _check_id("vertex", v)
    vset = set(vlist)
    if len(vset) != len(vlist):
        raise IdCollision("duplicate vertex id")
    if not vset:
        raise EmptyGraph("a graph needs at least one vertex")
    pairs: dict[EdgeId, tuple[VertexId, VertexId]] = {}
    for e in sorted(edges):
        _check_id("edge", e)
        if e in vset:
            raise IdCollision(f"id {e!r} is used both as a vertex and as an edge")
        ends = tuple(edges[e])
        if len(ends) != 2:
            raise IdCollision(f"edge {e!r} must have exactly two endpoints")
        for x in ends:
            if x not in vset:
                raise DanglingEndpoint(e, x)
        pairs[e] = ends  # type: ignore[assignment]
    count = len(connected_components(vlist, pairs))
    if count != 1:
        raise Disconnected(count)


@dataclass(frozen=True)
class Multigraph:
    """Immutable connected multigraph; ids are kept in sorted order."""

    vertices: tuple[VertexId, ...]
    edges: Mapping[EdgeId, tuple[VertexId, VertexId]]

    def __init__(
        self,
        vertices: Iterable[VertexId],
        edges: Mapping[EdgeId, Iterable[VertexId]] | None = None,
    ):
        edges = {} if edges is None else edges
        vlist = list(vertices)
        validate(vlist, edges)
        normalized = {e: tuple(sorted(edges[e])) for e in sorted(edges)}
        object.__setattr__(self, "vertices", tuple(sorted(vlist)))
        object.__setattr__(self, "edges", MappingProxyType(normalized))

    def __repr__(self) -> str:
        return f"Multigraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    @cached_property
    def vertex_set(self) -> frozenset[VertexId]:
        return frozenset(self.vertices)

    @cached_property
    def _incidence(self) -> Mapping[VertexId, tuple[tuple[EdgeId, VertexId], ...]]:
        inc: dict[VertexId, list[tuple[EdgeId, VertexId]]] = {v: [] for v in self.vertices}
        for e, (u, v) in self.edges.items():
            inc[u].append((e, v))
            inc[v].append((e, u))
        return MappingProxyType({v: tuple(items) for v, items in inc.items()})

    def has_vertex(self, v: VertexId) -> bool:
        return v in self.vertex_set

    def has_edge(self, e: EdgeId) -> bool:
        return e in self.edges

    def endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        try:
            return self.edges[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def is_loop(self, e: EdgeId) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def incident(self, v: VertexId) -> tuple[tuple[EdgeId, VertexId], ...]:
        """(edge, other endpoint) pairs at ``v``; a loop appears twice."""
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def incident_edges(self, v: VertexId) -> tuple[EdgeId, ...]:
        """Distinct edges at ``v`` in id order."""
        return tuple(sorted({e for e, _ in self.incident(v)}))

    def valency(self, v: VertexId) -> int:
        return len(self.incident(v))

    @cached_property
    def loops(self) -> tuple[EdgeId, ...]:
        return tuple(e for e, (u, v) in self.edges.items() if u == v)

    @property
    def is_loopless(self) -> bool:
        return not self.loops

    @property
    def genus(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


def valency(g: Multigraph, v: VertexId) -> int:
    """Number of edge-endpoint incidences at ``v`` (loops count twice)."""
    return g.valency(v)


def genus(g: Multigraph) -> int:
    """First Betti number |E| - |V| + 1."""
    return g.genus


def half_edge_ids(e: EdgeId) -> tuple[EdgeId, EdgeId]:
    return f"{e}/1", f"{e}/2"


def subdivide_edges(
    g: Multigraph, to_split: Iterable[EdgeId], prefix: str = LOOP_MIDPOINT_PREFIX
) -> tuple[Multigraph, dict[EdgeId, VertexId]]:
    """Insert a midpoint vertex ``prefix + e`` into each listed edge.

    Edge ``e`` with endpoints u, v becomes ``e/1`` (u to mid) and ``e/2``
    (mid to v), where u <= v.
    """
    split = sorted(set(to_split))
    vertices = list(g.vertices)
    edges = dict(g.edges)
    mids: dict[EdgeId, VertexId] = {}
    for e in split:
        u, v = g.endpoints(e)
        mid = prefix + e
        first, second = half_edge_ids(e)
        if mid in g.vertex_set or first in edges or second in edges:
            raise IdCollision(f"cannot subdivide {e!r}: generated id already in use")
        del edges[e]
        vertices.append(mid)
        edges[first] = (u, mid)
        edges[second] = (mid, v)
        mids[e] = mid
    return Multigraph(vertices, edges), mids


def subdivide_loops(g: Multigraph) -> tuple[Multigraph, dict[EdgeId, VertexId]]:
    """Loopless graph obtained by putting a midpoint on every loop.

    Each loop ``e`` at ``v`` becomes two parallel edges between ``v`` and the
    fresh vertex ``"loopmid:" + e``. Genus and the valency of every original
    vertex are unchanged. Returns the graph and the loop -> midpoint map.
    """
    if g.is_loopless:
        return g, {}
    return subdivide_edges(g, g.loops)
