"""Metric graphs presented by models (G, l) with exact rational lengths.

Also covers vertex-weighted metric graphs, their pseudo-metric graphs
with zero-length virtual loops, and the pure metric graphs where the
virtual loops get a positive length eps instead.

Points of a metric graph that are not model vertices are named
``"<edge>@<offset>"`` where the offset is measured from the first
(lexicographically smaller) endpoint of the edge.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .divisors import Divisor
from .errors import InvalidLength, IsCircle, OutOfRange, UnknownEdge, ZeroLengthNonLoop
from .graph import EdgeId, Multigraph, VertexId
from .weighted import (
    attach_virtual_loops,
    check_weights,
    require_loopless,
    virtual_loop_id,
)

Length = Fraction


def to_fraction(x: object, what: str = "value") -> Fraction:
    """Exact rational from int, Fraction or a "p/q" string; floats are refused."""
    if isinstance(x, bool):
        raise InvalidLength(f"{what} must be rational, got {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidLength(f"{what}: cannot parse {x!r} as a rational") from None
    raise InvalidLength(f"{what} must be an exact rational, got {type(x).__name__}")


def point_id(edge: EdgeId, offset: Fraction) -> str:
    return f"{edge}@{offset}"


def parse_point_id(p: str) -> tuple[EdgeId, Fraction] | None:
    if "@" not in p:
        return None
    edge, _, off = p.rpartition("@")
    return edge, to_fraction(off, "point offset")


@dataclass(frozen=True)
class MetricModel:
    graph: Multigraph
    lengths: Mapping[EdgeId, Fraction]

    def __init__(self, graph: Multigraph, lengths: Mapping[EdgeId, object]):
        clean: dict[EdgeId, Fraction] = {}
        for e in graph.edges:
            if e not in lengths:
                raise InvalidLength(f"edge {e!r} has no length")
            ell = to_fraction(lengths[e], f"length of {e!r}")
            if ell <= 0:
                raise InvalidLength(f"length of {e!r} must be positive, got {ell}")
            clean[e] = ell
        extra = set(lengths) - set(graph.edges)
        if extra:
            raise UnknownEdge(sorted(extra)[0])
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "lengths", MappingProxyType(clean))

    def length(self, e: EdgeId) -> Fraction:
        try:
            return self.lengths[e]
        except KeyError:
            raise UnknownEdge(e) from None

    @property
    def total_length(self) -> Fraction:
        return sum(self.lengths.values(), Fraction(0))


def refine_ids(e: EdgeId, at: Fraction) -> tuple[VertexId, EdgeId, EdgeId]:
    return f"sub:{e}:{at}", f"{e}:a", f"{e}:b"


def refine(m: MetricModel, e: EdgeId, at: object) -> MetricModel:
    """Split edge ``e`` at distance ``at`` from its first endpoint.

    The new vertex is ``"sub:<e>:<at>"``; the halves are ``<e>:a`` (first
    endpoint side, length ``at``) and ``<e>:b``. Genus and total length are
    unchanged.
    """
    at = to_fraction(at, "refinement point")
    ell = m.length(e)
    if not 0 < at < ell:
        raise OutOfRange(f"refinement point {at} must lie strictly inside (0, {ell})")
    u, v = m.graph.endpoints(e)
    mid, first, second = refine_ids(e, at)
    edges = dict(m.graph.edges)
    lengths = dict(m.lengths)
    del edges[e], lengths[e]
    edges[first], lengths[first] = (u, mid), at
    edges[second], lengths[second] = (mid, v), ell - at
    return MetricModel(Multigraph([*m.graph.vertices, mid], edges), lengths)


def canonical_model(m: MetricModel, keep: Iterable[VertexId] = ()) -> MetricModel:
    """Suppress every 2-valent vertex not listed in ``keep``.

    A suppressed vertex's two edges merge into one carrying the smaller of
    the two edge ids and the summed length, so the result does not depend on
    the order of suppression.

    Raises:
        IsCircle: every vertex would be suppressed. Pass one vertex in
            ``keep`` to obtain a one-vertex model of the circle.
    """
    keep = set(keep)
    g = m.graph
    removable = [v for v in g.vertices if v not in keep and g.valency(v) == 2]
    if len(removable) == len(g.vertices):
        raise IsCircle(
            "metric graph is a circle; keep one vertex, e.g. "
            f"keep={{{g.vertices[0]!r}}}"
        )
    edges = {e: list(ends) for e, ends in g.edges.items()}
    lengths = dict(m.lengths)
    incident: dict[VertexId, list[EdgeId]] = {v: [] for v in g.vertices}
    for e, (a, b) in g.edges.items():
        incident[a].append(e)
        incident[b].append(e)
    vertices = set(g.vertices)
    for v in removable:
        e1, e2 = incident[v]
        # a 2-valent vertex carrying a loop is a whole circle component
        assert e1 != e2
        a = edges[e1][0] if edges[e1][1] == v else edges[e1][1]
        b = edges[e2][0] if edges[e2][1] == v else edges[e2][1]
        keep_id, drop_id = min(e1, e2), max(e1, e2)
        lengths[keep_id] = lengths[e1] + lengths[e2]
        del lengths[drop_id], edges[drop_id]
        edges[keep_id] = [a, b]
        vertices.discard(v)
        del incident[v]
        for x in {a, b}:
            incident[x] = [keep_id if f in (e1, e2) else f for f in incident[x]]
    return MetricModel(Multigraph(vertices, edges), lengths)


def loopless_canonical_model(m: MetricModel, keep: Iterable[VertexId] = ()) -> MetricModel:
    """Canonical model with a midpoint vertex inserted on every loop."""
    c = canonical_model(m, keep)
    for e in c.graph.loops:
        c = refine(c, e, c.length(e) / 2)
    return c


def model_signature(m: MetricModel) -> list[tuple[tuple[VertexId, VertexId], Fraction]]:
    """Edge data with edge ids forgotten; equal for models equal up to edge renaming."""
    return sorted((m.graph.endpoints(e), m.length(e)) for e in m.graph.edges)


def genus_metric(m: MetricModel) -> int:
    return m.graph.genus


def canonical_divisor_metric(m: MetricModel) -> Divisor[VertexId]:
    g = m.graph
    return Divisor({v: g.valency(v) - 2 for v in g.vertices})


@dataclass(frozen=True)
class WeightedMetricGraph:
    model: MetricModel
    weights: Mapping[VertexId, int]

    def __init__(self, model: MetricModel, weights: Mapping[VertexId, int] | None = None):
        require_loopless(model.graph, "a vertex-weighted metric graph model")
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "weights", MappingProxyType(check_weights(model.graph, weights or {})))

    @property
    def graph(self) -> Multigraph:
        return self.model.graph

    def weight(self, v: VertexId) -> int:
        self.graph.incident(v)
        return self.weights.get(v, 0)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())


@dataclass(frozen=True)
class PseudoMetricGraph:
    graph: Multigraph
    pseudo_lengths: Mapping[EdgeId, Fraction]

    def __init__(self, graph: Multigraph, pseudo_lengths: Mapping[EdgeId, object]):
        clean: dict[EdgeId, Fraction] = {}
        for e in graph.edges:
            if e not in pseudo_lengths:
                raise InvalidLength(f"edge {e!r} has no length")
            ell = to_fraction(pseudo_lengths[e], f"length of {e!r}")
            if ell < 0:
                raise InvalidLength(f"length of {e!r} must be non-negative, got {ell}")
            if ell == 0 and not graph.is_loop(e):
                raise ZeroLengthNonLoop(e)
            clean[e] = ell
        extra = set(pseudo_lengths) - set(graph.edges)
        if extra:
            raise UnknownEdge(sorted(extra)[0])
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "pseudo_lengths", MappingProxyType(clean))


def pseudo_metric_graph(wmg: WeightedMetricGraph) -> PseudoMetricGraph:
    """Attach one zero-length virtual loop per unit of weight."""
    gw = attach_virtual_loops(wmg.graph, wmg.weights)
    lengths: dict[EdgeId, Fraction] = dict(wmg.model.lengths)
    for v, w in wmg.weights.items():
        for k in range(w):
            lengths[virtual_loop_id(v, k)] = Fraction(0)
    return PseudoMetricGraph(gw, lengths)


def from_pseudo_metric(p: PseudoMetricGraph) -> WeightedMetricGraph:
    """Inverse of :func:`pseudo_metric_graph`: zero-length loops become weight."""
    weights: dict[VertexId, int] = {}
    edges = {}
    lengths = {}
    for e, ends in p.graph.edges.items():
        ell = p.pseudo_lengths[e]
        if ell == 0:
            weights[ends[0]] = weights.get(ends[0], 0) + 1
        else:
            edges[e] = ends
            lengths[e] = ell
    model = MetricModel(Multigraph(p.graph.vertices, edges), lengths)
    return WeightedMetricGraph(model, weights)


def epsilon_metric_graph(wmg: WeightedMetricGraph, eps: object) -> MetricModel:
    """Pure metric graph where every virtual loop gets length ``eps``."""
    eps = to_fraction(eps, "eps")
    if eps <= 0:
        raise InvalidLength(f"eps must be positive, got {eps}")
    p = pseudo_metric_graph(wmg)
    lengths = {e: (eps if ell == 0 else ell) for e, ell in p.pseudo_lengths.items()}
    return MetricModel(p.graph, lengths)


def genus_weighted_metric(wmg: WeightedMetricGraph) -> int:
    return wmg.graph.genus + wmg.total_weight


def canonical_divisor_weighted_metric(wmg: WeightedMetricGraph) -> Divisor[VertexId]:
    g = wmg.graph
    return Divisor({v: g.valency(v) - 2 + 2 * wmg.weight(v) for v in g.vertices})
