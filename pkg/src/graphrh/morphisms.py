"""Morphisms in the four graph-level categories and their harmonicity checks.

Every morphism wraps a :class:`GraphMorphism` (the combinatorial map) and
assigns each source edge a *local degree*: 1/0 for horizontal/vertical edges
of plain graphs, the index for indexed morphisms, the integer slope for
metric ones. Horizontal multiplicity, degree, pullback and the ramification
data are then computed the same way in every category.

Loops are only possible in the plain category. A target loop meets its base
vertex in two half-edges, so the count of source incidences mapping to it is
halved; this agrees with subdividing every loop (see :func:`loopless_lift`).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Union

from .divisors import Divisor
from .errors import (
    InconsistentDegree,
    IndexVerticalMismatch,
    InvalidMorphism,
    NonIntegralSlope,
    NotHarmonic,
    UnknownEdge,
    UnknownVertex,
)
from .graph import EdgeId, Multigraph, VertexId, half_edge_ids, subdivide_edges
from .metric import MetricModel, WeightedMetricGraph, refine, refine_ids, to_fraction
from .weighted import WeightedGraph, require_loopless

FINITE = "finite"
WEIGHTED = "weighted"
METRIC = "metric"
WEIGHTED_METRIC = "weighted_metric"
COMPLEX = "complex"
CATEGORIES = (FINITE, WEIGHTED, METRIC, WEIGHTED_METRIC, COMPLEX)


@dataclass(frozen=True)
class GraphMorphism:
    """A map of vertices to vertices and of edges to edges or vertices."""

    source: Multigraph
    target: Multigraph
    vertex_map: Mapping[VertexId, VertexId]
    edge_map: Mapping[EdgeId, str]

    def __init__(
        self,
        source: Multigraph,
        target: Multigraph,
        vertex_map: Mapping[VertexId, VertexId],
        edge_map: Mapping[EdgeId, str],
    ):
        for v in vertex_map:
            if not source.has_vertex(v):
                raise UnknownVertex(v)
        for e in edge_map:
            if not source.has_edge(e):
                raise UnknownEdge(e)
        for v in source.vertices:
            if v not in vertex_map:
                raise InvalidMorphism(f"vertex {v!r} has no image")
            if not target.has_vertex(vertex_map[v]):
                raise InvalidMorphism(f"vertex {v!r} maps to {vertex_map[v]!r}, not a target vertex")
        for e, (a, b) in source.edges.items():
            if e not in edge_map:
                raise InvalidMorphism(f"edge {e!r} has no image")
            img = edge_map[e]
            fa, fb = vertex_map[a], vertex_map[b]
            if target.has_edge(img):
                if tuple(sorted((fa, fb))) != target.endpoints(img):
                    raise InvalidMorphism(
                        f"edge {e!r} maps to {img!r} but its endpoints map to {fa!r}, {fb!r}"
                    )
            elif target.has_vertex(img):
                if not fa == fb == img:
                    raise InvalidMorphism(
                        f"edge {e!r} is contracted to {img!r} but its endpoints map to {fa!r}, {fb!r}"
                    )
            else:
                raise InvalidMorphism(f"edge {e!r} maps to {img!r}, not a target vertex or edge")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "vertex_map", MappingProxyType(dict(sorted(vertex_map.items()))))
        object.__setattr__(self, "edge_map", MappingProxyType(dict(sorted(edge_map.items()))))

    def __call__(self, x: str) -> str:
        if x in self.vertex_map:
            return self.vertex_map[x]
        if x in self.edge_map:
            return self.edge_map[x]
        raise UnknownVertex(x)

    def is_vertical(self, e: EdgeId) -> bool:
        try:
            return not self.target.has_edge(self.edge_map[e])
        except KeyError:
            raise UnknownEdge(e) from None

    def is_horizontal(self, e: EdgeId) -> bool:
        return not self.is_vertical(e)

    def vertex_fiber(self, v: VertexId) -> tuple[VertexId, ...]:
        return tuple(x for x, y in self.vertex_map.items() if y == v)

    def edge_fiber(self, e: EdgeId) -> tuple[EdgeId, ...]:
        return tuple(x for x, y in self.edge_map.items() if y == e)

    # the plain category: horizontal edges have local degree 1
    category = FINITE

    @property
    def base(self) -> GraphMorphism:
        return self

    def local_degree(self, e: EdgeId) -> int:
        return 0 if self.is_vertical(e) else 1

    def source_weight(self, v: VertexId) -> int:
        return 0

    def target_weight(self, v: VertexId) -> int:
        return 0


@dataclass(frozen=True)
class IndexedMorphism:
    """A morphism of loopless vertex-weighted graphs with an index per edge."""

    source: WeightedGraph
    target: WeightedGraph
    base: GraphMorphism
    indices: Mapping[EdgeId, int]

    category = WEIGHTED

    def __init__(
        self,
        source: WeightedGraph,
        target: WeightedGraph,
        vertex_map: Mapping[VertexId, VertexId],
        edge_map: Mapping[EdgeId, str],
        indices: Mapping[EdgeId, int],
    ):
        base = GraphMorphism(source.graph, target.graph, vertex_map, edge_map)
        clean: dict[EdgeId, int] = {}
        for e in source.graph.edges:
            r = indices.get(e)
            if isinstance(r, bool) or not isinstance(r, int) or r < 0:
                raise InvalidMorphism(f"index of edge {e!r} must be a non-negative int, got {r!r}")
            if (r == 0) != base.is_vertical(e):
                raise IndexVerticalMismatch(e)
            clean[e] = r
        for e in indices:
            if not source.graph.has_edge(e):
                raise UnknownEdge(e)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "indices", MappingProxyType(clean))

    def local_degree(self, e: EdgeId) -> int:
        return self.indices[e]

    def source_weight(self, v: VertexId) -> int:
        return self.source.weight(v)

    def target_weight(self, v: VertexId) -> int:
        return self.target.weight(v)


def _slopes(base: GraphMorphism, source: MetricModel, target: MetricModel) -> dict[EdgeId, int]:
    slopes: dict[EdgeId, int] = {}
    for e in source.graph.edges:
        if base.is_vertical(e):
            slopes[e] = 0
            continue
        ratio = target.length(base.edge_map[e]) / source.length(e)
        if ratio.denominator != 1:
            raise NonIntegralSlope(
                f"slope on edge {e!r} is {ratio}, length ratio must be an integer"
            )
        slopes[e] = ratio.numerator
    return slopes


@dataclass(frozen=True)
class MetricMorphism:
    """A morphism of loopless metric models; slopes are length ratios."""

    source: MetricModel
    target: MetricModel
    base: GraphMorphism
    slopes: Mapping[EdgeId, int]

    category = METRIC

    def __init__(
        self,
        source: MetricModel,
        target: MetricModel,
        vertex_map: Mapping[VertexId, VertexId],
        edge_map: Mapping[EdgeId, str],
    ):
        require_loopless(source.graph, "the source model of a metric morphism")
        require_loopless(target.graph, "the target model of a metric morphism")
        base = GraphMorphism(source.graph, target.graph, vertex_map, edge_map)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slopes", MappingProxyType(_slopes(base, source, target)))

    def slope(self, e: EdgeId) -> int:
        try:
            return self.slopes[e]
        except KeyError:
            raise UnknownEdge(e) from None

    local_degree = slope

    def source_weight(self, v: VertexId) -> int:
        return 0

    def target_weight(self, v: VertexId) -> int:
        return 0


@dataclass(frozen=True)
class WeightedMetricMorphism:
    source: WeightedMetricGraph
    target: WeightedMetricGraph
    metric: MetricMorphism

    category = WEIGHTED_METRIC

    def __init__(
        self,
        source: WeightedMetricGraph,
        target: WeightedMetricGraph,
        vertex_map: Mapping[VertexId, VertexId],
        edge_map: Mapping[EdgeId, str],
    ):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "metric", MetricMorphism(source.model, target.model, vertex_map, edge_map))

    @property
    def base(self) -> GraphMorphism:
        return self.metric.base

    @property
    def slopes(self) -> Mapping[EdgeId, int]:
        return self.metric.slopes

    def slope(self, e: EdgeId) -> int:
        return self.metric.slope(e)

    local_degree = slope

    def source_weight(self, v: VertexId) -> int:
        return self.source.weight(v)

    def target_weight(self, v: VertexId) -> int:
        return self.target.weight(v)


AnyGraphMorphism = Union[GraphMorphism, IndexedMorphism, MetricMorphism, WeightedMetricMorphism]


# -- multiplicities ----------------------------------------------------------


@dataclass(frozen=True)
class NotHarmonicAt:
    """Witness that the weighted fiber counts at ``vertex`` disagree.

    ``counts`` lists (target edge, count) for every target edge at the image
    vertex; for the slack condition it holds the single pair ("slack", value).
    """

    vertex: VertexId
    reason: str
    counts: tuple[tuple[str, int], ...] = ()

    def describe(self) -> str:
        detail = ", ".join(f"{e}: {c}" for e, c in self.counts)
        return f"not harmonic at {self.vertex!r}: {self.reason}" + (f" ({detail})" if detail else "")


def vertical_multiplicity(m: AnyGraphMorphism, v: VertexId) -> int:
    """Number of incident edges contracted to the image of ``v``; loops count twice."""
    base = m.base
    return sum(1 for e, _ in base.source.incident(v) if base.is_vertical(e))


def horizontal_multiplicity(m: AnyGraphMorphism, v: VertexId) -> int | NotHarmonicAt:
    """Common weighted fiber count at ``v``, or the witness when counts differ.

    Zero when the target has no edges.
    """
    base = m.base
    image = base.vertex_map.get(v)
    if image is None:
        raise UnknownVertex(v)
    tgt = base.target
    if not tgt.edges:
        return 0
    counts: dict[EdgeId, int] = {e2: 0 for e2, _ in tgt.incident(image)}
    for e, _ in base.source.incident(v):
        if base.is_horizontal(e):
            counts[base.edge_map[e]] += m.local_degree(e)
    # a target loop is met twice at its base vertex
    normalized = []
    for e2 in sorted(counts):
        c = counts[e2]
        if tgt.is_loop(e2):
            if c % 2:
                return NotHarmonicAt(v, "odd incidence count on a target loop", ((e2, c),))
            c //= 2
        normalized.append((e2, c))
    values = {c for _, c in normalized}
    if len(values) == 1:
        return values.pop()
    return NotHarmonicAt(v, "fiber counts differ across target edges", tuple(normalized))


@dataclass(frozen=True)
class HarmonicCertificate:
    """Outcome of a harmonicity check.

    ``pseudo_harmonic`` means the fiber counts agree at every vertex, so
    ``multiplicity`` is defined. ``harmonic`` additionally requires a
    non-negative ``slack`` at every vertex in the weighted categories; for
    plain and metric morphisms the two flags coincide. The least failing
    vertex id provides the witness.
    """

    category: str
    pseudo_harmonic: bool
    harmonic: bool
    multiplicity: Mapping[VertexId, int] = field(default_factory=dict)
    vertical: Mapping[VertexId, int] = field(default_factory=dict)
    slack: Mapping[VertexId, int] = field(default_factory=dict)
    degree: int | None = None
    witness: NotHarmonicAt | None = None

    def __bool__(self) -> bool:
        return self.harmonic


def _edge_fiber_degree(m: AnyGraphMorphism) -> int:
    base = m.base
    if not base.target.edges:
        return 0
    sums = {e2: 0 for e2 in base.target.edges}
    for e, img in base.edge_map.items():
        if img in sums:
            sums[img] += m.local_degree(e)
    distinct = sorted(set(sums.values()))
    if len(distinct) > 1:
        by_value = {c: e2 for e2, c in sorted(sums.items(), reverse=True)}
        e1, e2 = by_value[distinct[0]], by_value[distinct[-1]]
        raise InconsistentDegree(
            f"edge fibers differ: {e1!r} has {sums[e1]}, {e2!r} has {sums[e2]}"
        )
    return distinct[0]


def _slack(m: AnyGraphMorphism, v: VertexId, mult: int) -> int:
    """2(M - 1 + w - M w') minus the sum of (local degree - 1) over edges at v."""
    base = m.base
    w, w2 = m.source_weight(v), m.target_weight(base.vertex_map[v])
    edge_term = sum(m.local_degree(e) - 1 for e in base.source.incident_edges(v))
    return 2 * (mult - 1 + w - mult * w2) - edge_term


def certify(m: AnyGraphMorphism, *, require_slack: bool | None = None) -> HarmonicCertificate:
    """Run the harmonicity check appropriate to ``m``'s category.

    ``require_slack`` defaults to True for weighted categories, where the
    harmonic condition asks for non-negative slack at every vertex.
    """
    category = m.category
    weighted = category in (WEIGHTED, WEIGHTED_METRIC)
    if require_slack is None:
        require_slack = weighted
    base = m.base
    mult: dict[VertexId, int] = {}
    vert: dict[VertexId, int] = {}
    for v in base.source.vertices:
        vert[v] = vertical_multiplicity(m, v)
        hm = horizontal_multiplicity(m, v)
        if isinstance(hm, NotHarmonicAt):
            return HarmonicCertificate(category, False, False, vertical=vert, witness=hm)
        mult[v] = hm
    try:
        deg = degree_from_multiplicities(m, mult)
    except InconsistentDegree as exc:
        return HarmonicCertificate(
            category, False, False, mult, vert, witness=NotHarmonicAt("", str(exc))
        )
    slack = {v: _slack(m, v, mult[v]) for v in base.source.vertices} if weighted else {}
    witness = None
    if require_slack:
        for v, s in slack.items():
            if s < 0:
                witness = NotHarmonicAt(v, "negative slack", (("slack", s),))
                break
    return HarmonicCertificate(category, True, witness is None, mult, vert, slack, deg, witness)


def degree_from_multiplicities(m: AnyGraphMorphism, mult: Mapping[VertexId, int]) -> int:
    """Edge-fiber degree, cross-checked against every vertex fiber sum of M."""
    deg = _edge_fiber_degree(m)
    base = m.base
    if base.target.edges:
        sums = {v2: 0 for v2 in base.target.vertices}
        for v, v2 in base.vertex_map.items():
            sums[v2] += mult[v]
        for v2, s in sums.items():
            if s != deg:
                raise InconsistentDegree(
                    f"vertex fiber over {v2!r} has multiplicity sum {s}, edge fibers give {deg}"
                )
    return deg


def balance_failures(m: GraphMorphism, cert: HarmonicCertificate) -> list[VertexId]:
    """Vertices where val(v) != val(image) * M(v) + V(v)."""
    if not cert.pseudo_harmonic:
        return []
    tgt_has_edges = bool(m.target.edges)
    out = []
    for v in m.source.vertices:
        val2 = m.target.valency(m.vertex_map[v]) if tgt_has_edges else 0
        if m.source.valency(v) != val2 * cert.multiplicity[v] + cert.vertical[v]:
            out.append(v)
    return out


def is_harmonic_finite(m: GraphMorphism) -> HarmonicCertificate:
    cert = certify(m)
    bad = balance_failures(m, cert)
    if bad:
        # unreachable for a valid morphism; kept as a guard on the counting
        return HarmonicCertificate(
            FINITE, False, False, cert.multiplicity, cert.vertical,
            witness=NotHarmonicAt(bad[0], "valency balance fails"),
        )
    return cert


def is_pseudo_harmonic_indexed(m: IndexedMorphism) -> HarmonicCertificate:
    return certify(m, require_slack=False)


def is_harmonic_indexed(m: IndexedMorphism) -> HarmonicCertificate:
    return certify(m, require_slack=True)


def is_harmonic_metric(m: MetricMorphism) -> HarmonicCertificate:
    return certify(m)


def is_pseudo_harmonic_weighted_metric(m: WeightedMetricMorphism) -> HarmonicCertificate:
    return certify(m, require_slack=False)


def is_harmonic_weighted_metric(m: WeightedMetricMorphism) -> HarmonicCertificate:
    return certify(m, require_slack=True)


def _require_pseudo(m: AnyGraphMorphism) -> HarmonicCertificate:
    cert = certify(m, require_slack=False)
    if not cert.pseudo_harmonic:
        w = cert.witness
        raise NotHarmonic(w.describe() if w else "not harmonic", w.vertex if w else None)
    return cert


def degree(m: AnyGraphMorphism) -> int:
    """Degree of a (pseudo-)harmonic morphism; 0 when the target has no edges.

    Raises:
        InconsistentDegree: the edge fibers disagree.
        NotHarmonic: the fiber counts disagree at some vertex.
    """
    _edge_fiber_degree(m)
    return _require_pseudo(m).degree  # type: ignore[return-value]


degree_finite = degree
degree_metric = degree


def multiplicities(m: AnyGraphMorphism) -> Mapping[VertexId, int]:
    return _require_pseudo(m).multiplicity


def pullback(m: AnyGraphMorphism, d: Divisor[VertexId]) -> Divisor[VertexId]:
    """Divisor with coefficient M(v) * d(image of v) at every source vertex."""
    base = m.base
    for p in d:
        if not base.target.has_vertex(p):
            raise UnknownVertex(p)
    mult = multiplicities(m)
    return Divisor({v: mult[v] * d[base.vertex_map[v]] for v in base.source.vertices})


def pushforward(m: AnyGraphMorphism, d: Divisor[VertexId]) -> Divisor[VertexId]:
    base = m.base
    for p in d:
        if not base.source.has_vertex(p):
            raise UnknownVertex(p)
    return d.map_points(lambda v: base.vertex_map[v])


# -- constructions -----------------------------------------------------------


def compose(second: AnyGraphMorphism, first: AnyGraphMorphism) -> AnyGraphMorphism:
    """``second`` after ``first``; both must belong to the same category.

    Local degrees multiply along the composite, so indices of composed
    indexed morphisms are products.
    """
    if second.category != first.category:
        raise InvalidMorphism("can only compose morphisms of the same category")
    b1, b2 = first.base, second.base
    if b1.target != b2.source:
        raise InvalidMorphism("target of the first morphism is not the source of the second")
    vmap = {v: b2.vertex_map[x] for v, x in b1.vertex_map.items()}
    emap = {}
    for e, x in b1.edge_map.items():
        emap[e] = b2.edge_map[x] if b1.target.has_edge(x) else b2.vertex_map[x]
    if isinstance(first, GraphMorphism):
        return GraphMorphism(b1.source, b2.target, vmap, emap)
    if isinstance(first, IndexedMorphism):
        idx = {
            e: (first.indices[e] * second.local_degree(b1.edge_map[e]) if b1.is_horizontal(e) else 0)
            for e in b1.source.edges
        }
        return IndexedMorphism(first.source, second.target, vmap, emap, idx)
    if isinstance(first, MetricMorphism):
        return MetricMorphism(first.source, second.target, vmap, emap)
    return WeightedMetricMorphism(first.source, second.target, vmap, emap)


def identity_graph_morphism(g: Multigraph) -> GraphMorphism:
    return GraphMorphism(g, g, {v: v for v in g.vertices}, {e: e for e in g.edges})


@dataclass(frozen=True)
class LooplessLift:
    """A plain morphism with all relevant loops subdivided.

    ``source_mids`` / ``target_mids`` map each subdivided edge to its new
    midpoint vertex; every other vertex keeps its id.
    """

    morphism: GraphMorphism
    source_mids: Mapping[EdgeId, VertexId]
    target_mids: Mapping[EdgeId, VertexId]


def _balanced_orientation(
    edges: list[tuple[EdgeId, VertexId, VertexId]],
) -> dict[EdgeId, bool]:
    """Orient edges so every vertex has equal in- and out-degree.

    Returns True when an edge keeps its stored (first, second) direction.
    Requires every vertex degree to be even; walks closed trails greedily.
    """
    adj: dict[VertexId, list[tuple[EdgeId, VertexId, bool]]] = {}
    for e, a, b in edges:
        adj.setdefault(a, []).append((e, b, True))
        adj.setdefault(b, []).append((e, a, False))
    used: dict[EdgeId, bool] = {}
    for start in sorted(adj):
        # with even degrees every trail from start closes back at start
        cur = start
        while True:
            nxt = next((x for x in adj[cur] if x[0] not in used), None)
            if nxt is None:
                break
            e, other, forward = nxt
            used[e] = forward
            cur = other
    return used


def loopless_lift(m: GraphMorphism) -> LooplessLift:
    """Subdivide target loops and every source edge that maps onto one or is a loop.

    Source edges over a target loop are oriented by a balanced orientation so
    that each half of the loop receives half of the incidences at every
    vertex; harmonicity, degree and ramification at the original vertices are
    unchanged.

    Raises:
        NotHarmonic: incidences over some target loop are odd at a vertex, so
            no balanced orientation exists.
    """
    src, tgt = m.source, m.target
    tgt_loops = set(tgt.loops)
    over_loops = [e for e in src.edges if m.edge_map[e] in tgt_loops]
    vertical_loops = [e for e in src.loops if m.is_vertical(e)]
    if not over_loops and not vertical_loops and not tgt_loops:
        return LooplessLift(m, {}, {})

    new_tgt, tmids = subdivide_edges(tgt, tgt_loops)
    new_src, smids = subdivide_edges(src, [*over_loops, *vertical_loops])
    vmap = dict(m.vertex_map)
    emap = {e: x for e, x in m.edge_map.items() if e not in smids}
    for e in vertical_loops:
        x = m.edge_map[e]
        vmap[smids[e]] = x
        h1, h2 = half_edge_ids(e)
        emap[h1] = emap[h2] = x
    by_loop: dict[EdgeId, list[tuple[EdgeId, VertexId, VertexId]]] = {}
    for e in over_loops:
        a, b = src.endpoints(e)
        by_loop.setdefault(m.edge_map[e], []).append((e, a, b))
    for loop, preimages in by_loop.items():
        deg_at: dict[VertexId, int] = {}
        for _, a, b in preimages:
            deg_at[a] = deg_at.get(a, 0) + 1
            deg_at[b] = deg_at.get(b, 0) + 1
        odd = sorted(v for v, k in deg_at.items() if k % 2)
        if odd:
            raise NotHarmonic(f"odd incidence count over target loop {loop!r}", odd[0])
        orient = _balanced_orientation(preimages)
        t1, t2 = half_edge_ids(loop)
        for e, _, _ in preimages:
            vmap[smids[e]] = tmids[loop]
            h1, h2 = half_edge_ids(e)
            emap[h1], emap[h2] = (t1, t2) if orient[e] else (t2, t1)
    lifted = GraphMorphism(new_src, new_tgt, vmap, emap)
    return LooplessLift(lifted, MappingProxyType(smids), MappingProxyType(tmids))


remove_loops = loopless_lift


def refine_morphism(
    m: MetricMorphism | WeightedMetricMorphism, target_edge: EdgeId, at: object
) -> MetricMorphism | WeightedMetricMorphism:
    """Refine the target edge at ``at`` and every horizontal preimage compatibly.

    A preimage with slope U is split at distance at/U from the endpoint lying
    over the first endpoint of ``target_edge``. Vertical edges are untouched.
    Multiplicities, degree and ramification at existing vertices are kept;
    the new vertices are unramified.
    """
    mm = m.metric if isinstance(m, WeightedMetricMorphism) else m
    at = to_fraction(at, "refinement point")
    tgt = refine(mm.target, target_edge, at)
    t_mid, t_first, t_second = refine_ids(target_edge, at)
    first_end = mm.target.graph.endpoints(target_edge)[0]
    src = mm.source
    vmap = dict(mm.base.vertex_map)
    emap = dict(mm.base.edge_map)
    vmap_src_mid = {}
    for e in mm.base.edge_fiber(target_edge):
        u = mm.slope(e)
        a, _ = mm.source.graph.endpoints(e)
        from_a = mm.base.vertex_map[a] == first_end
        offset = at / u if from_a else mm.source.length(e) - at / u
        src = refine(src, e, offset)
        s_mid, s_first, s_second = refine_ids(e, offset)
        del emap[e]
        emap[s_first], emap[s_second] = (t_first, t_second) if from_a else (t_second, t_first)
        vmap_src_mid[s_mid] = t_mid
    vmap.update(vmap_src_mid)
    if isinstance(m, WeightedMetricMorphism):
        return WeightedMetricMorphism(
            WeightedMetricGraph(src, m.source.weights),
            WeightedMetricGraph(tgt, m.target.weights),
            vmap,
            emap,
        )
    return MetricMorphism(src, tgt, vmap, emap)
