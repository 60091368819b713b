"""Metrized complexes of curves, their divisors and harmonic morphisms.

Curves are abstract: a genus, a finite set of tracked point ids and an
optional explicit canonical representative. Without one, the canonical part
of a curve divisor is kept as an unresolved integer degree, which is enough
for every degree-level identity. Support-level pullbacks need explicit data
and raise :class:`UndeclaredFiber` otherwise.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from .divisors import Divisor
from .errors import (
    InconsistentDegree,
    InvalidComplex,
    MissingCanonicalRep,
    NotHarmonic,
    UndeclaredFiber,
    UnknownVertex,
    UnsupportedPoint,
)
from .graph import EdgeId, VertexId
from .metric import WeightedMetricGraph, genus_weighted_metric, parse_point_id, point_id
from .morphisms import (
    COMPLEX,
    HarmonicCertificate,
    WeightedMetricMorphism,
    is_harmonic_weighted_metric,
)

CurvePoint = str


@dataclass(frozen=True)
class AbstractCurve:
    genus: int
    points: tuple[CurvePoint, ...]
    canonical_rep: Divisor[CurvePoint] | None = None

    def __init__(self, genus: int, points=(), canonical_rep: Divisor[CurvePoint] | None = None):
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            raise InvalidComplex(f"curve genus must be a non-negative int, got {genus!r}")
        pts = tuple(sorted(points))
        if len(set(pts)) != len(pts):
            raise InvalidComplex("duplicate curve point id")
        if canonical_rep is not None:
            missing = set(canonical_rep) - set(pts)
            if missing:
                raise InvalidComplex(f"canonical representative uses untracked point {sorted(missing)[0]!r}")
            if canonical_rep.degree != 2 * genus - 2:
                raise InvalidComplex(
                    f"canonical representative has degree {canonical_rep.degree}, expected {2 * genus - 2}"
                )
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "canonical_rep", canonical_rep)


@dataclass(frozen=True)
class MetrizedComplex:
    """A weighted metric graph with a curve at every vertex.

    ``reductions[v]`` sends each edge at ``v`` to a distinct tracked point
    of the curve at ``v`` (the skeleton model is loopless, so each edge has
    one slot at each endpoint).
    """

    skeleton: WeightedMetricGraph
    curves: Mapping[VertexId, AbstractCurve]
    reductions: Mapping[VertexId, Mapping[EdgeId, CurvePoint]]

    def __init__(
        self,
        skeleton: WeightedMetricGraph,
        curves: Mapping[VertexId, AbstractCurve],
        reductions: Mapping[VertexId, Mapping[EdgeId, CurvePoint]],
    ):
        g = skeleton.graph
        for v in list(curves) + list(reductions):
            if not g.has_vertex(v):
                raise UnknownVertex(v)
        red_clean = {}
        for v in g.vertices:
            if v not in curves:
                raise InvalidComplex(f"vertex {v!r} has no curve")
            red = dict(reductions.get(v, {}))
            edges = set(g.incident_edges(v))
            if set(red) != edges:
                raise InvalidComplex(f"reduction at {v!r} must cover exactly the edges {sorted(edges)}")
            if len(set(red.values())) != len(red):
                raise InvalidComplex(f"reduction at {v!r} is not injective")
            for e, x in red.items():
                if x not in curves[v].points:
                    raise InvalidComplex(f"reduction at {v!r} sends {e!r} to untracked point {x!r}")
            red_clean[v] = MappingProxyType(dict(sorted(red.items())))
        object.__setattr__(self, "skeleton", skeleton)
        object.__setattr__(self, "curves", MappingProxyType(dict(sorted(curves.items()))))
        object.__setattr__(self, "reductions", MappingProxyType(red_clean))

    @property
    def graph(self):
        return self.skeleton.graph

    def marked_points(self, v: VertexId) -> tuple[CurvePoint, ...]:
        return tuple(sorted(self.reductions[v].values()))

    def edge_at_point(self, v: VertexId, x: CurvePoint) -> EdgeId | None:
        for e, y in self.reductions[v].items():
            if y == x:
                return e
        return None


def genus_complex(c: MetrizedComplex) -> int:
    """Genus of the weighted skeleton plus the genera of all curves."""
    return genus_weighted_metric(c.skeleton) + sum(cv.genus for cv in c.curves.values())


@dataclass(frozen=True)
class CurveDivisor:
    """Explicit points plus a symbolic part known only by its degree."""

    explicit: Divisor[CurvePoint] = field(default_factory=Divisor)
    unresolved_degree: int = 0

    @property
    def degree(self) -> int:
        return self.explicit.degree + self.unresolved_degree

    @property
    def is_explicit(self) -> bool:
        return self.unresolved_degree == 0

    def __add__(self, other: CurveDivisor) -> CurveDivisor:
        return CurveDivisor(self.explicit + other.explicit, self.unresolved_degree + other.unresolved_degree)

    def __bool__(self) -> bool:
        return bool(self.explicit) or self.unresolved_degree != 0


@dataclass(frozen=True)
class ComplexDivisor:
    """A divisor on a metrized complex.

    ``graphical`` lives on points of the metric graph (vertex ids or
    ``"<edge>@<offset>"`` ids); ``per_curve`` holds the part on each curve.
    """

    graphical: Divisor[str] = field(default_factory=Divisor)
    per_curve: Mapping[VertexId, CurveDivisor] = field(default_factory=dict)

    def __post_init__(self):
        clean = {v: d for v, d in sorted(self.per_curve.items()) if d}
        object.__setattr__(self, "per_curve", MappingProxyType(clean))

    @property
    def degree(self) -> int:
        return self.graphical.degree + sum(d.degree for d in self.per_curve.values())

    def vertex_totals(self) -> Divisor[str]:
        """Graphical part plus, at each vertex, the degree of its curve part."""
        return self.graphical + Divisor({v: d.degree for v, d in self.per_curve.items()})

    def __add__(self, other: ComplexDivisor) -> ComplexDivisor:
        curves = dict(self.per_curve)
        for v, d in other.per_curve.items():
            curves[v] = curves[v] + d if v in curves else d
        return ComplexDivisor(self.graphical + other.graphical, curves)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexDivisor):
            return NotImplemented
        return self.graphical == other.graphical and dict(self.per_curve) == dict(other.per_curve)

    __hash__ = None  # type: ignore[assignment]


def canonical_divisor_complex(c: MetrizedComplex, *, explicit: bool = False) -> ComplexDivisor:
    """Canonical divisor: on each curve a canonical divisor plus its marked
    points, and twice the weight at each skeleton vertex.

    The curve's canonical divisor is its explicit representative when present
    and an unresolved degree 2g - 2 otherwise.

    Raises:
        MissingCanonicalRep: ``explicit`` is set and some curve has none.
    """
    per_curve = {}
    for v, curve in c.curves.items():
        marked = Divisor({x: 1 for x in c.marked_points(v)})
        if curve.canonical_rep is not None:
            per_curve[v] = CurveDivisor(curve.canonical_rep + marked)
        elif explicit:
            raise MissingCanonicalRep(f"curve at {v!r} has no explicit canonical representative")
        else:
            per_curve[v] = CurveDivisor(marked, 2 * curve.genus - 2)
    graphical = Divisor({v: 2 * w for v, w in c.skeleton.weights.items()})
    return ComplexDivisor(graphical, per_curve)


def canonical_vertex_totals(c: MetrizedComplex) -> Divisor[VertexId]:
    """Per vertex: valency + 2 * curve genus - 2 + 2 * weight."""
    return canonical_divisor_complex(c).vertex_totals()


# -- morphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveCover:
    """Declared data of a finite map of curves.

    Only tracked points appear. A target point's fiber counts as fully
    declared once the ramification indices of its declared preimages add
    up to the degree.
    """

    degree: int
    point_map: Mapping[CurvePoint, CurvePoint]
    ram_index: Mapping[CurvePoint, int]

    def __init__(self, degree: int, point_map: Mapping[CurvePoint, CurvePoint], ram_index: Mapping[CurvePoint, int]):
        if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
            raise InvalidComplex(f"cover degree must be a positive int, got {degree!r}")
        if set(ram_index) != set(point_map):
            raise InvalidComplex("ramification indices must be given exactly for the mapped points")
        for x, k in ram_index.items():
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise InvalidComplex(f"ramification index at {x!r} must be a positive int")
        totals: dict[CurvePoint, int] = {}
        for x, y in point_map.items():
            totals[y] = totals.get(y, 0) + ram_index[x]
        for y, t in totals.items():
            if t > degree:
                raise InvalidComplex(f"ramification over {y!r} adds up to {t}, more than the degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "point_map", MappingProxyType(dict(sorted(point_map.items()))))
        object.__setattr__(self, "ram_index", MappingProxyType(dict(sorted(ram_index.items()))))

    def fiber(self, y: CurvePoint) -> tuple[CurvePoint, ...]:
        return tuple(x for x, z in self.point_map.items() if z == y)

    def is_fully_declared(self, y: CurvePoint) -> bool:
        return sum(self.ram_index[x] for x in self.fiber(y)) == self.degree

    def pullback_point(self, y: CurvePoint, vertex: VertexId | None = None) -> Divisor[CurvePoint]:
        if not self.is_fully_declared(y):
            raise UndeclaredFiber(y, vertex)
        return Divisor({x: self.ram_index[x] for x in self.fiber(y)})


@dataclass(frozen=True)
class ComplexMorphism:
    source: MetrizedComplex
    target: MetrizedComplex
    skeleton: WeightedMetricMorphism
    covers: Mapping[VertexId, CurveCover]

    category = COMPLEX

    def __init__(
        self,
        source: MetrizedComplex,
        target: MetrizedComplex,
        vertex_map: Mapping[VertexId, VertexId],
        edge_map: Mapping[EdgeId, str],
        covers: Mapping[VertexId, CurveCover],
    ):
        skel = WeightedMetricMorphism(source.skeleton, target.skeleton, vertex_map, edge_map)
        for v, cov in covers.items():
            if not source.graph.has_vertex(v):
                raise UnknownVertex(v)
            src_pts = set(source.curves[v].points)
            tgt_pts = set(target.curves[skel.base.vertex_map[v]].points)
            for x, y in cov.point_map.items():
                if x not in src_pts or y not in tgt_pts:
                    raise InvalidComplex(f"cover at {v!r} maps {x!r} to {y!r}; both must be tracked points")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "skeleton", skel)
        object.__setattr__(self, "covers", MappingProxyType(dict(sorted(covers.items()))))

    @property
    def base(self):
        return self.skeleton.base

    def local_degree(self, e: EdgeId) -> int:
        return self.skeleton.slope(e)

    def source_weight(self, v: VertexId) -> int:
        return self.skeleton.source_weight(v)

    def target_weight(self, v: VertexId) -> int:
        return self.skeleton.target_weight(v)


@dataclass(frozen=True)
class ComplexCertificate:
    """Outcome of :func:`validate_harmonic_complex`.

    ``condition`` names the first violated requirement: "skeleton" or one
    of "i".."iv". ``declared_fibers`` lists, per source vertex, the target
    marked points whose fiber under the cover is fully declared.
    """

    valid: bool
    skeleton: HarmonicCertificate
    condition: str | None = None
    vertex: VertexId | None = None
    message: str = ""
    declared_fibers: Mapping[VertexId, tuple[CurvePoint, ...]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid


def validate_harmonic_complex(m: ComplexMorphism) -> ComplexCertificate:
    cert = is_harmonic_weighted_metric(m.skeleton)
    if not cert.harmonic:
        w = cert.witness
        return ComplexCertificate(False, cert, "skeleton", w.vertex if w else None, w.describe() if w else "")
    base = m.base
    src, tgt = m.source, m.target
    declared: dict[VertexId, tuple[CurvePoint, ...]] = {}

    def fail(cond: str, v: VertexId, msg: str) -> ComplexCertificate:
        return ComplexCertificate(False, cert, cond, v, msg, declared)

    for v in src.graph.vertices:
        mult = cert.multiplicity[v]
        cov = m.covers.get(v)
        v2 = base.vertex_map[v]
        # condition (iv) first: the others need the cover to exist
        if mult == 0:
            if cov is not None:
                return fail("iv", v, f"cover given at {v!r} although M = 0")
            continue
        if cov is None:
            return fail("iv", v, f"no cover at {v!r} although M = {mult}")
        if cov.degree != mult:
            return fail("iv", v, f"cover degree {cov.degree} differs from M = {mult}")
        for e, x in src.reductions[v].items():
            if base.is_vertical(e):
                continue
            e2 = base.edge_map[e]
            want = tgt.reductions[v2][e2]
            if cov.point_map.get(x) != want:
                return fail("i", v, f"point of {e!r} must map to the point of {e2!r} ({want!r})")
            if cov.ram_index[x] != m.skeleton.slope(e):
                return fail(
                    "ii", v,
                    f"ramification {cov.ram_index[x]} at the point of {e!r} differs from slope {m.skeleton.slope(e)}",
                )
        full = []
        for e2, y in tgt.reductions[v2].items():
            for x in cov.fiber(y):
                e = src.edge_at_point(v, x)
                if e is None or base.is_vertical(e) or base.edge_map[e] != e2:
                    return fail("iii", v, f"preimage {x!r} of marked point {y!r} does not come from an edge over {e2!r}")
            if cov.is_fully_declared(y):
                full.append(y)
        declared[v] = tuple(full)
    return ComplexCertificate(True, cert, declared_fibers=declared)


def degree_complex(m: ComplexMorphism) -> int:
    """Skeleton degree, checked against the cover degrees over every target vertex."""
    cert = validate_harmonic_complex(m)
    if cert.skeleton.degree is None:
        raise NotHarmonic(cert.message or "skeleton is not harmonic", cert.vertex)
    deg = cert.skeleton.degree
    if m.target.graph.edges:
        sums = {v2: 0 for v2 in m.target.graph.vertices}
        for v, cov in m.covers.items():
            sums[m.base.vertex_map[v]] += cov.degree
        for v2, s in sums.items():
            if s != deg:
                raise InconsistentDegree(f"cover degrees over {v2!r} add up to {s}, skeleton degree is {deg}")
    return deg


def _pull_skeleton_point(m: ComplexMorphism, p: str, mult: Mapping[VertexId, int]) -> Divisor[str]:
    base = m.base
    if m.target.graph.has_vertex(p):
        return Divisor({v: mult[v] for v in base.vertex_fiber(p)})
    parsed = parse_point_id(p)
    if parsed is None or not m.target.graph.has_edge(parsed[0]):
        raise UnsupportedPoint(f"{p!r} is neither a target vertex nor a point on a target edge")
    e2, t = parsed
    tgt_model = m.target.skeleton.model
    if not 0 < t < tgt_model.length(e2):
        raise UnsupportedPoint(f"offset of {p!r} must lie strictly inside the edge")
    first = tgt_model.graph.endpoints(e2)[0]
    out: dict[str, int] = {}
    for e in base.edge_fiber(e2):
        u = m.skeleton.slope(e)
        a, _ = base.source.endpoints(e)
        off = t / u if base.vertex_map[a] == first else m.source.skeleton.model.length(e) - t / u
        out[point_id(e, Fraction(off))] = u
    return Divisor(out)


def pullback_complex(m: ComplexMorphism, d: ComplexDivisor) -> ComplexDivisor:
    """Pull a divisor back along a harmonic morphism of complexes.

    A point x' on the curve over v' pulls back to the cover pullback of x'
    on each curve over v' with M > 0; an unresolved degree k pulls back to
    M(v) k. Graph points pull back with multiplicity M at vertices and the
    slope inside edges.

    Raises:
        UndeclaredFiber: a point's fiber under some cover is not fully declared.
    """
    cert = validate_harmonic_complex(m)
    if not cert.valid:
        raise NotHarmonic(cert.message, cert.vertex)
    mult = cert.skeleton.multiplicity
    graphical: Divisor[str] = Divisor()
    for p, c in d.graphical.items():
        graphical = graphical + c * _pull_skeleton_point(m, p, mult)
    per_curve: dict[VertexId, CurveDivisor] = {}
    for v2, cd in d.per_curve.items():
        if not m.target.graph.has_vertex(v2):
            raise UnknownVertex(v2)
        for v in m.base.vertex_fiber(v2):
            if mult[v] == 0:
                continue
            cov = m.covers[v]
            explicit: Divisor[CurvePoint] = Divisor()
            for y, c in cd.explicit.items():
                explicit = explicit + c * cov.pullback_point(y, v)
            per_curve[v] = CurveDivisor(explicit, mult[v] * cd.unresolved_degree)
    return ComplexDivisor(graphical, per_curve)


def curve_ramification_lint(m: ComplexMorphism) -> dict[VertexId, int]:
    """Per vertex: 2g_v - 2 - M(2g_v' - 2) - sum over marked points of (e - 1).

    A negative value means no curve map with the declared data can exist;
    this is advisory and not part of harmonicity.
    """
    out = {}
    for v, cov in m.covers.items():
        g = m.source.curves[v].genus
        g2 = m.target.curves[m.base.vertex_map[v]].genus
        ram = sum(k - 1 for k in cov.ram_index.values())
        out[v] = 2 * g - 2 - cov.degree * (2 * g2 - 2) - ram
    return out
