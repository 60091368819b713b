"""Ramification divisors, Riemann-Hurwitz checks and second-main-theorem reports.

Every category shares one shape. With M the horizontal multiplicity, the
ramification at a source vertex is

    R(v) = 2(M(v) - 1) + c(v)

where the correction c(v) is the vertical count for plain graphs, and for
the other categories collects the weight, local-degree, curve-genus and
valence terms. The SMT right-hand side is g - 1 + |E| minus half the sum of
the corrections, so its slack against the left-hand side is exactly
r(G) - r(E) with r(X) the sum of M(v) - 1 over X.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .complexes import (
    ComplexMorphism,
    canonical_divisor_complex,
    genus_complex,
    validate_harmonic_complex,
)
from .divisors import Divisor, canonical_divisor
from .errors import NotHarmonic, UnknownCategory, UnknownTarget
from .graph import VertexId
from .metric import canonical_divisor_metric, canonical_divisor_weighted_metric, genus_weighted_metric
from .morphisms import (
    CATEGORIES,
    COMPLEX,
    FINITE,
    METRIC,
    WEIGHTED,
    WEIGHTED_METRIC,
    AnyGraphMorphism,
    GraphMorphism,
    HarmonicCertificate,
    IndexedMorphism,
    MetricMorphism,
    WeightedMetricMorphism,
    certify,
)
from .weighted import canonical_divisor_weighted, genus_weighted

AnyMorphism = AnyGraphMorphism | ComplexMorphism


@dataclass(frozen=True)
class _Profile:
    category: str
    cert: HarmonicCertificate
    harmonic: bool
    source_canonical: Divisor[VertexId]
    target_canonical: Divisor[VertexId]
    genus: int
    target_genus: int
    corrections: Mapping[VertexId, int]
    complex_ok: bool | None = None


def _corrections(m: AnyMorphism, mult: Mapping[VertexId, int]) -> dict[VertexId, int]:
    """c(v) = R(v) - 2(M(v) - 1) for every source vertex."""
    base = m.base
    out = {}
    if m.category == FINITE:
        return {v: sum(1 for e, _ in base.source.incident(v) if base.is_vertical(e)) for v in base.source.vertices}
    for v in base.source.vertices:
        M = mult[v]
        v2 = base.vertex_map[v]
        c = 2 * (m.source_weight(v) - M * m.target_weight(v2))
        if m.category == COMPLEX:
            src_g = m.source.curves[v].genus
            tgt_g = m.target.curves[v2].genus
            val2 = base.target.valency(v2) if base.target.edges else 0
            c += 2 * (src_g - M * tgt_g) + base.source.valency(v) - M * val2
        else:
            c -= sum(m.local_degree(e) - 1 for e in base.source.incident_edges(v))
        out[v] = c
    return out


def _profile(m: AnyMorphism) -> _Profile:
    complex_ok = None
    if isinstance(m, ComplexMorphism):
        cc = validate_harmonic_complex(m)
        cert = certify(m.skeleton, require_slack=False)
        complex_ok = cc.valid
        harmonic = cc.valid
        src_k = canonical_divisor_complex(m.source).vertex_totals()
        tgt_k = canonical_divisor_complex(m.target).vertex_totals()
        g, g2 = genus_complex(m.source), genus_complex(m.target)
    else:
        cert = certify(m, require_slack=False)
        harmonic = certify(m).harmonic if cert.pseudo_harmonic else False
        if isinstance(m, GraphMorphism):
            src_k, tgt_k = canonical_divisor(m.source), canonical_divisor(m.target)
            g, g2 = m.source.genus, m.target.genus
        elif isinstance(m, IndexedMorphism):
            src_k, tgt_k = canonical_divisor_weighted(m.source), canonical_divisor_weighted(m.target)
            g, g2 = genus_weighted(m.source), genus_weighted(m.target)
        elif isinstance(m, MetricMorphism):
            src_k, tgt_k = canonical_divisor_metric(m.source), canonical_divisor_metric(m.target)
            g, g2 = m.source.graph.genus, m.target.graph.genus
        elif isinstance(m, WeightedMetricMorphism):
            src_k = canonical_divisor_weighted_metric(m.source)
            tgt_k = canonical_divisor_weighted_metric(m.target)
            g, g2 = genus_weighted_metric(m.source), genus_weighted_metric(m.target)
        else:
            raise UnknownCategory(f"not a morphism: {type(m).__name__}")
    if not cert.pseudo_harmonic:
        w = cert.witness
        raise NotHarmonic(w.describe() if w else "not harmonic", w.vertex if w else None)
    corr = _corrections(m, cert.multiplicity)
    return _Profile(m.category, cert, harmonic, src_k, tgt_k, g, g2, corr, complex_ok)


def ramification_divisor(m: AnyMorphism) -> Divisor[VertexId]:
    """R(v) = 2(M(v) - 1) + c(v) at every source vertex.

    Raises:
        NotHarmonic: fiber counts disagree somewhere.
    """
    p = _profile(m)
    mult = p.cert.multiplicity
    return Divisor({v: 2 * (mult[v] - 1) + p.corrections[v] for v in mult})


@dataclass(frozen=True)
class RHReport:
    """Riemann-Hurwitz data of one morphism.

    ``residuals[v]`` is K(v) - (pullback of K')(v) - R(v) and must vanish;
    ``lhs`` is 2g - 2 and ``rhs`` is deg (2g' - 2) + deg R. For plain
    nonconstant morphisms ``nonconstant_bounds`` records whether
    2g - 2 >= deg (2g' - 2) and g >= g' both hold. ``level`` is
    "support" when the curve parts of a complex were checked point by
    point and "degree" otherwise.
    """

    category: str
    harmonic: bool
    degree: int
    genus: int
    target_genus: int
    ramification: Divisor[VertexId]
    residuals: Mapping[VertexId, int]
    lhs: int
    rhs: int
    nonconstant_bounds: bool | None = None
    level: str = "degree"
    curve_ramification: Mapping[VertexId, Divisor[str]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and all(r == 0 for r in self.residuals.values())


def _curve_ramification(m: ComplexMorphism, mult: Mapping[VertexId, int]) -> dict[VertexId, Divisor[str]] | None:
    """Per curve: canonical plus marked points, minus the cover pullback of the same on the target curve; None if data is missing."""
    src_k = canonical_divisor_complex(m.source)
    tgt_k = canonical_divisor_complex(m.target)
    out = {}
    for v in m.source.graph.vertices:
        here = src_k.per_curve.get(v)
        if here is not None and not here.is_explicit:
            return None
        local = here.explicit if here is not None else Divisor()
        if mult[v] > 0:
            there = tgt_k.per_curve.get(m.base.vertex_map[v])
            if there is not None:
                if not there.is_explicit:
                    return None
                cov = m.covers[v]
                for y, c in there.explicit.items():
                    if not cov.is_fully_declared(y):
                        return None
                    local = local - c * cov.pullback_point(y, v)
        out[v] = local
    return out


def check_rh(m: AnyMorphism) -> RHReport:
    """Evaluate the Riemann-Hurwitz identity vertex by vertex and in degree.

    Raises:
        NotHarmonic: fiber counts disagree somewhere.
    """
    p = _profile(m)
    mult = p.cert.multiplicity
    deg = p.cert.degree or 0
    base = m.base
    ram = Divisor({v: 2 * (mult[v] - 1) + p.corrections[v] for v in mult})
    residuals = {
        v: p.source_canonical[v] - mult[v] * p.target_canonical[base.vertex_map[v]] - ram[v]
        for v in base.source.vertices
    }
    lhs = 2 * p.genus - 2
    rhs = deg * (2 * p.target_genus - 2) + ram.degree
    bounds = None
    if p.category == FINITE and deg >= 1:
        bounds = lhs >= deg * (2 * p.target_genus - 2) and p.genus >= p.target_genus
    level = "degree"
    curve_ram: dict[VertexId, Divisor[str]] = {}
    if isinstance(m, ComplexMorphism) and p.complex_ok:
        explicit = _curve_ramification(m, mult)
        if explicit is not None:
            weights = {
                v: 2 * (m.source_weight(v) - mult[v] * m.target_weight(base.vertex_map[v]))
                for v in base.source.vertices
            }
            for v, d in explicit.items():
                residuals[v] += d.degree + weights[v] - ram[v]
            level = "support"
            curve_ram = explicit
    return RHReport(
        p.category, p.harmonic, deg, p.genus, p.target_genus, ram, residuals, lhs, rhs,
        bounds, level, curve_ram,
    )


# -- second main theorem -----------------------------------------------------

TERM_NAMES: dict[str, tuple[str, ...]] = {
    FINITE: ("half_vertical_sum",),
    WEIGHTED: ("weight_term", "half_index_sum"),
    METRIC: ("half_slope_sum",),
    WEIGHTED_METRIC: ("weight_term", "half_slope_sum"),
    COMPLEX: ("curve_genus_term", "weight_term", "half_valence_term"),
}

# sign with which each named term enters the right-hand side
_TERM_SIGNS = {
    "half_vertical_sum": -1,
    "weight_term": -1,
    "half_index_sum": 1,
    "half_slope_sum": 1,
    "curve_genus_term": -1,
    "half_valence_term": -1,
}


@dataclass(frozen=True)
class SMTReport:
    """One second-main-theorem instance.

    ``lhs`` = (q + g' - 1) deg and ``rhs`` = g - 1 + |E| plus the signed
    category terms summed over all source vertices; ``defect`` = rhs - lhs.
    ``rhs_local`` / ``defect_local`` take the category terms over E only.
    ``degenerate`` marks constant morphisms and those with a vertex of
    multiplicity zero, where the inequality may fail.
    """

    category: str
    q: int
    targets: tuple[VertexId, ...]
    lhs: Fraction
    rhs: Fraction
    terms: Mapping[str, Fraction]
    preimage_vertices: int | None = None
    r_E: int | None = None
    r_G: int | None = None
    rhs_local: Fraction | None = None
    degenerate: bool | None = None
    harmonic: bool | None = None

    @property
    def defect(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.defect >= 0

    @property
    def defect_local(self) -> Fraction | None:
        return None if self.rhs_local is None else self.rhs_local - self.lhs

    @property
    def identity_ok(self) -> bool | None:
        """r(E) = q deg - |E| holds and the defect equals r(G) - r(E)."""
        if self.r_E is None:
            return None
        deg = self.terms["degree"]
        return (
            self.r_E == self.q * deg - self.preimage_vertices
            and self.defect == self.r_G - self.r_E
        )

    @property
    def preconditions_hold(self) -> bool | None:
        if self.degenerate is None:
            return None
        return bool(self.harmonic) and not self.degenerate


def _term_split(category: str, m: AnyMorphism, mult, corr, vertices: Iterable[VertexId]) -> dict[str, Fraction]:
    """Break half the summed corrections over ``vertices`` into named terms."""
    base = m.base
    vs = list(vertices)
    half = Fraction(1, 2)
    if category == FINITE:
        return {"half_vertical_sum": half * sum(corr[v] for v in vs)}
    weight = sum(m.source_weight(v) - mult[v] * m.target_weight(base.vertex_map[v]) for v in vs)
    if category == COMPLEX:
        genus = sum(m.source.curves[v].genus - mult[v] * m.target.curves[base.vertex_map[v]].genus for v in vs)
        tgt = base.target
        valence = sum(
            base.source.valency(v) - mult[v] * (tgt.valency(base.vertex_map[v]) if tgt.edges else 0)
            for v in vs
        )
        return {
            "curve_genus_term": Fraction(genus),
            "weight_term": Fraction(weight),
            "half_valence_term": half * valence,
        }
    local = half * sum(sum(m.local_degree(e) - 1 for e in base.source.incident_edges(v)) for v in vs)
    name = "half_index_sum" if category == WEIGHTED else "half_slope_sum"
    if category == METRIC:
        return {name: local}
    return {"weight_term": Fraction(weight), name: local}


def _signed(terms: Mapping[str, Fraction]) -> Fraction:
    return sum((_TERM_SIGNS[k] * v for k, v in terms.items()), Fraction(0))


def _check_targets(m: AnyMorphism, tlist: list[VertexId]) -> None:
    if len(set(tlist)) != len(tlist):
        raise UnknownTarget("targets must be distinct")
    for t in tlist:
        if not m.base.target.has_vertex(t):
            raise UnknownTarget(f"{t!r} is not a target vertex")


def _smt_from_profile(m: AnyMorphism, p: _Profile, tlist: list[VertexId], terms_full) -> SMTReport:
    base = m.base
    mult = p.cert.multiplicity
    deg = p.cert.degree or 0
    tset = set(tlist)
    preimage = [v for v in base.source.vertices if base.vertex_map[v] in tset]
    terms_local = _term_split(p.category, m, mult, p.corrections, preimage)
    lhs = Fraction((len(tlist) + p.target_genus - 1) * deg)
    head = Fraction(p.genus - 1 + len(preimage))
    terms = {
        "g": Fraction(p.genus),
        "g_target": Fraction(p.target_genus),
        "degree": Fraction(deg),
        "preimage_vertices": Fraction(len(preimage)),
        **terms_full,
    }
    r_E = sum(mult[v] - 1 for v in preimage)
    r_G = sum(mult[v] - 1 for v in base.source.vertices)
    degenerate = deg == 0 or any(x == 0 for x in mult.values())
    return SMTReport(
        p.category, len(tlist), tuple(sorted(tlist)), lhs, head + _signed(terms_full), terms,
        len(preimage), r_E, r_G, head + _signed(terms_local), degenerate, p.harmonic,
    )


def smt_report(m: AnyMorphism, targets: Iterable[VertexId]) -> SMTReport:
    """Evaluate the second main theorem for the given target vertices.

    Raises:
        UnknownTarget: a target is not a vertex of the target graph, or repeats.
        NotHarmonic: fiber counts disagree somewhere.
    """
    tlist = list(targets)
    _check_targets(m, tlist)
    p = _profile(m)
    terms_full = _term_split(p.category, m, p.cert.multiplicity, p.corrections, m.base.source.vertices)
    return _smt_from_profile(m, p, tlist, terms_full)


def smt_reports(m: AnyMorphism, target_sets: Iterable[Iterable[VertexId]]) -> Iterator[SMTReport]:
    """Reports for several target sets, sharing the harmonicity analysis."""
    p = _profile(m)
    terms_full = _term_split(p.category, m, p.cert.multiplicity, p.corrections, m.base.source.vertices)
    for targets in target_sets:
        tlist = list(targets)
        _check_targets(m, tlist)
        yield _smt_from_profile(m, p, tlist, terms_full)


def nonempty_subsets(vertices: Sequence[VertexId]) -> Iterator[tuple[VertexId, ...]]:
    for k in range(1, len(vertices) + 1):
        yield from combinations(vertices, k)


def smt_arithmetic(
    category: str,
    q: int,
    g: int,
    g_target: int,
    degree: int,
    preimage_vertices: int,
    **corrections: object,
) -> SMTReport:
    """Evaluate the inequality from aggregate numbers alone.

    ``corrections`` takes the category's named terms (see ``TERM_NAMES``);
    omitted terms count as zero. Values may be ints, Fractions or "p/q"
    strings.

    Raises:
        UnknownCategory: ``category`` is not one of the five categories.
        TypeError: a correction name does not belong to the category.
    """
    if category not in CATEGORIES:
        raise UnknownCategory(f"unknown category {category!r}; expected one of {', '.join(CATEGORIES)}")
    allowed = TERM_NAMES[category]
    for k in corrections:
        if k not in allowed:
            raise TypeError(f"{k!r} is not a term of the {category} inequality; expected {allowed}")
    named = {k: Fraction(corrections.get(k, 0)) for k in allowed}  # type: ignore[arg-type]
    lhs = Fraction((q + g_target - 1) * degree)
    rhs = Fraction(g - 1 + preimage_vertices) + _signed(named)
    terms = {
        "g": Fraction(g),
        "g_target": Fraction(g_target),
        "degree": Fraction(degree),
        "preimage_vertices": Fraction(preimage_vertices),
        **named,
    }
    return SMTReport(category, q, (), lhs, rhs, terms)
