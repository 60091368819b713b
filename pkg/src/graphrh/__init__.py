"""Exact divisor theory on graphs, metric graphs and metrized complexes.

Harmonic-morphism checks, ramification divisors, Riemann-Hurwitz
identities and second-main-theorem reports, with seeded generators and a
JSON interchange format.
"""

from .complexes import (
    AbstractCurve,
    ComplexDivisor,
    ComplexMorphism,
    CurveCover,
    CurveDivisor,
    MetrizedComplex,
    canonical_divisor_complex,
    degree_complex,
    genus_complex,
    pullback_complex,
    validate_harmonic_complex,
)
from .divisors import Divisor, canonical_divisor, degree, is_effective
from .errors import GraphRHError
from .generators import (
    GenSpec,
    collapsing_morphism,
    identity_morphism,
    metric_stretch,
    permutation_cover,
    random_instance,
)
from .graph import Multigraph, genus, subdivide_loops, valency
from .io import Document, load, parse, serialize
from .metric import (
    MetricModel,
    PseudoMetricGraph,
    WeightedMetricGraph,
    canonical_divisor_metric,
    canonical_divisor_weighted_metric,
    canonical_model,
    epsilon_metric_graph,
    from_pseudo_metric,
    genus_metric,
    genus_weighted_metric,
    loopless_canonical_model,
    pseudo_metric_graph,
    refine,
)
from .morphisms import (
    GraphMorphism,
    HarmonicCertificate,
    IndexedMorphism,
    MetricMorphism,
    NotHarmonicAt,
    WeightedMetricMorphism,
    certify,
    compose,
    horizontal_multiplicity,
    is_harmonic_finite,
    is_harmonic_indexed,
    is_harmonic_metric,
    is_harmonic_weighted_metric,
    is_pseudo_harmonic_indexed,
    is_pseudo_harmonic_weighted_metric,
    loopless_lift,
    pullback,
    pushforward,
    refine_morphism,
    vertical_multiplicity,
)
from .morphisms import degree as morphism_degree
from .theorems import RHReport, SMTReport, check_rh, ramification_divisor, smt_arithmetic, smt_report, smt_reports
from .weighted import WeightedGraph, canonical_divisor_weighted, genus_weighted, virtual_graph

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
