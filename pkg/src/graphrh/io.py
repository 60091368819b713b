"""JSON interchange format for every object, morphism, divisor and report.

A document is ``{"schema_version": "1", "kind": ..., "payload": ...}``.
Canonical text sorts all keys, indents by two spaces and ends with a
newline; rationals are strings in lowest terms ("1/2", "3"). Unknown keys
are rejected. Morphism documents embed their source and target payloads or
point at another document with ``{"ref": "relative/path.json"}``.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complexes import (
    AbstractCurve,
    ComplexDivisor,
    ComplexMorphism,
    CurveCover,
    CurveDivisor,
    MetrizedComplex,
)
from .divisors import Divisor
from .errors import DocumentSyntaxError, GraphRHError, InvariantError, SchemaError
from .graph import Multigraph
from .metric import (
    MetricModel,
    PseudoMetricGraph,
    WeightedMetricGraph,
    from_pseudo_metric,
)
from .morphisms import (
    COMPLEX,
    FINITE,
    METRIC,
    WEIGHTED,
    WEIGHTED_METRIC,
    GraphMorphism,
    HarmonicCertificate,
    IndexedMorphism,
    MetricMorphism,
    WeightedMetricMorphism,
)
from .theorems import RHReport, SMTReport
from .weighted import WeightedGraph

SCHEMA_VERSION = "1"

OBJECT_KINDS = ("graph", "weighted_graph", "metric_graph", "weighted_metric_graph", "complex")
KINDS = (*OBJECT_KINDS, "morphism", "divisor", "rh_report", "smt_report", "certificate", "fuzz_summary")

OBJECT_KIND_OF_CATEGORY = {
    FINITE: "graph",
    WEIGHTED: "weighted_graph",
    METRIC: "metric_graph",
    WEIGHTED_METRIC: "weighted_metric_graph",
    COMPLEX: "complex",
}


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any
    schema_version: str = SCHEMA_VERSION


# -- small schema helpers ----------------------------------------------------


def _obj(x: Any, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(x, dict):
        raise SchemaError(path, f"expected an object, got {type(x).__name__}")
    for k in required:
        if k not in x:
            raise SchemaError(path, f"missing key {k!r}")
    extra = set(x) - set(required) - set(optional)
    if extra:
        raise SchemaError(f"{path}.{sorted(extra)[0]}", "unknown key")
    return x


def _str(x: Any, path: str) -> str:
    if not isinstance(x, str):
        raise SchemaError(path, f"expected a string, got {type(x).__name__}")
    return x


def _int(x: Any, path: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(path, f"expected an integer, got {x!r}")
    return x


def _rational(x: Any, path: str) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(path, f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(path, f"cannot read {x!r} as a rational") from None
    raise SchemaError(path, f"expected a rational as \"p/q\", got {type(x).__name__}")


def _str_map(x: Any, path: str, value: Callable[[Any, str], Any]) -> dict[str, Any]:
    if not isinstance(x, dict):
        raise SchemaError(path, f"expected an object, got {type(x).__name__}")
    return {k: value(v, f"{path}.{k}") for k, v in x.items()}


def _str_list(x: Any, path: str) -> list[str]:
    if not isinstance(x, list):
        raise SchemaError(path, f"expected an array, got {type(x).__name__}")
    return [_str(v, f"{path}[{i}]") for i, v in enumerate(x)]


def _build(path: str, make: Callable[[], Any]) -> Any:
    try:
        return make()
    except (SchemaError, InvariantError):
        raise
    except GraphRHError as exc:
        raise InvariantError(path, exc) from None


def _frac_text(x: Fraction) -> str:
    return str(Fraction(x))


# -- objects -----------------------------------------------------------------


def _graph_from(p: Any, path: str) -> Multigraph:
    p = _obj(p, path, ("vertices", "edges"))
    vertices = _str_list(p["vertices"], f"{path}.vertices")

    def pair(v: Any, q: str) -> tuple[str, str]:
        ends = _str_list(v, q)
        if len(ends) != 2:
            raise SchemaError(q, "an edge needs exactly two endpoints")
        return ends[0], ends[1]

    edges = _str_map(p["edges"], f"{path}.edges", pair)
    return _build(path, lambda: Multigraph(vertices, edges))


def _graph_to(g: Multigraph) -> dict:
    return {"vertices": list(g.vertices), "edges": {e: list(ab) for e, ab in g.edges.items()}}


def _weighted_from(p: Any, path: str) -> WeightedGraph:
    p = _obj(p, path, ("graph",), ("weights",))
    g = _graph_from(p["graph"], f"{path}.graph")
    w = _str_map(p.get("weights", {}), f"{path}.weights", _int)
    return _build(path, lambda: WeightedGraph(g, w))


def _weighted_to(wg: WeightedGraph) -> dict:
    return {"graph": _graph_to(wg.graph), "weights": dict(wg.weights)}


def _metric_from(p: Any, path: str) -> MetricModel:
    p = _obj(p, path, ("graph", "lengths"))
    g = _graph_from(p["graph"], f"{path}.graph")
    lengths = _str_map(p["lengths"], f"{path}.lengths", _rational)
    return _build(path, lambda: MetricModel(g, lengths))


def _metric_to(m: MetricModel) -> dict:
    return {"graph": _graph_to(m.graph), "lengths": {e: _frac_text(x) for e, x in m.lengths.items()}}


def _wmetric_from(p: Any, path: str) -> WeightedMetricGraph:
    if isinstance(p, dict) and "pseudo_metric" in p:
        p = _obj(p, path, ("pseudo_metric",))
        q = _obj(p["pseudo_metric"], f"{path}.pseudo_metric", ("graph", "lengths"))
        g = _graph_from(q["graph"], f"{path}.pseudo_metric.graph")
        lengths = _str_map(q["lengths"], f"{path}.pseudo_metric.lengths", _rational)
        return _build(f"{path}.pseudo_metric", lambda: from_pseudo_metric(PseudoMetricGraph(g, lengths)))
    p = _obj(p, path, ("graph", "lengths"), ("weights",))
    model = _metric_from({"graph": p["graph"], "lengths": p["lengths"]}, path)
    w = _str_map(p.get("weights", {}), f"{path}.weights", _int)
    return _build(path, lambda: WeightedMetricGraph(model, w))


def _wmetric_to(x: WeightedMetricGraph) -> dict:
    return {**_metric_to(x.model), "weights": dict(x.weights)}


def _divisor_map(x: Any, path: str) -> Divisor[str]:
    coeffs = _str_map(x, path, _int)
    return Divisor(coeffs)


def _complex_from(p: Any, path: str) -> MetrizedComplex:
    p = _obj(p, path, ("skeleton", "curves", "reductions"))
    skel = _wmetric_from(p["skeleton"], f"{path}.skeleton")

    def curve(c: Any, q: str) -> AbstractCurve:
        c = _obj(c, q, ("genus", "points"), ("canonical",))
        genus = _int(c["genus"], f"{q}.genus")
        points = _str_list(c["points"], f"{q}.points")
        rep = _divisor_map(c["canonical"], f"{q}.canonical") if "canonical" in c else None
        return _build(q, lambda: AbstractCurve(genus, points, rep))

    curves = _str_map(p["curves"], f"{path}.curves", curve)
    reds = _str_map(p["reductions"], f"{path}.reductions", lambda r, q: _str_map(r, q, _str))
    return _build(path, lambda: MetrizedComplex(skel, curves, reds))


def _complex_to(c: MetrizedComplex) -> dict:
    curves = {}
    for v, cv in c.curves.items():
        d: dict[str, Any] = {"genus": cv.genus, "points": list(cv.points)}
        if cv.canonical_rep is not None:
            d["canonical"] = dict(cv.canonical_rep.coefficients)
        curves[v] = d
    return {
        "skeleton": _wmetric_to(c.skeleton),
        "curves": curves,
        "reductions": {v: dict(r) for v, r in c.reductions.items()},
    }


_OBJECT_FROM = {
    "graph": _graph_from,
    "weighted_graph": _weighted_from,
    "metric_graph": _metric_from,
    "weighted_metric_graph": _wmetric_from,
    "complex": _complex_from,
}


def object_kind(x: Any) -> str:
    for cls, kind in (
        (Multigraph, "graph"),
        (WeightedGraph, "weighted_graph"),
        (MetricModel, "metric_graph"),
        (WeightedMetricGraph, "weighted_metric_graph"),
        (MetrizedComplex, "complex"),
    ):
        if isinstance(x, cls):
            return kind
    raise TypeError(f"not a serializable object: {type(x).__name__}")


def _object_to(x: Any) -> dict:
    return {
        "graph": _graph_to,
        "weighted_graph": _weighted_to,
        "metric_graph": _metric_to,
        "weighted_metric_graph": _wmetric_to,
        "complex": _complex_to,
    }[object_kind(x)](x)


# -- morphisms ---------------------------------------------------------------


def _side(p: Any, path: str, kind: str, base_dir: Path | None) -> Any:
    if isinstance(p, dict) and "ref" in p:
        p = _obj(p, path, ("ref",))
        ref = Path(_str(p["ref"], f"{path}.ref"))
        if not ref.is_absolute():
            ref = (base_dir or Path.cwd()) / ref
        doc = load(ref)
        if doc.kind != kind:
            raise SchemaError(f"{path}.ref", f"referenced document is a {doc.kind}, expected {kind}")
        return doc.value
    return _OBJECT_FROM[kind](p, path)


def _cover_from(c: Any, path: str) -> CurveCover:
    c = _obj(c, path, ("degree", "point_map", "ram_index"))
    deg = _int(c["degree"], f"{path}.degree")
    pm = _str_map(c["point_map"], f"{path}.point_map", _str)
    ram = _str_map(c["ram_index"], f"{path}.ram_index", _int)
    return _build(path, lambda: CurveCover(deg, pm, ram))


def _morphism_from(p: Any, path: str, base_dir: Path | None) -> Any:
    cat = _str(_obj(p, path, ("category",), ("source", "target", "vertex_map", "edge_map", "indices", "covers"))["category"], f"{path}.category")
    if cat not in OBJECT_KIND_OF_CATEGORY:
        raise SchemaError(f"{path}.category", f"unknown category {cat!r}")
    optional = ("indices",) if cat == WEIGHTED else ("covers",) if cat == COMPLEX else ()
    p = _obj(p, path, ("category", "source", "target", "vertex_map", "edge_map"), optional)
    kind = OBJECT_KIND_OF_CATEGORY[cat]
    src = _side(p["source"], f"{path}.source", kind, base_dir)
    tgt = _side(p["target"], f"{path}.target", kind, base_dir)
    vmap = _str_map(p["vertex_map"], f"{path}.vertex_map", _str)
    emap = _str_map(p["edge_map"], f"{path}.edge_map", _str)
    if cat == FINITE:
        return _build(path, lambda: GraphMorphism(src, tgt, vmap, emap))
    if cat == WEIGHTED:
        idx = _str_map(p.get("indices", {}), f"{path}.indices", _int)
        return _build(path, lambda: IndexedMorphism(src, tgt, vmap, emap, idx))
    if cat == METRIC:
        return _build(path, lambda: MetricMorphism(src, tgt, vmap, emap))
    if cat == WEIGHTED_METRIC:
        return _build(path, lambda: WeightedMetricMorphism(src, tgt, vmap, emap))
    covers = _str_map(p.get("covers", {}), f"{path}.covers", _cover_from)
    return _build(path, lambda: ComplexMorphism(src, tgt, vmap, emap, covers))


def _morphism_to(m: Any) -> dict:
    base = m.base
    out: dict[str, Any] = {
        "category": m.category,
        "source": _object_to(m.source),
        "target": _object_to(m.target),
        "vertex_map": dict(base.vertex_map),
        "edge_map": dict(base.edge_map),
    }
    if isinstance(m, IndexedMorphism):
        out["indices"] = dict(m.indices)
    if isinstance(m, ComplexMorphism):
        out["covers"] = {
            v: {"degree": c.degree, "point_map": dict(c.point_map), "ram_index": dict(c.ram_index)}
            for v, c in m.covers.items()
        }
    return out


def is_morphism(x: Any) -> bool:
    return isinstance(x, (GraphMorphism, IndexedMorphism, MetricMorphism, WeightedMetricMorphism, ComplexMorphism))


# -- divisors ----------------------------------------------------------------


def _divisor_from(p: Any, path: str) -> Divisor | ComplexDivisor:
    if isinstance(p, dict) and "complex" in p:
        p = _obj(p, path, ("complex",))
        q = _obj(p["complex"], f"{path}.complex", (), ("graphical", "per_curve"))
        graphical = _divisor_map(q.get("graphical", {}), f"{path}.complex.graphical")

        def part(c: Any, r: str) -> CurveDivisor:
            c = _obj(c, r, (), ("explicit", "unresolved_degree"))
            return CurveDivisor(
                _divisor_map(c.get("explicit", {}), f"{r}.explicit"),
                _int(c.get("unresolved_degree", 0), f"{r}.unresolved_degree"),
            )

        per_curve = _str_map(q.get("per_curve", {}), f"{path}.complex.per_curve", part)
        return ComplexDivisor(graphical, per_curve)
    p = _obj(p, path, ("coefficients",))
    return _divisor_map(p["coefficients"], f"{path}.coefficients")


def _divisor_to(d: Divisor | ComplexDivisor) -> dict:
    if isinstance(d, ComplexDivisor):
        return {
            "complex": {
                "graphical": dict(d.graphical.coefficients),
                "per_curve": {
                    v: {"explicit": dict(c.explicit.coefficients), "unresolved_degree": c.unresolved_degree}
                    for v, c in d.per_curve.items()
                },
            }
        }
    return {"coefficients": dict(d.coefficients)}


# -- reports -----------------------------------------------------------------


def rh_report_payload(r: RHReport) -> dict:
    return {
        "category": r.category,
        "harmonic": r.harmonic,
        "degree": r.degree,
        "genus": r.genus,
        "target_genus": r.target_genus,
        "ramification": dict(r.ramification.coefficients),
        "residuals": dict(r.residuals),
        "lhs": r.lhs,
        "rhs": r.rhs,
        "holds": r.holds,
        "nonconstant_bounds": r.nonconstant_bounds,
        "level": r.level,
        "curve_ramification": {v: dict(d.coefficients) for v, d in r.curve_ramification.items()},
    }


def _opt_frac(x: Fraction | None) -> str | None:
    return None if x is None else _frac_text(x)


def smt_report_payload(r: SMTReport) -> dict:
    return {
        "category": r.category,
        "q": r.q,
        "targets": list(r.targets),
        "lhs": _frac_text(r.lhs),
        "rhs": _frac_text(r.rhs),
        "defect": _frac_text(r.defect),
        "holds": r.holds,
        "terms": {k: _frac_text(v) for k, v in r.terms.items()},
        "preimage_vertices": r.preimage_vertices,
        "r_E": r.r_E,
        "r_G": r.r_G,
        "rhs_local": _opt_frac(r.rhs_local),
        "defect_local": _opt_frac(r.defect_local),
        "degenerate": r.degenerate,
        "harmonic": r.harmonic,
        "identity_ok": r.identity_ok,
        "preconditions_hold": r.preconditions_hold,
    }


def certificate_payload(c: HarmonicCertificate) -> dict:
    w = c.witness
    return {
        "category": c.category,
        "pseudo_harmonic": c.pseudo_harmonic,
        "harmonic": c.harmonic,
        "degree": c.degree,
        "multiplicity": dict(c.multiplicity),
        "vertical": dict(c.vertical),
        "slack": dict(c.slack),
        "witness": None if w is None else {"vertex": w.vertex, "reason": w.reason, "counts": dict(w.counts)},
    }


# -- documents ---------------------------------------------------------------


def to_document(x: Any) -> Document:
    if isinstance(x, Document):
        return x
    if isinstance(x, (Divisor, ComplexDivisor)):
        return Document("divisor", x)
    if isinstance(x, RHReport):
        return Document("rh_report", x)
    if isinstance(x, SMTReport):
        return Document("smt_report", x)
    if isinstance(x, HarmonicCertificate):
        return Document("certificate", x)
    if is_morphism(x):
        return Document("morphism", x)
    return Document(object_kind(x), x)


def _payload(doc: Document) -> Any:
    v = doc.value
    if doc.kind in OBJECT_KINDS:
        return _object_to(v)
    if doc.kind == "morphism":
        return _morphism_to(v)
    if doc.kind == "divisor":
        return _divisor_to(v)
    if isinstance(v, RHReport):
        return rh_report_payload(v)
    if isinstance(v, SMTReport):
        return smt_report_payload(v)
    if isinstance(v, HarmonicCertificate):
        return certificate_payload(v)
    return v


def serialize(x: Any) -> str:
    """Canonical text of a document or of any serializable value."""
    doc = to_document(x)
    body = {"schema_version": doc.schema_version, "kind": doc.kind, "payload": _payload(doc)}
    return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text: str, base_dir: Path | str | None = None) -> Document:
    """Parse a document; ``base_dir`` resolves relative ``ref`` paths.

    Raises:
        DocumentSyntaxError: malformed JSON, with line and column.
        SchemaError: wrong shape, unknown keys or unsupported version.
        InvariantError: the described object violates its invariants.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    raw = _obj(raw, "$", ("schema_version", "kind", "payload"))
    version = _str(raw["schema_version"], "$.schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError("$.schema_version", f"unsupported version {version!r}; expected {SCHEMA_VERSION!r}")
    kind = _str(raw["kind"], "$.kind")
    payload = raw["payload"]
    bd = Path(base_dir) if base_dir is not None else None
    if kind in OBJECT_KINDS:
        return Document(kind, _OBJECT_FROM[kind](payload, "$.payload"))
    if kind == "morphism":
        return Document(kind, _morphism_from(payload, "$.payload", bd))
    if kind == "divisor":
        return Document(kind, _divisor_from(payload, "$.payload"))
    if kind in KINDS:
        if not isinstance(payload, dict):
            raise SchemaError("$.payload", "expected an object")
        return Document(kind, payload)
    raise SchemaError("$.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def load(path: Path | str) -> Document:
    """Read and parse a document file; ``ref`` paths resolve next to it."""
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), path.parent)

