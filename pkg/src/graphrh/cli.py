"""Command-line interface.

Exit codes: 0 success, 2 invalid input object or violated identity, 1 for
I/O, syntax, schema or other usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .complexes import (
    ComplexDivisor,
    ComplexMorphism,
    MetrizedComplex,
    canonical_divisor_complex,
    pullback_complex,
    validate_harmonic_complex,
)
from .divisors import Divisor, canonical_divisor
from .errors import GraphRHError, InvariantError
from .generators import GenSpec, random_instance
from .graph import Multigraph
from .io import Document, is_morphism, load, serialize
from .metric import MetricModel, WeightedMetricGraph, canonical_divisor_metric, canonical_divisor_weighted_metric
from .morphisms import CATEGORIES, certify, pullback
from .theorems import check_rh, nonempty_subsets, smt_report, smt_reports
from .weighted import WeightedGraph, canonical_divisor_weighted

OK, VIOLATED, ERROR = 0, 2, 1


def _emit(x, out) -> None:
    out.write(serialize(x))


def _load_morphism(path: str):
    doc = load(path)
    if doc.kind != "morphism":
        raise GraphRHError(f"{path} holds a {doc.kind} document, expected a morphism")
    return doc.value


def cmd_validate(args, out) -> int:
    try:
        doc = load(args.file)
    except InvariantError as exc:
        _emit(Document("certificate", {"valid": False, "code": exc.cause_code, "path": exc.path, "message": str(exc)}), out)
        return VIOLATED
    value = doc.value
    if isinstance(value, ComplexMorphism):
        cc = validate_harmonic_complex(value)
        payload = {
            "valid": cc.valid,
            "condition": cc.condition,
            "vertex": cc.vertex,
            "message": cc.message,
            "degree": cc.skeleton.degree,
            "multiplicity": dict(cc.skeleton.multiplicity),
            "declared_fibers": {v: list(p) for v, p in cc.declared_fibers.items()},
        }
        _emit(Document("certificate", payload), out)
        return OK if cc.valid else VIOLATED
    if is_morphism(value):
        cert = certify(value)
        _emit(cert, out)
        return OK if cert.harmonic else VIOLATED
    _emit(Document("certificate", {"valid": True, "kind": doc.kind}), out)
    return OK


def cmd_rh(args, out) -> int:
    report = check_rh(_load_morphism(args.file))
    _emit(report, out)
    return OK if report.holds else VIOLATED


def cmd_smt(args, out) -> int:
    targets = [t for t in args.targets.split(",") if t]
    report = smt_report(_load_morphism(args.file), targets)
    _emit(report, out)
    return OK if report.holds else VIOLATED


def cmd_pullback(args, out) -> int:
    m = _load_morphism(args.morphism)
    doc = load(args.divisor)
    if doc.kind != "divisor":
        raise GraphRHError(f"{args.divisor} holds a {doc.kind} document, expected a divisor")
    d = doc.value
    if isinstance(m, ComplexMorphism):
        if isinstance(d, Divisor):
            d = ComplexDivisor(d)
        _emit(pullback_complex(m, d), out)
    else:
        if isinstance(d, ComplexDivisor):
            raise GraphRHError("a complex divisor needs a complex morphism")
        _emit(pullback(m, d), out)
    return OK


def cmd_canonical(args, out) -> int:
    x = load(args.file).value
    if isinstance(x, Multigraph):
        d = canonical_divisor(x)
    elif isinstance(x, WeightedGraph):
        d = canonical_divisor_weighted(x)
    elif isinstance(x, MetricModel):
        d = canonical_divisor_metric(x)
    elif isinstance(x, WeightedMetricGraph):
        d = canonical_divisor_weighted_metric(x)
    elif isinstance(x, MetrizedComplex):
        d = canonical_divisor_complex(x, explicit=args.explicit)
    else:
        raise GraphRHError("canonical needs a graph, weighted graph, metric graph or complex document")
    _emit(d, out)
    return OK


def fuzz_one(m, seed: int, max_subset_vertices: int = 8) -> tuple[dict | None, bool]:
    """Check one instance; returns (failure record or None, degenerate SMT violation seen).

    SMT violations on degenerate instances (a vertex of multiplicity zero or
    a constant map) are tallied but are not failures.
    """
    rh = check_rh(m)
    if not rh.holds:
        return {"seed": seed, "check": "rh", "residuals": {v: r for v, r in rh.residuals.items() if r}}, False
    tv = m.base.target.vertices
    if len(tv) > max_subset_vertices:
        return None, False
    degenerate_violation = False
    for r in smt_reports(m, nonempty_subsets(tv)):
        if not r.identity_ok:
            return {"seed": seed, "check": "smt_identity", "targets": list(r.targets)}, False
        if r.defect < 0:
            if r.preconditions_hold:
                return {"seed": seed, "check": "smt", "targets": list(r.targets), "defect": str(r.defect)}, False
            degenerate_violation = True
    return None, degenerate_violation


def cmd_fuzz(args, out) -> int:
    degenerate_violations = 0
    for i in range(args.iters):
        spec = GenSpec(
            args.category,
            seed=args.seed + i,
            max_vertices=args.max_vertices,
            max_degree=args.max_degree,
            nondegenerate=args.nondegenerate,
        )
        _, m = random_instance(spec)
        if args.dump:
            Path(args.dump).mkdir(parents=True, exist_ok=True)
            (Path(args.dump) / f"{args.category}-{spec.seed}.json").write_text(serialize(m), encoding="utf-8")
        failure, degenerate = fuzz_one(m, spec.seed)
        degenerate_violations += degenerate
        if failure is not None:
            _emit(Document("fuzz_summary", {"status": "failed", "checked": i + 1, **failure}), out)
            print(f"failure at seed {spec.seed}", file=sys.stderr)
            return VIOLATED
    summary = {
        "status": "ok",
        "category": args.category,
        "checked": args.iters,
        "first_seed": args.seed,
        "degenerate_smt_violations": degenerate_violations,
    }
    _emit(Document("fuzz_summary", summary), out)
    return OK


def cmd_generate(args, out) -> int:
    spec = GenSpec(args.category, seed=args.seed, max_vertices=args.max_vertices,
                   max_degree=args.max_degree, nondegenerate=args.nondegenerate)
    _, m = random_instance(spec)
    _emit(m, out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphrh", description="Harmonic morphisms, Riemann-Hurwitz and SMT checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="validate an object or check a morphism for harmonicity")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("rh", help="Riemann-Hurwitz report for a morphism")
    s.add_argument("file")
    s.set_defaults(func=cmd_rh)

    s = sub.add_parser("smt", help="second-main-theorem report for a morphism")
    s.add_argument("file")
    s.add_argument("--targets", required=True, help="comma-separated target vertex ids")
    s.set_defaults(func=cmd_smt)

    s = sub.add_parser("pullback", help="pull a divisor back along a morphism")
    s.add_argument("morphism")
    s.add_argument("divisor")
    s.set_defaults(func=cmd_pullback)

    s = sub.add_parser("canonical", help="canonical divisor of an object")
    s.add_argument("file")
    s.add_argument("--explicit", action="store_true", help="require explicit canonical points on every curve")
    s.set_defaults(func=cmd_canonical)

    for name, func, help_ in (
        ("fuzz", cmd_fuzz, "generate instances and check every identity"),
        ("generate", cmd_generate, "emit one generated morphism"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--category", required=True, choices=CATEGORIES)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--max-vertices", type=int, default=5)
        s.add_argument("--max-degree", type=int, default=3)
        s.add_argument("--nondegenerate", action="store_true", help="no contracted pieces")
        if name == "fuzz":
            s.add_argument("--iters", type=int, default=100)
            s.add_argument("--dump", help="directory to write every generated instance to")
        s.set_defaults(func=func)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    except GraphRHError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
