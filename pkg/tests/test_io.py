import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from graphrh import (
    ComplexDivisor,
    CurveDivisor,
    Divisor,
    Document,
    GenSpec,
    MetricModel,
    Multigraph,
    WeightedGraph,
    check_rh,
    load,
    parse,
    random_instance,
    serialize,
    smt_report,
)
from graphrh.errors import DocumentSyntaxError, InvariantError, SchemaError
from graphrh.generators import CATEGORIES

from shapes import bowtie_collapse, double_cover_complex, hexagon_cover, segment_stretch, theta, triangle


def doc(kind, payload, version="1"):
    return json.dumps({"schema_version": version, "kind": kind, "payload": payload})


TRIANGLE = {"vertices": ["a", "b", "c"], "edges": {"ab": ["a", "b"], "bc": ["b", "c"], "ca": ["c", "a"]}}


class TestParse:
    def test_triangle(self):
        d = parse(doc("graph", TRIANGLE))
        assert d.kind == "graph" and d.value == triangle()

    def test_rational_normalized(self):
        g = {"vertices": ["a", "b"], "edges": {"e": ["a", "b"]}}
        d = parse(doc("metric_graph", {"graph": g, "lengths": {"e": "2/4"}}))
        assert d.value.lengths["e"] == Fraction(1, 2)
        assert '"1/2"' in serialize(d)

    def test_integer_length_accepted(self):
        g = {"vertices": ["a", "b"], "edges": {"e": ["a", "b"]}}
        assert parse(doc("metric_graph", {"graph": g, "lengths": {"e": 3}})).value.lengths["e"] == 3

    def test_float_length_rejected(self):
        g = {"vertices": ["a", "b"], "edges": {"e": ["a", "b"]}}
        with pytest.raises(SchemaError) as info:
            parse(doc("metric_graph", {"graph": g, "lengths": {"e": 0.5}}))
        assert info.value.path == "$.payload.lengths.e"

    def test_zero_length_non_loop_in_pseudo_metric(self):
        g = {"vertices": ["a", "b"], "edges": {"e": ["a", "b"]}}
        with pytest.raises(InvariantError) as info:
            parse(doc("weighted_metric_graph", {"pseudo_metric": {"graph": g, "lengths": {"e": "0"}}}))
        assert info.value.cause_code == "zero_length_non_loop"

    def test_pseudo_metric_loop_becomes_weight(self):
        g = {"vertices": ["a", "b"], "edges": {"e": ["a", "b"], "z": ["a", "a"]}}
        x = parse(doc("weighted_metric_graph", {"pseudo_metric": {"graph": g, "lengths": {"e": "1", "z": "0"}}})).value
        assert x.weights["a"] == 1 and "z" not in x.model.graph.edges

    def test_syntax_error_position(self):
        with pytest.raises(DocumentSyntaxError) as info:
            parse('{\n  "kind": "graph",\n  "payload": {,}\n}')
        assert (info.value.line, info.value.column) == (3, 15)

    def test_unknown_key(self):
        with pytest.raises(SchemaError) as info:
            parse(doc("graph", {**TRIANGLE, "colour": "red"}))
        assert info.value.path == "$.payload.colour"

    def test_unknown_top_level_key(self):
        body = json.loads(doc("graph", TRIANGLE))
        body["extra"] = 1
        with pytest.raises(SchemaError) as info:
            parse(json.dumps(body))
        assert info.value.path == "$.extra"

    def test_missing_key_path(self):
        with pytest.raises(SchemaError) as info:
            parse(doc("graph", {"vertices": ["a"]}))
        assert info.value.path == "$.payload" and "edges" in str(info.value)

    def test_wrong_type_path(self):
        with pytest.raises(SchemaError) as info:
            parse(doc("graph", {"vertices": ["a", 1], "edges": {}}))
        assert info.value.path == "$.payload.vertices[1]"

    def test_bad_version(self):
        with pytest.raises(SchemaError) as info:
            parse(doc("graph", TRIANGLE, version="2"))
        assert info.value.path == "$.schema_version"

    def test_unknown_kind(self):
        with pytest.raises(SchemaError):
            parse(doc("hypergraph", TRIANGLE))

    def test_invariant_violation_wrapped(self):
        with pytest.raises(InvariantError) as info:
            parse(doc("graph", {"vertices": ["a"], "edges": {"e": ["a", "b"]}}))
        assert info.value.cause_code == "dangling_endpoint"

    def test_bad_edge_arity(self):
        with pytest.raises(SchemaError) as info:
            parse(doc("graph", {"vertices": ["a"], "edges": {"e": ["a"]}}))
        assert info.value.path == "$.payload.edges.e"

    def test_unknown_category(self):
        payload = {"category": "tropical", "source": TRIANGLE, "target": TRIANGLE, "vertex_map": {}, "edge_map": {}}
        with pytest.raises(SchemaError) as info:
            parse(doc("morphism", payload))
        assert info.value.path == "$.payload.category"

    def test_indices_only_for_weighted(self):
        payload = {"category": "finite", "source": TRIANGLE, "target": TRIANGLE,
                   "vertex_map": {}, "edge_map": {}, "indices": {}}
        with pytest.raises(SchemaError):
            parse(doc("morphism", payload))


class TestRoundTrip:
    @pytest.mark.parametrize("x", [
        triangle(),
        WeightedGraph(triangle(), {"a": 2}),
        MetricModel(triangle(), {"ab": Fraction(1, 3), "bc": 2, "ca": 5}),
        theta(),
        double_cover_complex(),
        hexagon_cover(),
        bowtie_collapse(),
        segment_stretch(),
        Divisor({"a": 3, "b": -1}),
        ComplexDivisor(Divisor({"s": 1}), {"s": CurveDivisor(Divisor({"s.r": 2}), 1)}),
    ], ids=lambda x: type(x).__name__)
    def test_values(self, x):
        text = serialize(x)
        back = parse(text).value
        assert back == x
        assert serialize(back) == text

    @pytest.mark.parametrize("category", CATEGORIES)
    @pytest.mark.parametrize("seed", range(10))
    def test_generated_morphisms(self, category, seed):
        _, m = random_instance(GenSpec(category, seed=seed))
        text = serialize(m)
        assert serialize(parse(text).value) == text

    def test_reports_serialize_canonically(self):
        text = serialize(check_rh(bowtie_collapse()))
        body = json.loads(text)
        assert body["kind"] == "rh_report" and body["schema_version"] == "1"
        assert text.endswith("}\n") and text == json.dumps(body, sort_keys=True, indent=2) + "\n"
        assert parse(text).kind == "rh_report"
        s = json.loads(serialize(smt_report(hexagon_cover(), ["c0"])))
        assert s["kind"] == "smt_report"

    @given(st.dictionaries(st.sampled_from("abcdef"), st.integers(-50, 50)))
    def test_divisor_roundtrip(self, coeffs):
        d = Divisor(coeffs)
        assert parse(serialize(d)).value == d


class TestRefs:
    def test_ref_resolves_next_to_document(self, tmp_path):
        (tmp_path / "sub").mkdir()
        (tmp_path / "sub" / "tri.json").write_text(serialize(triangle()))
        m = {"category": "finite", "source": {"ref": "sub/tri.json"}, "target": {"ref": "sub/tri.json"},
             "vertex_map": {v: v for v in "abc"}, "edge_map": {e: e for e in ("ab", "bc", "ca")}}
        (tmp_path / "m.json").write_text(doc("morphism", m))
        value = load(tmp_path / "m.json").value
        assert value.source == triangle() and check_rh(value).holds

    def test_ref_kind_mismatch(self, tmp_path):
        (tmp_path / "tri.json").write_text(serialize(WeightedGraph(triangle())))
        m = {"category": "finite", "source": {"ref": "tri.json"}, "target": TRIANGLE,
             "vertex_map": {}, "edge_map": {}}
        (tmp_path / "m.json").write_text(doc("morphism", m))
        with pytest.raises(SchemaError) as info:
            load(tmp_path / "m.json")
        assert info.value.path == "$.payload.source.ref"

    def test_missing_ref(self, tmp_path):
        m = {"category": "finite", "source": {"ref": "nope.json"}, "target": TRIANGLE,
             "vertex_map": {}, "edge_map": {}}
        (tmp_path / "m.json").write_text(doc("morphism", m))
        with pytest.raises(OSError):
            load(tmp_path / "m.json")


def test_document_value_is_kept():
    d = Document("fuzz_summary", {"status": "ok"})
    assert parse(serialize(d)).value == {"status": "ok"}


def test_fixture_files_are_canonical(fixtures_dir):
    for f in fixtures_dir.glob("*.json"):
        text = f.read_text()
        assert serialize(parse(text, f.parent).value) == text, f.name
