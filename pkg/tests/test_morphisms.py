from fractions import Fraction

import pytest

from graphrh import (
    Divisor,
    GraphMorphism,
    IndexedMorphism,
    MetricModel,
    MetricMorphism,
    Multigraph,
    NotHarmonicAt,
    WeightedGraph,
    WeightedMetricGraph,
    WeightedMetricMorphism,
    compose,
    horizontal_multiplicity,
    is_harmonic_finite,
    is_harmonic_indexed,
    is_harmonic_metric,
    is_harmonic_weighted_metric,
    is_pseudo_harmonic_indexed,
    is_pseudo_harmonic_weighted_metric,
    loopless_lift,
    morphism_degree,
    pullback,
    pushforward,
    refine_morphism,
    vertical_multiplicity,
)
from graphrh.errors import (
    GraphRHError,
    LoopNotAllowed,
    IndexVerticalMismatch,
    InvalidMorphism,
    NonIntegralSlope,
    NotHarmonic,
    UnknownVertex,
)
from graphrh.generators import identity_morphism, metric_stretch
from graphrh.morphisms import identity_graph_morphism, multiplicities
from graphrh.theorems import check_rh, ramification_divisor

from shapes import bowtie_collapse, hexagon_cover, path, segment_stretch, theta, triangle

F = Fraction


class TestGraphMorphismAxioms:
    def test_edge_endpoints_must_match(self):
        tgt = path("x", "y")
        with pytest.raises(InvalidMorphism):
            GraphMorphism(path("a", "b"), tgt, {"a": "x", "b": "x"}, {"ab": "xy"})

    def test_contracted_edge_endpoints_must_agree(self):
        with pytest.raises(InvalidMorphism):
            GraphMorphism(path("a", "b"), path("x", "y"), {"a": "x", "b": "y"}, {"ab": "x"})

    def test_every_vertex_needs_an_image(self):
        with pytest.raises(InvalidMorphism):
            GraphMorphism(path("a", "b"), path("x", "y"), {"a": "x"}, {"ab": "x"})

    def test_image_must_exist(self):
        with pytest.raises(InvalidMorphism):
            GraphMorphism(path("a", "b"), path("x", "y"), {"a": "x", "b": "x"}, {"ab": "zz"})

    def test_call_maps_vertices_and_edges(self):
        m = bowtie_collapse()
        assert m("u1") == "p'" and m("a2") == "t2"
        with pytest.raises(UnknownVertex):
            m("nope")


class TestMultiplicities:
    def test_identity(self):
        m = identity_graph_morphism(triangle())
        assert all(vertical_multiplicity(m, v) == 0 for v in "abc")
        assert all(horizontal_multiplicity(m, v) == 1 for v in "abc")

    def test_bowtie_vertical(self):
        m = bowtie_collapse()
        assert vertical_multiplicity(m, "p") == 2
        assert vertical_multiplicity(m, "u1") == 2
        assert vertical_multiplicity(m, "x") == 0

    def test_bowtie_horizontal(self):
        m = bowtie_collapse()
        assert horizontal_multiplicity(m, "u1") == 0
        assert horizontal_multiplicity(m, "p") == 1

    def test_hexagon_cover(self):
        m = hexagon_cover()
        assert {horizontal_multiplicity(m, v) for v in m.source.vertices} == {1}

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            horizontal_multiplicity(bowtie_collapse(), "zz")

    def test_vertical_loop_counts_twice(self):
        src = Multigraph(["a", "b"], {"e": ("a", "b"), "l": ("a", "a")})
        m = GraphMorphism(src, path("x", "y"), {"a": "x", "b": "y"}, {"e": "xy", "l": "x"})
        assert vertical_multiplicity(m, "a") == 2

    def test_witness_lists_differing_counts(self):
        # folding a-b-c onto a'-b' sends a and c to a': b sees the edge twice
        tgt = Multigraph(["a'", "b'", "c'"], {"t1": ("a'", "b'"), "t2": ("b'", "c'")})
        src = path("a", "b", "c")
        m = GraphMorphism(src, tgt, {"a": "a'", "b": "b'", "c": "a'"}, {"ab": "t1", "bc": "t1"})
        w = horizontal_multiplicity(m, "b")
        assert isinstance(w, NotHarmonicAt)
        assert dict(w.counts) == {"t1": 2, "t2": 0}
        assert "b" in w.describe()


class TestFiniteHarmonicity:
    def test_identity(self):
        cert = is_harmonic_finite(identity_graph_morphism(triangle()))
        assert cert.harmonic and cert.degree == 1
        assert set(cert.multiplicity.values()) == {1} and set(cert.vertical.values()) == {0}

    def test_bowtie(self):
        cert = is_harmonic_finite(bowtie_collapse())
        assert cert
        assert cert.multiplicity["p"] == 1 and cert.vertical["p"] == 2
        assert cert.multiplicity["u2"] == 0

    def test_fold_of_path_onto_edge(self):
        m = GraphMorphism(path("a", "b", "c"), path("x", "y"), {"a": "x", "b": "y", "c": "x"}, {"ab": "xy", "bc": "xy"})
        cert = is_harmonic_finite(m)
        assert cert.harmonic
        assert dict(cert.multiplicity) == {"a": 1, "b": 2, "c": 1}
        assert cert.degree == 2

    def test_least_failing_vertex_is_witness(self):
        tgt = Multigraph(["a'", "b'", "c'"], {"t1": ("a'", "b'"), "t2": ("b'", "c'")})
        src = path("a", "b", "c")
        m = GraphMorphism(src, tgt, {"a": "a'", "b": "b'", "c": "a'"}, {"ab": "t1", "bc": "t1"})
        cert = is_harmonic_finite(m)
        assert not cert and cert.witness.vertex == "b"

    def test_target_without_edges(self):
        m = GraphMorphism(triangle(), Multigraph(["*"]), {v: "*" for v in "abc"}, {e: "*" for e in triangle().edges})
        cert = is_harmonic_finite(m)
        assert cert.harmonic and cert.degree == 0
        assert set(cert.multiplicity.values()) == {0}

    def test_target_loop_uses_half_edges(self):
        # a 2-cycle wrapped twice around a one-vertex loop
        src = Multigraph(["a", "b"], {"e1": ("a", "b"), "e2": ("a", "b")})
        tgt = Multigraph(["o"], {"l": ("o", "o")})
        m = GraphMorphism(src, tgt, {"a": "o", "b": "o"}, {"e1": "l", "e2": "l"})
        cert = is_harmonic_finite(m)
        assert cert.harmonic and cert.degree == 2
        assert dict(cert.multiplicity) == {"a": 1, "b": 1}

    def test_odd_count_over_target_loop(self):
        src = path("a", "b")
        tgt = Multigraph(["o"], {"l": ("o", "o")})
        m = GraphMorphism(src, tgt, {"a": "o", "b": "o"}, {"ab": "l"})
        assert not is_harmonic_finite(m)


class TestDegreePullbackPushforward:
    def test_degrees(self):
        assert morphism_degree(identity_graph_morphism(triangle())) == 1
        assert morphism_degree(bowtie_collapse()) == 1
        assert morphism_degree(hexagon_cover()) == 2

    def test_degree_of_non_harmonic_raises(self):
        tgt = Multigraph(["a'", "b'", "c'"], {"t1": ("a'", "b'"), "t2": ("b'", "c'")})
        m = GraphMorphism(path("a", "b", "c"), tgt, {"a": "a'", "b": "b'", "c": "a'"}, {"ab": "t1", "bc": "t1"})
        with pytest.raises(GraphRHError) as info:
            morphism_degree(m)
        assert info.value.code in ("inconsistent_degree", "not_harmonic")

    def test_pullback_identity(self):
        d = Divisor({"a": 2, "c": -1})
        assert pullback(identity_graph_morphism(triangle()), d) == d

    def test_pullback_bowtie(self):
        assert pullback(bowtie_collapse(), Divisor.point("p'")) == Divisor.point("p")

    def test_pullback_double_cover(self):
        assert pullback(hexagon_cover(), Divisor.point("c1")) == Divisor({"h1": 1, "h4": 1})

    def test_pushforward_bowtie(self):
        assert pushforward(bowtie_collapse(), Divisor({"u1": 1, "p": 1})) == Divisor.point("p'", 2)

    def test_push_pull_is_degree_times_identity(self):
        for m in (bowtie_collapse(), hexagon_cover()):
            for v in m.target.vertices:
                assert pushforward(m, pullback(m, Divisor.point(v))) == morphism_degree(m) * Divisor.point(v)

    def test_pullback_rejects_source_points(self):
        with pytest.raises(UnknownVertex):
            pullback(bowtie_collapse(), Divisor.point("p"))

    def test_pushforward_rejects_target_points(self):
        with pytest.raises(UnknownVertex):
            pushforward(bowtie_collapse(), Divisor.point("p'"))


def _weighted_fold(weights=None, target_weights=None):
    src = WeightedGraph(path("a", "b", "c"), weights or {})
    tgt = WeightedGraph(path("x", "y"), target_weights or {})
    return src, tgt


class TestIndexed:
    def test_simple_indices_match_finite(self):
        base = bowtie_collapse()
        wsrc, wtgt = WeightedGraph(base.source, {}), WeightedGraph(base.target, {})
        idx = {e: (0 if base.is_vertical(e) else 1) for e in base.source.edges}
        m = IndexedMorphism(wsrc, wtgt, base.vertex_map, base.edge_map, idx)
        assert dict(is_pseudo_harmonic_indexed(m).multiplicity) == dict(is_harmonic_finite(base).multiplicity)

    def test_index_two_on_one_edge(self):
        src = WeightedGraph(Multigraph(["a", "b"], {"e": ("a", "b")}), {})
        tgt = WeightedGraph(path("x", "y"), {})
        m = IndexedMorphism(src, tgt, {"a": "x", "b": "y"}, {"e": "xy"}, {"e": 2})
        cert = is_pseudo_harmonic_indexed(m)
        assert cert.degree == 2 and dict(cert.multiplicity) == {"a": 2, "b": 2}
        # slack 2(M-1) - (r-1) = 1 at each endpoint
        assert dict(cert.slack) == {"a": 1, "b": 1}

    def test_index_zero_on_horizontal_edge(self):
        src, tgt = _weighted_fold()
        with pytest.raises(IndexVerticalMismatch):
            IndexedMorphism(src, tgt, {"a": "x", "b": "y", "c": "x"}, {"ab": "xy", "bc": "xy"}, {"ab": 0, "bc": 1})

    def test_identity_slack_zero(self):
        wg = WeightedGraph(triangle(), {"a": 1})
        cert = is_harmonic_indexed(identity_morphism(wg))
        assert cert.harmonic and set(cert.slack.values()) == {0}

    def test_contracting_weight_zero_leaf_is_not_harmonic(self):
        src = WeightedGraph(path("a", "b", "c"), {})
        tgt = WeightedGraph(path("x", "y"), {})
        m = IndexedMorphism(src, tgt, {"a": "x", "b": "x", "c": "y"}, {"ab": "x", "bc": "xy"}, {"ab": 0, "bc": 1})
        assert is_pseudo_harmonic_indexed(m).pseudo_harmonic
        cert = is_harmonic_indexed(m)
        assert not cert.harmonic and cert.witness.vertex == "a"

    def test_weighted_leaf_may_be_contracted(self):
        src = WeightedGraph(path("a", "b", "c"), {"a": 1})
        tgt = WeightedGraph(path("x", "y"), {})
        m = IndexedMorphism(src, tgt, {"a": "x", "b": "x", "c": "y"}, {"ab": "x", "bc": "xy"}, {"ab": 0, "bc": 1})
        assert is_harmonic_indexed(m).harmonic


class TestMetric:
    def test_segment_stretch(self):
        m = segment_stretch()
        assert m.slope("e") == 3
        cert = is_harmonic_metric(m)
        assert cert.harmonic and cert.degree == 3
        assert dict(cert.multiplicity) == {"a": 3, "b": 3}

    def test_isometry(self):
        m = identity_morphism(theta())
        assert set(m.slopes.values()) == {1} and morphism_degree(m) == 1

    def test_target_without_edges_has_degree_zero(self):
        src = theta()
        tgt = MetricModel(Multigraph(["o"]), {})
        m = MetricMorphism(src, tgt, {"u": "o", "v": "o"}, {e: "o" for e in src.graph.edges})
        assert morphism_degree(m) == 0

    def test_non_integral_slope(self):
        src = MetricModel(path("a", "b"), {"ab": 2})
        tgt = MetricModel(path("x", "y"), {"xy": 3})
        with pytest.raises(NonIntegralSlope):
            MetricMorphism(src, tgt, {"a": "x", "b": "y"}, {"ab": "xy"})

    def test_loops_rejected(self):
        loop = MetricModel(Multigraph(["v"], {"l": ("v", "v")}), {"l": 1})
        with pytest.raises(LoopNotAllowed):
            MetricMorphism(loop, loop, {"v": "v"}, {"l": "l"})


class TestWeightedMetric:
    def test_zero_weights_reduce_to_metric(self):
        mm = segment_stretch()
        wm = WeightedMetricMorphism(
            WeightedMetricGraph(mm.source, {}), WeightedMetricGraph(mm.target, {}), mm.base.vertex_map, mm.base.edge_map
        )
        a, b = is_harmonic_weighted_metric(wm), is_harmonic_metric(mm)
        assert (a.harmonic, dict(a.multiplicity), a.degree) == (b.harmonic, dict(b.multiplicity), b.degree)

    def test_weight_zero_leaf_contraction(self):
        src = WeightedMetricGraph(MetricModel(path("a", "b", "c"), {"ab": 1, "bc": 1}), {})
        tgt = WeightedMetricGraph(MetricModel(path("x", "y"), {"xy": 1}), {})
        m = WeightedMetricMorphism(src, tgt, {"a": "x", "b": "x", "c": "y"}, {"ab": "x", "bc": "xy"})
        assert is_pseudo_harmonic_weighted_metric(m).pseudo_harmonic
        assert not is_harmonic_weighted_metric(m).harmonic

    def test_vertical_zero_horizontal_one(self):
        src = WeightedMetricGraph(MetricModel(path("a", "b", "c"), {"ab": 1, "bc": 1}), {"a": 1})
        tgt = WeightedMetricGraph(MetricModel(path("x", "y"), {"xy": 1}), {})
        m = WeightedMetricMorphism(src, tgt, {"a": "x", "b": "x", "c": "y"}, {"ab": "x", "bc": "xy"})
        assert m.slope("ab") == 0 and m.slope("bc") == 1
        assert is_harmonic_weighted_metric(m).harmonic


class TestCompose:
    def test_finite_composite_is_harmonic_with_product_degree(self):
        first = hexagon_cover()
        tri = first.target
        second = GraphMorphism(
            tri, Multigraph(["*"]), {v: "*" for v in tri.vertices}, {e: "*" for e in tri.edges}
        )
        c = compose(second, first)
        assert is_harmonic_finite(c).harmonic and morphism_degree(c) == 0

    def test_metric_composite_multiplies_slopes(self):
        inner = metric_stretch(theta((6, 6, 6)), 2)
        outer = metric_stretch(inner.source, 3)
        c = compose(inner, outer)
        assert set(c.slopes.values()) == {6} and morphism_degree(c) == 6

    def test_mismatched_categories(self):
        with pytest.raises(InvalidMorphism):
            compose(segment_stretch(), hexagon_cover())


class TestLooplessLift:
    def test_identity_when_loopless(self):
        m = hexagon_cover()
        assert loopless_lift(m).morphism is m

    def test_double_cover_of_loop(self):
        src = Multigraph(["a", "b"], {"e1": ("a", "b"), "e2": ("a", "b")})
        tgt = Multigraph(["o"], {"l": ("o", "o")})
        m = GraphMorphism(src, tgt, {"a": "o", "b": "o"}, {"e1": "l", "e2": "l"})
        lift = loopless_lift(m)
        assert lift.morphism.target.is_loopless and lift.morphism.source.is_loopless
        cert = is_harmonic_finite(lift.morphism)
        assert cert.harmonic and cert.degree == 2
        assert {v: cert.multiplicity[v] for v in "ab"} == {"a": 1, "b": 1}

    def test_vertical_loop(self):
        src = Multigraph(["a", "b"], {"e": ("a", "b"), "l": ("a", "a")})
        m = GraphMorphism(src, path("x", "y"), {"a": "x", "b": "y"}, {"e": "xy", "l": "x"})
        lift = loopless_lift(m)
        assert check_rh(lift.morphism).holds
        assert ramification_divisor(lift.morphism).restrict(src.vertices) == ramification_divisor(m)

    def test_odd_loop_cover_refused(self):
        tgt = Multigraph(["o"], {"l": ("o", "o")})
        m = GraphMorphism(path("a", "b"), tgt, {"a": "o", "b": "o"}, {"ab": "l"})
        with pytest.raises(NotHarmonic):
            loopless_lift(m)


class TestRefineMorphism:
    def test_stretch_refined_keeps_data(self):
        m = segment_stretch()
        r = refine_morphism(m, "e'", 2)
        assert r.source.graph.has_vertex("sub:e:2/3")
        assert morphism_degree(r) == 3
        assert ramification_divisor(r) == ramification_divisor(m)
        assert check_rh(r).holds

    def test_refine_reverse_oriented_preimage(self):
        # the source edge runs from the vertex over the second endpoint
        src = MetricModel(Multigraph(["p", "q"], {"e": ("p", "q")}), {"e": 2})
        tgt = MetricModel(Multigraph(["a'", "b'"], {"e'": ("a'", "b'")}), {"e'": 4})
        m = MetricMorphism(src, tgt, {"p": "b'", "q": "a'"}, {"e": "e'"})
        r = refine_morphism(m, "e'", 1)
        assert r.source.length("e:a") == F(3, 2)
        assert is_harmonic_metric(r).harmonic

    def test_multiplicities_of_old_vertices_unchanged(self):
        m = metric_stretch(theta((2, 4, 6)), 2)
        r = refine_morphism(m, "e2", 1)
        old, new = multiplicities(m), multiplicities(r)
        assert all(new[v] == old[v] for v in old)
