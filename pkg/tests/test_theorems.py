from fractions import Fraction

import pytest

from graphrh import Divisor, check_rh, ramification_divisor, smt_arithmetic, smt_report, smt_reports
from graphrh.errors import NotHarmonic, UnknownCategory, UnknownTarget
from graphrh.generators import identity_morphism, metric_stretch
from graphrh.morphisms import GraphMorphism
from graphrh.theorems import TERM_NAMES, nonempty_subsets

from shapes import bowtie, bowtie_collapse, double_cover_complex, hexagon_cover, path, segment_stretch, theta, triangle
from worked_instances import HEADLINES, INSTANCES


@pytest.mark.parametrize(
    "group,category,q,g,g2,deg,n,corrections,lhs,rhs",
    INSTANCES,
    ids=[f"{row[0]}-q{row[2]}-{i}" for i, row in enumerate(INSTANCES)],
)
def test_worked_instances(group, category, q, g, g2, deg, n, corrections, lhs, rhs):
    r = smt_arithmetic(category, q, g, g2, deg, n, **corrections)
    assert r.lhs == lhs and r.rhs == rhs
    assert r.holds


def test_headline_cases_are_sharp():
    assert len(HEADLINES) == 7
    for _, category, q, g, g2, deg, n, corrections, _, _ in HEADLINES:
        assert smt_arithmetic(category, q, g, g2, deg, n, **corrections).defect == 0


def test_arithmetic_accepts_rational_strings():
    r = smt_arithmetic("metric", 3, 4, 0, 2, 5, half_slope_sum="-7/2")
    assert r.rhs == Fraction(9, 2) and r.defect == Fraction(1, 2)


def test_arithmetic_unknown_category():
    with pytest.raises(UnknownCategory):
        smt_arithmetic("tropical", 1, 0, 0, 1, 1)


def test_arithmetic_foreign_term():
    with pytest.raises(TypeError):
        smt_arithmetic("finite", 1, 0, 0, 1, 1, half_slope_sum=1)


def test_term_names_cover_every_category():
    assert set(TERM_NAMES) == {"finite", "weighted", "metric", "weighted_metric", "complex"}


class TestRamification:
    def test_identity_is_unramified(self):
        for x in (triangle(), theta()):
            assert ramification_divisor(identity_morphism(x)) == Divisor()

    def test_bowtie(self):
        assert ramification_divisor(bowtie_collapse()) == Divisor.point("p", 2)

    def test_stretch(self):
        assert ramification_divisor(segment_stretch()) == Divisor({"a": 2, "b": 2})

    def test_not_harmonic(self):
        tgt = path("x", "y", "z")
        m = GraphMorphism(path("a", "b", "c"), tgt, {"a": "x", "b": "y", "c": "x"}, {"ab": "xy", "bc": "xy"})
        with pytest.raises(NotHarmonic):
            ramification_divisor(m)


class TestRiemannHurwitz:
    def test_hexagon(self):
        r = check_rh(hexagon_cover())
        assert r.holds and (r.lhs, r.rhs, r.degree) == (0, 0, 2)
        assert r.ramification == Divisor()

    def test_bowtie(self):
        r = check_rh(bowtie_collapse())
        assert r.holds and (r.lhs, r.rhs) == (2, 2)
        assert r.nonconstant_bounds is True

    def test_stretch(self):
        r = check_rh(segment_stretch())
        assert r.holds and (r.lhs, r.rhs) == (-2, -2)

    def test_theta_stretch(self):
        r = check_rh(metric_stretch(theta(), 2))
        assert r.holds and r.degree == 2
        # 2(M - 1) - sum of (U - 1) over three edges = 2 - 3
        assert r.ramification == Divisor({"u": -1, "v": -1})

    def test_constant_map_skips_bounds(self):
        g = triangle()
        m = GraphMorphism(g, path("o"), {v: "o" for v in g.vertices}, {e: "o" for e in g.edges})
        r = check_rh(m)
        assert r.degree == 0 and r.nonconstant_bounds is None and r.holds

    def test_complex(self):
        r = check_rh(double_cover_complex(source_genus=2, target_genus=1))
        assert r.holds


class TestSecondMainTheorem:
    def test_bowtie_all_targets(self):
        r = smt_report(bowtie_collapse(), ["p'", "x'", "y'"])
        assert (r.lhs, r.rhs, r.defect) == (3, 3, 0)
        assert r.terms["half_vertical_sum"] == 3 and r.preimage_vertices == 5

    def test_identity_single_target(self):
        m = identity_morphism(bowtie())
        r = smt_report(m, ["p"])
        assert r.lhs == r.rhs == bowtie().genus

    def test_hexagon_all_targets(self):
        r = smt_report(hexagon_cover(), ["c0", "c1", "c2"])
        assert (r.lhs, r.rhs) == (6, 6)

    def test_internal_identities(self):
        m = hexagon_cover()
        for r in smt_reports(m, nonempty_subsets(m.target.vertices)):
            assert r.identity_ok
            assert r.r_E == r.q * 2 - r.preimage_vertices
            assert r.defect == r.r_G - r.r_E

    def test_adding_a_target_shifts_by_degree(self):
        m = bowtie_collapse()
        one = smt_report(m, ["x'"])
        two = smt_report(m, ["x'", "y'"])
        assert two.lhs - one.lhs == 1
        assert two.preimage_vertices - one.preimage_vertices == len(m.base.vertex_fiber("y'"))

    def test_collapse_with_single_target_breaks_full_sum(self):
        # vertical edges away from the chosen fiber still count in the full sum
        r = smt_report(bowtie_collapse(), ["x'"])
        assert (r.lhs, r.rhs) == (1, -1)
        assert not r.holds and r.degenerate and not r.preconditions_hold
        assert r.rhs_local == 2

    def test_unknown_target(self):
        with pytest.raises(UnknownTarget):
            smt_report(hexagon_cover(), ["nope"])

    def test_duplicate_targets_rejected(self):
        with pytest.raises(UnknownTarget):
            smt_report(hexagon_cover(), ["c0", "c0"])

    def test_complex_terms(self):
        r = smt_report(double_cover_complex(source_genus=1), ["s'", "t'"])
        assert set(r.terms) >= {"curve_genus_term", "weight_term", "half_valence_term"}
        assert r.holds

    def test_metric_terms_are_half_integers(self):
        r = smt_report(segment_stretch(), ["a'"])
        assert r.terms["half_slope_sum"] == 2 and r.holds

    def test_subset_enumeration(self):
        assert len(list(nonempty_subsets(["a", "b", "c"]))) == 7
