"""Named j-maps, fiber curves, and the exact bounded searches."""

from fractions import Fraction

import pytest

from gl2tors.jmaps import (JMAP_LABELS, POLE, JMap, PlaneCurve,
                           classify_fiber_point, fiber_curve, jmap_eval,
                           named_jmap, search_hyperelliptic, search_plane,
                           zeta3_descent_search)
from gl2tors.polynomial import UniPoly, parse_poly

X = UniPoly.x()


def test_jmap_spot_values():
    assert named_jmap("2B")(1) == 2048
    assert named_jmap("2B")(Fraction(1, 2)) == 1728
    assert named_jmap("3Cs.1.1")(1) == Fraction(884736, 343)
    assert named_jmap("9B0-9a")(1) == Fraction(4096000, 37)
    assert named_jmap("no-9-isogeny")(3) == 54000
    assert named_jmap("no-9-isogeny")(-3) == 0
    assert named_jmap("Et")(-6) == -12288000


def test_jmap_poles():
    assert jmap_eval(named_jmap("Et"), 3) is POLE
    assert jmap_eval(named_jmap("2B"), 0) is POLE
    assert jmap_eval(named_jmap("9H0-9b"), 1) is POLE
    assert jmap_eval(named_jmap("9H0-9b"), -1) is POLE
    assert repr(POLE) == "pole"


def test_jmap_labels():
    assert JMAP_LABELS == ("2B", "3Cs.1.1", "9B0-9a", "9H0-9b", "Et",
                           "no-9-isogeny")
    with pytest.raises(ValueError, match="unknown j-map"):
        named_jmap("nope")


def test_jmap_validation():
    with pytest.raises(ValueError, match="share the factor"):
        JMap("bad", X ** 2 - 1, X - 1)
    with pytest.raises(ValueError, match="zero denominator"):
        JMap("bad", X, UniPoly())


def test_fiber_curve_labels():
    C = fiber_curve(named_jmap("3Cs.1.1"), named_jmap("9B0-9a"))
    assert C.label == "fiber(3Cs.1.1,9B0-9a)"
    assert PlaneCurve(C.F).label == "plane-curve"
    assert C.F == C.F.primitive()


def test_fiber_3cs_9b_points():
    C = fiber_curve(named_jmap("3Cs.1.1"), named_jmap("9B0-9a"))
    pts = search_plane(C, 30)
    assert pts == [(-3, -3), (-1, -3), (0, 0)]
    kinds = [classify_fiber_point(C, s, t) for s, t in pts]
    assert [fp.kind for fp in kinds] == ["finite", "finite", "pole"]
    assert kinds[0].j == 0 and kinds[1].j == 0 and kinds[2].j is None


def test_fiber_2b_9h_points():
    C = fiber_curve(named_jmap("2B"), named_jmap("9H0-9b"))
    pts = search_plane(C, 30)
    assert pts == [(0, -1), (0, 1)]
    assert all(classify_fiber_point(C, s, t).kind == "pole" for s, t in pts)


def test_fiber_no9_2b_j_values():
    C = fiber_curve(named_jmap("no-9-isogeny"), named_jmap("2B"))
    pts = search_plane(C, 30)
    assert (Fraction(0), Fraction(0)) in pts
    finite_j = {classify_fiber_point(C, s, t).j for s, t in pts
                if classify_fiber_point(C, s, t).kind == "finite"}
    assert finite_j == {Fraction(0), Fraction(54000)}


def test_search_plane_fast_path_matches_direct():
    C = fiber_curve(named_jmap("3Cs.1.1"), named_jmap("9B0-9a"))
    stripped = PlaneCurve(C.F)
    assert search_plane(stripped, 6) == search_plane(C, 6)
    assert search_plane(C, 6) == [(-3, -3), (-1, -3), (0, 0)]


def test_classify_fiber_point_errors():
    C = fiber_curve(named_jmap("3Cs.1.1"), named_jmap("9B0-9a"))
    with pytest.raises(ValueError, match="provenance"):
        classify_fiber_point(PlaneCurve(C.F), 0, 0)
    with pytest.raises(ValueError, match="not on the fiber curve"):
        classify_fiber_point(C, 1, 1)


def test_search_hyperelliptic():
    h = parse_poly("x^3 + 1")
    f = parse_poly("-9*x^3")
    pts = search_hyperelliptic(h, f, 100)
    assert pts == [(-1, -3), (-1, 3), (0, -1), (0, 0)]
    assert search_hyperelliptic(UniPoly(), X ** 3, 2) == [
        (0, 0), (1, -1), (1, 1)]


def test_zeta3_descent_search():
    hits = zeta3_descent_search(10)
    assert [(h.t, h.case, h.flag) for h in hits] == [
        (Fraction(-6), "a=0", "cm"),
        (Fraction(0), "a=0", "cm"),
        (Fraction(3), "a=0", "excluded-singular"),
        (Fraction(3), "b=0", "excluded-singular"),
    ]
    kept = sorted({h.t for h in zeta3_descent_search(50)
                   if h.flag != "excluded-singular"})
    assert kept == [Fraction(-6), Fraction(0)]
