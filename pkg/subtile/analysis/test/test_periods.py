from numpy.testing import assert_, assert_allclose, assert_equal

from subtile.analysis import (
    find_periods,
    period_bound_report,
    period_displacement,
    repetitivity_radius,
)
from subtile.core import Patch, PlacedTile, ball_patch, supertile
from subtile.exact import Motion, Point
from subtile.systems import make_fibonacci, make_grid, make_pinwheel


def test_identity_is_a_period():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 2)
    periods = find_periods(P, 0.1)
    assert_(periods[0].is_identity())
    assert_equal(len(periods), 1)


def test_period_without_overlap():
    sys = make_grid()
    F = sys.field
    P = Patch(sys, [PlacedTile(0, Motion.identity(F))])
    g = Motion.translation(Point.of(F, 2, 0))
    periods = find_periods(P, 3, extra=[g])
    assert_equal(len(periods), 2)
    assert_(periods[1] == g)
    assert_allclose(period_displacement(P, g), 2.0)
    assert_equal(len(find_periods(P, "3/2", extra=[g])), 1)


def test_grid_unit_translations():
    sys = make_grid()
    P = supertile(sys, 0, 2)
    periods = find_periods(P, 1)
    assert_equal(len(periods), 5)
    for g in periods[1:]:
        assert_(g.rot.is_identity())
        assert_allclose(period_displacement(P, g), 1.0)


def test_period_bound_grid_tends_to_zero():
    report = period_bound_report(make_grid(), [2, 3, 4])
    assert_allclose(report.details["K_by_level"], [0.5, 0.25, 0.125])
    assert_allclose(report["K"].lo, 0.125)
    assert_allclose(report["m"].lo, 0.5)
    d = report.to_dict()
    assert_equal(d["system"], "grid")


def test_period_bound_pinwheel():
    report = period_bound_report(make_pinwheel(1, 2), [3, 4], ratio=0.1)
    # no non-identity period moves points by 0.1·r or less
    assert_allclose(report.details["K_by_level"], [0.1, 0.1])
    assert_(report["K"].lo > 0)


def test_period_bound_fibonacci():
    report = period_bound_report(make_fibonacci(), [5, 6, 7], ratio=0.25)
    assert_allclose(report.details["K_by_level"], [0.25, 0.25, 0.25])


def test_fibonacci_ball_patch_not_translation_periodic():
    sys = make_fibonacci()
    P = supertile(sys, 1, 8)
    Q = ball_patch(P, P.centroid(20), 6)
    assert_equal(len(find_periods(Q, 2)), 1)


def test_repetitivity_grid():
    v = repetitivity_radius(make_grid(), 0.25, 3)
    assert_(v.provenance["found"])
    assert_allclose([v.lo, v.hi], [0.5, 1.0])
    assert_allclose(v.provenance["C"], 4.0)


def test_repetitivity_fibonacci():
    sys = make_fibonacci()
    v = repetitivity_radius(sys, 0.4, 9)
    assert_(v.finite)
    assert_(v.hi >= 0.8)
    # more patch types to find can only push the radius up
    w = repetitivity_radius(sys, 0.8, 9)
    assert_(w.hi >= v.hi or not w.finite)
