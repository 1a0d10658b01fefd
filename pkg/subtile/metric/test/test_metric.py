from fractions import Fraction

from numpy import asarray, hypot, linspace, maximum, minimum
from numpy.random import RandomState
from numpy.testing import assert_, assert_allclose, assert_equal
from pytest import raises

from subtile._errors import EmptyComplexError, ResourceLimitError
from subtile.core import SegmentComplex, ball_patch, patches_agree_on_overlap, supertile
from subtile.exact import Motion, Point, rationals
from subtile.metric import directed_sup, hausdorff_clipped, patch_metric
from subtile.systems import make_grid, make_penrose, make_pinwheel


def _pt(x, y):
    return Point.of(rationals(), Fraction(x), Fraction(y))


def _dist(points, segs):
    out = []
    for x, y in points:
        dx = segs[:, 2] - segs[:, 0]
        dy = segs[:, 3] - segs[:, 1]
        dd = dx * dx + dy * dy
        dd[dd == 0] = 1.0
        t = ((x - segs[:, 0]) * dx + (y - segs[:, 1]) * dy) / dd
        t = minimum(maximum(t, 0.0), 1.0)
        out.append(hypot(x - segs[:, 0] - t * dx, y - segs[:, 1] - t * dy).min())
    return asarray(out)


def _samples(segs, k):
    pts = []
    for x0, y0, x1, y1 in segs:
        for t in linspace(0, 1, k):
            pts.append((x0 + t * (x1 - x0), y0 + t * (y1 - y0)))
    return pts


def test_hausdorff_identical():
    A = SegmentComplex([(_pt(0, 0), _pt(1, 0)), (_pt(0, 0), _pt(0, 1))])
    B = SegmentComplex([(_pt(0, 1), _pt(0, 0)), (_pt(1, 0), _pt(0, 0))])
    v = hausdorff_clipped(A, B, 2, 1e-6)
    assert_(v.exact)
    assert_equal(v.hi, 0.0)


def test_hausdorff_points():
    A = SegmentComplex([(_pt(0, 0), _pt(0, 0))])
    B = SegmentComplex([(_pt("3/10", "4/10"), _pt("3/10", "4/10"))])
    v = hausdorff_clipped(A, B, 1, 1e-6)
    assert_(v.lo <= 0.5 <= v.hi)
    assert_(v.width <= 1e-6)


def test_hausdorff_parallel_segments():
    A = SegmentComplex([(_pt("-1/2", 0), _pt("1/2", 0))])
    B = SegmentComplex([(_pt("-1/2", "3/10"), _pt("1/2", "3/10"))])
    v = hausdorff_clipped(A, B, 1, 1e-6)
    assert_allclose(v.mid, 0.3, atol=1e-6)


def test_hausdorff_sampling_oracle():
    random = RandomState(0)
    coords = random.randint(-100, 101, size=(12, 4))

    def complex_of(rows):
        q = [[Fraction(int(v), 100) for v in row] for row in rows]
        return SegmentComplex((_pt(a, b), _pt(c, d)) for a, b, c, d in q)

    A, B = complex_of(coords[:6]), complex_of(coords[6:])
    eps = 1e-4
    v = hausdorff_clipped(A, B, 3, eps)

    k = 2000
    a, b = A.to_float(), B.to_float()
    oracle = max(_dist(_samples(a, k), b).max(), _dist(_samples(b, k), a).max())
    lengths = hypot(coords[:, 2] - coords[:, 0], coords[:, 3] - coords[:, 1]) / 100
    spacing = lengths.max() / (k - 1)
    assert_(oracle <= v.hi + 1e-9)
    assert_(v.lo <= oracle + spacing)
    assert_(v.width <= eps + 1e-9)


def test_hausdorff_clipping():
    A = SegmentComplex([(_pt(-3, 0), _pt(3, 0))])
    B = SegmentComplex([(_pt(-3, 0), _pt(3, 0)), (_pt(0, 2), _pt(1, 2))])
    v = hausdorff_clipped(A, B, 1, 1e-6)
    assert_allclose(v.mid, 0.0, atol=1e-6)
    v = hausdorff_clipped(A, B, 3, 1e-6)
    assert_allclose(v.mid, 2.0, atol=1e-6)


def test_hausdorff_empty_after_clipping():
    A = SegmentComplex([(_pt(0, 0), _pt(1, 0))])
    B = SegmentComplex([(_pt(10, 10), _pt(11, 10))])
    with raises(EmptyComplexError):
        hausdorff_clipped(A, B, 1, 1e-3)
    with raises(ValueError):
        hausdorff_clipped(A, A, 0, 1e-3)


def test_directed_sup_budget():
    A = asarray([[-1.0, 0.0, 1.0, 0.0]])
    B = asarray([[-1.0, 0.0, -1.0, 0.0], [1.0, 0.0, 1.0, 0.0]])
    lo, hi = directed_sup(A, B, 1e-6)
    assert_allclose([lo, hi], [1.0, 1.0], atol=1e-6)
    with raises(ResourceLimitError):
        directed_sup(A, B, 1e-6, max_subdivisions=1)


def _grid_patch(dx, dy, level=4):
    sys = make_grid()
    F = sys.field
    half = Fraction(2 ** level, 2)
    P = supertile(sys, 0, level)
    shift = Point.of(F, Fraction(dx) - half, Fraction(dy) - half)
    return P.transformed(Motion.translation(shift))


def test_patch_metric_identity():
    x = _grid_patch(0, 0)
    v = patch_metric(x, x, 4, 1e-3)
    assert_(v.exact)
    assert_equal(v.hi, 0.0)
    assert_(v.provenance["horizon_limited"])
    assert_equal(v.provenance["terms"], 4)


def test_patch_metric_small_translation():
    x = _grid_patch(0, 0)
    y = _grid_patch("1/10", 0)
    v = patch_metric(x, y, 4, 1e-3)
    assert_(v.lo >= 0.09)
    assert_(v.hi <= 0.5)


def test_patch_metric_symmetric_and_triangle():
    x = _grid_patch(0, 0)
    y = _grid_patch("1/10", 0)
    z = _grid_patch("1/10", "1/5")
    eps = 1e-3
    xy = patch_metric(x, y, 3, eps)
    yx = patch_metric(y, x, 3, eps)
    assert_(xy.lo <= yx.hi and yx.lo <= xy.hi)
    xz = patch_metric(x, z, 3, eps)
    yz = patch_metric(y, z, 3, eps)
    assert_(xz.lo <= xy.hi + yz.hi)


def test_patch_metric_requires_collar():
    x = _grid_patch(0, 0, level=2)
    with raises(ValueError):
        patch_metric(x, x, 3, 1e-3)
    sys = make_grid()
    corner = supertile(sys, 0, 3)
    with raises(ValueError):
        patch_metric(corner, corner, 1, 1e-3)


def _centered_supertile(sys, T, R, levels=range(2, 12)):
    # lowest level whose tile nearest the support centroid is collared at R
    for level in levels:
        P = supertile(sys, T, level)
        center = asarray([p.to_float() for p in P.support]).mean(axis=0)
        d = hypot(*(P.centroids_float - center).T)
        c = P.centroid(int(d.argmin()))
        if P.is_collared(c, R):
            return P.transformed(Motion.translation(-c))
    raise AssertionError(f"no {sys.name} supertile covers radius {R}")


def _check_symmetric(x, y, R, eps):
    xy = patch_metric(x, y, R, eps)
    yx = patch_metric(y, x, R, eps)
    assert_(xy.lo <= yx.hi + 1e-12 and yx.lo <= xy.hi + 1e-12)
    return xy


def _check_zero_on_agreement(x, R, eps):
    origin = Point(x.system.field.zero, x.system.field.zero)
    y = ball_patch(x, origin, R + 2)
    assert_(patches_agree_on_overlap(x, y))
    v = _check_symmetric(x, y, R, eps)
    assert_allclose(v.lo, 0.0, atol=1e-9)
    assert_(v.hi <= eps + 1e-12)


def test_patch_metric_pinwheel():
    sys = make_pinwheel(1, 2)
    x = _centered_supertile(sys, 0, 3)
    y = _centered_supertile(sys, 1, 3)
    assert_equal(patch_metric(x, x, 3, 1e-6).hi, 0.0)
    _check_zero_on_agreement(x, 3, 1e-6)

    assert_(not patches_agree_on_overlap(x, y))
    v = _check_symmetric(x, y, 3, 1e-6)
    assert_(v.lo > 0)
    assert_(v.hi <= 2.0)


def test_patch_metric_penrose():
    sys = make_penrose()
    x = _centered_supertile(sys, "R+", 2)
    y = _centered_supertile(sys, "B-", 2)
    assert_equal(patch_metric(x, x, 2, 1e-6).hi, 0.0)
    _check_zero_on_agreement(x, 2, 1e-6)

    v = _check_symmetric(x, y, 2, 1e-6)
    assert_(0 <= v.lo <= v.hi <= 2.0)
