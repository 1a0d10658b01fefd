from fractions import Fraction

from numpy import asarray, cross, dot, hypot
from numpy.random import RandomState
from numpy.testing import assert_, assert_allclose, assert_equal
from pytest import raises

from subtile._errors import InvalidPatchError
from subtile.core import (
    Patch,
    PlacedTile,
    ball_patch,
    boundary_complex,
    patch_area,
    patches_agree_on_overlap,
    supertile,
)
from subtile.exact import Motion, Point, Rotation
from subtile.systems import make_grid, make_penrose, make_pinwheel


def _float_dist(p, poly):
    poly = asarray(poly)
    inside = True
    best = float("inf")
    for i in range(len(poly)):
        a, b = poly[i], poly[(i + 1) % len(poly)]
        if cross(b - a, p - a) < 0:
            inside = False
        t = min(max(dot(p - a, b - a) / dot(b - a, b - a), 0.0), 1.0)
        best = min(best, hypot(*(p - a - t * (b - a))))
    return 0.0 if inside else best


def _length(segments):
    return sum(hypot(*(asarray(b.to_float()) - a.to_float())) for a, b in segments)


def test_ball_patch_single_tile():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 2)
    for i in (0, 7, 19):
        B = ball_patch(P, P.centroid(i), sys.inner_radius / 2)
        assert_equal(len(B), 1)
        assert_(P[i] in B)


def test_ball_patch_whole_patch():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 1, 2)
    B = ball_patch(P, P.centroid(3), 20)
    assert_(B == P)


def test_ball_patch_brute_force():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 2)
    a = Point.of(sys.field, Fraction(21, 10), Fraction(7, 10))
    B = ball_patch(P, a, 1)
    af = asarray(a.to_float())
    expected = set()
    for i in range(len(P)):
        poly = [p.to_float() for p in P.polygon(i)]
        if _float_dist(af, poly) < 1.0:
            expected.add(P[i].key)
    assert_equal(B.keys(), expected)


def test_ball_patch_monotone():
    sys = make_penrose()
    P = supertile(sys, "B+", 4)
    a = P.centroid(11)
    prev = set()
    for r in (0.1, 0.3, 0.7, 1.2, 2.0):
        keys = ball_patch(P, a, r).keys()
        assert_(prev <= keys)
        prev = keys


def test_ball_patch_invalid_radius():
    sys = make_grid()
    P = supertile(sys, 0, 1)
    with raises(ValueError):
        ball_patch(P, P.centroid(0), 0)


def test_boundary_complex():
    sys = make_pinwheel(1, 2)
    assert_equal(len(boundary_complex(supertile(sys, 0, 0))), 3)

    sys = make_penrose()
    assert_equal(len(boundary_complex(supertile(sys, "R+", 0))), 4)

    # 12 unit edges, shared ones once, plus 4 marks
    sys = make_grid()
    assert_equal(len(boundary_complex(supertile(sys, 0, 1))), 16)


def test_patches_agree_on_overlap():
    sys = make_pinwheel(1, 2)
    F = sys.field
    P = supertile(sys, 0, 1)
    assert_(patches_agree_on_overlap(P, P))

    far = Motion.translation(Point.of(F, 100, 0))
    assert_(patches_agree_on_overlap(P, P.transformed(far)))

    half = Motion.translation(Point.of(F, Fraction(1, 2), 0))
    assert_(not patches_agree_on_overlap(P, P.transformed(half)))


def test_patch_equality_and_transform():
    sys = make_pinwheel(1, 2)
    F = sys.field
    P = supertile(sys, 0, 2)
    g = Motion(Rotation(F.scalar("3/5"), F.scalar("4/5")), Point.of(F, 2, -1))
    Q = P.transformed(g)
    assert_(Q != P)
    assert_(Q.transformed(g.inverse()) == P)
    assert_(patch_area(Q) == patch_area(P))
    assert_(Patch(sys, reversed(P.tiles)) == P)


def test_validate_overlap():
    sys = make_pinwheel(1, 2)
    F = sys.field
    t = PlacedTile(0, Motion.identity(F))
    u = PlacedTile(0, Motion.translation(Point.of(F, Fraction(1, 3), 0)))
    Patch(sys, [t]).validate()
    with raises(InvalidPatchError):
        Patch(sys, [t, u]).validate()


def test_support_boundary_length():
    sys = make_grid()
    st = supertile(sys, 0, 2)
    P = Patch(sys, st.tiles)
    assert_allclose(_length(P.support_boundary()), 16)

    # pinwheel children meet along T-junctions
    sys = make_pinwheel(1, 2)
    st = supertile(sys, 0, 1)
    P = Patch(sys, st.tiles)
    assert_allclose(_length(P.support_boundary()), 5 + 3 * 5 ** 0.5)


def test_is_collared():
    random = RandomState(0)
    sys = make_pinwheel(1, 2)
    st = supertile(sys, 0, 3)
    P = Patch(sys, st.tiles)
    F = sys.field

    assert_(st.is_collared(st.centroid(0), sys.inner_radius / 2))
    assert_(not st.is_collared(Point.of(F, 100, 100), Fraction(1, 10)))

    for _ in range(20):
        i = int(random.randint(len(st)))
        r = Fraction(int(random.randint(1, 20)), 10)
        a = st.centroid(i)
        assert_equal(st.is_collared(a, r), P.is_collared(a, r))
