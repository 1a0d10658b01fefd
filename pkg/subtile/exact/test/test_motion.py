from fractions import Fraction

from numpy.random import RandomState
from numpy.testing import assert_allclose, assert_equal

from subtile.exact import (
    Motion,
    Point,
    Rotation,
    expansion_conjugate,
    motion_apply,
    motion_compose,
    motion_inverse,
    motion_magnitude,
    quadratic_field,
)


def _rational_rotation(F, u):
    u = Fraction(u)
    d = 1 + u * u
    return Rotation(F.scalar((1 - u * u) / d), F.scalar(2 * u / d))


def _random_motion(F, random):
    u = Fraction(int(random.randint(-20, 21)), int(random.randint(1, 9)))
    rot = _rational_rotation(F, u)
    if random.rand() < 0.5:
        rot = rot.compose(Rotation(2 / F.gen, 1 / F.gen))
    t = Point.of(
        F,
        Fraction(int(random.randint(-9, 10)), int(random.randint(1, 5))),
        Fraction(int(random.randint(-9, 10)), int(random.randint(1, 5))),
    )
    return Motion(rot, t + Point(F.gen, F.zero) * int(random.randint(-2, 3)))


def test_compose_apply():
    F = quadratic_field(5)
    random = RandomState(0)

    ident = Motion.identity(F)
    for _ in range(30):
        g = _random_motion(F, random)
        h = _random_motion(F, random)
        x = Fraction(int(random.randint(-9, 9)), 7)
        p = Point.of(F, x, int(random.randint(-5, 5)))

        assert motion_compose(ident, g) == g
        gh = motion_compose(g, h)
        assert motion_apply(gh, p) == motion_apply(g, motion_apply(h, p))
        assert motion_compose(g, motion_inverse(g)).is_identity()

        r = motion_compose(g, h).rot
        assert (r.c * r.c + r.s * r.s) == 1


def test_double_angle():
    F = quadratic_field(5)
    r = Rotation(2 / F.gen, 1 / F.gen)
    rr = r.compose(r)
    assert_equal(rr.c == Fraction(3, 5), True)
    assert_equal(rr.s == Fraction(4, 5), True)


def test_inverse_round_trip():
    F = quadratic_field(5)
    g = Motion(Rotation(2 / F.gen, 1 / F.gen), Point.of(F, 3, -1))
    p = Point.of(F, 1, 0)
    assert motion_apply(motion_compose(motion_inverse(g), g), p) == p


def test_from_correspondence():
    F = quadratic_field(5)
    g = Motion(Rotation(2 / F.gen, -1 / F.gen), Point.of(F, 1, 2))
    a, b = Point.of(F, 0, 0), Point.of(F, 3, 1)
    assert Motion.from_correspondence(a, b, g.apply(a), g.apply(b)) == g


def test_magnitude():
    F = quadratic_field(5)

    v = motion_magnitude(Motion.identity(F))
    assert_equal([v.lo, v.hi, v.exact], [0.0, 0.0, True])

    v = motion_magnitude(Motion.translation(Point.of(F, 3, 4)))
    assert v.lo <= 5 <= v.hi
    assert_allclose(v.mid, 5.0)

    half_turn = Motion(Rotation(F.scalar(-1), F.zero), Point.of(F, 0, 0))
    v = motion_magnitude(half_turn)
    assert v.lo <= 2 <= v.hi


def test_magnitude_submultiplicative():
    F = quadratic_field(5)
    random = RandomState(1)
    for _ in range(20):
        g = _random_motion(F, random)
        h = _random_motion(F, random)
        lgh = motion_magnitude(motion_compose(g, h))
        lg = motion_magnitude(g)
        lh = motion_magnitude(h)
        assert lgh.lo <= lg.hi + (1 + lg.hi) * lh.hi


def test_expansion_conjugate():
    F = quadratic_field(5)
    lam = F.gen

    assert expansion_conjugate(Motion.identity(F), lam).is_identity()

    t = Point.of(F, 1, 2)
    H = expansion_conjugate(Motion.translation(t), lam)
    assert H.trans == t * lam
    assert H.rot.is_identity()

    g = Motion(Rotation(2 / F.gen, 1 / F.gen), t)
    assert expansion_conjugate(g, lam).rot == g.rot
