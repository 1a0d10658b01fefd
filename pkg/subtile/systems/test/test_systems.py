from fractions import Fraction
from math import pi

from numpy.testing import assert_, assert_allclose, assert_equal
from pytest import raises

from subtile.core import supertile, transition_matrix, validate_system
from subtile.exact import Point
from subtile.systems import (
    catalog,
    catalog_entry,
    get_system,
    make_fibonacci,
    make_penrose,
    make_pinwheel,
)


def test_penrose():
    sys = make_penrose()
    assert_equal(len(sys.prototiles), 4)
    tau = sys.lam
    assert_(tau * tau == tau + 1)
    assert_(validate_system(sys).cover_ok)
    # every child is rotated by a multiple of 36 degrees
    for children in sys.rule.children:
        for _, h in children:
            k = h.rot.angle() * 10 / (2 * pi)
            assert_allclose(k, round(k), atol=1e-9)


def test_pinwheel_center_child():
    sys = make_pinwheel(1, 2)
    F = sys.field
    r5 = F.gen
    c, s = 2 / r5, 1 / r5
    found = [h for q, h in sys.rule.children[0] if h.rot.c == c and h.rot.s == s]
    assert_equal(len(found), 1)
    assert_(found[0].trans == Point.of(F, 1, 0))


def test_pinwheel_lambda():
    assert_(make_pinwheel(3, 4).lam == 5)
    assert_(make_pinwheel(1, 2).lam ** 2 == 5)
    with raises(ValueError):
        make_pinwheel(2, 1)
    with raises(ValueError):
        make_pinwheel(0, 3)


def test_pinwheel_parallel_copy():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 2)
    assert_(any(t.proto == 0 and t.pose.rot.is_identity() for t in P))


def test_fibonacci():
    sys = make_fibonacci()
    T0, T1 = sys.prototiles
    assert_(T1.measure() / T0.measure() == sys.lam)
    assert_(sys.lam * T1.measure() == T0.measure() + T1.measure())
    assert_equal(transition_matrix(sys), [[0, 1], [1, 1]])
    assert_equal([q for q, _ in sys.rule.children[1]], [0, 1])


def test_get_system():
    assert_(get_system("pinwheel:1,2") is make_pinwheel(1, 2))
    assert_(get_system(" Penrose ") is make_penrose())
    assert_equal(get_system("pinwheel:2,3").name, "pinwheel:2,3")
    with raises(ValueError):
        get_system("chair")
    with raises(ValueError):
        get_system("pinwheel:1")


def test_catalog_entries():
    for name in catalog():
        sys = get_system(name)
        entry = catalog_entry(name)
        assert_allclose(float(sys.lam), entry.lam)
        assert_equal(len(sys.prototiles), entry.prototiles)
        assert_equal(tuple(len(c) for c in sys.rule.children), entry.children)
    entry = catalog_entry("pinwheel:2,3")
    assert_equal(entry.children, (13, 13))
    assert_(entry.g_ro is None)
    kind, gens = catalog_entry("pinwheel:1,2").g_ro
    assert_equal(kind, "gaussian")
    assert_equal(gens[1], (Fraction(3, 5), Fraction(4, 5)))
