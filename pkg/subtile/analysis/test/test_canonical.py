from fractions import Fraction

from numpy import hypot
from numpy.random import RandomState
from numpy.testing import assert_, assert_equal
from pytest import raises

from subtile._errors import InvalidPatchError
from subtile.analysis import (
    canonicalize,
    enumerate_patches,
    local_admissibility,
    patch_library,
    sample_centers,
)
from subtile.core import Patch, PlacedTile, ball_patch, supertile
from subtile.exact import Motion, Point, Rotation
from subtile.systems import make_fibonacci, make_grid, make_penrose, make_pinwheel


def _pinwheel_motion(F, random):
    # rotations i^a·((3 + 4i)/5)^b with rational translations
    quarter = Rotation(F.zero, F.one)
    w = Rotation(F.scalar("3/5"), F.scalar("4/5"))
    rot = Rotation.identity(F)
    for _ in range(random.randint(4)):
        rot = rot.compose(quarter)
    for _ in range(random.randint(1, 4)):
        rot = rot.compose(w)
    x, y = (Fraction(int(v), 7) for v in random.randint(-30, 30, size=2))
    return Motion(rot, Point.of(F, x, y))


def test_canonicalize_invariant_under_motions():
    random = RandomState(0)
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 2)
    for i in (3, 11, 17):
        B = ball_patch(P, P.centroid(i), 1)
        c = canonicalize(B)
        for _ in range(3):
            g = _pinwheel_motion(sys.field, random)
            assert_(canonicalize(B.transformed(g)) == c)


def test_canonicalize_penrose_rotation():
    sys = make_penrose()
    F = sys.field
    w = F.gen
    tau = (1 + (10 - w * w) / 2) / 2
    g = Motion(Rotation(tau / 2, w / 4), Point.of(F, 3, -1))
    P = supertile(sys, "R+", 3)
    B = ball_patch(P, P.centroid(4), "1/2")
    assert_(canonicalize(B.transformed(g)) == canonicalize(B))


def test_canonicalize_single_tile():
    sys = make_pinwheel(1, 2)
    F = sys.field
    g = _pinwheel_motion(F, RandomState(1))
    c = canonicalize(Patch(sys, [PlacedTile(1, g)]))
    assert_equal(c.encoding, ((1, Motion.identity(F).key),))
    assert_equal(c.stabilizer, 1)


def test_canonicalize_distinguishes_pairs():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 0, 1)
    classes = {}
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            pair = P.subpatch([i, j])
            cx, cy = P.centroids_float[i] - P.centroids_float[j]
            types = tuple(sorted((P[i].proto, P[j].proto)))
            invariant = (types, round(hypot(cx, cy), 6))
            classes.setdefault(canonicalize(pair), set()).add(invariant)
    # congruent pairs share types and centroid distance
    for invariants in classes.values():
        assert_equal(len(invariants), 1)
    assert_(len(classes) > 1)


def test_canonical_repr():
    sys = make_grid()
    c = canonicalize(Patch(sys, [PlacedTile(0, Motion.identity(sys.field))]))
    assert_equal(repr(c), "CanonicalPatch(1 tiles, stabilizer=1)")
    P = supertile(sys, 0, 1)
    assert_(repr(canonicalize(P)).startswith(f"CanonicalPatch({len(P)} tiles, "))


def test_canonicalize_empty():
    with raises(InvalidPatchError):
        canonicalize(Patch(make_grid()))


def test_sample_centers():
    sys = make_grid()
    P = supertile(sys, 0, 0)
    assert_equal(len(sample_centers(P)), 9)
    P = supertile(sys, 0, 1)
    assert_equal(len(sample_centers(P)), 9 + 12 + 4)


def test_enumerate_fibonacci():
    sys = make_fibonacci()
    # {T0}, {T1}, T0T1, T1T0, T1T1
    assert_equal(len(enumerate_patches(sys, 0.4, 6)), 5)
    assert_equal(len(enumerate_patches(sys, 0.4, 7)), 5)
    counts = [len(enumerate_patches(sys, r, 7)) for r in (0.3, 0.6, 1.0, 1.7)]
    assert_(all(a <= b for a, b in zip(counts, counts[1:])))


def test_enumerate_grid():
    sys = make_grid()
    assert_equal(len(enumerate_patches(sys, 0.25, 3)), 4)
    assert_equal(len(enumerate_patches(sys, 0.25, 4)), 4)


def test_enumerate_penrose_stabilizes():
    sys = make_penrose()
    counts = [len(enumerate_patches(sys, 0.5, L)) for L in (5, 6, 7)]
    assert_equal(counts, [36, 37, 37])


def test_enumerate_pinwheel_grows_slowly():
    sys = make_pinwheel(1, 2)
    counts = [len(enumerate_patches(sys, 1, L)) for L in (3, 4, 5)]
    assert_equal(counts, [141, 180, 184])
    # new classes per level shrink as the levels grow
    assert_(counts[2] - counts[1] < counts[1] - counts[0])


def test_patch_library():
    sys = make_fibonacci()
    lib = patch_library(sys, 0.4, 6)
    assert_equal(len(lib), 5)
    d = lib.to_dict()
    assert_equal(d["count"], 5)
    assert_equal(d["tiles_per_patch"], {1: 2, 2: 3})


def test_local_admissibility_fibonacci():
    sys = make_fibonacci()
    lib = patch_library(sys, 0.4, 6)
    P = supertile(sys, 1, 7)
    assert_(local_admissibility(sys, ball_patch(P, P.centroid(9), 3), 0.4, lib))
    assert_(local_admissibility(sys, Patch(sys), 0.4, lib))
    with raises(ValueError):
        local_admissibility(sys, P, 0.5, lib)
    with raises(ValueError):
        local_admissibility(make_grid(), Patch(make_grid()), 0.4, lib)


def test_local_admissibility_mirror_swap():
    sys = make_pinwheel(1, 2)
    r = sys.inner_radius
    lib = patch_library(sys, r, 3)
    P = supertile(sys, 0, 3)
    assert_(local_admissibility(sys, P, r, lib))

    center = sum(p.to_float()[0] for p in P.support) / 3
    center = (center, sum(p.to_float()[1] for p in P.support) / 3)
    d = hypot(*(P.centroids_float - center).T)
    i = int(d.argmin())
    tiles = list(P)
    tiles[i] = PlacedTile(1 - tiles[i].proto, tiles[i].pose)
    swapped = Patch(sys, tiles, None, P.support)
    assert_(not local_admissibility(sys, swapped, r, lib))
