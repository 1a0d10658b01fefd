import xml.etree.ElementTree as ET
from fractions import Fraction

from numpy.random import RandomState
from numpy.testing import assert_, assert_equal
from pytest import raises

from subtile._errors import InvalidGeometryError, InvalidPatchError
from subtile.core import Patch, PlacedTile, supertile
from subtile.exact import Motion, Point, Rotation
from subtile.io import (
    load_patch,
    load_system,
    patch,
    render_svg,
    save_patch,
    save_system,
    system,
)
from subtile.systems import (
    catalog,
    get_system,
    make_fibonacci,
    make_grid,
    make_penrose,
    make_pinwheel,
)

_SVG = "{http://www.w3.org/2000/svg}"


def _random_motion(sys, random):
    F = sys.field
    if sys.name == "penrose":
        w = F.gen
        tau = (1 + (10 - w * w) / 2) / 2
        step = Rotation(tau / 2, w / 4)
        turns = random.randint(10)
    else:
        step = Rotation(F.scalar("3/5"), F.scalar("4/5"))
        turns = random.randint(4)
    rot = Rotation.identity(F)
    for _ in range(turns):
        rot = rot.compose(step)
    x, y = (Fraction(int(v), 9) for v in random.randint(-40, 40, size=2))
    return Motion(rot, Point.of(F, x, y))


def test_catalog_systems_round_trip():
    for name in catalog():
        sys = get_system(name)
        text = system.dumps(sys)
        S = system.loads(text)
        assert_equal(system.dumps(S), text)
        assert_equal(S.name, sys.name)
        assert_equal(S.field, sys.field)
        assert_equal(S.lam, sys.lam)
        assert_equal([t.name for t in S.prototiles], [t.name for t in sys.prototiles])
        for a, b in zip(S.rule.children, sys.rule.children):
            assert_equal([(q, h.key) for q, h in a], [(q, h.key) for q, h in b])


def test_random_pinwheel_systems_round_trip():
    random = RandomState(0)
    legs = [(m, n) for n in range(2, 5) for m in range(1, n)]
    for k in random.choice(len(legs), 4, replace=False):
        sys = make_pinwheel(*legs[k])
        text = system.dumps(sys, metadata={"legs": list(legs[k])})
        assert_equal(system.dumps(system.loads(text), {"legs": list(legs[k])}), text)


def test_loaded_system_validates():
    text = system.dumps(make_fibonacci())
    S = system.loads(text, validate=True)
    assert_equal(len(supertile(S, "T1", 4)), 8)


def test_malformed_system_documents():
    with raises(InvalidGeometryError):
        system.loads("not json")
    with raises(InvalidGeometryError):
        system.loads("{}")
    with raises(InvalidGeometryError):
        system.loads('{"format": "subtile-system", "version": 1}')
    with raises(InvalidGeometryError):
        system.loads('{"format": "subtile-system", "version": 7}')


def test_random_patches_round_trip():
    random = RandomState(1)
    for sys in (make_pinwheel(1, 2), make_penrose(), make_grid()):
        P = supertile(sys, 0, 2)
        for _ in range(4):
            keep = random.choice(len(P), max(1, len(P) // 2), replace=False)
            Q = P.subpatch(keep).transformed(_random_motion(sys, random))
            text = patch.dumps(Q)
            R = patch.loads(text)
            assert_equal(patch.dumps(R), text)
            assert_(R == Q)
            assert_equal(R.provenance, Q.provenance)


def test_supertile_support_round_trips():
    P = supertile(make_pinwheel(1, 2), "L", 2)
    Q = patch.loads(patch.dumps(P))
    assert_equal([p.key for p in Q.support], [p.key for p in P.support])


def test_files_on_disk(tmp_path):
    sys = make_pinwheel(1, 2)
    P = supertile(sys, "R", 1)
    save_system(sys, tmp_path / "pinwheel.json")
    save_patch(P, tmp_path / "r1.json")

    S = load_system(tmp_path / "pinwheel.json")
    Q = load_patch(tmp_path / "r1.json", S)
    assert_equal(Q.keys(), P.keys())
    assert_equal(Q.system.name, "pinwheel:1,2")

    with open(tmp_path / "r1.json") as f:
        assert_(load_patch(f) == P)


def test_overlapping_patch_rejected():
    sys = make_grid()
    F = sys.field
    tiles = [
        PlacedTile(0, Motion.identity(F)),
        PlacedTile(0, Motion.translation(Point.of(F, "1/2", 0))),
    ]
    text = patch.dumps(Patch(sys, tiles))
    with raises(InvalidPatchError):
        patch.loads(text)
    assert_equal(len(patch.loads(text, validate=False)), 2)


def test_patch_system_mismatch():
    text = patch.dumps(supertile(make_fibonacci(), 0, 2))
    with raises(InvalidPatchError):
        patch.loads(text, system=make_grid())
    bad = text.replace('"proto": 1', '"proto": 5')
    with raises(InvalidPatchError):
        patch.loads(bad)
    with raises(InvalidPatchError):
        patch.loads(text.replace("subtile-patch", "subtile-system"))


def test_svg_single_tile():
    svg = render_svg(supertile(make_pinwheel(1, 2), 0, 0))
    root = ET.fromstring(svg)
    assert_equal(root.tag, _SVG + "svg")
    assert_equal(len(root.findall(f".//{_SVG}polygon")), 1)
    assert_equal(len(root.findall(f".//{_SVG}line")), 0)
    assert_equal(len(root.get("viewBox").split()), 4)


def test_svg_marks():
    svg = render_svg(supertile(make_grid(), 0, 0))
    root = ET.fromstring(svg)
    assert_equal(len(root.findall(f".//{_SVG}polygon")), 1)
    assert_equal(len(root.findall(f".//{_SVG}line")), 1)

    P = supertile(make_penrose(), "B+", 2)
    root = ET.fromstring(render_svg(P))
    assert_equal(len(root.findall(f".//{_SVG}polygon")), len(P))
    assert_equal(len(root.findall(f".//{_SVG}line")), len(P))


def test_svg_deterministic():
    sys = make_pinwheel(1, 2)
    P = supertile(sys, 1, 2)
    a = render_svg(P, sys, stroke_width=0.05, scale=20)
    b = render_svg(patch.loads(patch.dumps(P)), sys, stroke_width=0.05, scale=20)
    assert_equal(a, b)
    assert_equal(a.count("<polygon"), 25)


def test_svg_intervals():
    P = supertile(make_fibonacci(), "T1", 3)
    root = ET.fromstring(render_svg(P))
    assert_equal(len(root.findall(f".//{_SVG}polygon")), len(P))


def test_svg_rejects_empty_patch():
    with raises(InvalidPatchError):
        render_svg(Patch(make_grid(), []))
