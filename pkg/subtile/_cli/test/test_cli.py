import json
import xml.etree.ElementTree as ET
from fractions import Fraction

from click.testing import CliRunner
from numpy.testing import assert_, assert_allclose, assert_equal

from subtile._cli import cli
from subtile.core import supertile
from subtile.exact import Motion, Point
from subtile.io import load_patch, save_patch, save_system
from subtile.systems import make_fibonacci, make_grid, make_pinwheel


def _run(*args):
    return CliRunner().invoke(cli, [str(a) for a in args])


def _json(result):
    assert_equal(result.exit_code, 0, err_msg=result.output)
    return json.loads(result.stdout)


def _centered_grid(tmp_path, name, dx=0):
    sys = make_grid()
    F = sys.field
    P = supertile(sys, 0, 4)
    shift = Point.of(F, Fraction(dx) - 8, -8)
    path = tmp_path / name
    save_patch(P.transformed(Motion.translation(shift)), path)
    return path


def test_cli_version():
    r = _run("--version")
    assert_equal(r.exit_code, 0)
    assert_("version" in r.output)


def test_generate_pinwheel(tmp_path):
    out = tmp_path / "l3.json"
    doc = _json(_run("generate", "pinwheel:1,2", "L", 3, "--out", out))
    assert_equal(doc["tiles"], 125)
    assert_equal(doc["prototile"], "L")
    P = load_patch(out)
    assert_equal(len(P), 125)
    assert_equal(len(P.provenance), 125)


def test_generate_fibonacci():
    sys = make_fibonacci()
    doc = _json(_run("generate", "fibonacci", "T1", 1))
    assert_equal(doc["tiles"], 2)
    area = float(sys.lam) * float(sys.prototile("T1").measure())
    assert_allclose(doc["area_float"], area)
    assert_equal(doc["out"], None)


def test_generate_from_system_file(tmp_path):
    path = tmp_path / "fib.json"
    save_system(make_fibonacci(), path)
    doc = _json(_run("generate", path, "T0", 4))
    assert_equal(doc["system"], "fibonacci")
    assert_equal(doc["tiles"], 5)


def test_generate_usage_errors():
    assert_equal(_run("generate", "penrose", "B+", -1).exit_code, 1)
    assert_equal(_run("generate", "penrose").exit_code, 1)
    assert_equal(_run("nonsense").exit_code, 1)


def test_generate_bad_input():
    r = _run("generate", "octagon", 0, 1)
    assert_equal(r.exit_code, 2)
    r = _run("generate", "penrose", "Q", 1)
    assert_equal(r.exit_code, 2)


def test_generate_tile_cap():
    r = _run("generate", "pinwheel:1,2", "L", 4, "--cap", 100)
    assert_equal(r.exit_code, 3)
    assert_("cap" in r.output)


def test_render(tmp_path):
    patch = tmp_path / "p.json"
    save_patch(supertile(make_pinwheel(1, 2), "R", 2), patch)
    svg = tmp_path / "p.svg"
    r = _run("render", patch, "--out", svg, "--stroke-width", 0.05)
    assert_equal(r.exit_code, 0, err_msg=r.output)
    root = ET.parse(svg).getroot()
    assert_equal(len(root.findall(".//{http://www.w3.org/2000/svg}polygon")), 25)

    a = _run("render", patch)
    b = _run("render", patch)
    assert_equal(a.exit_code, 0)
    assert_equal(a.stdout, b.stdout)
    assert_equal(a.stdout.count("<polygon"), 25)


def test_render_malformed(tmp_path):
    patch = tmp_path / "bad.json"
    patch.write_text('{"format": "subtile-patch", "version": 1}')
    assert_equal(_run("render", patch).exit_code, 2)
    assert_equal(_run("render", tmp_path / "missing.json").exit_code, 1)


def test_validate():
    doc = _json(_run("validate", "fibonacci"))
    assert_(doc["ok"])
    assert_equal(doc["system"], "fibonacci")
    assert_(doc["primitive"])


def test_analyze_group_compare():
    doc = _json(_run("analyze", "group", "pinwheel:1,2", "--compare", "pinwheel:3,4"))
    assert_equal(doc["relation"], "index")
    assert_equal(doc["n"], 2)
    assert_equal(doc["inner"], "second")
    assert_(not doc["equal"])
    assert_equal(doc["abstract_type"], [4, 1])
    assert_equal(doc["compare"]["abstract_type"], [4, 1])
    assert_equal(doc["g_rel"]["rotations"], "SO(2)")


def test_analyze_group_penrose():
    doc = _json(_run("analyze", "group", "penrose"))
    assert_equal(doc["source"], "catalog")
    assert_equal(doc["abstract_type"], [10, 0])
    assert_equal(doc["g_rel"]["order"], 10)


def test_analyze_metric(tmp_path):
    a = _centered_grid(tmp_path, "a.json")
    doc = _json(_run("analyze", "metric", a, a, "--R", 3, "--eps", 1e-6))
    assert_equal(doc["lo"], 0)
    assert_equal(doc["hi"], 0)

    b = _centered_grid(tmp_path, "b.json", "1/10")
    doc = _json(_run("analyze", "metric", a, b, "--R", 3, "--eps", 1e-3))
    assert_(doc["lo"] >= 0.09)
    assert_(doc["hi"] <= 0.5)


def test_analyze_metric_needs_collar(tmp_path):
    patch = tmp_path / "corner.json"
    save_patch(supertile(make_grid(), 0, 3), patch)
    assert_equal(_run("analyze", "metric", patch, patch).exit_code, 2)


def test_analyze_patches():
    a = _json(_run("analyze", "patches", "fibonacci", "-r", 0.4, "--level", 6))
    b = _json(_run("analyze", "patches", "fibonacci", "-r", 0.4, "--level", 7))
    assert_equal(a["count"], 5)
    assert_equal(b["count"], 5)
    assert_equal(a["tiles_per_patch"], {"1": 2, "2": 3})


def test_analyze_admissible(tmp_path):
    patch = tmp_path / "fib.json"
    save_patch(supertile(make_fibonacci(), 1, 5), patch)
    args = ("analyze", "admissible", "fibonacci", patch, "-r", 0.4, "--level", 6)
    doc = _json(_run(*args))
    assert_(doc["admissible"])
    assert_equal(doc["library"]["count"], 5)


def test_analyze_recognize(tmp_path):
    doc = _json(_run("analyze", "recognize", "fibonacci", "--level", 5))
    assert_allclose([doc["radius"]["lo"], doc["radius"]["hi"]], [0.5, 1.0])

    patch = tmp_path / "fib.json"
    parents = tmp_path / "parents.json"
    save_patch(supertile(make_fibonacci(), 1, 5), patch)
    args = ("--patch", patch, "--parents", parents)
    doc = _json(_run("analyze", "recognize", "fibonacci", "--level", 5, *args))
    assert_(doc["decomposition"]["determined"] > 0)
    assert_equal(len(load_patch(parents)), doc["decomposition"]["parents"])


def test_analyze_recognize_inconclusive():
    r = _run("analyze", "recognize", "grid", "--level", 3, "--steps", 3)
    assert_equal(r.exit_code, 4)
    doc = json.loads(r.stdout)
    assert_equal(doc["radius"]["hi"], None)
    assert_(not doc["radius"]["found"])


def test_analyze_predecessors():
    doc = _json(_run("analyze", "predecessors", "fibonacci", "T1", "--level", 2))
    assert_(doc["nested"])
    assert_equal(doc["n"], 2)


def test_analyze_periods():
    doc = _json(_run("analyze", "periods", "grid", "--level", 2, "--level", 3))
    assert_equal(doc["details"]["levels"], [2, 3])
    assert_allclose(doc["details"]["K_by_level"], [0.5, 0.25])
    assert_allclose(doc["estimates"]["K"]["lo"], 0.25)
