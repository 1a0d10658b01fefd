from collections import namedtuple

from loguru import logger

from ..exact import Motion
from ._predicates import interiors_disjoint, orient, orient_sign, point_in_polygon
from ._substitute import parallel_recurrence, primitivity_power, transition_matrix
from ._tiles import polygon_measure

_CoverFields = namedtuple("CoverVerdict", ["children", "area", "disjoint", "contained"])


class CoverVerdict(_CoverFields):
    """Exact-cover checks of one prototile: area identity, disjointness, containment."""

    __slots__ = ()

    @property
    def ok(self):
        return self.area and self.disjoint and self.contained


class ValidationReport:
    """
    Outcome of :func:`validate_system`.

    Geometry problems are listed per prototile instead of being raised.
    """

    def __init__(self, name, geometry, cover, radii, matrix, primitive_power, parallel):
        self._name = name
        self._geometry = geometry
        self._cover = cover
        self._radii = radii
        self._matrix = matrix
        self._primitive_power = primitive_power
        self._parallel = parallel

    @property
    def name(self):
        return self._name

    @property
    def geometry(self):
        """Dict prototile name → list of geometry issues."""
        return self._geometry

    @property
    def cover(self):
        """Dict prototile name → :class:`CoverVerdict`."""
        return self._cover

    @property
    def radii(self):
        """Dict with the verdicts ``inner_radius`` and ``max_diameter``."""
        return self._radii

    @property
    def transition_matrix(self):
        return self._matrix

    @property
    def primitive(self):
        return self._primitive_power is not None

    @property
    def primitive_power(self):
        return self._primitive_power

    @property
    def parallel(self):
        """Dict prototile name → least level with a parallel copy, or ``None``."""
        return self._parallel

    @property
    def cover_ok(self):
        return all(v.ok for v in self._cover.values())

    @property
    def ok(self):
        """Cover, geometry, radii and primitivity all pass."""
        geometry_ok = not any(self._geometry.values())
        radii_ok = all(self._radii.values())
        return self.cover_ok and geometry_ok and radii_ok and self.primitive

    @property
    def inconclusive(self):
        """A parallel copy was not found within the search bound for some prototile."""
        return any(v is None for v in self._parallel.values())

    def to_dict(self):
        return {
            "system": self._name,
            "ok": self.ok,
            "geometry": {k: list(v) for k, v in self._geometry.items()},
            "cover": {k: dict(v._asdict(), ok=v.ok) for k, v in self._cover.items()},
            "radii": dict(self._radii),
            "transition_matrix": self._matrix.tolist(),
            "primitive": self.primitive,
            "primitive_power": self._primitive_power,
            "parallel_recurrence": dict(self._parallel),
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        for name, v in self._cover.items():
            verdict = "pass" if v.ok else "FAIL"
            aligned.add_item(f"cover {name}", f"{verdict} ({v.children} children)")
        for name, issues in self._geometry.items():
            if issues:
                aligned.add_item(f"geometry {name}", "; ".join(issues))
        aligned.add_item("inner radius", self._radii["inner_radius"])
        aligned.add_item("max diameter", self._radii["max_diameter"])
        power = self._primitive_power
        aligned.add_item("primitive", f"{self.primitive} (power {power})")
        aligned.add_item("parallel copy", self._parallel)
        return draw_title(f"Validation of {self._name}") + aligned.draw()


def validate_system(sys, iii_bound=12):
    """
    Check the defining conditions of a tiling system.

    Parameters
    ----------
    sys : TilingSystem
        System to check.
    iii_bound : int, optional
        Deepest level searched for a parallel copy of each prototile. Defaults to
        ``12``.

    Returns
    -------
    ValidationReport
        Exact-cover verdicts, geometry issues, radius checks, primitivity and the
        parallel-copy levels.
    """
    names = [t.name for t in sys.prototiles]
    geometry = {t.name: _geometry_issues(t) for t in sys.prototiles}
    _mark_lengths(sys, geometry)

    cover = {}
    for t in sys.prototiles:
        cover[t.name] = _cover_verdict(sys, t)

    m, M = sys.inner_radius, sys.max_diameter
    radii = {
        "inner_radius": all(_inner_radius_ok(t, m) for t in sys.prototiles),
        "max_diameter": all(_diameter_ok(t, M) for t in sys.prototiles),
    }
    matrix = transition_matrix(sys)
    parallel = {}
    for i, name in enumerate(names):
        parallel[name] = parallel_recurrence(sys, i, iii_bound)
    report = ValidationReport(
        sys.name, geometry, cover, radii, matrix, primitivity_power(sys), parallel
    )
    logger.info(f"validated {sys.name}: ok={report.ok}")
    return report


def _geometry_issues(t):
    issues = []
    poly = t.polygon
    if t.dim == 1:
        a, b = poly
        if not (a.y.is_zero() and b.y.is_zero()):
            issues.append("interval off the x-axis")
        if not a.x < b.x:
            issues.append("interval endpoints out of order")
        if t.mark is not None:
            for p in t.mark:
                if not point_in_polygon(p, poly, strict=True):
                    issues.append("mark not interior")
                    break
        return issues

    k = len(poly)
    if polygon_measure(poly).sign() <= 0:
        issues.append("polygon not counterclockwise")
    convex = True
    for i in range(k):
        a, b = poly[i], poly[(i + 1) % k]
        for j in range(k):
            if j in (i, (i + 1) % k):
                continue
            if orient_sign(a, b, poly[j]) <= 0:
                convex = False
    if not convex:
        issues.append("polygon not strictly convex or not simple")
    if t.mark is not None:
        if not all(point_in_polygon(p, poly, strict=True) for p in t.mark):
            issues.append("mark not interior")
        if t.mark[0] == t.mark[1]:
            issues.append("mark degenerate")
    if convex and _has_rotational_symmetry(t):
        issues.append("decorated prototile has a rotational symmetry")
    return issues


def _mark_lengths(sys, geometry):
    lengths = {}
    for t in sys.prototiles:
        if t.mark is None:
            continue
        length2 = (t.mark[1] - t.mark[0]).norm2()
        lengths.setdefault(t.color, []).append((t.name, length2))
    colors = sorted(lengths, key=str)
    for i, ci in enumerate(colors):
        for cj in colors[i + 1 :]:
            for name_i, li in lengths[ci]:
                for name_j, lj in lengths[cj]:
                    if li == lj:
                        msg = f"mark length equals that of {name_j} (another color)"
                        geometry[name_i].append(msg)


def _has_rotational_symmetry(t):
    poly = t.polygon
    k = len(poly)
    keys = {p.key for p in poly}
    for s in range(1, k):
        a, b = poly[s], poly[(s + 1) % k]
        if (b - a).norm2() != (poly[1] - poly[0]).norm2():
            continue
        g = Motion.from_correspondence(poly[0], poly[1], a, b)
        if {g.apply(p).key for p in poly} != keys:
            continue
        if t.mark is None:
            return True
        image = {g.apply(p).key for p in t.mark}
        if image == {p.key for p in t.mark}:
            return True
    return False


def _cover_verdict(sys, t):
    lam = sys.lam
    children = sys.rule.children[t.id]
    protos = sys.prototiles
    scaled = [p * lam for p in t.polygon]

    factor = lam if t.dim == 1 else lam * lam
    total = sys.field.zero
    for q, _ in children:
        total = total + protos[q].measure()
    area = total == t.measure() * factor

    polys = [tuple(h.apply(v) for v in protos[q].polygon) for q, h in children]
    disjoint = all(
        interiors_disjoint(polys[i], polys[j])
        for i in range(len(polys))
        for j in range(i + 1, len(polys))
    )
    contained = all(point_in_polygon(v, scaled) for poly in polys for v in poly)
    if t.dim == 1:
        contained = contained and all(h.rot.is_identity() for _, h in children)
    return CoverVerdict(len(children), area, disjoint, contained)


def _inner_radius_ok(t, m):
    g = t.centroid
    if t.dim == 1:
        a, b = t.polygon
        return m <= g.x - a.x and m <= b.x - g.x
    k = len(t.polygon)
    for i in range(k):
        a, b = t.polygon[i], t.polygon[(i + 1) % k]
        d = orient(a, b, g)
        if d.sign() <= 0 or d * d < m * m * (b - a).norm2():
            return False
    return True


def _diameter_ok(t, M):
    poly = t.polygon
    M2 = M * M
    return all((p - q).norm2() <= M2 for p in poly for q in poly)
