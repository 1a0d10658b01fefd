from collections import namedtuple

from .._errors import FieldMismatchError, InvalidGeometryError
from ..exact import Point

SupertileAddress = namedtuple("SupertileAddress", ["root", "digits"])
SupertileAddress.__doc__ = """
Position of a tile inside φⁿ(root): the child index chosen at each substitution step.
"""


def address_extend(address, digit):
    return SupertileAddress(address.root, address.digits + (digit,))


class Prototile:
    """
    Reference tile shape, with an optional color mark.

    Parameters
    ----------
    id : int
        Index of the prototile inside its system.
    name : str
        Display name.
    polygon : sequence of Point
        Counterclockwise vertices. One-dimensional systems use two points on the
        x-axis (an interval).
    mark : pair of Point, optional
        Color mark segment, strictly inside the polygon.
    color : int, optional
        Color identifier of the mark.
    """

    def __init__(self, id, name, polygon, mark=None, color=None):
        self._id = int(id)
        self._name = str(name)
        self._polygon = tuple(polygon)
        self._mark = None if mark is None else tuple(mark)
        self._color = color
        if len(self._polygon) < 2:
            raise InvalidGeometryError(f"Prototile {name} needs at least two vertices.")
        self._centroid = None
        self._float_radius = None

    @property
    def id(self):
        return self._id

    @property
    def name(self):
        return self._name

    @property
    def polygon(self):
        return self._polygon

    @property
    def mark(self):
        return self._mark

    @property
    def color(self):
        return self._color

    @property
    def field(self):
        return self._polygon[0].field

    @property
    def dim(self):
        """1 for interval prototiles, 2 for polygons."""
        return 1 if len(self._polygon) == 2 else 2

    @property
    def centroid(self):
        """Vertex average, an interior point of every convex prototile."""
        if self._centroid is None:
            sx = sum((p.x for p in self._polygon[1:]), self._polygon[0].x)
            sy = sum((p.y for p in self._polygon[1:]), self._polygon[0].y)
            k = len(self._polygon)
            self._centroid = Point(sx / k, sy / k)
        return self._centroid

    @property
    def float_radius(self):
        """Largest vertex distance from the centroid, rounded up slightly."""
        if self._float_radius is None:
            cx, cy = self.centroid.to_float()
            r = 0.0
            for p in self._polygon:
                x, y = p.to_float()
                r = max(r, ((x - cx) ** 2 + (y - cy) ** 2) ** 0.5)
            self._float_radius = r * (1 + 1e-9) + 1e-12
        return self._float_radius

    def measure(self):
        """Exact area (length for interval prototiles)."""
        return polygon_measure(self._polygon)

    def __repr__(self):
        return f"Prototile({self._id}, {self._name!r}, {len(self._polygon)} vertices)"


def polygon_measure(polygon):
    """Exact signed area of a polygon, or the length of a 1-D interval."""
    if len(polygon) == 2:
        a, b = polygon
        return b.x - a.x
    total = polygon[-1].cross(polygon[0])
    for i in range(len(polygon) - 1):
        total = total + polygon[i].cross(polygon[i + 1])
    return total / 2


class PlacedTile:
    """
    Congruent copy ``pose·T`` of the prototile ``proto``.

    Two placed tiles are equal exactly when they have the same prototile and pose.
    """

    __slots__ = ("proto", "pose", "_key")

    def __init__(self, proto, pose):
        self.proto = int(proto)
        self.pose = pose
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = (self.proto, self.pose.key)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PlacedTile):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"PlacedTile({self.proto}, {self.pose!r})"


class SubstitutionRule:
    """
    Expansion factor λ and, per prototile, the children ``(prototile id, Motion)``
    tiling λ·T.
    """

    def __init__(self, lam, children):
        self._lam = lam
        self._children = tuple(tuple((int(q), h) for q, h in c) for c in children)

    @property
    def lam(self):
        return self._lam

    @property
    def children(self):
        return self._children

    def __repr__(self):
        counts = [len(c) for c in self._children]
        return f"SubstitutionRule(λ≈{float(self._lam):.6g}, children={counts})"


class TilingSystem:
    """
    Tiling system: prototiles over a number field, a substitution rule, and the
    inner radius ``m`` and diameter bound ``M`` of the prototiles.

    Parameters
    ----------
    name : str
        System name (a catalog name for built-in systems).
    field : NumberField
        Field holding every coordinate.
    prototiles : sequence of Prototile
        Prototiles indexed by their ids ``0..k-1``.
    rule : SubstitutionRule
        The substitution.
    inner_radius : Scalar
        Radius ``m`` of a ball contained in every prototile.
    max_diameter : Scalar
        Upper bound ``M`` on the prototile diameters.
    """

    def __init__(self, name, field, prototiles, rule, inner_radius, max_diameter):
        self._name = str(name)
        self._field = field
        self._prototiles = tuple(prototiles)
        self._rule = rule
        self._m = field.scalar(inner_radius)
        self._M = field.scalar(max_diameter)

        for i, t in enumerate(self._prototiles):
            if t.id != i:
                msg = f"Prototile {t.name} has id {t.id}, expected {i}."
                raise InvalidGeometryError(msg)
            for p in t.polygon:
                if p.field != field:
                    msg = f"Prototile {t.name} is not over {field!r}."
                    raise FieldMismatchError(msg)
        if len(rule.children) != len(self._prototiles):
            raise InvalidGeometryError("Substitution rule must cover every prototile.")
        if rule.lam.field != field:
            raise FieldMismatchError("Expansion factor is not over the system field.")
        if self._m.sign() <= 0:
            raise InvalidGeometryError("Inner radius must be positive.")
        dims = {t.dim for t in self._prototiles}
        if len(dims) != 1:
            raise InvalidGeometryError("Prototiles mix intervals and polygons.")
        self._dim = dims.pop()

    @property
    def name(self):
        return self._name

    @property
    def field(self):
        return self._field

    @property
    def prototiles(self):
        return self._prototiles

    @property
    def rule(self):
        return self._rule

    @property
    def lam(self):
        return self._rule.lam

    @property
    def inner_radius(self):
        return self._m

    @property
    def max_diameter(self):
        return self._M

    @property
    def dim(self):
        return self._dim

    def prototile(self, key):
        """Look a prototile up by id or by name."""
        if isinstance(key, str):
            for t in self._prototiles:
                if t.name == key:
                    return t
            if key.isdigit():
                return self.prototile(int(key))
            names = [t.name for t in self._prototiles]
            raise ValueError(f"Unknown prototile {key!r}; expected one of {names}.")
        key = int(key)
        if not 0 <= key < len(self._prototiles):
            raise ValueError(f"Prototile id {key} out of range.")
        return self._prototiles[key]

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        aligned.add_item("field", self._field.name)
        aligned.add_item("prototiles", [t.name for t in self._prototiles])
        aligned.add_item("λ", f"{float(self.lam):.10g}")
        aligned.add_item("children", [len(c) for c in self._rule.children])
        aligned.add_item("m", f"{float(self._m):.10g}")
        aligned.add_item("M", f"{float(self._M):.10g}")
        return draw_title(f"Tiling system {self._name}") + aligned.draw()
