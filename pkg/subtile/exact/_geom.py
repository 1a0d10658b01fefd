import math

from .._errors import FieldMismatchError, InvalidGeometryError
from ._certified import CertifiedValue


class Point:
    """Point of the plane with coordinates in a number field."""

    __slots__ = ("x", "y", "_key", "_float")

    def __init__(self, x, y):
        if x.field is not y.field and x.field != y.field:
            raise FieldMismatchError("Point coordinates come from different fields.")
        self.x = x
        self.y = y
        self._key = None
        self._float = None

    @classmethod
    def of(cls, field, x, y=0):
        return cls(field.scalar(x), field.scalar(y))

    @property
    def field(self):
        return self.x.field

    @property
    def key(self):
        if self._key is None:
            self._key = (self.x.coeffs, self.y.coeffs)
        return self._key

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def __mul__(self, k):
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Point(self.x / k, self.y / k)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def norm2(self):
        return self.dot(self)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __iter__(self):
        yield self.x
        yield self.y

    def to_float(self):
        if self._float is None:
            self._float = (float(self.x), float(self.y))
        return self._float

    def __repr__(self):
        x, y = self.to_float()
        return f"Point({x:.6g}, {y:.6g})"


class Rotation:
    """
    Rotation of the plane by the unit complex number ``c + i·s``.

    Raises
    ------
    InvalidGeometryError
        If ``c² + s² ≠ 1``.
    """

    __slots__ = ("c", "s")

    def __init__(self, c, s, check=True):
        if c.field is not s.field and c.field != s.field:
            raise FieldMismatchError("Rotation entries come from different fields.")
        if check and not (c * c + s * s - 1).is_zero():
            raise InvalidGeometryError(f"({c!r}, {s!r}) is not a unit vector.")
        self.c = c
        self.s = s

    @classmethod
    def identity(cls, field):
        return cls(field.one, field.zero, check=False)

    @property
    def field(self):
        return self.c.field

    @property
    def key(self):
        return (self.c.coeffs, self.s.coeffs)

    def is_identity(self):
        return self.s.is_zero() and self.c == 1

    def compose(self, other):
        c = self.c * other.c - self.s * other.s
        s = self.s * other.c + self.c * other.s
        return Rotation(c, s, check=False)

    def inverse(self):
        return Rotation(self.c, -self.s, check=False)

    def apply(self, p):
        return Point(self.c * p.x - self.s * p.y, self.s * p.x + self.c * p.y)

    def __eq__(self, other):
        if not isinstance(other, Rotation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def angle(self):
        """Rotation angle in radians, as a float in (-π, π]."""
        return math.atan2(float(self.s), float(self.c))

    def __repr__(self):
        return f"Rotation({math.degrees(self.angle()):.6g} deg)"


class Motion:
    """
    Orientation-preserving rigid motion ``p ↦ rot·p + trans``.

    Examples
    --------
    .. doctest::

        >>> from subtile.exact import Motion, Point, Rotation, quadratic_field
        >>> F = quadratic_field(5)
        >>> r = Rotation(2 / F.gen, 1 / F.gen)
        >>> g = Motion(r, Point.of(F, 0, 0))
        >>> h = g.compose(g)
        >>> h.rot.c == F.scalar("3/5"), h.rot.s == F.scalar("4/5")
        (True, True)
    """

    __slots__ = ("rot", "trans", "_key")

    def __init__(self, rot, trans):
        if rot.field is not trans.field and rot.field != trans.field:
            raise FieldMismatchError("Motion parts come from different fields.")
        self.rot = rot
        self.trans = trans
        self._key = None

    @classmethod
    def identity(cls, field):
        return cls(Rotation.identity(field), Point(field.zero, field.zero))

    @classmethod
    def translation(cls, t):
        return cls(Rotation.identity(t.field), t)

    @classmethod
    def from_correspondence(cls, a0, b0, a1, b1):
        """
        The motion sending ``a0`` to ``a1`` and ``b0`` to ``b1``.

        Raises
        ------
        InvalidGeometryError
            If the two segments have different lengths or ``a0 = b0``.
        """
        u = b0 - a0
        v = b1 - a1
        n = u.norm2()
        if n.is_zero():
            raise InvalidGeometryError("Degenerate correspondence segment.")
        if not (v.norm2() - n).is_zero():
            raise InvalidGeometryError("Correspondence segments differ in length.")
        rot = Rotation(u.dot(v) / n, u.cross(v) / n, check=False)
        return cls(rot, a1 - rot.apply(a0))

    @property
    def field(self):
        return self.rot.field

    @property
    def key(self):
        if self._key is None:
            self._key = (self.rot.c.coeffs, self.rot.s.coeffs) + self.trans.key
        return self._key

    def apply(self, p):
        return self.rot.apply(p) + self.trans

    def compose(self, other):
        """``(self ∘ other)(p) = self(other(p))``."""
        return Motion(self.rot.compose(other.rot), self.apply(other.trans))

    def inverse(self):
        inv = self.rot.inverse()
        return Motion(inv, -inv.apply(self.trans))

    def is_identity(self):
        t = self.trans
        return self.rot.is_identity() and t.x.is_zero() and t.y.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Motion):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        x, y = self.trans.to_float()
        return f"Motion({math.degrees(self.rot.angle()):.6g} deg, ({x:.6g}, {y:.6g}))"


def motion_compose(g, h):
    return g.compose(h)


def motion_apply(g, p):
    return g.apply(p)


def motion_inverse(g):
    return g.inverse()


def expansion_conjugate(g, lam):
    """
    The motion H(g) with ``φ(g·x) = H(g)·φ(x)``: same rotation, translation ``λ·s``.
    """
    if lam.sign() <= 0:
        raise ValueError("Expansion factor must be positive.")
    return Motion(g.rot, g.trans * lam)


def motion_magnitude(g, tol=1e-12):
    """
    Size ℓ(g) = ‖α − I‖ + ‖s‖ of the motion ``g·a = α·a + s``.

    ‖α − I‖ is the Euclidean operator norm, ``2·|sin(θ/2)| = √(2 − 2c)``.

    Returns
    -------
    CertifiedValue
        Interval of width at most ``tol`` (up to double-precision limits).
    """
    from ._interval import enclose

    if g.is_identity():
        return CertifiedValue(0.0, 0.0, exact=True)

    prec = 64
    while True:
        clo, chi = enclose(g.rot.c, prec)
        tlo, thi = enclose(g.trans.norm2(), prec)
        lo = _sqrt_down(max(2 - 2 * chi, 0.0)) + _sqrt_down(max(tlo, 0.0))
        hi = _sqrt_up(max(2 - 2 * clo, 0.0)) + _sqrt_up(max(thi, 0.0))
        lo = math.nextafter(lo, -math.inf) if lo > 0 else 0.0
        hi = math.nextafter(hi, math.inf)
        if hi - lo <= tol or prec >= 1024:
            return CertifiedValue(lo, hi)
        prec *= 2


def _sqrt_down(x):
    return math.nextafter(math.sqrt(x), -math.inf) if x > 0 else 0.0


def _sqrt_up(x):
    return math.nextafter(math.sqrt(x), math.inf)
