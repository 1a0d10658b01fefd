import math
from fractions import Fraction
from functools import lru_cache

from .._config import config
from .._errors import UnsupportedRotationError

_ONE = (Fraction(1), Fraction(0))
_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gpow(a, k):
    # a has modulus one, so its inverse is its conjugate
    if k < 0:
        a, k = (a[0], -a[1]), -k
    out = _ONE
    for _ in range(k):
        out = _gmul(out, a)
    return out


@lru_cache(maxsize=None)
def gaussian_prime(p):
    """
    Gaussian prime ``x + iy`` above a rational prime ``p ≡ 1 (mod 4)``, normalized
    so that ``x > y > 0``.

    Examples
    --------
    .. doctest::

        >>> from subtile.groups import gaussian_prime
        >>> gaussian_prime(5), gaussian_prime(13)
        ((2, 1), (3, 2))
    """
    from sympy import isprime

    p = int(p)
    if p % 4 != 1 or not isprime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 modulo 4.")
    for y in range(1, math.isqrt(p // 2) + 1):
        x = math.isqrt(p - y * y)
        if x * x + y * y == p:
            return (x, y)
    raise AssertionError(f"no sum of two squares found for {p}")


def _prime_rotation(p):
    """``π/π̄`` for the Gaussian prime ``π`` above ``p``."""
    x, y = gaussian_prime(p)
    return (Fraction(x * x - y * y, p), Fraction(2 * x * y, p))


@lru_cache(maxsize=None)
def _factor(c, s):
    from sympy import factorint

    d = math.lcm(c.denominator, s.denominator)
    a, b = int(c * d), int(s * d)
    exponents = []
    rest = (c, s)
    for p, k in sorted(factorint(d).items()):
        if p % 4 != 1:
            continue
        x, y = gaussian_prime(p)
        v, (u, w) = 0, (a, b)
        while True:
            re, im = u * x + w * y, w * x - u * y
            if re % p or im % p:
                break
            v, u, w = v + 1, re // p, im // p
        e = v - k
        if e:
            exponents.append((p, e))
            rest = _gmul(rest, _gpow(_prime_rotation(p), -e))
    if rest not in _UNITS:
        raise UnsupportedRotationError(f"({c}, {s}) has no Gaussian factorization.")
    return _UNITS.index(rest), tuple(exponents)


def factor_rotation(c, s):
    """
    Factor the Gaussian-rational rotation ``c + is`` as ``iᵃ · Π w_pᵉ``, where
    ``w_p = π_p/π̄_p`` for the normalized Gaussian prime ``π_p`` above ``p``.

    Returns
    -------
    tuple
        The unit exponent ``a`` in ``0..3`` and a dict ``{p: e}`` of nonzero
        exponents.

    Examples
    --------
    .. doctest::

        >>> from subtile.groups import factor_rotation
        >>> factor_rotation("3/5", "4/5")
        (0, {5: 1})
        >>> factor_rotation("7/25", "24/25")
        (2, {5: -2})
    """
    c, s = Fraction(c), Fraction(s)
    if c * c + s * s != 1:
        raise UnsupportedRotationError(f"({c}, {s}) is not a unit vector.")
    unit, exponents = _factor(c, s)
    return unit, dict(exponents)


def gaussian_rotation(unit, exponents):
    """Rational ``(c, s)`` of ``iᵘⁿⁱᵗ · Π w_pᵉ``."""
    z = _UNITS[unit % 4]
    z = (Fraction(z[0]), Fraction(z[1]))
    for p, e in sorted(dict(exponents).items()):
        z = _gmul(z, _gpow(_prime_rotation(p), e))
    return z


def _order(rotation, bound):
    r = rotation
    for k in range(1, bound + 1):
        if r.is_identity():
            return k
        r = r.compose(rotation)
    return None


class UnitRotation:
    """
    A rotation sorted into the arithmetic classes subtile computes with.

    Rotations with rational entries are Gaussian-rational: they carry the unit
    exponent and the prime exponents of :func:`factor_rotation`. Other rotations
    must be roots of unity of order at most ``config["groups.max_root_order"]``;
    they carry their ``turn``, the angle as a fraction of a full turn.

    Parameters
    ----------
    rotation : Rotation
        Exact rotation.
    max_order : int, optional
        Largest root-of-unity order tried for irrational rotations.

    Raises
    ------
    UnsupportedRotationError
        If the rotation is irrational and not a root of unity of bounded order.
    """

    __slots__ = ("_rotation", "_turn", "_unit", "_exponents")

    def __init__(self, rotation, max_order=None):
        c, s = rotation.c, rotation.s
        self._rotation = rotation
        if c.is_rational() and s.is_rational():
            unit, exponents = _factor(c.rational(), s.rational())
            self._unit = unit
            self._exponents = exponents
            self._turn = None if exponents else Fraction(unit, 4)
            return
        if max_order is None:
            max_order = config["groups.max_root_order"]
        k = _order(rotation, int(max_order))
        if k is None:
            raise UnsupportedRotationError(
                f"{rotation!r} is neither Gaussian-rational nor a root of unity of "
                f"order at most {max_order}."
            )
        j = round(rotation.angle() * k / (2 * math.pi)) % k
        self._unit = None
        self._exponents = None
        self._turn = Fraction(j, k)

    @classmethod
    def of(cls, c, s):
        """Gaussian-rational rotation from rational ``c`` and ``s``."""
        from ..exact import Rotation, rationals

        F = rationals()
        return cls(Rotation(F.scalar(c), F.scalar(s)))

    @classmethod
    def root_of_unity(cls, turn):
        """
        Rotation by ``turn`` of a full turn. Quarter turns are built exactly; other
        roots of unity have ``rotation`` set to ``None``.
        """
        turn = Fraction(turn) % 1
        if (4 * turn).denominator == 1:
            c, s = _UNITS[int(4 * turn)]
            return cls.of(c, s)
        self = cls.__new__(cls)
        self._rotation = None
        self._unit = None
        self._exponents = None
        self._turn = turn
        return self

    @property
    def rotation(self):
        return self._rotation

    @property
    def is_gaussian(self):
        return self._unit is not None

    @property
    def unit(self):
        """Exponent of ``i``, for Gaussian-rational rotations."""
        return self._unit

    @property
    def exponents(self):
        """Prime exponents, for Gaussian-rational rotations."""
        return None if self._exponents is None else dict(self._exponents)

    @property
    def turn(self):
        """Angle over 2π in ``[0, 1)``, or ``None`` for rotations of infinite order."""
        return self._turn

    @property
    def order(self):
        return None if self._turn is None else self._turn.denominator

    @property
    def key(self):
        if self.is_gaussian:
            return ("gaussian", self._unit, self._exponents)
        return ("turn", self._turn)

    def __eq__(self, other):
        if not isinstance(other, UnitRotation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.is_gaussian:
            c, s = gaussian_rotation(self._unit, self._exponents)
            return f"UnitRotation({c}, {s})"
        return f"UnitRotation(turn={self._turn})"
