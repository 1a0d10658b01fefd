from fractions import Fraction
from functools import lru_cache

from .._errors import InvalidGeometryError


class NumberField:
    """
    Algebraic number field Q(θ) with a designated real embedding of θ.

    Parameters
    ----------
    min_poly : sequence of int
        Coefficients of the monic minimal polynomial of θ, constant term first.
    embedding : pair of rational numbers
        Interval ``(lo, hi)`` containing exactly one real root of ``min_poly``; that
        root is the value of θ.
    name : str, optional
        Label used in reprs and serialized files.

    Raises
    ------
    InvalidGeometryError
        If the polynomial is not monic, not irreducible, or the interval does not
        isolate a single root.
    """

    def __init__(self, min_poly, embedding, name=None):
        min_poly = tuple(int(c) for c in min_poly)
        if len(min_poly) < 2 or min_poly[-1] != 1:
            raise InvalidGeometryError(f"Minimal polynomial {min_poly} must be monic.")

        lo, hi = (Fraction(v) for v in embedding)
        if lo > hi:
            raise InvalidGeometryError(f"Empty embedding interval [{lo}, {hi}].")

        self._min_poly = min_poly
        self._embedding = (lo, hi)
        self._name = name
        self._check()

        self._reduction = _reduction_table(min_poly)
        self._refined = {}

    def _check(self):
        from sympy import Poly, Rational, Symbol

        if self.degree == 1:
            root = -Fraction(self._min_poly[0])
            lo, hi = self._embedding
            if not (lo <= root <= hi):
                msg = f"Interval does not contain the root {root}."
                raise InvalidGeometryError(msg)
            return

        x = Symbol("x")
        poly = Poly(list(reversed(self._min_poly)), x)
        if not poly.is_irreducible:
            raise InvalidGeometryError(f"Polynomial {poly.as_expr()} is reducible.")

        lo, hi = (Rational(v.numerator, v.denominator) for v in self._embedding)
        nroots = poly.count_roots(lo, hi)
        if nroots != 1:
            raise InvalidGeometryError(
                f"Embedding interval [{lo}, {hi}] holds {nroots} roots of "
                f"{poly.as_expr()}; exactly one is required."
            )

    @property
    def degree(self):
        return len(self._min_poly) - 1

    @property
    def min_poly(self):
        return self._min_poly

    @property
    def embedding(self):
        return self._embedding

    @property
    def name(self):
        if self._name is None:
            return f"Q[{','.join(map(str, self._min_poly))}]"
        return self._name

    @property
    def key(self):
        return (self._min_poly, self._embedding)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"NumberField({self.name}, degree={self.degree})"

    def scalar(self, value):
        """Coerce an int, Fraction, str, Scalar or coefficient list to a Scalar."""
        from ._scalar import Scalar

        if isinstance(value, Scalar):
            if value.field != self:
                from .._errors import FieldMismatchError

                raise FieldMismatchError(f"{value!r} does not belong to {self!r}.")
            return value
        if isinstance(value, (list, tuple)):
            coeffs = [Fraction(c) for c in value]
            if len(coeffs) > self.degree:
                raise ValueError(f"Too many coefficients for degree {self.degree}.")
            coeffs += [Fraction(0)] * (self.degree - len(coeffs))
            return Scalar(self, tuple(coeffs))
        return Scalar(self, (to_fraction(value),) + (Fraction(0),) * (self.degree - 1))

    @property
    def gen(self):
        """The generator θ."""
        if self.degree == 1:
            return self.scalar(-Fraction(self._min_poly[0]))
        return self.scalar([0, 1])

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def reduce(self, prod):
        """Reduce a product of length ``2·degree − 1`` modulo the polynomial."""
        d = self.degree
        out = list(prod[:d])
        for k in range(d, len(prod)):
            c = prod[k]
            if c:
                row = self._reduction[k - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)

    def isolating_interval(self, bits):
        """
        Rational interval around θ of width at most ``2**-bits`` found by bisection.
        """
        if bits in self._refined:
            return self._refined[bits]

        lo, hi = self._embedding
        if self.degree == 1:
            root = -Fraction(self._min_poly[0])
            return (root, root)

        width = Fraction(1, 2 ** bits)
        slo = _poly_sign(self._min_poly, lo)
        if slo == 0:
            return (lo, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            smid = _poly_sign(self._min_poly, mid)
            if smid == 0:
                lo = hi = mid
                break
            if smid == slo:
                lo = mid
            else:
                hi = mid
        self._refined[bits] = (lo, hi)
        return (lo, hi)


def to_fraction(value):
    """Exact rational value of an int, Fraction, decimal string or float."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def _poly_sign(coeffs, x):
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return (v > 0) - (v < 0)


def _reduction_table(min_poly):
    """Coefficients of θ^d, ..., θ^(2d-2) in the power basis."""
    d = len(min_poly) - 1
    if d == 1:
        return []
    cur = [-Fraction(c) for c in min_poly[:-1]]
    rows = [tuple(cur)]
    for _ in range(d - 2):
        top = cur[-1]
        shifted = [Fraction(0)] + cur[:-1]
        cur = [shifted[j] - top * min_poly[j] for j in range(d)]
        rows.append(tuple(cur))
    return rows


@lru_cache(maxsize=None)
def rationals():
    """The field Q, presented as Q(θ) with θ = 0."""
    return NumberField((0, 1), (0, 0), name="Q")


@lru_cache(maxsize=None)
def quadratic_field(k):
    """
    Real quadratic field Q(√k) for a positive non-square integer ``k``.

    Examples
    --------
    .. doctest::

        >>> from subtile.exact import quadratic_field
        >>> F = quadratic_field(5)
        >>> r5 = F.gen
        >>> r5 * r5 == F.scalar(5)
        True
    """
    from math import isqrt

    k = int(k)
    if k < 2 or isqrt(k) ** 2 == k:
        raise ValueError(f"Q(sqrt({k})) is not a quadratic field.")
    s = isqrt(k)
    return NumberField((-k, 0, 1), (s, s + 1), name=f"Q(sqrt({k}))")


@lru_cache(maxsize=None)
def penrose_field():
    """
    Q(w) with w = √(10 − 2√5) = 4·sin(π/5): holds the coordinates of every tenth
    root of unity.
    """
    return NumberField((80, 0, -20, 0, 1), (2, 3), name="Q(sqrt(10-2sqrt(5)))")
