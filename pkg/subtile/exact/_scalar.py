from fractions import Fraction

from .._errors import FieldMismatchError
from ._field import to_fraction

_ZERO = Fraction(0)


class Scalar:
    """
    Element of a :class:`NumberField`, stored as rational coordinates in the power
    basis 1, θ, θ², ...

    Arithmetic is exact. Comparisons use :func:`scalar_sign`, which is exact as well.

    Examples
    --------
    .. doctest::

        >>> from subtile.exact import quadratic_field
        >>> F = quadratic_field(5)
        >>> tau = (1 + F.gen) / 2
        >>> tau * tau == tau + 1
        True
        >>> 1 / tau == tau - 1
        True
        >>> (2 - F.gen).sign()
        -1
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot combine elements of {self.field!r} and {other.field!r}."
                )
            return other
        if isinstance(other, (int, Fraction, float)):
            c = to_fraction(other)
            return Scalar(self.field, (c,) + (_ZERO,) * (len(self.coeffs) - 1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return Scalar(self.field, coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        return Scalar(self.field, coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        d = len(a)
        if d == 1:
            return Scalar(self.field, (a[0] * b[0],))
        prod = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Scalar(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Scalar division by zero.")
            return Scalar(self.field, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse, computed by polynomial inversion modulo the field."""
        if self.is_zero():
            raise ZeroDivisionError("Scalar division by zero.")
        if len(self.coeffs) == 1 or self.is_rational():
            return Scalar(self.field, (1 / self.coeffs[0],) + self.coeffs[1:])
        if len(self.coeffs) == 2:
            return _invert_quadratic(self)
        return _invert(self)

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        """The rational value; raises ``ValueError`` for irrational elements."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational.")
        return self.coeffs[0]

    def sign(self):
        from ._interval import scalar_sign

        return scalar_sign(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.coeffs == other.coeffs and self.field == other.field

    def __hash__(self):
        if self._hash is None:
            # rational values hash like the int or Fraction they equal
            self._hash = hash(self.coeffs[0] if self.is_rational() else self.coeffs)
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        from ._interval import approx

        return approx(self)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Scalar({body})"


def _invert_quadratic(a):
    # (u + vθ)(u + vθ') is the norm, θ' = -c1 - θ the conjugate root.
    c0, c1 = a.field.min_poly[:2]
    u, v = a.coeffs
    norm = u * u - c1 * u * v + c0 * v * v
    return Scalar(a.field, ((u - c1 * v) / norm, -v / norm))


def _invert(a):
    from sympy import Poly, QQ, Symbol

    x = Symbol("x")
    num = Poly([_qq(c) for c in reversed(a.coeffs)], x, domain=QQ)
    mod = Poly(list(reversed(a.field.min_poly)), x, domain=QQ)
    inv = num.invert(mod)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
    return a.field.scalar(coeffs)


def _qq(c):
    from sympy import Rational

    return Rational(c.numerator, c.denominator)


def scalar_arith(a, b, op):
    """
    Exact field operation ``op`` in ``{"add", "sub", "mul", "div"}``.

    Raises
    ------
    FieldMismatchError
        If ``a`` and ``b`` come from different fields.
    ZeroDivisionError
        If ``op`` is ``"div"`` and ``b`` is zero.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown scalar operation `{op}`.")
