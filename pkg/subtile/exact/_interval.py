"""
Certified sign and enclosures of field elements under the real embedding.

A double-precision evaluation with a rigorous error allowance settles almost every
sign; the rest go to interval arithmetic (mpmath) at doubling precision. Nonzero
elements have nonzero embeddings, so the refinement terminates.
"""
import math
from fractions import Fraction

from .._config import config


def _theta_float(field):
    lo, hi = field.isolating_interval(60)
    return float((lo + hi) / 2)


def approx(a):
    """Double-precision value of ``a``."""
    if len(a.coeffs) == 1:
        return float(a.coeffs[0])
    t = _theta_float(a.field)
    v = 0.0
    for c in reversed(a.coeffs):
        v = v * t + float(c)
    return v


def _float_sign(a):
    t = _theta_float(a.field)
    at = abs(t)
    v = 0.0
    bound = 0.0
    for k, c in enumerate(a.coeffs):
        fc = float(c)
        term = fc * t ** k
        v += term
        bound += abs(fc) * at ** k * (k + 2)
    if abs(v) > 1e-12 * bound + 1e-300:
        return 1 if v > 0 else -1
    return None


def _context(prec):
    from mpmath.ctx_iv import MPIntervalContext

    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


def _iv_rational(ctx, q):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


def _enclosure(a, prec):
    ctx = _context(prec)
    lo, hi = a.field.isolating_interval(prec + 8)
    ilo = _iv_rational(ctx, lo)
    theta = ilo + (_iv_rational(ctx, hi) - ilo) * ctx.mpf([0, 1])
    v = ctx.mpf(0)
    for c in reversed(a.coeffs):
        v = v * theta + _iv_rational(ctx, c)
    return v


def scalar_sign(a):
    """
    Sign of ``a`` under the designated real embedding.

    Returns
    -------
    int
        ``0`` exactly when ``a`` is zero, otherwise ``-1`` or ``+1``.
    """
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a.coeffs[0] > 0 else -1

    s = _float_sign(a)
    if s is not None:
        return s

    prec = config["exact.sign_start_prec"]
    while True:
        v = _enclosure(a, prec)
        if v > 0:
            return 1
        if v < 0:
            return -1
        if prec >= config["exact.sign_max_prec"]:
            raise ArithmeticError(f"Sign of {a!r} unresolved at {prec} bits.")
        prec *= 2


def enclose(a, prec=64):
    """
    Floating-point interval ``(lo, hi)`` guaranteed to contain the embedding of ``a``.
    """
    from mpmath.libmp import to_float

    if a.is_rational():
        q = a.coeffs[0]
        f = float(q)
        if Fraction(f) == q:
            return (f, f)
        return (math.nextafter(f, -math.inf), math.nextafter(f, math.inf))

    v = _enclosure(a, prec)
    lo, hi = v._mpi_
    return (
        math.nextafter(to_float(lo), -math.inf),
        math.nextafter(to_float(hi), math.inf),
    )
