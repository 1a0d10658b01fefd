from functools import lru_cache

from ..core import Prototile, SubstitutionRule, TilingSystem
from ..exact import Motion, Point, quadratic_field


@lru_cache(maxsize=None)
def make_fibonacci():
    """
    Fibonacci interval system: ``T0 = [0, 1]``, ``T1 = [0, τ]`` on the x-axis, λ = τ,
    with ``T0 ↦ T1`` and ``T1 ↦ T0 T1``.

    Examples
    --------
    .. doctest::

        >>> from subtile.systems import make_fibonacci
        >>> sys = make_fibonacci()
        >>> sys.lam * sys.lam == sys.lam + 1
        True
    """
    F = quadratic_field(5)
    tau = (1 + F.gen) / 2
    origin = Point(F.zero, F.zero)
    prototiles = [
        Prototile(0, "T0", (origin, Point.of(F, 1, 0))),
        Prototile(1, "T1", (origin, Point(tau, F.zero))),
    ]
    ident = Motion.identity(F)
    one = Motion.translation(Point.of(F, 1, 0))
    rule = SubstitutionRule(tau, [[(1, ident)], [(0, ident), (1, one)]])
    return TilingSystem("fibonacci", F, prototiles, rule, F.scalar("1/2"), tau)
