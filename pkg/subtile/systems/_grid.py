from fractions import Fraction
from functools import lru_cache

from ..core import Prototile, SubstitutionRule, TilingSystem
from ..exact import Motion, Point, rationals


@lru_cache(maxsize=None)
def make_grid():
    """
    Periodic control: the unit square with an off-center mark, split into four
    translated copies by λ = 2.
    """
    F = rationals()
    square = [Point.of(F, x, y) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))]
    q = Fraction(1, 4)
    mark = (Point.of(F, q, q), Point.of(F, 2 * q, q))
    prototiles = [Prototile(0, "S", square, mark, color=0)]
    offsets = ((0, 0), (1, 0), (0, 1), (1, 1))
    children = [(0, Motion.translation(Point.of(F, x, y))) for x, y in offsets]
    rule = SubstitutionRule(F.scalar(2), [children])
    return TilingSystem("grid", F, prototiles, rule, F.scalar("1/2"), F.scalar("3/2"))
