from fractions import Fraction
from functools import lru_cache

from ..core import Prototile, SubstitutionRule, TilingSystem, orient_sign
from ..exact import Motion, Point, penrose_field

# Mark endpoints on the symmetry axis; lengths differ across the four tiles.
_MARKS = {
    "R+": (Fraction(1, 4), Fraction(1, 2)),
    "R-": (Fraction(1, 4), Fraction(5, 8)),
    "B+": (Fraction(1, 8), Fraction(1, 4)),
    "B-": (Fraction(1, 8), Fraction(7, 16)),
}
_NAMES = ("R+", "R-", "B+", "B-")


def _constants():
    F = penrose_field()
    w = F.gen
    r5 = (10 - w * w) / 2
    tau = (1 + r5) / 2
    return {
        "field": F,
        "tau": tau,
        "cos18": tau * w / 4,
        "sin18": (r5 - 1) / 4,
        "cos54": w / 4,
        "sin54": tau / 2,
        "w": w,
    }


def _split(color, A, B, C, inv):
    """Children of a labelled triangle (apex A) inflated by τ; ``inv`` is 1/τ."""
    if color == "R":
        P = A + (B - A) * inv
        return [("R", (C, P, B)), ("B", (P, C, A))]
    Q = B + (A - B) * inv
    R = B + (C - B) * inv
    return [("B", (R, C, A)), ("B", (Q, R, B)), ("R", (R, Q, A))]


@lru_cache(maxsize=None)
def make_penrose():
    """
    Penrose triangle system: two golden triangles in two chiralities, λ = τ.

    The acute (red) and obtuse (blue) triangles have unit legs. Each shape comes in
    two decorated versions whose marks on the symmetry axis have different lengths;
    ``+`` and ``−`` record how the labelled vertices sit (counterclockwise or not).

    Examples
    --------
    .. doctest::

        >>> from subtile.systems import make_penrose
        >>> sys = make_penrose()
        >>> [t.name for t in sys.prototiles]
        ['R+', 'R-', 'B+', 'B-']
        >>> [len(c) for c in sys.rule.children]
        [2, 2, 3, 3]
    """
    k = _constants()
    F, tau = k["field"], k["tau"]
    A = Point(F.zero, F.zero)
    shapes = {
        "R": (Point(k["cos18"], -k["sin18"]), Point(k["cos18"], k["sin18"])),
        "B": (Point(k["cos54"], -k["sin54"]), Point(k["cos54"], k["sin54"])),
    }

    prototiles = []
    for i, name in enumerate(_NAMES):
        B0, C0 = shapes[name[0]]
        lo, hi = _MARKS[name]
        mark = (Point.of(F, lo, 0), Point.of(F, hi, 0))
        prototiles.append(Prototile(i, name, (A, B0, C0), mark, color=i))

    def labelled(name):
        B0, C0 = shapes[name[0]]
        return (A, B0, C0) if name[1] == "+" else (A, C0, B0)

    children = []
    for name in _NAMES:
        a, b, c = (p * tau for p in labelled(name))
        kids = []
        for color, (X, Y, Z) in _split(name[0], a, b, c, tau - 1):
            chir = "+" if orient_sign(X, Y, Z) > 0 else "-"
            child = color + chir
            a0, b0, _ = labelled(child)
            kids.append((_NAMES.index(child), Motion.from_correspondence(a0, b0, X, Y)))
        children.append(kids)

    rule = SubstitutionRule(tau, children)
    return TilingSystem("penrose", F, prototiles, rule, k["w"] / 12, tau)
