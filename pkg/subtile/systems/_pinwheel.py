from functools import lru_cache
from math import isqrt

from ..core import Prototile, SubstitutionRule, TilingSystem, orient_sign
from ..exact import Motion, Point, Rotation, quadratic_field, rationals


def _field(m, n):
    k = m * m + n * n
    s = isqrt(k)
    if s * s == k:
        F = rationals()
        return F, F.scalar(s)
    F = quadratic_field(k)
    return F, F.gen


def _grid_triangles(m, n):
    """
    Integer-cell dissection of λ·T into ``m² + n²`` right triangles, returned as
    vertex triples in the inflated frame.

    The altitude foot ``(m², 0)`` splits λ·T into a piece made of ``m × n`` cells
    (width ``m``, height ``n``) and a piece made of ``n × m`` cells.
    """
    tris = []
    for i in range(m):
        for j in range(i + 1):
            x0, y0 = i * m, j * n
            bl, br = (x0, y0), (x0 + m, y0)
            tl, tr = (x0, y0 + n), (x0 + m, y0 + n)
            if j == i:
                tris.append((bl, br, tr))
            else:
                tris.append((bl, br, tl))
                tris.append((br, tr, tl))
    ox = m * m
    for i in range(n):
        for j in range(n - i):
            x0, y0 = ox + i * n, j * m
            bl, br = (x0, y0), (x0 + n, y0)
            tl, tr = (x0, y0 + m), (x0 + n, y0 + m)
            if i + j == n - 1:
                tris.append((bl, br, tl))
            else:
                tris.append((bl, br, tr))
                tris.append((bl, tr, tl))
    return tris


def _classify(F, lam, m, tri):
    pts = [Point.of(F, x, y) for x, y in tri]
    for k in range(3):
        C, P, Q = pts[k], pts[(k + 1) % 3], pts[(k + 2) % 3]
        if (P - C).dot(Q - C).is_zero():
            break
    S, L = (P, Q) if (P - C).norm2() == m * m else (Q, P)
    proto = 0 if orient_sign(S, L, C) > 0 else 1
    d = L - S
    return proto, Motion(Rotation(d.x / lam, d.y / lam), S)


def _mirror(g):
    rot = Rotation(g.rot.c, -g.rot.s, check=False)
    return Motion(rot, Point(g.trans.x, -g.trans.y))


@lru_cache(maxsize=None)
def make_pinwheel(m, n):
    """
    The (m, n)-pinwheel system: right triangles with legs ``m``, ``n`` and its
    mirror image, λ = √(m² + n²), with ``m² + n²`` children each.

    Parameters
    ----------
    m : int
        Short leg.
    n : int
        Long leg, ``n > m``.

    Examples
    --------
    .. doctest::

        >>> from subtile.systems import make_pinwheel
        >>> sys = make_pinwheel(1, 2)
        >>> [len(c) for c in sys.rule.children]
        [5, 5]
        >>> make_pinwheel(3, 4).lam
        Scalar(5)
    """
    m, n = int(m), int(n)
    if not 0 < m < n:
        raise ValueError(f"Pinwheel legs must satisfy 0 < m < n, got ({m}, {n}).")

    F, lam = _field(m, n)
    S = Point(F.zero, F.zero)
    L = Point(lam, F.zero)
    C = Point(F.scalar(m * m) / lam, F.scalar(m * n) / lam)
    C1 = Point(C.x, -C.y)
    prototiles = [
        Prototile(0, "L", (S, L, C)),
        Prototile(1, "R", (S, C1, L)),
    ]

    kids = [_classify(F, lam, m, tri) for tri in _grid_triangles(m, n)]
    mirrored = [(1 - q, _mirror(h)) for q, h in kids]
    rule = SubstitutionRule(lam, [kids, mirrored])
    inner = F.scalar(m * n) / (3 * lam)
    return TilingSystem(f"pinwheel:{m},{n}", F, prototiles, rule, inner, lam)
