"""
Exact planar predicates on convex polygons and segments.

Each predicate first evaluates in double precision and only falls back to exact field
arithmetic when the floating value is within a relative margin of zero.
"""
_REL = 1e-9


def _scale(*pts):
    s = 1.0
    for x, y in pts:
        s = max(s, abs(x), abs(y))
    return s


def orient(a, b, c):
    """Exact ``(b - a) × (c - a)``."""
    return (b - a).cross(c - a)


def orient_sign(a, b, c):
    """Sign of :func:`orient`: ``+1`` when ``c`` lies left of the line ``a → b``."""
    af, bf, cf = a.to_float(), b.to_float(), c.to_float()
    v = (bf[0] - af[0]) * (cf[1] - af[1]) - (bf[1] - af[1]) * (cf[0] - af[0])
    s = _scale(af, bf, cf)
    if abs(v) > _REL * s * s:
        return 1 if v > 0 else -1
    return orient(a, b, c).sign()


def _bounds_x(poly):
    a, b = poly
    return (a.x, b.x) if a.x <= b.x else (b.x, a.x)


def point_in_polygon(p, poly, strict=False):
    """
    Whether ``p`` lies in the closed (or open, with ``strict``) convex polygon.

    Two-point polygons are intervals of the x-axis.
    """
    if len(poly) == 2:
        if not p.y.is_zero():
            return False
        lo, hi = _bounds_x(poly)
        if strict:
            return lo < p.x < hi
        return lo <= p.x <= hi
    k = len(poly)
    for i in range(k):
        s = orient_sign(poly[i], poly[(i + 1) % k], p)
        if s < 0 or (strict and s == 0):
            return False
    return True


def interiors_disjoint(P, Q):
    """
    Whether two convex polygons (counterclockwise) have disjoint interiors.

    Separating axes suffice: the Minkowski difference of two convex polygons has its
    edges parallel to edges of either operand.
    """
    if len(P) == 2 or len(Q) == 2:
        plo, phi = _bounds_x(P)
        qlo, qhi = _bounds_x(Q)
        return phi <= qlo or qhi <= plo
    return _separated_by_edge(P, Q) or _separated_by_edge(Q, P)


def _separated_by_edge(P, Q):
    k = len(P)
    qf = [q.to_float() for q in Q]
    for i in range(k):
        a, b = P[i], P[(i + 1) % k]
        af, bf = a.to_float(), b.to_float()
        dx, dy = bf[0] - af[0], bf[1] - af[1]
        s = _scale(af, bf, *qf)
        tol = _REL * s * s
        pending = []
        outside = True
        for q, (x, y) in zip(Q, qf):
            v = dx * (y - af[1]) - dy * (x - af[0])
            if v > tol:
                outside = False
                break
            if v >= -tol:
                pending.append(q)
        if not outside:
            continue
        if all(orient(a, b, q).sign() <= 0 for q in pending):
            return True
    return False


def segment_dist2_sign(p, a, b, r2):
    """
    Sign of ``dist(p, [a, b])² − r2``, exact; ``a == b`` is allowed.
    """
    pf, af, bf = p.to_float(), a.to_float(), b.to_float()
    d2 = _float_dist2(pf, af, bf)
    r2f = float(r2)
    s = _scale(pf, af, bf)
    tol = _REL * (s * s + abs(r2f))
    if d2 - r2f > tol:
        return 1
    if d2 - r2f < -tol:
        return -1
    return _exact_dist2_sign(p, a, b, r2)


def _float_dist2(p, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    wx, wy = p[0] - a[0], p[1] - a[1]
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return wx * wx + wy * wy
    t = max(0.0, min(1.0, (wx * dx + wy * dy) / dd))
    ex, ey = wx - t * dx, wy - t * dy
    return ex * ex + ey * ey


def _exact_dist2_sign(p, a, b, r2):
    d = b - a
    w = p - a
    dd = d.norm2()
    if dd.is_zero():
        return (w.norm2() - r2).sign()
    t = w.dot(d)
    if t.sign() <= 0:
        return (w.norm2() - r2).sign()
    if (t - dd).sign() >= 0:
        return ((p - b).norm2() - r2).sign()
    c = w.cross(d)
    return (c * c - r2 * dd).sign()


def polygon_edges(poly):
    """Edges of a polygon; an interval has its two endpoints as degenerate edges."""
    if len(poly) == 2:
        return [(poly[0], poly[0]), (poly[1], poly[1])]
    k = len(poly)
    return [(poly[i], poly[(i + 1) % k]) for i in range(k)]


def ball_meets_polygon(a, r2, poly):
    """Whether the open ball of squared radius ``r2`` about ``a`` meets ``poly``."""
    if point_in_polygon(a, poly):
        return True
    if len(poly) == 2:
        return segment_dist2_sign(a, poly[0], poly[1], r2) < 0
    return any(segment_dist2_sign(a, u, v, r2) < 0 for u, v in polygon_edges(poly))


def collinear_overlap(a, b, c, d):
    """
    Interval ``[t0, t1] ⊂ [0, |b - a|²]`` of ``a + t(b - a)/|b - a|²`` covered by the
    segment ``[c, d]`` when both lie on one line, otherwise ``None``.
    """
    if orient_sign(a, b, c) != 0 or orient_sign(a, b, d) != 0:
        return None
    u = b - a
    uu = u.norm2()
    tc = (c - a).dot(u)
    td = (d - a).dot(u)
    lo, hi = (tc, td) if tc <= td else (td, tc)
    zero = uu.field.zero
    if lo < zero:
        lo = zero
    if hi > uu:
        hi = uu
    if hi <= lo:
        return None
    return (lo, hi)
