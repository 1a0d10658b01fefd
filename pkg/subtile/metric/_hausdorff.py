"""
Hausdorff distance between segment sets clipped to a disk about the origin.

The distance from a point moving along a segment to a fixed segment is convex in the
parameter, so on any parameter interval it is bounded by its endpoint values. Taking
the minimum of these bounds over the target segments bounds the distance to the set,
and bisection refines the worst interval until the bracket is within tolerance.
"""
import heapq
import math

from loguru import logger

from .._config import config
from .._errors import EmptyComplexError, ResourceLimitError
from ..exact import CertifiedValue

# Slack for the double-precision clipping and distance evaluations.
_SLACK = 1e-12


def clip_to_disk(segments, n):
    """
    Float segments ``(x0, y0, x1, y1)`` clipped to the closed disk of radius ``n``.

    Parameters
    ----------
    segments : array_like
        Array of shape ``(k, 4)``.
    n : float
        Disk radius.

    Returns
    -------
    ndarray
        Array of shape ``(k', 4)``; segments missing the disk are dropped.
    """
    from numpy import asarray, empty

    segments = asarray(segments, float).reshape(-1, 4)
    out = []
    n2 = float(n) ** 2
    for x0, y0, x1, y1 in segments:
        dx, dy = x1 - x0, y1 - y0
        a = dx * dx + dy * dy
        b = 2 * (x0 * dx + y0 * dy)
        c = x0 * x0 + y0 * y0 - n2
        if a == 0.0:
            if c <= 0.0:
                out.append((x0, y0, x0, y0))
            continue
        disc = b * b - 4 * a * c
        if disc < 0.0:
            continue
        r = math.sqrt(disc)
        t0 = max((-b - r) / (2 * a), 0.0)
        t1 = min((-b + r) / (2 * a), 1.0)
        if t0 > t1:
            continue
        out.append((x0 + t0 * dx, y0 + t0 * dy, x0 + t1 * dx, y0 + t1 * dy))
    if not out:
        return empty((0, 4))
    return asarray(out, float)


def _dist_to_segments(x, y, B):
    from numpy import hypot, maximum, minimum, where

    dx = B[:, 2] - B[:, 0]
    dy = B[:, 3] - B[:, 1]
    dd = dx * dx + dy * dy
    t = ((x - B[:, 0]) * dx + (y - B[:, 1]) * dy) / where(dd > 0, dd, 1.0)
    t = minimum(maximum(t, 0.0), 1.0)
    return hypot(x - B[:, 0] - t * dx, y - B[:, 1] - t * dy)


def directed_sup(A, B, eps, max_subdivisions=None):
    """
    Bracket ``[lo, hi]`` of ``sup_{a ∈ A} dist(a, B)`` with ``hi − lo ≤ eps``.

    Parameters
    ----------
    A, B : ndarray
        Float segment arrays of shape ``(k, 4)``, both nonempty.
    eps : float
        Target bracket width.
    max_subdivisions : int, optional
        Largest number of intervals examined. Defaults to
        ``config["metric.max_subdivisions"]``.
    """
    from numpy import maximum

    if max_subdivisions is None:
        max_subdivisions = config["metric.max_subdivisions"]

    lo = 0.0
    heap = []
    for k, (x0, y0, x1, y1) in enumerate(A):
        g0 = _dist_to_segments(x0, y0, B)
        g1 = _dist_to_segments(x1, y1, B)
        f0, f1 = g0.min(), g1.min()
        lo = max(lo, f0, f1)
        length = math.hypot(x1 - x0, y1 - y0)
        ub = min(max(f0, f1) + length / 2, maximum(g0, g1).min())
        heapq.heappush(heap, (-ub, k, 0.0, 1.0, g0, g1))

    count = len(heap)
    while heap:
        ub = -heap[0][0]
        if ub - lo <= eps:
            break
        if count >= max_subdivisions:
            raise ResourceLimitError(
                f"Hausdorff bisection exceeded {max_subdivisions} intervals."
            )
        _, k, t0, t1, g0, g1 = heapq.heappop(heap)
        if ub <= lo:
            continue
        x0, y0, x1, y1 = A[k]
        tm = (t0 + t1) / 2
        gm = _dist_to_segments(x0 + tm * (x1 - x0), y0 + tm * (y1 - y0), B)
        fm = gm.min()
        lo = max(lo, fm)
        half = math.hypot(x1 - x0, y1 - y0) * (t1 - t0) / 2
        for a, b, ga, gb in ((t0, tm, g0, gm), (tm, t1, gm, g1)):
            fa, fb = ga.min(), gb.min()
            sub = min(max(fa, fb) + half / 2, maximum(ga, gb).min())
            if sub > lo:
                heapq.heappush(heap, (-sub, k, a, b, ga, gb))
                count += 1

    hi = max(lo, -heap[0][0]) if heap else lo
    return lo, hi


def hausdorff_clipped(A, B, n, eps):
    """
    Hausdorff distance between two segment complexes clipped to the closed disk of
    radius ``n`` about the origin.

    Parameters
    ----------
    A, B : SegmentComplex
        Segment sets with exact endpoints.
    n : float
        Clipping radius.
    eps : float
        Target width of the returned bracket.

    Returns
    -------
    CertifiedValue
        Exact zero when the clipped sets coincide, otherwise a bracket of width at
        most ``eps`` plus rounding slack.

    Raises
    ------
    EmptyComplexError
        If either set misses the disk.
    """
    n = float(n)
    eps = float(eps)
    if n <= 0 or eps <= 0:
        raise ValueError("Clipping radius and tolerance must be positive.")

    a = clip_to_disk(A.to_float(), n)
    b = clip_to_disk(B.to_float(), n)
    if len(a) == 0 or len(b) == 0:
        side = "first" if len(a) == 0 else "second"
        msg = f"The {side} segment set misses the disk of radius {n}."
        raise EmptyComplexError(msg)

    if A == B:
        return CertifiedValue(0.0, 0.0, exact=True, provenance={"n": n})

    lo1, hi1 = directed_sup(a, b, eps)
    lo2, hi2 = directed_sup(b, a, eps)
    slack = _SLACK * max(1.0, n)
    lo = max(max(lo1, lo2) - slack, 0.0)
    hi = max(hi1, hi2) + slack
    logger.debug(f"hausdorff n={n}: [{lo}, {hi}] over {len(a)}x{len(b)} segments")
    return CertifiedValue(lo, hi, provenance={"n": n, "eps": eps})
