import math

from loguru import logger

from .._errors import EmptyComplexError
from ..core import boundary_complex
from ..exact import CertifiedValue, Point

# Value of a term whose clipped disk sees boundary on one side only.
_ONE_SIDED = 2.0


def patch_metric(x, y, R, eps, verbose=False):
    """
    Tiling distance ``max_{1 ≤ n ≤ R} (1/n)·m_H[B_n ∩ ∂x, B_n ∩ ∂y]``.

    ``∂x`` is the union of tile edges and color marks. Only integer radii up to the
    horizon ``R`` are examined, so the result bounds the full supremum from below.

    Parameters
    ----------
    x, y : Patch
        Patches whose supports contain the open disk of radius ``R`` about the
        origin.
    R : float
        Horizon, ``R ≥ 1``.
    eps : float
        Target width of each term's bracket.
    verbose : bool, optional
        Show a progress bar. Defaults to ``False``.

    Returns
    -------
    CertifiedValue
        Bracket on the horizon-limited distance, with ``horizon_limited`` in its
        provenance.

    Raises
    ------
    ValueError
        If the disk of radius ``R`` is not inside both supports.
    """
    from ..threads import parallel_map

    R = float(R)
    eps = float(eps)
    if R < 1 or eps <= 0:
        raise ValueError("Horizon must be at least 1 and tolerance positive.")

    for name, p in (("first", x), ("second", y)):
        origin = Point(p.system.field.zero, p.system.field.zero)
        if not p.is_collared(origin, R):
            raise ValueError(f"The {name} patch does not cover the disk of radius {R}.")

    terms = int(math.floor(R))
    provenance = {"R": R, "eps": eps, "terms": terms, "horizon_limited": True}
    bx = boundary_complex(x)
    by = boundary_complex(y)
    if bx == by:
        return CertifiedValue(0.0, 0.0, exact=True, provenance=provenance)

    def term(n):
        from ._hausdorff import hausdorff_clipped

        try:
            v = hausdorff_clipped(bx, by, n, eps * n)
        except EmptyComplexError:
            return _empty_term(bx, by, n)
        return (v.lo / n, v.hi / n, v.exact)

    ns = list(range(1, terms + 1))
    terms = parallel_map(term, ns, verbose=verbose, desc="metric terms")
    lo = max(t[0] for t in terms)
    hi = max(t[1] for t in terms)
    exact = all(t[2] for t in terms)
    logger.debug(f"patch_metric over {len(ns)} terms: [{lo}, {hi}]")
    return CertifiedValue(lo, hi, exact=exact, provenance=provenance)


def _empty_term(bx, by, n):
    from ._hausdorff import clip_to_disk

    ex = len(clip_to_disk(bx.to_float(), n)) == 0
    ey = len(clip_to_disk(by.to_float(), n)) == 0
    if ex and ey:
        return (0.0, 0.0, True)
    return (_ONE_SIDED, _ONE_SIDED, True)
