import math

from loguru import logger

from .._config import config
from ..exact import CertifiedValue


def repetitivity_radius(sys, r, level, steps=None, cap=None, verbose=False):
    """
    Least radius ``R′`` on the ladder ``r·2, r·4, …`` such that every ball patch of
    radius ``R′`` sampled in the level supertiles contains a copy of every ball patch
    of radius ``r``.

    A ball of radius ``r`` about ``c`` lies in the ball of radius ``R′`` about ``a``
    when ``|c − a| ≤ R′ − r``; the distance test is made slightly conservative so
    float rounding never admits an outside center.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    r : float
        Radius of the patches to find.
    level : int
        Supertile level sampled.
    steps : int, optional
        Number of rungs. Defaults to ``config["analysis.radius_ladder_steps"]``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.

    Returns
    -------
    CertifiedValue
        Bracket ``[previous rung, found rung]``; ``hi`` is infinite and ``found`` is
        ``False`` in the provenance when no rung passed. The provenance also holds
        the constant ``C = R′/r``.
    """
    from numpy import asarray
    from scipy.spatial import cKDTree

    from ..core import supertile
    from ._canonical import _ball_classes

    r = float(r)
    if r <= 0:
        raise ValueError("Ball radius must be positive.")
    if steps is None:
        steps = config["analysis.radius_ladder_steps"]

    patches = []
    library = set()
    for t in sys.prototiles:
        P = supertile(sys, t.id, level, cap=cap, verbose=verbose)
        classes = list(_ball_classes(P, r, verbose).values())
        library.update(c for _, c in classes)
        patches.append((P, classes))

    provenance = {"r": r, "level": level, "patch_types": len(library)}
    prev = r
    for k in range(1, int(steps) + 1):
        R = r * 2 ** k
        tested = 0
        ok = True
        for P, classes in patches:
            if not classes:
                continue
            xy = asarray([a.to_float() for a, _ in classes])
            tree = cKDTree(xy)
            reach = (R - r) * (1 - 1e-9)
            for a, _ in classes:
                if not P.is_collared(a, R):
                    continue
                tested += 1
                near = tree.query_ball_point(a.to_float(), reach)
                found = {classes[j][1] for j in near}
                if len(found) < len(library):
                    ok = False
                    break
            if not ok:
                break
        logger.debug(f"repetitivity rung {R}: tested {tested}, ok={ok}")
        if tested == 0:
            break
        if ok:
            provenance.update(found=True, C=R / r, tested=tested)
            return CertifiedValue(prev, R, provenance=provenance)
        prev = R

    provenance.update(found=False, C=math.inf)
    return CertifiedValue(prev, math.inf, provenance=provenance)
