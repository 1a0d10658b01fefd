import math

from loguru import logger

from .._config import config
from ..exact import CertifiedValue


def _recentered(sys, patch, i, radius):
    """Ball patch about tile ``i`` moved so the tile is in prototile position with its
    centroid at the origin."""
    from ..core import ball_patch
    from ..exact import Motion

    t = patch[i]
    c = sys.prototiles[t.proto].centroid
    g = Motion.translation(-c).compose(t.pose.inverse())
    return ball_patch(patch, patch.centroid(i), radius).transformed(g)


def code_radius_profile(
    sys, n_prime, samples, level=None, seed=0, steps=8, cap=None, verbose=False
):
    """
    Empirical radius of the canonical code ``x ↦ φ(x)``.

    Pairs of patches are taken around two tiles of the same prototile, each moved to
    the prototile position. A rung ``n`` of the ladder ``n′/steps, 2n′/steps, …, n′``
    passes when every sampled pair that agrees on the ball ``B_n`` about the origin
    has substitution images agreeing on ``B_{n′}``. Agreement means equal sets of
    tiles meeting the open ball.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    n_prime : float
        Image radius ``n′``.
    samples : int
        Number of sampled pairs.
    level : int, optional
        Supertile level the pairs are drawn from. Defaults to
        ``config["analysis.code_level"]``.
    seed : int, optional
        Seed of the pair sampler. Defaults to ``0``.
    steps : int, optional
        Number of rungs. Defaults to ``8``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show a progress bar. Defaults to ``False``.

    Returns
    -------
    CertifiedValue
        Bracket ``[previous rung, least passing rung]``, with the number of agreeing
        pairs per rung in the provenance.
    """
    from numpy.random import RandomState
    from tqdm import tqdm

    from ..core import ball_patch, substitute, supertile
    from ..exact import Point

    n_prime = float(n_prime)
    if n_prime <= 0:
        raise ValueError("Image radius must be positive.")
    samples = int(samples)
    if level is None:
        level = config["analysis.code_level"]

    groups = {}
    patches = []
    for t in sys.prototiles:
        P = supertile(sys, t.id, level, cap=cap)
        patches.append(P)
        for i in range(len(P)):
            if P.is_collared(P.centroid(i), n_prime):
                groups.setdefault(P[i].proto, []).append((len(patches) - 1, i))
    protos = sorted(q for q, members in groups.items() if len(members) > 1)
    if not protos:
        raise ValueError(f"No tile of level {level} is collared at radius {n_prime}.")

    rungs = [n_prime * k / steps for k in range(1, int(steps) + 1)]
    origin = Point(sys.field.zero, sys.field.zero)
    random = RandomState(seed)
    agreeing = [0] * len(rungs)
    violated = [False] * len(rungs)
    for _ in tqdm(range(samples), desc="code pairs", disable=not verbose):
        members = groups[protos[random.randint(len(protos))]]
        a, b = random.choice(len(members), 2, replace=False)
        pa, ia = members[a]
        pb, ib = members[b]
        x = _recentered(sys, patches[pa], ia, n_prime)
        y = _recentered(sys, patches[pb], ib, n_prime)

        fx = ball_patch(substitute(sys, x), origin, n_prime).keys()
        fy = ball_patch(substitute(sys, y), origin, n_prime).keys()
        images_agree = fx == fy
        for k, n in enumerate(rungs):
            if ball_patch(x, origin, n).keys() != ball_patch(y, origin, n).keys():
                break
            agreeing[k] += 1
            if not images_agree:
                violated[k] = True

    provenance = {
        "n_prime": n_prime,
        "samples": samples,
        "level": level,
        "seed": seed,
        "agreeing": dict(zip(rungs, agreeing)),
    }
    prev = 0.0
    for n, bad in zip(rungs, violated):
        if not bad:
            logger.info(f"{sys.name} code radius for n′={n_prime}: {n}")
            return CertifiedValue(prev, n, provenance=provenance)
        prev = n
    return CertifiedValue(prev, math.inf, provenance=provenance)
