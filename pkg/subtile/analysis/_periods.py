from loguru import logger

from ..exact import CertifiedValue


class AnalysisReport:
    """
    Named estimates of one tiling system, each a :class:`CertifiedValue` carrying the
    levels and radii it was computed at, plus per-level details.
    """

    def __init__(self, system, estimates, details=None):
        self._system = system
        self._estimates = dict(estimates)
        self._details = dict(details or {})

    @property
    def system(self):
        return self._system

    @property
    def estimates(self):
        return self._estimates

    @property
    def details(self):
        return self._details

    def __getitem__(self, name):
        return self._estimates[name]

    def to_dict(self):
        return {
            "system": self._system,
            "estimates": {k: v.to_dict() for k, v in self._estimates.items()},
            "details": self._details,
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        for name, v in self._estimates.items():
            hi = v.hi if v.finite else "inf"
            aligned.add_item(name, f"[{v.lo:.6g}, {hi}]")
        for name, v in self._details.items():
            aligned.add_item(name, v)
        return draw_title(f"Analysis of {self._system}") + aligned.draw()


def _float_motion(g):
    c, s = float(g.rot.c), float(g.rot.s)
    tx, ty = g.trans.to_float()
    return c, s, tx, ty


def _displacements(g, xy):
    from numpy import hypot

    c, s, tx, ty = _float_motion(g)
    x, y = xy[:, 0], xy[:, 1]
    return hypot(c * x - s * y + tx - x, s * x + c * y + ty - y)


def _within(g, vertices, xy, bound, bound2):
    """Whether ``|g·v − v| ≤ bound`` at every vertex, exactly."""
    d = _displacements(g, xy)
    tol = 1e-9 * (1 + bound)
    if (d > bound + tol).any():
        return False
    for k in (d >= bound - tol).nonzero()[0]:
        v = vertices[k]
        if (g.apply(v) - v).norm2() > bound2:
            return False
    return True


def _agrees(patch, g, order):
    """Whether ``patch ∪ g·patch`` is a patch, checking tiles in the given order."""
    from ..core import PlacedTile, interiors_disjoint

    protos = patch.system.prototiles
    for j in order:
        t = patch[j]
        image = PlacedTile(t.proto, g.compose(t.pose))
        if image in patch:
            continue
        poly = tuple(image.pose.apply(v) for v in protos[t.proto].polygon)
        xy = image.pose.apply(protos[t.proto].centroid).to_float()
        for i in patch.near(xy, protos[t.proto].float_radius):
            if not interiors_disjoint(patch.polygon(i), poly):
                return False
    return True


def find_periods(patch, max_disp, extra=None):
    """
    Periods of a patch with displacement at most ``max_disp``.

    A motion ``g`` is a period when ``P ∪ g·P`` is again a patch; the supports need
    not overlap. Candidates are the identity, the motions carrying one tile onto
    another tile of the same prototile, and the motions in ``extra``. The
    displacement ``sup_b |g·b − b|`` over the support is reached at a vertex.

    Parameters
    ----------
    patch : Patch
        Patch to examine.
    max_disp : float or Scalar
        Largest displacement.
    extra : iterable of Motion, optional
        Further candidates.

    Returns
    -------
    list of Motion
        The identity first, then the others by increasing displacement.
    """
    from numpy import asarray

    from ..core import as_scalar
    from ..exact import Motion

    field = patch.system.field
    bound = as_scalar(field, max_disp)
    bound2 = bound * bound
    fbound = float(bound)
    ident = Motion.identity(field)
    if len(patch) == 0:
        return [ident]

    vertices = patch.vertices()
    xy = asarray([v.to_float() for v in vertices], float)
    cxy = patch.centroids_float

    candidates = {}
    pairs = patch.tree.query_pairs(fbound * (1 + 1e-9) + 1e-9)
    for i, j in sorted(pairs):
        ti, tj = patch[i], patch[j]
        if ti.proto != tj.proto:
            continue
        g = tj.pose.compose(ti.pose.inverse())
        candidates.setdefault(g.key, (g, i))
        candidates.setdefault(g.inverse().key, (g.inverse(), j))
    for g in extra or ():
        candidates.setdefault(g.key, (g, 0))
    candidates.pop(ident.key, None)

    found = []
    for g, i in candidates.values():
        if not _within(g, vertices, xy, fbound, bound2):
            continue
        d = ((cxy - cxy[i]) ** 2).sum(axis=1)
        if _agrees(patch, g, d.argsort()):
            found.append((float(_displacements(g, xy).max()), g.key, g))
    found.sort(key=lambda item: item[:2])
    logger.debug(f"find_periods: {len(candidates)} candidates, {len(found)} periods")
    return [ident] + [g for _, _, g in found]


def period_displacement(patch, g):
    """Float value of ``sup_b |g·b − b|`` over the support of the patch."""
    from numpy import asarray

    xy = asarray([v.to_float() for v in patch.vertices()], float)
    if len(xy) == 0:
        return 0.0
    return float(_displacements(g, xy).max())


def period_bound_report(sys, levels, ratio=0.5, cap=None, verbose=False):
    """
    Empirical lower bound on period displacements relative to the patch size.

    For every level and prototile ``T`` the patch examined is the ball patch of
    ``φⁿ(T)`` about ``λⁿ·c``, ``c`` the centroid of ``T``, with the inscribed radius
    ``r = λⁿ·m``. Its least non-identity period displacement divided by ``r`` is
    recorded, or ``ratio`` when no period moves points by less than ``ratio·r``.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    levels : sequence of int
        Supertile levels.
    ratio : float, optional
        Largest displacement searched, relative to ``r``. Defaults to ``0.5``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.

    Returns
    -------
    AnalysisReport
        Estimate ``K`` (running minimum over the levels) with ``m`` and ``M``; the
        details hold ``K_by_level``.
    """
    from ..core import ball_patch, supertile

    levels = [int(n) for n in levels]
    if not levels:
        raise ValueError("At least one level is required.")
    ratio = float(ratio)

    per_level = []
    for n in levels:
        scale = sys.lam ** n
        r = scale * sys.inner_radius
        best = ratio
        for t in sys.prototiles:
            P = supertile(sys, t.id, n, cap=cap, verbose=verbose)
            Q = ball_patch(P, t.centroid * scale, r)
            periods = find_periods(Q, r * sys.field.scalar(ratio))
            for g in periods[1:]:
                best = min(best, period_displacement(Q, g) / float(r))
        per_level.append(best)
        logger.info(f"{sys.name} level {n}: period ratio {best:.6g}")

    K = min(per_level)
    m, M = float(sys.inner_radius), float(sys.max_diameter)
    estimates = {
        "K": CertifiedValue(K, K, provenance={"levels": levels, "ratio": ratio}),
        "m": CertifiedValue(m, m, exact=True),
        "M": CertifiedValue(M, M, exact=True),
    }
    details = {"levels": levels, "K_by_level": per_level}
    return AnalysisReport(sys.name, estimates, details)
