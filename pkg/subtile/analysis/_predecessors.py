from loguru import logger

from .._config import config


class PredecessorSet:
    """
    Minimal patches ``P`` with ``φⁿ(T) ⊂ φⁿ(P)``, for every level up to ``n``.

    Patches are frozensets of tile keys in the frame where ``T`` sits at the identity
    pose. ``stabilized_at`` is the least level ``j`` with equal sets at ``j`` and
    ``j + 1``, or ``None``. ``horizon_stable`` tells whether one more search level
    left every set unchanged (``None`` when not checked).
    """

    def __init__(self, system, tile, levels, horizon, horizon_stable):
        self._system = system
        self._tile = tile
        self._levels = tuple(frozenset(s) for s in levels)
        self._horizon = horizon
        self._horizon_stable = horizon_stable

    @property
    def system(self):
        return self._system

    @property
    def tile(self):
        return self._tile

    @property
    def n(self):
        return len(self._levels) - 1

    @property
    def patches(self):
        """Predecessor patches at level ``n``."""
        return self._levels[-1]

    @property
    def levels(self):
        return self._levels

    @property
    def horizon(self):
        return self._horizon

    @property
    def horizon_stable(self):
        return self._horizon_stable

    @property
    def stabilized_at(self):
        for j in range(len(self._levels) - 1):
            if self._levels[j] == self._levels[j + 1]:
                return j
        return None

    def nested(self):
        """Whether every level's set is contained in the next one."""
        return all(a <= b for a, b in zip(self._levels, self._levels[1:]))

    def patch(self, sys, key):
        """A predecessor, given as a set of tile keys, as a :class:`Patch`."""
        from ..core import Patch

        return Patch(sys, _tiles_of(sys, key))

    def to_dict(self):
        return {
            "system": self._system,
            "tile": self._tile,
            "n": self.n,
            "sizes": [len(s) for s in self._levels],
            "tiles_per_patch": [sorted(len(p) for p in s) for s in self._levels],
            "stabilized_at": self.stabilized_at,
            "horizon": self._horizon,
            "horizon_stable": self._horizon_stable,
            "nested": self.nested(),
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        for k, v in self.to_dict().items():
            aligned.add_item(k, v)
        return draw_title("Predecessor sets") + aligned.draw()


def _tiles_of(sys, key):
    from ..core import PlacedTile
    from ..exact import Motion, Point, Rotation

    F = sys.field
    tiles = []
    for proto, (c, s, x, y) in sorted(key):
        rot = Rotation(F.scalar(list(c)), F.scalar(list(s)), check=False)
        trans = Point(F.scalar(list(x)), F.scalar(list(y)))
        tiles.append(PlacedTile(proto, Motion(rot, trans)))
    return tiles


def _occurrences(sys, T, n, horizon, cap):
    """Predecessor patches of ``φⁿ(T)`` found inside ``φ^{n+horizon}(S)`` for all S."""
    from ..core import PlacedTile, supertile
    from ..exact import Motion

    pattern = supertile(sys, T, n, cap=cap)
    anchor = pattern[0]
    anchor_inv = anchor.pose.inverse()
    inv_scale = (sys.lam ** n).inverse()
    found = set()
    for S in sys.prototiles:
        Y = supertile(sys, S.id, horizon, cap=cap)
        parents = {a.digits: t for a, t in zip(Y.provenance, Y)}
        X = supertile(sys, S.id, n + horizon, cap=cap)
        for x, address in zip(X, X.provenance):
            if x.proto != anchor.proto:
                continue
            g = x.pose.compose(anchor_inv)
            images = [PlacedTile(t.proto, g.compose(t.pose)) for t in pattern]
            idx = [X.index(t.key) for t in images]
            if any(i is None for i in idx):
                continue
            ancestors = {parents[X.provenance[i].digits[:horizon]] for i in idx}
            g0 = Motion(g.rot, g.trans * inv_scale).inverse()
            found.add(frozenset((t.proto, g0.compose(t.pose).key) for t in ancestors))
    return found


def predecessor_sets(sys, T, n, horizon=None, check_horizon=True, cap=None):
    """
    Predecessor patches ``P_j(T)`` for ``j = 0..n``.

    ``P_j(T)`` holds the patches ``P`` of level-0 tiles with ``φʲ(T) ⊂ φʲ(P)`` that
    are minimal for inclusion. They are found by locating every copy of ``φʲ(T)``
    inside ``φ^{j+k}(S)`` for every prototile ``S`` and collecting the level-``k``
    tiles it descends from; ``k`` is the search horizon.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    T : int or str
        Prototile id or name.
    n : int
        Highest level.
    horizon : int, optional
        Search horizon ``k``. Defaults to ``config["analysis.default_horizon"]``.
    check_horizon : bool, optional
        Repeat the search with ``k + 1`` and record whether the sets changed.
        Defaults to ``True``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.

    Returns
    -------
    PredecessorSet

    Examples
    --------
    .. doctest::

        >>> from subtile.analysis import predecessor_sets
        >>> from subtile.systems import make_fibonacci
        >>> P = predecessor_sets(make_fibonacci(), "T0", 2)
        >>> [len(s) for s in P.levels], P.stabilized_at
        ([1, 2, 2], 1)
    """
    n = int(n)
    if n < 0:
        raise ValueError("Predecessor level must be non-negative.")
    if horizon is None:
        horizon = config["analysis.default_horizon"]
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError("Search horizon must be positive.")
    proto = sys.prototile(T)

    levels = [_occurrences(sys, proto.id, j, horizon, cap) for j in range(n + 1)]
    stable = None
    if check_horizon:
        wider = [_occurrences(sys, proto.id, j, horizon + 1, cap) for j in range(n + 1)]
        stable = wider == levels
        if not stable:
            logger.warning(
                f"predecessor sets of {proto.name} changed with horizon {horizon + 1}"
            )
            levels = wider
            horizon += 1
    result = PredecessorSet(sys.name, proto.name, levels, horizon, stable)
    sizes = [len(s) for s in result.levels]
    logger.info(f"{sys.name}:{proto.name} predecessor sizes {sizes}")
    return result
