from loguru import logger

from .._errors import InvalidPatchError


class CanonicalPatch:
    """
    Congruence class of a patch under orientation-preserving motions.

    The encoding is the lexicographically least sorted list of ``(prototile id, pose
    key)`` over the frames that put one tile of the least prototile id at the
    identity pose. ``stabilizer`` counts the frames reaching that least encoding: it
    is the number of motions mapping the patch onto itself.
    """

    __slots__ = ("_encoding", "_frames")

    def __init__(self, encoding, frames=()):
        self._encoding = tuple(encoding)
        self._frames = tuple(frames)

    @property
    def encoding(self):
        return self._encoding

    @property
    def stabilizer(self):
        return max(len(self._frames), 1)

    @property
    def frame(self):
        """A motion carrying the input patch onto its canonical position."""
        return self._frames[0] if self._frames else None

    @property
    def frames(self):
        """Every motion carrying the input patch onto its canonical position."""
        return self._frames

    def __len__(self):
        return len(self._encoding)

    def __eq__(self, other):
        if not isinstance(other, CanonicalPatch):
            return NotImplemented
        return self._encoding == other._encoding

    def __lt__(self, other):
        return self._encoding < other._encoding

    def __hash__(self):
        return hash(self._encoding)

    def __repr__(self):
        n, s = len(self._encoding), self.stabilizer
        return f"CanonicalPatch({n} tiles, stabilizer={s})"


def _encoding_in_frame(patch, g):
    return tuple(sorted((t.proto, g.compose(t.pose).key) for t in patch))


def canonicalize(patch):
    """
    Canonical form of a patch up to orientation-preserving motions.

    Parameters
    ----------
    patch : Patch
        Nonempty patch.

    Returns
    -------
    CanonicalPatch
        Equal for two patches exactly when one is a motion of the other.

    Raises
    ------
    InvalidPatchError
        If the patch is empty.

    Examples
    --------
    .. doctest::

        >>> from subtile.analysis import canonicalize
        >>> from subtile.core import Patch, PlacedTile
        >>> from subtile.exact import Motion, Point, Rotation
        >>> from subtile.systems import make_pinwheel
        >>> sys = make_pinwheel(1, 2)
        >>> F = sys.field
        >>> g = Motion(Rotation(F.scalar("3/5"), F.scalar("4/5")), Point.of(F, 7, -2))
        >>> P = Patch(sys, [PlacedTile(0, g)])
        >>> Q = Patch(sys, [PlacedTile(0, Motion.identity(F))])
        >>> canonicalize(P) == canonicalize(Q)
        True
    """
    if len(patch) == 0:
        raise InvalidPatchError("Cannot canonicalize an empty patch.")

    least = min(t.proto for t in patch)
    best = None
    frames = []
    for t in patch:
        if t.proto != least:
            continue
        g = t.pose.inverse()
        enc = _encoding_in_frame(patch, g)
        if best is None or enc < best:
            best, frames = enc, [g]
        elif enc == best:
            frames.append(g)
    return CanonicalPatch(best, frames)


def anchored_key(patch, i, radius):
    """
    Encoding of the ball patch of the given radius about the centroid of tile ``i``,
    in the frame that puts tile ``i`` at the identity pose.
    """
    from ..core import ball_patch

    t = patch[i]
    ball = ball_patch(patch, patch.centroid(i), radius)
    return _encoding_in_frame(ball, t.pose.inverse())


def sample_centers(patch):
    """
    Ball centers used to enumerate local patches: every tile vertex, every edge
    midpoint and every tile centroid, without repetition.
    """
    from ..core import polygon_edges

    seen = {}
    for i in range(len(patch)):
        for a, b in polygon_edges(patch.polygon(i)):
            seen.setdefault(a.key, a)
            m = (a + b) / 2
            seen.setdefault(m.key, m)
        c = patch.centroid(i)
        seen.setdefault(c.key, c)
    return [seen[k] for k in sorted(seen)]


class PatchLibrary:
    """
    Canonical ball patches of one radius collected from the supertiles of one level.
    """

    def __init__(self, system, radius, level, patches):
        self._system = system
        self._radius = float(radius)
        self._level = int(level)
        self._patches = frozenset(patches)

    @property
    def system(self):
        """Name of the tiling system."""
        return self._system

    @property
    def radius(self):
        return self._radius

    @property
    def level(self):
        return self._level

    @property
    def patches(self):
        return self._patches

    def __len__(self):
        return len(self._patches)

    def __contains__(self, canonical):
        return canonical in self._patches

    def __iter__(self):
        return iter(sorted(self._patches))

    def to_dict(self):
        sizes = {}
        for p in self._patches:
            sizes[len(p)] = sizes.get(len(p), 0) + 1
        return {
            "system": self._system,
            "radius": self._radius,
            "level": self._level,
            "count": len(self._patches),
            "tiles_per_patch": dict(sorted(sizes.items())),
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        for k, v in self.to_dict().items():
            aligned.add_item(k, v)
        return draw_title("Patch library") + aligned.draw()


def _ball_classes(patch, r, verbose=False):
    """Canonical class of the ball patch at every collared sample center."""
    from ..core import ball_patch
    from ..threads import parallel_map

    centers = [a for a in sample_centers(patch) if patch.is_collared(a, r)]

    def job(a):
        return ball_patch(patch, a, r)

    balls = parallel_map(job, centers, verbose=verbose, desc="ball patches")
    classes = {}
    seen = {}
    for a, b in zip(centers, balls):
        keys = b.keys()
        if keys not in seen:
            seen[keys] = canonicalize(b)
        classes[a.key] = (a, seen[keys])
    return classes


def enumerate_patches(sys, r, level, cap=None, verbose=False):
    """
    Distinct ball patches of radius ``r`` inside the level-``level`` supertiles.

    Balls are centered at the sample points of :func:`sample_centers` and kept when
    they lie inside the supertile.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    r : float
        Ball radius.
    level : int
        Supertile level.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.

    Returns
    -------
    set of CanonicalPatch
    """
    from ..core import supertile

    if float(r) <= 0:
        raise ValueError("Ball radius must be positive.")
    out = set()
    for t in sys.prototiles:
        P = supertile(sys, t.id, level, cap=cap, verbose=verbose)
        out.update(c for _, c in _ball_classes(P, r, verbose).values())
    logger.info(f"{sys.name}: {len(out)} ball patches of radius {r} at level {level}")
    return out


def patch_library(sys, r, level, cap=None, verbose=False):
    """:func:`enumerate_patches` wrapped as a :class:`PatchLibrary`."""
    patches = enumerate_patches(sys, r, level, cap=cap, verbose=verbose)
    return PatchLibrary(sys.name, r, level, patches)


def local_admissibility(sys, patch, r, library):
    """
    Whether every collared ball patch of radius ``r`` of the input is congruent to a
    member of the library.

    Raises
    ------
    ValueError
        If the library was built for another radius or system.
    """
    if library.system != sys.name or patch.system.name != sys.name:
        raise ValueError(f"Library of {library.system} used with {sys.name}.")
    if abs(library.radius - float(r)) > 0:
        raise ValueError(f"Library radius {library.radius} differs from {r}.")
    if len(patch) == 0:
        return True
    for a, c in _ball_classes(patch, r).values():
        if c not in library:
            logger.debug(f"ball patch at {a!r} is not in the library")
            return False
    return True
