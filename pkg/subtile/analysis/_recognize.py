import math
from collections import namedtuple
from functools import lru_cache

from loguru import logger

from .._config import config
from .._errors import InconclusiveError, InconsistentPatchError, InvalidPatchError
from ..exact import CertifiedValue, expansion_conjugate

ParentAssignment = namedtuple("ParentAssignment", ["proto", "pose", "child"])
ParentAssignment.__doc__ = """
Level-1 parent of a tile: the parent's prototile id and pose, and the index of the
tile among the parent's children.
"""


@lru_cache(maxsize=None)
def _inverse(lam):
    return lam.inverse()


def parent_pose(sys, pose, proto, child):
    """
    Pose of the parent of prototile ``proto`` whose ``child``-th child sits at
    ``pose``: ``H⁻¹(pose ∘ h⁻¹)``.
    """
    from ..exact import Motion

    h = sys.rule.children[proto][child][1]
    m = pose.compose(h.inverse())
    return Motion(m.rot, m.trans * _inverse(sys.lam))


def _sources(sys, level, cap):
    """Every level supertile with the prototile of each tile's parent."""
    from ..core import supertile

    out = []
    for t in sys.prototiles:
        X = supertile(sys, t.id, level, cap=cap)
        Y = supertile(sys, t.id, level - 1, cap=cap)
        protos = {a.digits: s.proto for a, s in zip(Y.provenance, Y)}
        parents = [(protos[a.digits[:-1]], a.digits[-1]) for a in X.provenance]
        out.append((X, parents))
    return out


class RecognitionTable:
    """
    Map from the anchored ball patch of radius ``D`` around a tile to the set of
    ``(parent prototile, child index)`` pairs seen for tiles with that neighborhood.

    Only tiles whose ball lies inside their supertile are sampled.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    radius : float
        Neighborhood radius ``D``.
    level : int
        Level of the supertiles sampled, at least 1.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.
    """

    def __init__(self, sys, radius, level, cap=None, verbose=False, sources=None):
        from tqdm import tqdm

        from ._canonical import anchored_key

        self._system = sys.name
        self._radius = float(radius)
        self._level = int(level)
        if self._level < 1:
            raise ValueError("Recognition tables need supertiles of level at least 1.")
        if sources is None:
            sources = _sources(sys, self._level, cap)

        table = {}
        samples = 0
        for X, parents in sources:
            for i in tqdm(range(len(X)), desc="recognition", disable=not verbose):
                if not X.is_collared(X.centroid(i), self._radius):
                    continue
                key = anchored_key(X, i, self._radius)
                table.setdefault(key, set()).add(parents[i])
                samples += 1
        self._table = {k: frozenset(v) for k, v in table.items()}
        self._samples = samples
        logger.debug(f"recognition table D={radius}: {len(table)} keys")

    @property
    def system(self):
        return self._system

    @property
    def radius(self):
        return self._radius

    @property
    def level(self):
        return self._level

    @property
    def samples(self):
        """Number of tiles read into the table."""
        return self._samples

    def __len__(self):
        return len(self._table)

    def __contains__(self, key):
        return key in self._table

    def lookup(self, key):
        """Parent candidates for an anchored key, or ``None`` when never seen."""
        return self._table.get(key)

    @property
    def ambiguous(self):
        """Number of neighborhoods with more than one parent candidate."""
        return sum(1 for v in self._table.values() if len(v) > 1)

    @property
    def unique(self):
        return len(self._table) > 0 and self.ambiguous == 0

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        aligned.add_item("system", self._system)
        aligned.add_item("radius", self._radius)
        aligned.add_item("level", self._level)
        aligned.add_item("neighborhoods", len(self._table))
        aligned.add_item("ambiguous", self.ambiguous)
        aligned.add_item("samples", self._samples)
        return draw_title("Recognition table") + aligned.draw()


def _search_radius(sys, level, steps, cap, verbose):
    if steps is None:
        steps = config["analysis.radius_ladder_steps"]
    sources = _sources(sys, level, cap)
    m = float(sys.inner_radius)
    prev = 0.0
    last = None
    for k in range(int(steps)):
        D = m * 2 ** k
        table = RecognitionTable(sys, D, level, verbose=verbose, sources=sources)
        if table.samples == 0:
            break
        last = table
        if table.unique:
            provenance = {
                "level": level,
                "samples": table.samples,
                "neighborhoods": len(table),
                "found": True,
            }
            return CertifiedValue(prev, D, provenance=provenance), table
        prev = D
    provenance = {
        "level": level,
        "samples": 0 if last is None else last.samples,
        "found": False,
    }
    return CertifiedValue(prev, math.inf, provenance=provenance), last


def recognizability_radius(sys, level=None, steps=None, cap=None, verbose=False):
    """
    Least radius ``D`` on the ladder ``m, 2m, 4m, …`` for which the ball patch of
    radius ``D`` about every sampled tile determines the tile's level-1 parent.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    level : int, optional
        Supertile level sampled, at least 2. Defaults to
        ``config["analysis.recognition_level"]``.
    steps : int, optional
        Number of rungs. Defaults to ``config["analysis.radius_ladder_steps"]``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.

    Returns
    -------
    CertifiedValue
        Bracket ``[previous rung, D]``. When no rung works ``hi`` is infinite and
        ``found`` is ``False``; this does not assert that the system lacks unique
        composition.
    """
    if level is None:
        level = config["analysis.recognition_level"]
    level = int(level)
    if level < 2:
        raise ValueError("Recognizability needs supertiles of level at least 2.")
    value, _ = _search_radius(sys, level, steps, cap, verbose)
    logger.info(f"{sys.name} recognizability radius at level {level}: {value.hi}")
    return value


class DecompositionResult:
    """
    Level-1 parents of the tiles of a patch.

    ``assignments[i]`` is a :class:`ParentAssignment` or ``None`` when the
    neighborhood of tile ``i`` is not inside the patch, was not sampled by the
    table, or does not determine the parent.
    """

    def __init__(self, patch, assignments, parents, radius, unseen=0):
        self._patch = patch
        self._assignments = tuple(assignments)
        self._parents = parents
        self._radius = radius
        self._unseen = unseen

    @property
    def assignments(self):
        return self._assignments

    @property
    def parents(self):
        """Patch of the distinct determined parents."""
        return self._parents

    @property
    def radius(self):
        return self._radius

    @property
    def determined(self):
        return sum(1 for a in self._assignments if a is not None)

    @property
    def undetermined(self):
        return len(self._assignments) - self.determined

    @property
    def unseen(self):
        """Number of collared tiles whose neighborhood the table never saw."""
        return self._unseen

    def region(self):
        """The determined tiles, as a patch."""
        keep = [i for i, a in enumerate(self._assignments) if a is not None]
        return self._patch.subpatch(keep)

    def to_dict(self):
        return {
            "tiles": len(self._assignments),
            "determined": self.determined,
            "undetermined": self.undetermined,
            "unseen": self._unseen,
            "parents": len(self._parents),
            "radius": self._radius,
        }

    def __repr__(self):
        from .._display import AlignedText, draw_title

        aligned = AlignedText()
        for k, v in self.to_dict().items():
            aligned.add_item(k, v)
        return draw_title("Decomposition") + aligned.draw()


def decompose(sys, patch, table=None, level=None, cap=None, verbose=False):
    """
    Level-1 parent of every tile whose recognition neighborhood lies inside the
    patch.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    patch : Patch
        Patch assumed admissible.
    table : RecognitionTable, optional
        Table to read parents from. By default a table is built at the radius
        returned by :func:`recognizability_radius` for ``level``.
    level : int, optional
        Level for the default table. Defaults to
        ``config["analysis.recognition_level"]``.
    cap : int, optional
        Tile cap forwarded to :func:`subtile.core.supertile`.
    verbose : bool, optional
        Show progress bars. Defaults to ``False``.

    Returns
    -------
    DecompositionResult

    Raises
    ------
    InconclusiveError
        If no recognition radius was found for the default table.
    InconsistentPatchError
        If the parents read off contradict each other or overlap.
    """
    from tqdm import tqdm

    from ..core import Patch, PlacedTile
    from ._canonical import anchored_key

    if patch.system.name != sys.name:
        raise ValueError(f"Patch of {patch.system.name} decomposed with {sys.name}.")
    if table is None:
        if level is None:
            level = config["analysis.recognition_level"]
        value, table = _search_radius(sys, int(level), None, cap, verbose)
        if not value.finite:
            raise InconclusiveError(f"No recognition radius found for {sys.name}.")
    D = table.radius

    assignments = []
    unseen = 0
    for i in tqdm(range(len(patch)), desc="decompose", disable=not verbose):
        if not patch.is_collared(patch.centroid(i), D):
            assignments.append(None)
            continue
        candidates = table.lookup(anchored_key(patch, i, D))
        if candidates is None:
            unseen += 1
            assignments.append(None)
            continue
        if len(candidates) > 1:
            assignments.append(None)
            continue
        [(q, j)] = candidates
        pose = parent_pose(sys, patch[i].pose, q, j)
        assignments.append(ParentAssignment(q, pose, j))

    parents = {}
    for a in assignments:
        if a is not None:
            parents.setdefault((a.proto, a.pose.key), a)

    for a in parents.values():
        H = expansion_conjugate(a.pose, sys.lam)
        for c, (q, h) in enumerate(sys.rule.children[a.proto]):
            child = PlacedTile(q, H.compose(h))
            k = patch.index(child.key)
            if k is None or assignments[k] is None:
                continue
            b = assignments[k]
            if b.child != c or b.proto != a.proto or b.pose != a.pose:
                raise InconsistentPatchError(
                    f"Tile {child!r} is read as child {b.child} of one parent and "
                    f"child {c} of another."
                )

    tiles = [PlacedTile(a.proto, a.pose) for a in parents.values()]
    parent_patch = Patch(sys, tiles)
    try:
        parent_patch.validate()
    except InvalidPatchError as e:
        raise InconsistentPatchError(f"Decomposition parents overlap: {e}") from e
    if unseen:
        logger.debug(
            f"{unseen} neighborhoods not in the level {table.level} table of {sys.name}"
        )
    result = DecompositionResult(patch, assignments, parent_patch, D, unseen)
    logger.info(f"decomposed {len(patch)} tiles: {result.determined} determined")
    return result
