from functools import cmp_to_key

from .._errors import InvalidPatchError
from ._predicates import (
    collinear_overlap,
    interiors_disjoint,
    point_in_polygon,
    polygon_edges,
    segment_dist2_sign,
)
from ._tiles import PlacedTile


def as_scalar(field, r):
    """Exact field element for a radius given as Scalar, int, Fraction, str or float."""
    from ..exact import Scalar, to_fraction

    if isinstance(r, Scalar):
        return field.scalar(r)
    return field.scalar(to_fraction(r))


class Patch:
    """
    Finite set of placed tiles of a tiling system.

    Parameters
    ----------
    system : TilingSystem
        System the tiles belong to.
    tiles : iterable of PlacedTile
        Tiles; repeated tiles are kept once.
    provenance : iterable of SupertileAddress, optional
        Address of every tile inside the supertile it was generated from.
    support : sequence of Point, optional
        Convex polygon equal to the union of the tiles, when known (supertiles).

    Two patches are equal when they hold the same set of placed tiles.
    """

    def __init__(self, system, tiles=(), provenance=None, support=None):
        tiles = list(tiles)
        prov = None if provenance is None else list(provenance)
        if prov is not None and len(prov) != len(tiles):
            raise ValueError("Provenance must give one address per tile.")

        self._system = system
        self._index = {}
        kept = []
        kept_prov = [] if prov is not None else None
        for i, t in enumerate(tiles):
            if not isinstance(t, PlacedTile):
                t = PlacedTile(*t)
            if t.key in self._index:
                continue
            self._index[t.key] = len(kept)
            kept.append(t)
            if prov is not None:
                kept_prov.append(prov[i])

        self._tiles = tuple(kept)
        self._provenance = None if kept_prov is None else tuple(kept_prov)
        self._support = None if support is None else tuple(support)
        self._polygons = [None] * len(kept)
        self._centroids = None
        self._radii = None
        self._tree = None
        self._boundary = None
        self._boundary_float = None

    @property
    def system(self):
        return self._system

    @property
    def tiles(self):
        return self._tiles

    @property
    def provenance(self):
        return self._provenance

    @property
    def support(self):
        return self._support

    def __len__(self):
        return len(self._tiles)

    def __iter__(self):
        return iter(self._tiles)

    def __getitem__(self, i):
        return self._tiles[i]

    def __contains__(self, tile):
        return tile.key in self._index

    def keys(self):
        return frozenset(self._index)

    def index(self, key):
        """Position of the tile with the given key, or ``None``."""
        return self._index.get(key)

    def __eq__(self, other):
        if not isinstance(other, Patch):
            return NotImplemented
        if self._system.name != other._system.name:
            return False
        return self._index.keys() == other._index.keys()

    def __hash__(self):
        return hash(frozenset(self._index))

    def polygon(self, i):
        """Exact vertices of tile ``i``."""
        poly = self._polygons[i]
        if poly is None:
            t = self._tiles[i]
            proto = self._system.prototiles[t.proto]
            poly = tuple(t.pose.apply(v) for v in proto.polygon)
            self._polygons[i] = poly
        return poly

    def centroid(self, i):
        t = self._tiles[i]
        return t.pose.apply(self._system.prototiles[t.proto].centroid)

    def mark(self, i):
        t = self._tiles[i]
        mark = self._system.prototiles[t.proto].mark
        if mark is None:
            return None
        return (t.pose.apply(mark[0]), t.pose.apply(mark[1]))

    @property
    def centroids_float(self):
        from numpy import asarray, empty

        if self._centroids is None:
            if len(self._tiles) == 0:
                self._centroids = empty((0, 2))
            else:
                rows = [self.centroid(i).to_float() for i in range(len(self))]
                self._centroids = asarray(rows, float)
        return self._centroids

    @property
    def radii_float(self):
        from numpy import asarray

        if self._radii is None:
            protos = self._system.prototiles
            radii = [protos[t.proto].float_radius for t in self._tiles]
            self._radii = asarray(radii, float)
        return self._radii

    @property
    def max_radius(self):
        return max((t.float_radius for t in self._system.prototiles), default=0.0)

    @property
    def tree(self):
        from scipy.spatial import cKDTree

        if self._tree is None:
            self._tree = cKDTree(self.centroids_float)
        return self._tree

    def near(self, xy, radius):
        """Indices of tiles that may meet the closed disk of the given float radius."""
        if len(self._tiles) == 0:
            return []
        return sorted(self.tree.query_ball_point(xy, radius + self.max_radius))

    def subpatch(self, indices):
        indices = sorted(indices)
        prov = None
        if self._provenance is not None:
            prov = [self._provenance[i] for i in indices]
        return Patch(self._system, [self._tiles[i] for i in indices], prov)

    def transformed(self, g):
        """The patch ``g·P`` (provenance addresses are kept)."""
        tiles = [PlacedTile(t.proto, g.compose(t.pose)) for t in self._tiles]
        support = None
        if self._support is not None:
            support = [g.apply(p) for p in self._support]
        return Patch(self._system, tiles, self._provenance, support)

    def validate(self):
        """
        Raise :class:`InvalidPatchError` unless the tiles have pairwise disjoint
        interiors.
        """
        if len(self._tiles) < 2:
            return
        pairs = self.tree.query_pairs(2 * self.max_radius)
        for i, j in sorted(pairs):
            if not interiors_disjoint(self.polygon(i), self.polygon(j)):
                ti, tj = self._tiles[i], self._tiles[j]
                raise InvalidPatchError(f"Tiles {ti!r} and {tj!r} overlap.")

    def vertices(self):
        """Distinct exact vertices of all tiles."""
        seen = {}
        for i in range(len(self)):
            for p in self.polygon(i):
                seen.setdefault(p.key, p)
        return list(seen.values())

    def support_boundary(self):
        """
        Boundary of the support as exact segments (degenerate segments for the two
        ends of a 1-D patch).
        """
        if self._boundary is not None:
            return self._boundary
        if self._support is not None:
            self._boundary = polygon_edges(self._support)
        elif self._system.dim == 1:
            self._boundary = _interval_boundary(self)
        else:
            self._boundary = _polygon_boundary(self)
        return self._boundary

    def is_collared(self, a, r):
        """
        Whether the open ball of radius ``r`` about ``a`` lies inside the support.
        """
        from numpy import asarray, hypot, maximum, minimum, where

        r2 = as_scalar(self._system.field, r)
        r2 = r2 * r2
        if self._support is not None:
            if not point_in_polygon(a, self._support):
                return False
        else:
            xy = a.to_float()
            hits = (point_in_polygon(a, self.polygon(i)) for i in self.near(xy, 0.0))
            if not any(hits):
                return False

        segments = self.support_boundary()
        if self._boundary_float is None:
            self._boundary_float = asarray(
                [u.to_float() + v.to_float() for u, v in segments], float
            ).reshape(-1, 4)
        seg = self._boundary_float
        x, y = a.to_float()
        dx = seg[:, 2] - seg[:, 0]
        dy = seg[:, 3] - seg[:, 1]
        dd = dx * dx + dy * dy
        dd1 = where(dd > 0, dd, 1.0)
        t = ((x - seg[:, 0]) * dx + (y - seg[:, 1]) * dy) / dd1
        t = minimum(maximum(t, 0.0), 1.0)
        dist = hypot(x - seg[:, 0] - t * dx, y - seg[:, 1] - t * dy)
        rf = float(r2) ** 0.5
        for k in where(dist <= rf * (1 + 1e-6) + 1e-9)[0]:
            u, v = segments[k]
            if segment_dist2_sign(a, u, v, r2) < 0:
                return False
        return True

    def __repr__(self):
        from collections import Counter

        from .._display import AlignedText, draw_title

        names = [self._system.prototiles[t.proto].name for t in self._tiles]
        aligned = AlignedText()
        aligned.add_item("system", self._system.name)
        aligned.add_item("tiles", len(self._tiles))
        aligned.add_item("types", dict(sorted(Counter(names).items())))
        aligned.add_item("provenance", self._provenance is not None)
        return draw_title("Patch") + aligned.draw()


def _interval_boundary(patch):
    from collections import Counter

    count = Counter()
    points = {}
    for i in range(len(patch)):
        for p in patch.polygon(i):
            count[p.key] += 1
            points[p.key] = p
    return [(points[k], points[k]) for k in sorted(count) if count[k] == 1]


def _polygon_boundary(patch):
    out = []
    for i in range(len(patch)):
        poly = patch.polygon(i)
        xy = patch.centroids_float[i]
        neighbours = [j for j in patch.near(xy, patch.radii_float[i]) if j != i]
        for a, b in polygon_edges(poly):
            covered = []
            for j in neighbours:
                for c, d in polygon_edges(patch.polygon(j)):
                    ov = collinear_overlap(a, b, c, d)
                    if ov is not None:
                        covered.append(ov)
            out.extend(_uncovered(a, b, covered))
    return out


def _compare(s, t):
    return (s - t).sign()


def _uncovered(a, b, covered):
    u = b - a
    uu = u.norm2()
    zero = uu.field.zero
    covered.sort(key=cmp_to_key(lambda p, q: _compare(p[0], q[0])))
    gaps = []
    pos = zero
    for lo, hi in covered:
        if lo > pos:
            gaps.append((pos, lo))
        if hi > pos:
            pos = hi
    if pos < uu:
        gaps.append((pos, uu))

    def at(t):
        if t.is_zero():
            return a
        if t == uu:
            return b
        return a + u * (t / uu)

    return [(at(lo), at(hi)) for lo, hi in gaps]


def patch_area(patch):
    """Exact total area of the tiles (total length for 1-D systems)."""
    field = patch.system.field
    protos = patch.system.prototiles
    total = field.zero
    for t in patch:
        total = total + protos[t.proto].measure()
    return total


def patches_agree_on_overlap(P, Q):
    """
    Whether ``P ∪ Q`` is a patch: any two tiles either coincide or have disjoint
    interiors.
    """
    if len(P) == 0 or len(Q) == 0:
        return True
    for j, t in enumerate(Q):
        if t.key in P._index:
            continue
        poly = Q.polygon(j)
        xy = Q.centroids_float[j]
        for i in P.near(xy, Q.radii_float[j]):
            if not interiors_disjoint(P.polygon(i), poly):
                return False
    return True


def ball_patch(patch, a, r):
    """
    Tiles of ``patch`` whose closed region meets the open ball of radius ``r``
    about ``a``.

    Parameters
    ----------
    patch : Patch
        Source patch.
    a : Point
        Ball center.
    r : Scalar, float or Fraction
        Positive radius.

    Returns
    -------
    Patch
        The selected tiles, in the order of ``patch``, with their provenance.
    """
    from ._predicates import ball_meets_polygon

    r = as_scalar(patch.system.field, r)
    if r.sign() <= 0:
        raise ValueError("Ball radius must be positive.")
    r2 = r * r
    keep = [
        i
        for i in patch.near(a.to_float(), float(r))
        if ball_meets_polygon(a, r2, patch.polygon(i))
    ]
    return patch.subpatch(keep)
