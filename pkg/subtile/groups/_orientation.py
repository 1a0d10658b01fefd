from fractions import Fraction

from loguru import logger

from ._rotations import UnitRotation
from ._subgroup import subgroup_from_generators


def expected_orientation_group(name):
    """
    Relative orientation group recorded in the system catalog, or ``None`` when the
    catalog has no expectation for ``name``.
    """
    from ..systems import catalog_entry

    try:
        entry = catalog_entry(name)
    except ValueError:
        return None
    if entry.g_ro is None:
        return None
    kind, value = entry.g_ro
    if kind == "cyclic":
        root = UnitRotation.root_of_unity(Fraction(1, value))
        return subgroup_from_generators([root])
    return subgroup_from_generators([UnitRotation.of(c, s) for c, s in value])


def congruence_rotations(sys, r, level, cap=None, verbose=False):
    """
    Rotational parts of the motions between congruent ball patches of radius ``r``
    found in the level supertiles, self-congruences included.

    Returns
    -------
    list of Rotation
        Distinct rotations other than the identity.
    """
    from ..analysis._canonical import _ball_classes
    from ..core import supertile

    classes = {}
    for t in sys.prototiles:
        P = supertile(sys, t.id, level, cap=cap, verbose=verbose)
        for _, c in _ball_classes(P, r, verbose).values():
            frames = classes.setdefault(c.encoding, {})
            for f in c.frames:
                frames.setdefault(f.key, f)

    rotations = {}
    for frames in classes.values():
        ref = None
        for f in frames.values():
            if ref is None:
                ref = f.rot
                continue
            rot = f.rot.inverse().compose(ref)
            if not rot.is_identity():
                rotations.setdefault(rot.key, rot)
    logger.debug(f"{len(classes)} patch classes, {len(rotations)} rotations")
    return [rotations[k] for k in sorted(rotations)]


def relative_orientation_group(sys, r, level, cap=None, verbose=False):
    """
    Rotation group generated by the congruences between equal ball patches.

    Two ball patches of radius ``r`` taken from the level-``level`` supertiles are
    equal when they have the same canonical form; the motion carrying one onto the
    other is a congruence, and its rotational part is collected. The result is the
    group generated by what was found at this radius and level; it is compared with
    the catalog expectation when one exists.

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
    RotationSubgroup
    """
    gens = congruence_rotations(sys, r, level, cap=cap, verbose=verbose)
    G = subgroup_from_generators([UnitRotation(g) for g in gens])
    k, rank = G.torsion_order, G.rank
    logger.info(f"{sys.name} orientation group at r={r}: Z_{k} + Z^{rank}")
    expected = expected_orientation_group(sys.name)
    if expected is not None and G != expected:
        logger.warning(f"{sys.name} orientation group differs from the catalog entry")
    return G
