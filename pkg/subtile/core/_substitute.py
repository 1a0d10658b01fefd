from loguru import logger

from .._config import config
from .._errors import ResourceLimitError
from ..exact import Motion, expansion_conjugate
from ._patch import Patch
from ._tiles import PlacedTile, SupertileAddress, address_extend


def substitute(sys, patch):
    """
    Apply the substitution to every tile of a patch.

    A tile ``g·T`` is replaced by ``H(g)·h·q`` for every child ``(q, h)`` of ``T``,
    where ``H(g)`` has the rotation of ``g`` and λ times its translation.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    patch : Patch
        Patch of ``sys``.

    Returns
    -------
    Patch
        ``φ(patch)``. Provenance addresses, when present, gain one digit.
    """
    lam = sys.lam
    children = sys.rule.children
    tiles = []
    prov = [] if patch.provenance is not None else None
    for i, t in enumerate(patch):
        H = expansion_conjugate(t.pose, lam)
        for j, (q, h) in enumerate(children[t.proto]):
            tiles.append(PlacedTile(q, H.compose(h)))
            if prov is not None:
                prov.append(address_extend(patch.provenance[i], j))

    support = None
    if patch.support is not None:
        support = [p * lam for p in patch.support]
    return Patch(sys, tiles, prov, support)


def supertile(sys, T, n, cap=None, verbose=False):
    """
    Level-``n`` supertile φⁿ(T) with full provenance.

    Parameters
    ----------
    sys : TilingSystem
        Tiling system.
    T : int or str
        Prototile id or name.
    n : int
        Level, ``n ≥ 0``.
    cap : int, optional
        Largest tile count allowed. Defaults to ``config["core.tile_cap"]``.
    verbose : bool, optional
        Show a progress bar. Defaults to ``False``.

    Returns
    -------
    Patch
        The supertile, with its support polygon ``λⁿ·T``.

    Raises
    ------
    ResourceLimitError
        If the supertile would hold more than ``cap`` tiles.
    """
    from tqdm import tqdm

    n = int(n)
    if n < 0:
        raise ValueError("Supertile level must be non-negative.")
    if cap is None:
        cap = config["core.tile_cap"]
    proto = sys.prototile(T)

    count = sum(tile_counts(sys, proto.id, n))
    if count > cap:
        msg = f"φ^{n}({proto.name}) has {count} tiles, above the cap of {cap}."
        raise ResourceLimitError(msg)

    patch = Patch(
        sys,
        [PlacedTile(proto.id, Motion.identity(sys.field))],
        [SupertileAddress(proto.id, ())],
        proto.polygon,
    )
    for _ in tqdm(range(n), desc=f"φ({proto.name})", disable=not verbose):
        patch = substitute(sys, patch)
    logger.debug(f"supertile {sys.name}:{proto.name} level {n}: {len(patch)} tiles")
    return patch


def transition_matrix(sys):
    """
    Transition matrix ``M``: ``M[i, j]`` counts the type-``i`` children of prototile
    ``j``.

    Examples
    --------
    .. doctest::

        >>> from subtile.core import transition_matrix
        >>> from subtile.systems import make_fibonacci
        >>> print(transition_matrix(make_fibonacci()))
        [[0 1]
         [1 1]]
    """
    from numpy import zeros

    k = len(sys.prototiles)
    M = zeros((k, k), int)
    for j, children in enumerate(sys.rule.children):
        for q, _ in children:
            M[q, j] += 1
    return M


def tile_counts(sys, T, n):
    """Number of tiles of each type in φⁿ(T), as Python integers."""
    from numpy import asarray

    M = asarray(transition_matrix(sys), object)
    v = asarray([0] * len(sys.prototiles), object)
    v[sys.prototile(T).id] = 1
    for _ in range(int(n)):
        v = M.dot(v)
    return [int(c) for c in v]


def primitivity_power(sys):
    """
    Least ``p`` with ``Mᵖ`` strictly positive, or ``None`` when no power up to the
    bound ``(k − 1)² + 1`` is.
    """
    M = (transition_matrix(sys) > 0).astype(int)
    k = M.shape[0]
    P = M.copy()
    for p in range(1, (k - 1) ** 2 + 2):
        if P.all():
            return p
        P = ((P @ M) > 0).astype(int)
    return None


def perron_eigenvalue(sys):
    """Largest eigenvalue modulus of the transition matrix."""
    from numpy import abs as npy_abs
    from numpy.linalg import eigvals

    return float(npy_abs(eigvals(transition_matrix(sys).astype(float))).max())


def parallel_recurrence(sys, T, bound=12):
    """
    Least ``n ≤ bound`` such that φⁿ(T) holds a tile of type ``T`` with the same
    orientation as ``T``, or ``None``.

    The search walks (type, rotation) states level by level and never builds the
    patches.
    """
    T = sys.prototile(T).id
    ident = Motion.identity(sys.field).rot
    frontier = {(T, ident.key): ident}
    for n in range(1, int(bound) + 1):
        nxt = {}
        for (q, _), rot in frontier.items():
            for c, h in sys.rule.children[q]:
                r = rot.compose(h.rot)
                nxt.setdefault((c, r.key), r)
        if (T, ident.key) in nxt:
            return n
        frontier = nxt
    return None
