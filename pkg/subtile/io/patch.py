"""
Patch files.

A patch file is a JSON document with format ``subtile-patch``. It names the system
the tiles belong to and lists every placed tile with its exact pose, and optionally
the supertile address of every tile and the support polygon.
"""
from .._errors import InvalidPatchError, SubtileError
from ._codec import (
    FORMAT_VERSION,
    decode_motion,
    decode_point,
    dump_json,
    encode_motion,
    encode_point,
    load_json,
    read_text,
    write_text,
)

KIND = "subtile-patch"


def to_dict(patch):
    tiles = [{"proto": t.proto, "pose": encode_motion(t.pose)} for t in patch]
    provenance = None
    if patch.provenance is not None:
        provenance = [[a.root, list(a.digits)] for a in patch.provenance]
    support = None
    if patch.support is not None:
        support = [encode_point(p) for p in patch.support]
    return {
        "format": KIND,
        "version": FORMAT_VERSION,
        "system": patch.system.name,
        "tiles": tiles,
        "provenance": provenance,
        "support": support,
    }


def from_dict(doc, system=None):
    from ..core import Patch, PlacedTile, SupertileAddress
    from ..systems import get_system

    try:
        name = doc["system"]
        sys = get_system(name) if system is None else system
        if sys.name != name:
            raise InvalidPatchError(f"Patch of {name} read with system {sys.name}.")
        F = sys.field
        tiles = []
        for t in doc["tiles"]:
            proto = int(t["proto"])
            if not 0 <= proto < len(sys.prototiles):
                raise InvalidPatchError(f"Unknown prototile id {proto} for {name}.")
            tiles.append(PlacedTile(proto, decode_motion(F, t["pose"])))
        provenance = doc.get("provenance")
        if provenance is not None:
            provenance = [SupertileAddress(r, tuple(d)) for r, d in provenance]
        support = doc.get("support")
        if support is not None:
            support = [decode_point(F, p) for p in support]
        return Patch(sys, tiles, provenance=provenance, support=support)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, SubtileError):
            raise
        raise InvalidPatchError(f"Malformed patch document: {e!r}") from e


def dumps(patch):
    """
    Serialize a patch to JSON text.

    Examples
    --------
    .. doctest::

        >>> from subtile.core import supertile
        >>> from subtile.io import patch
        >>> from subtile.systems import make_fibonacci
        >>> P = supertile(make_fibonacci(), "T1", 3)
        >>> Q = patch.loads(patch.dumps(P))
        >>> Q == P, Q.provenance == P.provenance
        (True, True)
    """
    return dump_json(to_dict(patch))


def loads(text, system=None, validate=True):
    """
    Parse a patch from JSON text.

    Parameters
    ----------
    text : str
        Document.
    system : TilingSystem, optional
        System the tiles belong to. Defaults to the built-in system named by the
        document.
    validate : bool, optional
        Check that the tiles have disjoint interiors. Defaults to ``True``.

    Raises
    ------
    InvalidPatchError
        If the document is malformed or the tiles overlap.
    """
    P = from_dict(load_json(text, KIND, InvalidPatchError), system=system)
    if validate:
        P.validate()
    return P


def write(patch, target):
    """Write a patch file to a path or an open text file."""
    write_text(target, dumps(patch))


def read(source, system=None, validate=True):
    """Read a patch file from a path or an open text file."""
    return loads(read_text(source), system=system, validate=validate)
