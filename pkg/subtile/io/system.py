"""
Tiling system files.

A system file is a JSON document with format ``subtile-system`` holding the number
field, the prototiles, the substitution rule and the radii ``m`` and ``M``. Every
coordinate is an exact scalar written as rational coefficients against the field
basis.
"""
from .._errors import InvalidGeometryError, SubtileError
from ._codec import (
    FORMAT_VERSION,
    decode_field,
    decode_motion,
    decode_point,
    decode_scalar,
    dump_json,
    encode_field,
    encode_motion,
    encode_point,
    encode_scalar,
    load_json,
    read_text,
    write_text,
)

KIND = "subtile-system"


def to_dict(sys, metadata=None):
    prototiles = []
    for t in sys.prototiles:
        prototiles.append(
            {
                "name": t.name,
                "polygon": [encode_point(p) for p in t.polygon],
                "mark": None if t.mark is None else [encode_point(p) for p in t.mark],
                "color": t.color,
            }
        )
    children = [
        [{"proto": q, "pose": encode_motion(h)} for q, h in kids]
        for kids in sys.rule.children
    ]
    return {
        "format": KIND,
        "version": FORMAT_VERSION,
        "name": sys.name,
        "field": encode_field(sys.field),
        "prototiles": prototiles,
        "rule": {"lambda": encode_scalar(sys.lam), "children": children},
        "inner_radius": encode_scalar(sys.inner_radius),
        "max_diameter": encode_scalar(sys.max_diameter),
        "metadata": dict(metadata or {}),
    }


def from_dict(doc):
    from ..core import Prototile, SubstitutionRule, TilingSystem

    try:
        name = doc["name"]
        F = decode_field(doc["field"])
        prototiles = []
        for i, t in enumerate(doc["prototiles"]):
            polygon = [decode_point(F, p) for p in t["polygon"]]
            mark = t.get("mark")
            if mark is not None:
                mark = [decode_point(F, p) for p in mark]
            prototiles.append(Prototile(i, t["name"], polygon, mark, t.get("color")))
        rule = doc["rule"]
        children = [
            [(c["proto"], decode_motion(F, c["pose"])) for c in kids]
            for kids in rule["children"]
        ]
        lam = decode_scalar(F, rule["lambda"])
        m = decode_scalar(F, doc["inner_radius"])
        M = decode_scalar(F, doc["max_diameter"])
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, SubtileError):
            raise
        raise InvalidGeometryError(f"Malformed system document: {e!r}") from e
    return TilingSystem(name, F, prototiles, SubstitutionRule(lam, children), m, M)


def dumps(sys, metadata=None):
    """
    Serialize a tiling system to JSON text.

    Examples
    --------
    .. doctest::

        >>> from subtile.io import system
        >>> from subtile.systems import make_fibonacci
        >>> text = system.dumps(make_fibonacci())
        >>> system.dumps(system.loads(text)) == text
        True
    """
    return dump_json(to_dict(sys, metadata))


def loads(text, validate=False):
    """
    Parse a tiling system from JSON text.

    Parameters
    ----------
    text : str
        Document.
    validate : bool, optional
        Run :func:`subtile.core.validate_system` and reject systems that fail.
        Defaults to ``False``.

    Raises
    ------
    InvalidGeometryError
        If the document is malformed or, with ``validate``, the system fails its
        checks.
    """
    sys = from_dict(load_json(text, KIND, InvalidGeometryError))
    if validate:
        from ..core import validate_system

        report = validate_system(sys)
        if not report.ok:
            raise InvalidGeometryError(f"System {sys.name} fails validation.")
    return sys


def write(sys, target, metadata=None):
    """Write a system file to a path or an open text file."""
    write_text(target, dumps(sys, metadata))


def read(source, validate=False):
    """Read a system file from a path or an open text file."""
    return loads(read_text(source), validate=validate)
