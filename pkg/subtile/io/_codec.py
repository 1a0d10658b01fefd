"""JSON encoding of exact values: scalars as rational coefficient vectors."""
from fractions import Fraction

FORMAT_VERSION = 1


def dump_json(doc):
    from json import dumps

    return dumps(doc, sort_keys=True, indent=2) + "\n"


def load_json(text, kind, error):
    from json import loads

    try:
        doc = loads(text)
    except ValueError as e:
        raise error(f"Not a JSON document: {e}") from e
    if not isinstance(doc, dict) or doc.get("format") != kind:
        raise error(f"Expected a `{kind}` document.")
    if doc.get("version") != FORMAT_VERSION:
        raise error(f"Unsupported {kind} version {doc.get('version')!r}.")
    return doc


def encode_fraction(q):
    q = Fraction(q)
    return [q.numerator, q.denominator]


def decode_fraction(v):
    num, den = v
    return Fraction(int(num), int(den))


def encode_scalar(a):
    return {"coeffs": [encode_fraction(c) for c in a.coeffs]}


def decode_scalar(field, v):
    return field.scalar([decode_fraction(c) for c in v["coeffs"]])


def encode_point(p):
    return [encode_scalar(p.x), encode_scalar(p.y)]


def decode_point(field, v):
    from ..exact import Point

    x, y = v
    return Point(decode_scalar(field, x), decode_scalar(field, y))


def encode_motion(g):
    return {
        "rot": [encode_scalar(g.rot.c), encode_scalar(g.rot.s)],
        "trans": encode_point(g.trans),
    }


def decode_motion(field, v):
    from ..exact import Motion, Rotation

    c, s = (decode_scalar(field, x) for x in v["rot"])
    return Motion(Rotation(c, s), decode_point(field, v["trans"]))


def encode_field(F):
    lo, hi = F.embedding
    return {
        "min_poly": list(F.min_poly),
        "embedding": [encode_fraction(lo), encode_fraction(hi)],
        "name": F.name,
    }


def decode_field(v):
    from ..exact import NumberField

    lo, hi = (decode_fraction(x) for x in v["embedding"])
    return NumberField(v["min_poly"], (lo, hi), name=v.get("name"))


def read_text(source):
    """Text of a path, or of an open file."""
    if hasattr(source, "read"):
        return source.read()
    with open(source, "r", encoding="utf-8") as f:
        return f.read()


def write_text(target, text):
    if hasattr(target, "write"):
        target.write(text)
        return
    with open(target, "w", encoding="utf-8") as f:
        f.write(text)
