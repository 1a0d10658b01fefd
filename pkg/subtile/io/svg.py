"""
SVG rendering of patches.

Every tile becomes one ``polygon`` element filled by prototile, and every color mark
one ``line`` element. Coordinates are the float embeddings of the exact vertices
rounded to nine decimals, with the y axis flipped, so identical patches give
byte-identical documents.
"""
from .._errors import InvalidPatchError

_FILLS = (
    "#f2c14e",
    "#5b8e7d",
    "#f78154",
    "#4d9de0",
    "#bc4b51",
    "#8cb369",
    "#a27ea8",
    "#7a9e9f",
)
_MARKS = ("#1b1b1e", "#d1495b", "#00798c", "#edae49")

# Height of the bar drawn for an interval tile, relative to the stroke width.
_BAR = 6


def _num(v):
    s = f"{round(v, 9):.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _mark_color(color):
    if isinstance(color, int):
        return _MARKS[color % len(_MARKS)]
    return _MARKS[sum(map(ord, str(color))) % len(_MARKS)]


def _tile_outline(poly, bar):
    pts = [p.to_float() for p in poly]
    if len(pts) == 2:
        (x0, _), (x1, _) = pts
        h = bar / 2
        pts = [(x0, -h), (x1, -h), (x1, h), (x0, h)]
    return [(x, -y) for x, y in pts]


def render(patch, sys=None, stroke_width=0.02, scale=50.0):
    """
    SVG document of a patch.

    Parameters
    ----------
    patch : Patch
        Patch to draw.
    sys : TilingSystem, optional
        System of the patch. Defaults to ``patch.system``.
    stroke_width : float, optional
        Outline width in tile units. Defaults to ``0.02``.
    scale : float, optional
        Pixels per tile unit for the ``width`` and ``height`` attributes. Defaults
        to ``50``.

    Returns
    -------
    str
        The SVG text.

    Examples
    --------
    .. doctest::

        >>> from subtile.core import supertile
        >>> from subtile.io import render_svg
        >>> from subtile.systems import make_grid
        >>> svg = render_svg(supertile(make_grid(), 0, 0))
        >>> svg.count("<polygon"), svg.count("<line")
        (1, 1)
    """
    import xml.etree.ElementTree as ET

    if sys is None:
        sys = patch.system
    if sys.name != patch.system.name:
        raise InvalidPatchError(f"Patch of {patch.system.name} drawn as {sys.name}.")
    if len(patch) == 0:
        raise InvalidPatchError("Cannot render an empty patch.")
    stroke_width = float(stroke_width)
    scale = float(scale)

    bar = _BAR * stroke_width
    outlines = [_tile_outline(patch.polygon(i), bar) for i in range(len(patch))]
    xs = [x for o in outlines for x, _ in o]
    ys = [y for o in outlines for _, y in o]
    pad = 2 * stroke_width
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": " ".join(_num(v) for v in (x0, y0, w, h)),
            "width": _num(w * scale),
            "height": _num(h * scale),
        },
    )
    tiles = ET.SubElement(
        root,
        "g",
        {
            "id": "tiles",
            "stroke": "#202020",
            "stroke-width": _num(stroke_width),
            "stroke-linejoin": "round",
        },
    )
    for t, outline in zip(patch, outlines):
        ET.SubElement(
            tiles,
            "polygon",
            {
                "points": " ".join(f"{_num(x)},{_num(y)}" for x, y in outline),
                "fill": _FILLS[t.proto % len(_FILLS)],
                "data-proto": sys.prototiles[t.proto].name,
            },
        )

    marks = ET.SubElement(
        root, "g", {"id": "marks", "stroke-width": _num(2 * stroke_width)}
    )
    for i, t in enumerate(patch):
        mark = patch.mark(i)
        if mark is None:
            continue
        color = sys.prototiles[t.proto].color
        (ax, ay), (bx, by) = (p.to_float() for p in mark)
        ET.SubElement(
            marks,
            "line",
            {
                "x1": _num(ax),
                "y1": _num(-ay),
                "x2": _num(bx),
                "y2": _num(-by),
                "stroke": _mark_color(color),
            },
        )
    return ET.tostring(root, encoding="unicode") + "\n"


def write(patch, target, sys=None, stroke_width=0.02, scale=50.0):
    """Write the SVG document of a patch to a path or an open text file."""
    from ._codec import write_text

    write_text(target, render(patch, sys, stroke_width, scale))
