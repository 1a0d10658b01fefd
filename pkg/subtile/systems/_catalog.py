from collections import namedtuple
from fractions import Fraction

from ._fibonacci import make_fibonacci
from ._grid import make_grid
from ._penrose import make_penrose
from ._pinwheel import make_pinwheel

SystemCatalogEntry = namedtuple(
    "SystemCatalogEntry",
    ["name", "params", "lam", "prototiles", "children", "g_ro", "abstract_type"],
)
SystemCatalogEntry.__doc__ = """
Expected facts about a built-in system.

``lam`` is the float value of the expansion factor. ``g_ro`` describes the expected
relative orientation group: ``("cyclic", k)`` for rotations by multiples of 2π/k, or
``("gaussian", gens)`` with generators given as rational ``(c, s)`` pairs.
"""

_W = (Fraction(3, 5), Fraction(4, 5))
_W2 = (Fraction(-7, 25), Fraction(24, 25))
_I = (Fraction(0), Fraction(1))

_ENTRIES = {
    "penrose": SystemCatalogEntry(
        "penrose", {}, (1 + 5 ** 0.5) / 2, 4, (2, 2, 3, 3), ("cyclic", 10), (10, 0)
    ),
    "pinwheel:1,2": SystemCatalogEntry(
        "pinwheel:1,2",
        {"m": 1, "n": 2},
        5 ** 0.5,
        2,
        (5, 5),
        ("gaussian", (_I, _W)),
        (4, 1),
    ),
    "pinwheel:3,4": SystemCatalogEntry(
        "pinwheel:3,4",
        {"m": 3, "n": 4},
        5.0,
        2,
        (25, 25),
        ("gaussian", (_I, _W2)),
        (4, 1),
    ),
    "fibonacci": SystemCatalogEntry(
        "fibonacci", {}, (1 + 5 ** 0.5) / 2, 2, (1, 2), ("cyclic", 1), (1, 0)
    ),
    "grid": SystemCatalogEntry("grid", {}, 2.0, 1, (4,), ("cyclic", 1), (1, 0)),
}


def catalog():
    """Names of the built-in systems with recorded expectations."""
    return sorted(_ENTRIES)


def catalog_entry(name):
    """
    Expected facts for a catalog name; pinwheels outside the table get the facts
    that follow from their legs alone (``g_ro`` and ``abstract_type`` are ``None``).
    """
    if name in _ENTRIES:
        return _ENTRIES[name]
    m, n = _parse_pinwheel(name)
    k = m * m + n * n
    return SystemCatalogEntry(name, {"m": m, "n": n}, k ** 0.5, 2, (k, k), None, None)


def get_system(name):
    """
    Built-in system from its name: ``"penrose"``, ``"pinwheel:m,n"``,
    ``"fibonacci"`` or ``"grid"``.

    Examples
    --------
    .. doctest::

        >>> from subtile.systems import get_system
        >>> get_system("pinwheel:1,2").name
        'pinwheel:1,2'
    """
    name = name.strip().lower()
    if name == "penrose":
        return make_penrose()
    if name == "fibonacci":
        return make_fibonacci()
    if name == "grid":
        return make_grid()
    if name.startswith("pinwheel"):
        return make_pinwheel(*_parse_pinwheel(name))
    raise ValueError(f"Unknown system `{name}`; expected one of {catalog()}.")


def _parse_pinwheel(name):
    head, _, tail = name.partition(":")
    if head != "pinwheel":
        raise ValueError(f"Unknown system `{name}`.")
    if not tail:
        return (1, 2)
    try:
        m, n = (int(v) for v in tail.split(","))
    except ValueError:
        raise ValueError(f"Pinwheel name must read `pinwheel:m,n`, got `{name}`.")
    return (m, n)
