"""
Built-in tiling systems
=======================

.. autosummary::
    :toctree: _generated/

    make_penrose
    make_pinwheel
    make_fibonacci
    make_grid
    get_system
    catalog
"""
from ._catalog import SystemCatalogEntry, catalog, catalog_entry, get_system
from ._fibonacci import make_fibonacci
from ._grid import make_grid
from ._penrose import make_penrose
from ._pinwheel import make_pinwheel

__all__ = [
    "SystemCatalogEntry",
    "catalog",
    "catalog_entry",
    "get_system",
    "make_fibonacci",
    "make_grid",
    "make_penrose",
    "make_pinwheel",
]
