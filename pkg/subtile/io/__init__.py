"""
I/O module
==========

Lossless JSON files for tiling systems and patches, and SVG drawings of patches.

.. autosummary::
    :toctree: _generated/

    system
    patch
    svg
"""
from . import patch, svg, system


def save_system(sys, target, metadata=None):
    system.write(sys, target, metadata)


def load_system(source, validate=False):
    return system.read(source, validate=validate)


def save_patch(P, target):
    patch.write(P, target)


def load_patch(source, sys=None, validate=True):
    return patch.read(source, system=sys, validate=validate)


render_svg = svg.render

__all__ = [
    "load_patch",
    "load_system",
    "patch",
    "render_svg",
    "save_patch",
    "save_system",
    "svg",
    "system",
]
