"""
Tiling metric
=============

Clipped Hausdorff distance between segment sets and the distance between patches
built on it.

.. autosummary::
    :toctree: _generated/

    SegmentComplex
    hausdorff_clipped
    patch_metric
"""
from ..core import SegmentComplex, boundary_complex
from ._hausdorff import clip_to_disk, directed_sup, hausdorff_clipped
from ._patch_metric import patch_metric

__all__ = [
    "SegmentComplex",
    "boundary_complex",
    "clip_to_disk",
    "directed_sup",
    "hausdorff_clipped",
    "patch_metric",
]
