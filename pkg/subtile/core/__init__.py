"""
Tiling systems
==============

Prototiles, patches, the substitution and its supertiles, and the checks that make a
set of prototiles and a rule into a tiling system.

.. autosummary::
    :toctree: _generated/

    Prototile
    PlacedTile
    Patch
    SubstitutionRule
    TilingSystem
    substitute
    supertile
    ball_patch
    boundary_complex
    patches_agree_on_overlap
    transition_matrix
    validate_system
"""
from ._complex import SegmentComplex, boundary_complex
from ._patch import Patch, as_scalar, ball_patch, patch_area, patches_agree_on_overlap
from ._predicates import (
    ball_meets_polygon,
    interiors_disjoint,
    orient,
    orient_sign,
    point_in_polygon,
    polygon_edges,
    segment_dist2_sign,
)
from ._substitute import (
    parallel_recurrence,
    perron_eigenvalue,
    primitivity_power,
    substitute,
    supertile,
    tile_counts,
    transition_matrix,
)
from ._tiles import (
    PlacedTile,
    Prototile,
    SubstitutionRule,
    SupertileAddress,
    TilingSystem,
    address_extend,
    polygon_measure,
)
from ._validate import CoverVerdict, ValidationReport, validate_system

__all__ = [
    "CoverVerdict",
    "Patch",
    "PlacedTile",
    "Prototile",
    "SegmentComplex",
    "SubstitutionRule",
    "SupertileAddress",
    "TilingSystem",
    "ValidationReport",
    "address_extend",
    "as_scalar",
    "ball_meets_polygon",
    "ball_patch",
    "boundary_complex",
    "interiors_disjoint",
    "orient",
    "orient_sign",
    "parallel_recurrence",
    "patch_area",
    "patches_agree_on_overlap",
    "perron_eigenvalue",
    "point_in_polygon",
    "polygon_edges",
    "polygon_measure",
    "primitivity_power",
    "segment_dist2_sign",
    "substitute",
    "supertile",
    "tile_counts",
    "transition_matrix",
    "validate_system",
]
