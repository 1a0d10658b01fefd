"""
Patch analysis
==============

Local patch statistics of a tiling system: finite local complexity, repetitivity,
periods, predecessor sets, recognizability, local admissibility and the radius of
the canonical code.

.. autosummary::
    :toctree: _generated/

    canonicalize
    enumerate_patches
    patch_library
    repetitivity_radius
    find_periods
    period_bound_report
    predecessor_sets
    recognizability_radius
    decompose
    local_admissibility
    code_radius_profile
"""
from ._canonical import (
    CanonicalPatch,
    PatchLibrary,
    anchored_key,
    canonicalize,
    enumerate_patches,
    local_admissibility,
    patch_library,
    sample_centers,
)
from ._code import code_radius_profile
from ._periods import (
    AnalysisReport,
    find_periods,
    period_bound_report,
    period_displacement,
)
from ._predecessors import PredecessorSet, predecessor_sets
from ._recognize import (
    DecompositionResult,
    ParentAssignment,
    RecognitionTable,
    decompose,
    parent_pose,
    recognizability_radius,
)
from ._repetitivity import repetitivity_radius

__all__ = [
    "AnalysisReport",
    "CanonicalPatch",
    "DecompositionResult",
    "ParentAssignment",
    "PatchLibrary",
    "PredecessorSet",
    "RecognitionTable",
    "anchored_key",
    "canonicalize",
    "code_radius_profile",
    "decompose",
    "enumerate_patches",
    "find_periods",
    "local_admissibility",
    "parent_pose",
    "patch_library",
    "period_bound_report",
    "period_displacement",
    "predecessor_sets",
    "recognizability_radius",
    "repetitivity_radius",
    "sample_centers",
]
