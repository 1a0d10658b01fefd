"""
Rotation groups
===============

Finitely generated subgroups of SO(2) with exact membership and index, and the
relative orientation group of a tiling system.

.. autosummary::
    :toctree: _generated/

    UnitRotation
    RotationSubgroup
    subgroup_from_generators
    member
    subgroup_relation
    abstract_type
    g_rel_descriptor
    relative_orientation_group
"""
from ._orientation import (
    congruence_rotations,
    expected_orientation_group,
    relative_orientation_group,
)
from ._rotations import UnitRotation, factor_rotation, gaussian_prime, gaussian_rotation
from ._subgroup import (
    GRelDescriptor,
    Membership,
    RotationSubgroup,
    SubgroupRelation,
    abstract_type,
    g_rel_descriptor,
    member,
    subgroup_from_generators,
    subgroup_relation,
)

__all__ = [
    "GRelDescriptor",
    "Membership",
    "RotationSubgroup",
    "SubgroupRelation",
    "UnitRotation",
    "abstract_type",
    "congruence_rotations",
    "expected_orientation_group",
    "factor_rotation",
    "g_rel_descriptor",
    "gaussian_prime",
    "gaussian_rotation",
    "member",
    "relative_orientation_group",
    "subgroup_from_generators",
    "subgroup_relation",
]
