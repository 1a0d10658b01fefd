"""
Exact arithmetic
================

Number fields with a real embedding, their elements, and the rigid motions of the
plane built on them.

.. autosummary::
    :toctree: _generated/

    NumberField
    Scalar
    Point
    Rotation
    Motion
    CertifiedValue
"""
from ._certified import CertifiedValue
from ._field import NumberField, penrose_field, quadratic_field, rationals, to_fraction
from ._geom import (
    Motion,
    Point,
    Rotation,
    expansion_conjugate,
    motion_apply,
    motion_compose,
    motion_inverse,
    motion_magnitude,
)
from ._interval import enclose, scalar_sign
from ._scalar import Scalar, scalar_arith

__all__ = [
    "CertifiedValue",
    "Motion",
    "NumberField",
    "Point",
    "Rotation",
    "Scalar",
    "enclose",
    "expansion_conjugate",
    "motion_apply",
    "motion_compose",
    "motion_inverse",
    "motion_magnitude",
    "penrose_field",
    "quadratic_field",
    "rationals",
    "scalar_arith",
    "scalar_sign",
    "to_fraction",
]
