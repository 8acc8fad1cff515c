"""Exact verification of polar actions on the complex hyperbolic plane."""

from .catalog import catalog, entry, verify_catalog, verify_entry
from .criterion import ActionSpec, PolarityReport, is_polar_with_section
from .lie import LieElt, Mat3, bracket, inner, killing
from .roots import frame
from .scalars import ExactScalar, QSqrt3
from .subspace import Subspace, span

__all__ = [
    "ActionSpec", "ExactScalar", "LieElt", "Mat3", "PolarityReport", "QSqrt3", "Subspace",
    "bracket", "catalog", "entry", "frame", "inner", "is_polar_with_section", "killing",
    "span", "verify_catalog", "verify_entry",
]
