"""Exact conformal/collapsing level engine for affine W-algebras."""

from ._wconformal import (
    algebra_info,
    casimir_pairing,
    weyl_dim,
    dynkin_index,
    is_admissible,
    central_charge,
    classical_levels,
    mult_triv_adj,
    exceptional_levels,
    exceptional_verdicts,
    validate_catalog,
    catalog_orbits,
)

__all__ = [
    "algebra_info",
    "casimir_pairing",
    "weyl_dim",
    "dynkin_index",
    "is_admissible",
    "central_charge",
    "classical_levels",
    "mult_triv_adj",
    "exceptional_levels",
    "exceptional_verdicts",
    "validate_catalog",
    "catalog_orbits",
]
