"""Exact tools for Butson-type complex Hadamard matrices."""

from ._core import (
    ButsonMatrix,
    NumericFailure,
    apply_witness,
    catalog_names,
    charpoly,
    classify,
    defect,
    dephase,
    get,
    haagerup_set,
    is_hadamard,
    parse,
    report,
    same_charpoly,
    spectrum,
    standard_equivalent,
    symmetric_family_eigenvalues,
    unitary_equivalent,
)

__all__ = [
    "ButsonMatrix",
    "NumericFailure",
    "apply_witness",
    "catalog_names",
    "charpoly",
    "classify",
    "defect",
    "dephase",
    "get",
    "haagerup_set",
    "is_hadamard",
    "parse",
    "report",
    "same_charpoly",
    "spectrum",
    "standard_equivalent",
    "symmetric_family_eigenvalues",
    "unitary_equivalent",
]
