"""Exact character identities for Zelevinsky complexes and Jacobi-Trudi type determinants."""

from .charring import (CapMismatch, CharSeries, HalvingError, NonSymmetric, SeriesSpace, L_series,
                       M_series, det_ring, e_series, h_series, halve_exact, symE_series)
from .engine import (CaseId, ComplexTerm, DomainError, complex_terms, det_formula, euler_raw,
                     parity_split, weight_space_char)
from .poly import Alphabet, AlphabetMismatch, InexactDivision, Poly
from .symfun import SchurExpansion, lr_coefficient, schur_decompose, schur_series
from .weyl import RootType, Weight, WeylElement, enumerate_weyl, rho, zelevinsky_weight

__version__ = "0.1.0"

__all__ = [
    "CapMismatch",
    "CharSeries",
    "HalvingError",
    "NonSymmetric",
    "SeriesSpace",
    "L_series",
    "M_series",
    "det_ring",
    "e_series",
    "h_series",
    "halve_exact",
    "symE_series",
    "CaseId",
    "ComplexTerm",
    "DomainError",
    "complex_terms",
    "det_formula",
    "euler_raw",
    "parity_split",
    "weight_space_char",
    "Alphabet",
    "AlphabetMismatch",
    "InexactDivision",
    "Poly",
    "SchurExpansion",
    "lr_coefficient",
    "schur_decompose",
    "schur_series",
    "RootType",
    "Weight",
    "WeylElement",
    "enumerate_weyl",
    "rho",
    "zelevinsky_weight",
]
