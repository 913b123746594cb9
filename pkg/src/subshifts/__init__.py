"""Subshifts on finitely generated groups: presentations, decision procedures,
and translation-like actions built from Hamiltonian 3-paths."""
from . import errors
from .groups import DirectProduct, FiniteGroup, FreeGroup, IntegerLattice, group_from_dict
from .patterns import Pattern, PatternCoding, fits_inside, is_consistent, realize, translate

__version__ = "0.1.0"

__all__ = [
    "errors", "DirectProduct", "FiniteGroup", "FreeGroup", "IntegerLattice", "group_from_dict",
    "Pattern", "PatternCoding", "fits_inside", "is_consistent", "realize", "translate",
]
