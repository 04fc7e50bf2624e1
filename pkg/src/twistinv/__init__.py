"""Exact computations in the Hecke module spanned by twisted involutions."""

from .canonical import CanonicalBasis
from .classic import HeckeKL, Mod2Model
from .coxeter import CoxeterSystem, ResourceError
from .laurent import DomainError, LaurentPoly
from .module import InvolutionModule

__all__ = [
    "CanonicalBasis",
    "CoxeterSystem",
    "DomainError",
    "HeckeKL",
    "InvolutionModule",
    "LaurentPoly",
    "Mod2Model",
    "ResourceError",
]
