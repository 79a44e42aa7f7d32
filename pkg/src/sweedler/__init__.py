"""Exact computations with algebras, coalgebras, their duals and finite duals."""

from .exact_linalg import GF, QQ, ZZ, Matrix, Ring
from .fgmod import FreeModule, LinearMap
from .finite_dual import FiniteDualCoalgebra, RecurrentSequence
from .hopf import BialgebraPresentation, HopfPresentation
from .structures import AlgebraPresentation, AxiomReport, CoalgebraPresentation

__all__ = [
    "GF", "QQ", "ZZ", "Matrix", "Ring", "FreeModule", "LinearMap", "FiniteDualCoalgebra",
    "RecurrentSequence", "BialgebraPresentation", "HopfPresentation", "AlgebraPresentation",
    "AxiomReport", "CoalgebraPresentation",
]
