"""Exact computations with pentagon and modified pentagon equations."""

from .errors import InputError, MathError, PentagonError
from .field import GF, QQ, Field
from .hopf import HopfAlgebra, HopfModule, phi_from_hopf_module
from .pentagon import (MPESolution, PentagonSolution, check_mpe, check_pentagon,
                       mpe_solution, pentagon_solution)
from .reconstruction import mpe_reconstruct, reconstruct_hopf, roundtrip
from .report import CheckReport
from .tensor import LegMap, Space

__all__ = [
    "CheckReport", "Field", "GF", "HopfAlgebra", "HopfModule", "InputError", "LegMap",
    "MPESolution", "MathError", "PentagonError", "PentagonSolution", "QQ", "Space",
    "check_mpe", "check_pentagon", "mpe_reconstruct", "mpe_solution", "pentagon_solution",
    "phi_from_hopf_module", "reconstruct_hopf", "roundtrip",
]
