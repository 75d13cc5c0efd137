"""Exact computation in skew-polynomial quantum wreath products."""
from .scalar import Params, Scalar, ScalarRing, ring
from .qwp import Flavor, QwpElt, WreathAlgebra
from .basealg import BaseAlgebra, BaseElt
from .modules import TensorModule, WreathModule, GaussFamily, FiniteGGElt
from .schur import SchurElt, theta_build, theta_decompose, perm_module_expand, schur_compose
from .checks import Budget, CheckReport, run_check

__all__ = [
    "Params", "Scalar", "ScalarRing", "ring", "Flavor", "QwpElt", "WreathAlgebra",
    "BaseAlgebra", "BaseElt", "TensorModule", "WreathModule", "GaussFamily", "FiniteGGElt",
    "SchurElt", "theta_build", "theta_decompose", "perm_module_expand", "schur_compose",
    "Budget", "CheckReport", "run_check",
]
__version__ = "0.1.0"
