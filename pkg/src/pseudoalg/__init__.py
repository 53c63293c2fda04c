"""Exact computations with pseudoalgebras over universal enveloping algebras."""

from .catalog import CATALOG, REDUCTIONS, BasisChange, current, entry_ids, equivalent, instantiate, transform
from .errors import InputError, PseudoAlgError
from .lie import LieAlgebra, abelian, from_brackets, heisenberg, sl2, validate_lie
from .pseudo import AXIOMS, ModuleElement, ProductTable, check_axiom, normalize, pseudo_product, rank1, rank2
from .solver import linear_nullspace, residual
from .tensor import Tensor
from .uea import UEl, antipode, coproduct, counit, fourier

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "BasisChange",
    "CATALOG",
    "InputError",
    "LieAlgebra",
    "ModuleElement",
    "ProductTable",
    "PseudoAlgError",
    "REDUCTIONS",
    "Tensor",
    "UEl",
    "abelian",
    "antipode",
    "check_axiom",
    "coproduct",
    "counit",
    "current",
    "entry_ids",
    "equivalent",
    "fourier",
    "from_brackets",
    "heisenberg",
    "instantiate",
    "linear_nullspace",
    "normalize",
    "pseudo_product",
    "rank1",
    "rank2",
    "residual",
    "sl2",
    "transform",
    "validate_lie",
]
