"""Exact equivariant invariants of Milnor fibres of reflection arrangements."""

from .cyclotomic import Cyclotomic, root
from .errors import MilnorError
from .groups import Cyclic, Dihedral, Gamma0, Monomial, Product, Symmetric
from .reps import GradedRep, RepElement
from .spectrum import Spectrum

__version__ = "0.1.0"

__all__ = [
    "Cyclic", "Cyclotomic", "Dihedral", "Gamma0", "GradedRep", "MilnorError", "Monomial", "Product", "RepElement",
    "Spectrum", "Symmetric", "__version__", "root",
]
