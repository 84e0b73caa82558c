"""Relative size notions (syndetic, thick, piecewise syndetic, central) on finite semigroups."""
from .errors import WorkbenchError
from .families import Collection, classify, mesh, meet_wedge
from .semigroup import FiniteSemigroup, standard_semigroup, validate_cayley

__version__ = "0.1.0"

__all__ = [
    "Collection",
    "FiniteSemigroup",
    "WorkbenchError",
    "classify",
    "meet_wedge",
    "mesh",
    "standard_semigroup",
    "validate_cayley",
]
