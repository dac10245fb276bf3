"""Exact computations in the module categories of K2 and DK1.

Modules:
    ratlin   -- exact rational sparse linear algebra
    hopf     -- the Hopf algebras by structure constants
    rep      -- modules, tensor/dual/hom, decomposition
    indec    -- the classified indecomposables and identification
    green    -- Green ring arithmetic and presentations
    ideal    -- tensor ideals, negligibility, quasi-domination
    projcat  -- the projective subcategory and the Auslander algebra
    verify   -- the theorem-verification suites
    cli      -- command-line front end
"""

from .errors import GreenRingError
from .green import GreenElement, green_mul, green_mul_oracle
from .indec import EtaPoint, IndecLabel, identify, realize
from .rep import ModuleRep, decompose, dual, tensor

__all__ = [
    "EtaPoint", "GreenElement", "GreenRingError", "IndecLabel", "ModuleRep",
    "decompose", "dual", "green_mul", "green_mul_oracle", "identify",
    "realize", "tensor",
]

__version__ = "0.1.0"
