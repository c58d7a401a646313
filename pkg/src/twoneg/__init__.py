"""Workbench for finite bounded distributive lattices with a paired
intuitionistic/minimal negation, the matching frame semantics, translations
and dualities between them, and proof checking with bounded countermodel
search."""

from . import algebra, bridge, formula, frames, lattice, proofs, translate

__version__ = "0.1.0"

__all__ = ["algebra", "bridge", "formula", "frames", "lattice", "proofs",
           "translate", "__version__"]
