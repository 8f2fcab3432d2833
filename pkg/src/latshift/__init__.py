"""Ranked meet semi-lattice toolkit: validation, shadow bounds, multichain

constructions, and exterior/symmetric algebraic shifting."""

from .poset import TOP, FVector, RankedPoset, load_poset

__all__ = ["TOP", "FVector", "RankedPoset", "load_poset"]
__version__ = "0.1.0"
