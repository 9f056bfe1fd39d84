"""
Rectangular lattice geometry
"""

from .rectangular import Lattice, build_rectangular, parse_dims

__all__ = ["Lattice", "build_rectangular", "parse_dims"]
