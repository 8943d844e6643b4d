"""Exact tools for the Eulerian transformation t^n -> A_n(t)."""

from .polycore import ONE, T, ZERO, Poly, parse_poly, format_poly

__version__ = "0.1.0"

__all__ = ["Poly", "T", "ONE", "ZERO", "parse_poly", "format_poly"]
