"""Exact Euler-Poincare characteristics of symmetric real algebraic sets."""

__version__ = "0.1.0"
