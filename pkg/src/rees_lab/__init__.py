"""Exact computations with Rees products of posets, permutation statistics
and symmetric functions."""

__version__ = "0.1.0"
