"""Exact tools for shift equivalence of nonnegative integer matrices and small graphs."""

__version__ = "0.1.0"
