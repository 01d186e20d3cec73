"""Exact computation of pattern isolation numbers on small graphs."""

__version__ = "0.1.0"
