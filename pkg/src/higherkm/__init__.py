"""Exact computations for higher Kac-Moody current algebras."""

__version__ = "0.1.0"
