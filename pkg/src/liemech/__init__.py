"""Numerical toolkit for matrix Lie groups, rigid-body geometric mechanics and jolt analysis."""

__version__ = "0.1.0"
