"""Exact constructions for generalized permutohedra in kinematic space."""

__version__ = "0.1.0"
