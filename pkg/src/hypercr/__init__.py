"""Hypergraph color refinement and exact (incidence-)homomorphism counting."""

__version__ = "0.1.0"
