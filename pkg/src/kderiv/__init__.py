"""Exact computations with finite diagram categories, derivator axioms,
simplicial enrichments, the S-construction, and K_0."""

__version__ = "0.1.0"
