"""Dirichlet series of base-b digit sums and their meromorphic continuations."""

__version__ = "0.1.0"
