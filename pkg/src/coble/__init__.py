"""Exact-arithmetic verification library for Heisenberg-invariant forms in
P^8, the Coble cubic, restriction maps to fixed-point planes, dual sextics of
the Hesse pencil, and the related enumerative computations."""

__version__ = "0.1.0"
