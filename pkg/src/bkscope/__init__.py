"""Exact-arithmetic catalog of the two-qubit magic squares: observables,
eigenstates, tetrads, parity-proof apparitions, block designs, and the
symplectic maps between squares."""

__version__ = "0.1.0"
