"""Exact verification of the Ding-Iohara and shuffle algebra actions on the Fock space."""

__version__ = "0.1.0"
