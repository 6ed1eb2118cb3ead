"""Exact verification of a 4n-point interpolation formula and the q-series identities around it."""

__version__ = "0.1.0"
