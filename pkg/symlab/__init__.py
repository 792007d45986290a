"""Exact-computation laboratory for symmetry and Selberg integrals of sieve functions."""
