"""Exact computer algebra for nabla-operator combinatorics, affine Springer
fiber moment graphs, nil Hecke localization, and Hessenberg Tor invariants."""

__version__ = "0.1.0"
