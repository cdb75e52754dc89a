"""Exact computations with Hopf super-algebras, hyper-super-algebras and
Harish-Chandra pairs."""

__version__ = "0.1.0"
