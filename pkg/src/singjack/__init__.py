"""Exact-arithmetic engine for singular nonsymmetric Jack polynomials."""

__version__ = "0.1.0"
