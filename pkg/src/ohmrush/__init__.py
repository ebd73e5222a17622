"""Exact Ohm-Rush content computations for polynomial and valuation-ring extensions."""

__version__ = "0.1.0"
