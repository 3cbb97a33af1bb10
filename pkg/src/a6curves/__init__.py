"""Exact algebra for A6-invariant plane curves and the covers of their quotients."""

__version__ = "0.1.0"
