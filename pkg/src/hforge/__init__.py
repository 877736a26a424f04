"""Exact toolkit for monotone non-homotopic multigraph drawings."""

__version__ = "0.1.0"
