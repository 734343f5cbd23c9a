"""Saturated fusion systems on small p-groups, by exhaustive computation."""

__version__ = "0.1.0"
