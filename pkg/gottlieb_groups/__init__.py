"""Gottlieb groups and Whitehead center groups of projective spaces."""

__version__ = "0.1.0"
