"""Radius-bounded strong orientation of mixed multigraphs."""

__version__ = "0.1.0"
