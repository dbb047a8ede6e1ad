"""Zipfred - universal coding and redundancy lab for unordered distribution classes."""

__version__ = "0.1.0"
