"""Command-line interface for Zipfred."""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
