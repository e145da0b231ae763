"""Negative translations, the simplification calculus relating them, and a small logic kernel."""

__version__ = "0.1.0"
