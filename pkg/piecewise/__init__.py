"""Exact computations for coverings, flabby sheaves and principal comodule algebras."""

__version__ = "0.1.0"
