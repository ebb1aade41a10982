"""Harmonica: blockchain technology recommendation and product derivation."""

__version__ = "0.1.0"
