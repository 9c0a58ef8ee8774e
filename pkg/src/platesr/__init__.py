"""Adversarial super-resolution license-plate recognition toolkit."""

__version__ = "0.1.0"
