"""Dissociation number and spectral radius verification toolkit."""

__version__ = "0.1.0"
__all__ = []
