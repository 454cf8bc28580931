"""Handwritten capital-letter recognition with from-scratch feedforward nets."""

__version__ = "0.1.0"
