"""Walls, chambers and GIT fans for quiver moduli, in exact arithmetic."""

__version__ = "0.1.0"
