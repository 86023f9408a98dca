"""Explicit solvers for the 2D time-fractional diffusion equation."""

__version__ = "0.1.0"
