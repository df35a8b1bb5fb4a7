"""Momentum spectrum of the 1D infinite square well, continuous and periodic."""

from ._backend import BACKEND

__version__ = "0.1.0"
