"""Jacobi-Sobolev orthonormal polynomials, Fourier-Sobolev expansions and norm experiments."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, NumericalError

__version__ = "0.1.0"
