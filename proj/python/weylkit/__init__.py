"""Weyl functions of Jacobi matrices from discrete wave-system response vectors."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetError, DomainError, PoleError  # noqa: F401

__version__ = "0.1.0"
