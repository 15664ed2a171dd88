"""Fermat-curve weights and tetrahedron-equation residuals."""

from ._tpsi import *  # noqa: F401,F403
from ._tpsi import Error, ResidualReport, Trihedron

__all__ = [name for name in dir() if not name.startswith("_")]
