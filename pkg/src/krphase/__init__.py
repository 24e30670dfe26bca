"""Analytic Kirkwood-Rihaczek phase-space toolkit for hydrogen bound states."""

__version__ = "0.1.0"

from .hydrogen import QuantumNumbers  # noqa: F401
from .phase_space import Convention, PhasePoint  # noqa: F401
