"""
The :mod:`maglap.core` module covers the Kummer evaluator, certified root
finding and the base class of the sector solvers.
"""
from .base_solver import BaseRadialSolver
from .domain import BranchId, Disk, DiskSystem, FieldStrength, Spectrum, SpectrumEntry
from .precision import PrecisionPolicy, default_policy


__all__ = ["BaseRadialSolver", "BranchId", "Disk", "DiskSystem", "FieldStrength",
           "Spectrum", "SpectrumEntry", "PrecisionPolicy", "default_policy"]
