"""Exception types shared by the solver and enumeration modules."""

from __future__ import annotations

__all__ = ["BracketError", "ConvergenceError", "CapacityError"]


class BracketError(ValueError):
    """No sign change found on the interval handed to a bracketed solve."""


class ConvergenceError(RuntimeError):
    """An iteration hit its cap before reaching the requested tolerance.

    Attributes
    ----------
    last_estimate : the final iterate (scalar or tuple), best value available
    iterations : number of iterations performed before giving up
    """

    def __init__(self, message: str, last_estimate=None, iterations: int = 0):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.iterations = iterations


class CapacityError(RuntimeError):
    """A level enumeration would need to scan beyond the configured lattice bound.

    Raised instead of silently truncating the spectrum.
    """

    def __init__(self, message: str, lattice_max: int = 0):
        super().__init__(message)
        self.lattice_max = lattice_max
