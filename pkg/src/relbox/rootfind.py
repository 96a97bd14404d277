"""Boundary-condition solvers for the confined relativistic modes.

The spin-1/2 box quantization replaces the node-at-the-wall rule by
transcendental equations: in 1D a single tangent equation per level, in 3D a
set of three coupled tangent equations sharing the total kinetic energy.
This module provides a safeguarded bracketed scalar solver plus the 1D and
3D wavenumber solvers built on top of it.

All wavenumbers are dimensionless (k * lambda_C) and all box lengths are in
Compton units; see :mod:`relbox.core`.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable

from scipy.optimize import brentq

from .core import BoxSpec, QuantumNumbers
from .errors import BracketError, ConvergenceError

__all__ = [
    "SolverConfig",
    "RootBranch",
    "DEFAULT_CONFIG",
    "solve_bracketed",
    "tangent_branch",
    "kg_wavenumber_1d",
    "dirac_wavenumber_1d",
    "kg_wavenumbers_3d",
    "dirac_wavenumbers_3d",
]

# Brackets are pulled off the tangent poles by this margin.
BRACKET_SHRINK = 1e-9 * math.pi

# Tolerance pushing the scalar sub-solves to the float64 limit; the tangent
# equations are stiff near the poles, so anything looser leaks into the
# transcendental residual.
_MACHINE_REL_TOL = 2e-15

_EPS = math.ulp(1.0)


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and caps for the scalar and fixed-point solvers."""

    rel_tol: float = 1e-12
    max_scalar_iters: int = 200
    max_fixed_point_iters: int = 500
    damping: float = 1.0

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_scalar_iters < 1 or self.max_fixed_point_iters < 1:
            raise ValueError("iteration caps must be >= 1")
        if not (0.0 < self.damping <= 1.0):
            raise ValueError(f"damping must be in (0, 1], got {self.damping}")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class RootBranch:
    """Open interval holding exactly one root of a tangent-type equation."""

    n: int
    bracket_lo: float
    bracket_hi: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"branch index starts at 1, got {self.n}")
        if not (self.bracket_lo < self.bracket_hi):
            raise ValueError("bracket_lo must be below bracket_hi")


def tangent_branch(n: int) -> RootBranch:
    """The nth root interval ((n - 1/2) pi, n pi) of tan(y) = (negative RHS).

    The right-hand sides solved here are negative for y > 0, so every root
    sits where the tangent is negative.  The end points are shrunk inward to
    keep the solver away from the tangent poles.
    """
    if n < 1:
        raise ValueError(f"branch index starts at 1, got {n}")
    lo = (n - 0.5) * math.pi + BRACKET_SHRINK
    hi = n * math.pi - BRACKET_SHRINK
    return RootBranch(n=n, bracket_lo=lo, bracket_hi=hi)


def solve_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> float:
    """Root of ``f`` on [lo, hi], safeguarded against slow convergence.

    Uses inverse-quadratic/secant steps with a bisection fallback, then
    nudges the result over neighbouring floats to minimise |f|.  The result
    never leaves [lo, hi] and is within ``rel_tol * max(1, |root|)`` of the
    true root.

    Raises
    ------
    BracketError
        If f(lo) and f(hi) do not straddle zero.
    ConvergenceError
        If the iteration cap is hit; carries the last iterate.
    """
    if not (lo < hi):
        raise BracketError(f"empty bracket [{lo}, {hi}]")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: f(lo)={flo:.3g}, f(hi)={fhi:.3g}"
        )
    xtol = 0.5 * cfg.rel_tol
    rtol = max(0.5 * cfg.rel_tol, 4.0 * _EPS)
    root, info = brentq(
        f,
        lo,
        hi,
        xtol=xtol,
        rtol=rtol,
        maxiter=cfg.max_scalar_iters,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise ConvergenceError(
            f"scalar solve did not converge in {info.iterations} iterations",
            last_estimate=float(root),
            iterations=info.iterations,
        )
    return _polish(f, float(root), lo, hi)


def _polish(f: Callable[[float], float], root: float, lo: float, hi: float) -> float:
    """Pick the neighbouring float with the smallest |f|, staying in [lo, hi]."""
    candidates = [root]
    up = down = root
    for _ in range(2):
        up = math.nextafter(up, math.inf)
        down = math.nextafter(down, -math.inf)
        candidates.extend((up, down))
    best, best_val = root, abs(f(root))
    for c in candidates[1:]:
        if lo <= c <= hi:
            v = abs(f(c))
            if v < best_val:
                best, best_val = c, v
    return best


def _machine_cfg(cfg: SolverConfig) -> SolverConfig:
    if cfg.rel_tol <= _MACHINE_REL_TOL:
        return cfg
    return dataclasses.replace(cfg, rel_tol=_MACHINE_REL_TOL)


def _solve_tangent_branch(
    f: Callable[[float], float],
    n: int,
    cfg: SolverConfig,
    pole_y: float | None = None,
) -> float:
    """Root of ``f`` (a function of y) inside the nth tangent branch.

    ``pole_y`` marks a pole of the right-hand side; when it falls inside the
    branch interval the bracket is clipped just below it (the root always
    lies between the branch edge and that pole).  If the default bracket
    fails to straddle zero, the interval is sign-scanned as a fallback.
    """
    branch = tangent_branch(n)
    lo, hi = branch.bracket_lo, branch.bracket_hi
    if pole_y is not None and pole_y <= hi:
        hi = pole_y - max(BRACKET_SHRINK, abs(pole_y) * 1e-12)
        if hi <= lo:
            raise BracketError(
                f"branch {n} collapsed: pole at y={pole_y} sits at the branch edge"
            )
    try:
        return solve_bracketed(f, lo, hi, _machine_cfg(cfg))
    except BracketError:
        pass
    # Fallback: look for a sign change on a uniform scan of the branch.
    nscan = 64
    ys = [lo + (hi - lo) * k / nscan for k in range(nscan + 1)]
    vals = [f(y) for y in ys]
    for k in range(nscan):
        if math.copysign(1.0, vals[k]) != math.copysign(1.0, vals[k + 1]):
            return solve_bracketed(f, ys[k], ys[k + 1], _machine_cfg(cfg))
    raise BracketError(f"no root found in tangent branch {n} on [{lo}, {hi}]")


def kg_wavenumber_1d(n: int, box_length: float) -> float:
    """Spin-0 box wavenumber n pi / L (node-at-the-wall quantization)."""
    _check_1d_args(n, box_length)
    return n * math.pi / box_length


def dirac_wavenumber_1d(
    n: int, box_length: float, cfg: SolverConfig = DEFAULT_CONFIG
) -> float:
    """nth spin-1/2 box wavenumber: root of tan(y) = -y / L with y = x L.

    The root lies in ((n - 1/2) pi, n pi), strictly below the spin-0 value
    n pi / L, and approaches it as the box grows.
    """
    _check_1d_args(n, box_length)

    def f(y: float) -> float:
        return math.tan(y) + y / box_length

    y = _solve_tangent_branch(f, n, cfg)
    return y / box_length


def _check_1d_args(n: int, box_length: float) -> None:
    if n < 1:
        raise ValueError(f"level index starts at 1, got {n}")
    if not math.isfinite(box_length) or box_length <= 0.0:
        raise ValueError(f"box length must be positive and finite, got {box_length}")


def kg_wavenumbers_3d(qnums: QuantumNumbers, box: BoxSpec) -> tuple[float, float, float]:
    """Spin-0 wavenumbers n_i pi / L_i, one per axis."""
    _check_3d_args(qnums, box)
    n = qnums.indices
    lengths = box.lengths
    return tuple(n[i] * math.pi / lengths[i] for i in range(3))


def dirac_wavenumbers_3d(
    qnums: QuantumNumbers,
    box: BoxSpec,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> tuple[float, float, float, float]:
    """Self-consistent spin-1/2 wavenumbers (x1, x2, x3) and kinetic energy.

    Each axis must satisfy

        tan(x_i L_i) = 2 (T + 2) x_i / (x_i^2 - (T + 2)^2)

    with the shared kinetic energy T = sqrt(|x|^2 + 1) - 1.  Starting from
    the spin-0 wavenumbers, the solver alternates between recomputing T and
    re-solving each axis inside its tangent branch (bracket clipped below
    the pole of the right-hand side at x_i = T + 2).  Iteration stops when
    the largest relative update drops below ``cfg.rel_tol``; if updates
    start alternating in sign, the damping factor falls back to 0.5.

    Returns
    -------
    (x1, x2, x3, kinetic) where kinetic is recomputed from the returned
    wavenumbers.
    """
    _check_3d_args(qnums, box)
    n = qnums.indices
    lengths = box.lengths
    xs = [n[i] * math.pi / lengths[i] for i in range(3)]
    damping = cfg.damping
    prev_delta = None
    history: list[float] = []
    for _ in range(cfg.max_fixed_point_iters):
        e_sum = _kinetic(xs) + 2.0
        roots = [
            _solve_axis(n[i], lengths[i], e_sum, cfg) for i in range(3)
        ]
        delta = [roots[i] - xs[i] for i in range(3)]
        if prev_delta is not None and any(
            d * p < 0.0 for d, p in zip(delta, prev_delta)
        ):
            damping = min(damping, 0.5)
        prev_delta = delta
        xs = [xs[i] + damping * delta[i] for i in range(3)]
        rel_change = max(abs(delta[i]) / max(abs(xs[i]), 1e-300) for i in range(3))
        history.append(rel_change)
        if rel_change < cfg.rel_tol:
            return (xs[0], xs[1], xs[2], _kinetic(xs))
    raise ConvergenceError(
        f"3D solve for indices {n} in box {lengths} still changing by "
        f"{history[-1]:.3e} after {len(history)} sweeps",
        last_estimate=tuple(xs),
        iterations=len(history),
    )


def _solve_axis(n_i: int, length: float, e_sum: float, cfg: SolverConfig) -> float:
    """One scalar sub-solve of the coupled system at fixed energy sum."""

    def f(y: float) -> float:
        x = y / length
        return math.tan(y) - 2.0 * e_sum * x / (x * x - e_sum * e_sum)

    y = _solve_tangent_branch(f, n_i, cfg, pole_y=e_sum * length)
    return y / length


def _kinetic(xs) -> float:
    """sqrt(|x|^2 + 1) - 1, evaluated in its cancellation-free form."""
    norm_sq = math.fsum(x * x for x in xs)
    return norm_sq / (math.sqrt(norm_sq + 1.0) + 1.0)


def _check_3d_args(qnums: QuantumNumbers, box: BoxSpec) -> None:
    if box.dimension != 3:
        raise ValueError(f"need a 3D box, got {box.dimension}D")
    qnums.check_matches(box)
