"""Independent reference implementations used only by the tests.

Deliberately avoids the library's own solver paths: plain bisection instead
of the safeguarded hybrid, a damped Newton iteration on the full coupled
residual instead of the per-axis fixed point, and exhaustive lattice
enumeration instead of the adaptive level scan.
"""

from __future__ import annotations

import math

import numpy as np


def bisect_root(f, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Plain bisection; the bracket must straddle zero."""
    flo = f(lo)
    fhi = f(hi)
    assert flo * fhi < 0.0, "oracle bracket does not straddle zero"
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


def dirac_root_1d(n: int, box_length: float, tol: float = 1e-12) -> float:
    """Bisection solution of tan(y) = -y/L in ((n-1/2)pi, n pi), returned as x."""
    lo = (n - 0.5) * math.pi + 1e-12
    hi = n * math.pi - 1e-12
    y = bisect_root(lambda y: math.tan(y) + y / box_length, lo, hi, tol)
    return y / box_length


def _coupled_residual(xs: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    """Smooth (pole-free) form of the three coupled tangent equations.

    F_i = sin(y_i) (x_i^2 - e^2) - 2 e x_i cos(y_i),  y_i = L_i x_i,
    with e = sqrt(1 + |x|^2) + 1.  Inside the branch boxes e > x_i, so the
    smooth form vanishes exactly where the tangent form does.
    """
    e = math.sqrt(1.0 + float(np.dot(xs, xs))) + 1.0
    ys = lengths * xs
    return np.sin(ys) * (xs**2 - e**2) - 2.0 * e * xs * np.cos(ys)


def _coupled_jacobian(xs: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    e = math.sqrt(1.0 + float(np.dot(xs, xs))) + 1.0
    ys = lengths * xs
    sin_y, cos_y = np.sin(ys), np.cos(ys)
    direct = (
        lengths * cos_y * (xs**2 - e**2)
        + 2.0 * xs * sin_y
        - 2.0 * e * cos_y
        + 2.0 * e * xs * lengths * sin_y
    )
    dF_de = -2.0 * e * sin_y - 2.0 * xs * cos_y
    de_dx = xs / (e - 1.0)
    return np.diag(direct) + np.outer(dF_de, de_dx)


def newton_wavenumbers_3d(
    indices, lengths, tol: float = 1e-13, max_iter: int = 200
) -> tuple[float, float, float, float]:
    """Damped Newton solve of the coupled system, from the spin-0 start.

    Iterates on all three wavenumbers at once with backtracking damping and
    projection into the open branch boxes ((n_i - 1/2) pi / L_i, n_i pi / L_i).
    """
    indices = np.asarray(indices, dtype=float)
    lengths = np.asarray(lengths, dtype=float)
    lo = (indices - 0.5) * math.pi / lengths * (1.0 + 1e-14) + 1e-14
    hi = indices * math.pi / lengths * (1.0 - 1e-14)
    xs = np.clip(indices * math.pi / lengths, lo, hi)
    for _ in range(max_iter):
        f = _coupled_residual(xs, lengths)
        step = np.linalg.solve(_coupled_jacobian(xs, lengths), -f)
        # Near a regular root the Newton step length is the distance to the
        # root, so a step at relative rounding level means convergence.
        if np.max(np.abs(step) / np.maximum(np.abs(xs), 1e-300)) < tol:
            xs = np.clip(xs + step, lo, hi)
            break
        lam = 1.0
        norm0 = np.linalg.norm(f)
        for _ in range(40):
            trial = np.clip(xs + lam * step, lo, hi)
            if np.linalg.norm(_coupled_residual(trial, lengths)) < norm0:
                break
            lam *= 0.5
        else:
            raise RuntimeError("newton oracle: backtracking failed")
        xs = trial
    else:
        raise RuntimeError("newton oracle did not converge")
    norm_sq = float(np.dot(xs, xs))
    kinetic = norm_sq / (math.sqrt(norm_sq + 1.0) + 1.0)
    return float(xs[0]), float(xs[1]), float(xs[2]), kinetic


def lattice_count(lengths, max_kinetic: float, n_max: int, quadratic: bool = False) -> int:
    """Exhaustive count of modes with kinetic <= max_kinetic and n_i <= n_max.

    Spin-0 wavenumbers n_i pi / L_i; relativistic dispersion by default,
    quadratic with ``quadratic=True``.  Valid as a total count only when no
    qualifying mode has an index above n_max.
    """
    lengths = np.asarray(lengths, dtype=float)
    dim = len(lengths)
    grids = np.meshgrid(*[np.arange(1, n_max + 1)] * dim, indexing="ij")
    norm_sq = sum(
        (grids[i] * math.pi / lengths[i]) ** 2 for i in range(dim)
    )
    if quadratic:
        kinetic = 0.5 * norm_sq
    else:
        kinetic = np.sqrt(norm_sq + 1.0) - 1.0
    return int(np.count_nonzero(kinetic <= max_kinetic))


def simpson_integral(values: np.ndarray, length: float) -> float:
    """Composite Simpson on uniformly sampled values (odd count), via the
    textbook 1-4-2...-4-1 weights, written independently of the library."""
    n = len(values)
    assert n >= 3 and n % 2 == 1
    h = length / (n - 1)
    total = values[0] + values[-1] + 4.0 * np.sum(values[1:-1:2]) + 2.0 * np.sum(values[2:-1:2])
    return float(total * h / 3.0)
