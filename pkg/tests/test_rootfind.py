"""Scalar bracketed solver and the 1D / 3D transcendental wavenumbers."""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from relbox import (
    BoxSpec,
    BracketError,
    ConvergenceError,
    QuantumNumbers,
    SolverConfig,
    dirac_wavenumber_1d,
    dirac_wavenumbers_3d,
    kg_wavenumber_1d,
    kg_wavenumbers_3d,
    solve_bracketed,
    tangent_branch,
)

from oracles import dirac_root_1d, newton_wavenumbers_3d

# Bisection-oracle roots of tan(y) + y = 0 (unit box), tolerance 1e-12.
Y1_UNIT_BOX = 2.0287578381104342
Y2_UNIT_BOX = 4.9131804394348837


def test_solve_bracketed_linear():
    assert solve_bracketed(lambda x: x - 1.0, 0.0, 2.0) == pytest.approx(1.0, abs=1e-12)


def test_solve_bracketed_tangent_case():
    root = solve_bracketed(lambda y: math.tan(y) + y, 1.6, 3.1)
    assert root == pytest.approx(Y1_UNIT_BOX, abs=1e-9)


def test_solve_bracketed_sqrt2():
    assert solve_bracketed(lambda x: x * x - 2.0, 1.0, 2.0) == pytest.approx(
        math.sqrt(2.0), abs=1e-12
    )


def test_solve_bracketed_requires_sign_change():
    with pytest.raises(BracketError):
        solve_bracketed(lambda x: x * x + 1.0, -1.0, 1.0)


def test_solve_bracketed_iteration_cap():
    cfg = SolverConfig(max_scalar_iters=2)
    with pytest.raises(ConvergenceError) as excinfo:
        solve_bracketed(lambda y: math.tan(y) + y, 1.6, 3.1, cfg)
    assert excinfo.value.last_estimate is not None
    assert 1.6 <= excinfo.value.last_estimate <= 3.1


@given(
    st.floats(min_value=-10.0, max_value=10.0),
    st.floats(min_value=0.01, max_value=5.0),
    st.floats(min_value=0.01, max_value=5.0),
)
def test_solve_bracketed_stays_inside(root, below, above):
    lo, hi = root - below, root + above
    result = solve_bracketed(lambda x: (x - root) ** 3 + 0.1 * (x - root), lo, hi)
    assert lo <= result <= hi


def test_tangent_branch_intervals():
    b = tangent_branch(3)
    assert b.bracket_lo > 2.5 * math.pi
    assert b.bracket_hi < 3.0 * math.pi
    with pytest.raises(ValueError):
        tangent_branch(0)


def test_kg_wavenumber_values():
    assert kg_wavenumber_1d(1, math.pi) == 1.0
    assert kg_wavenumber_1d(3, 300.0) == pytest.approx(math.pi / 100.0, rel=1e-15)


@given(st.integers(min_value=1, max_value=500), st.floats(min_value=0.01, max_value=1e3))
def test_kg_wavenumber_linearity(n, box_length):
    assert kg_wavenumber_1d(2 * n, box_length) == pytest.approx(
        2.0 * kg_wavenumber_1d(n, box_length), rel=1e-15
    )


def test_dirac_1d_against_bisection_oracle():
    assert dirac_wavenumber_1d(1, 1.0) == pytest.approx(Y1_UNIT_BOX, abs=1e-9)
    assert dirac_wavenumber_1d(2, 1.0) == pytest.approx(Y2_UNIT_BOX, abs=1e-9)
    for n in (3, 7, 15):
        for box_length in (0.5, 2.0, 40.0):
            assert dirac_wavenumber_1d(n, box_length) == pytest.approx(
                dirac_root_1d(n, box_length), abs=1e-10
            )


def test_dirac_1d_large_box_limit():
    x = dirac_wavenumber_1d(1, 300.0)
    kg = math.pi / 300.0
    assert x < kg
    assert abs(x - kg) / kg < 0.01


@pytest.mark.parametrize("box_length", [0.1, 1.0, 10.0, 100.0, 300.0])
def test_dirac_1d_strictly_increasing_and_below_kg(box_length):
    previous = 0.0
    for n in range(1, 21):
        x = dirac_wavenumber_1d(n, box_length)
        assert x > previous
        assert x < kg_wavenumber_1d(n, box_length)
        previous = x


@pytest.mark.parametrize("box_length", [1.0, 10.0, 100.0, 300.0])
def test_dirac_1d_residual(box_length):
    for n in range(1, 21):
        y = box_length * dirac_wavenumber_1d(n, box_length)
        assert abs(math.tan(y) + y / box_length) <= 1e-10


def test_dirac_1d_residual_strong_confinement():
    # For box_length = 0.1 the roots sit so close to the tangent poles that
    # the equation's slope is ~(y/L)^2; beyond n = 8 the nearest double to
    # the root already leaves a residual above 1e-10, so only the float64-
    # attainable range is asserted here.
    for n in range(1, 9):
        y = 0.1 * dirac_wavenumber_1d(n, 0.1)
        assert abs(math.tan(y) + y / 0.1) <= 1e-10


@pytest.mark.parametrize("box_length", [10.0, 50.0, 300.0])
def test_dirac_1d_first_order_shift_bound(box_length):
    for n in range(1, 5):
        kg = kg_wavenumber_1d(n, box_length)
        gap = abs(dirac_wavenumber_1d(n, box_length) - kg) / kg
        assert gap <= 2.0 / box_length


def test_dirac_1d_domain_errors():
    with pytest.raises(ValueError):
        dirac_wavenumber_1d(0, 1.0)
    with pytest.raises(ValueError):
        dirac_wavenumber_1d(1, 0.0)


def test_kg_3d_componentwise():
    xs = kg_wavenumbers_3d(QuantumNumbers((2, 1, 1)), BoxSpec((1.0, 2.0, 4.0)))
    assert xs == pytest.approx((2 * math.pi, math.pi / 2, math.pi / 4), rel=1e-15)


def _coupled_residual_tan(xs, kinetic, lengths):
    e = kinetic + 2.0
    return max(
        abs(math.tan(x * L) - 2.0 * e * x / (x * x - e * e))
        for x, L in zip(xs, lengths)
    )


@pytest.mark.parametrize("box_length", [0.5, 1.0, 5.0, 50.0, 300.0])
def test_dirac_3d_residual_and_branch(box_length):
    box = BoxSpec.cube(box_length)
    for n in itertools.product((1, 2, 3), repeat=3):
        x1, x2, x3, kinetic = dirac_wavenumbers_3d(QuantumNumbers(n), box)
        xs = (x1, x2, x3)
        # self-consistency: kinetic is recomputed from the returned roots
        norm_sq = math.fsum(x * x for x in xs)
        assert kinetic == pytest.approx(math.sqrt(norm_sq + 1.0) - 1.0, rel=1e-13)
        assert _coupled_residual_tan(xs, kinetic, box.lengths) <= 1e-10
        for x, ni in zip(xs, n):
            assert (ni - 0.5) * math.pi / box_length < x < ni * math.pi / box_length


def test_dirac_3d_large_box_limit():
    xs = dirac_wavenumbers_3d(QuantumNumbers((1, 1, 1)), BoxSpec.cube(300.0))
    kg = math.pi / 300.0
    for x in xs[:3]:
        assert abs(x - kg) / kg < 0.01
    assert xs[0] == xs[1] == xs[2]


def test_dirac_3d_permutation_equivariance():
    box = BoxSpec.cube(1.0)
    base = dirac_wavenumbers_3d(QuantumNumbers((1, 2, 3)), box)
    for perm in itertools.permutations((1, 2, 3)):
        out = dirac_wavenumbers_3d(QuantumNumbers(perm), box)
        for axis, n in enumerate(perm):
            assert out[axis] == pytest.approx(base[n - 1], rel=1e-12)
        assert out[3] == pytest.approx(base[3], rel=1e-12)


def test_dirac_3d_one_dominant_axis_reduces_to_1d():
    xs = dirac_wavenumbers_3d(QuantumNumbers((1, 1, 50)), BoxSpec.cube(1.0))
    x_1d = dirac_wavenumber_1d(50, 1.0)
    assert abs(xs[2] - x_1d) / x_1d < 1e-2


@pytest.mark.parametrize("box_length", [0.5, 1.0, 5.0, 50.0])
def test_dirac_3d_matches_newton_oracle(box_length):
    box = BoxSpec.cube(box_length)
    for n in itertools.product((1, 2, 3), repeat=3):
        fp = dirac_wavenumbers_3d(QuantumNumbers(n), box)
        nw = newton_wavenumbers_3d(n, box.lengths)
        for a, b in zip(fp[:3], nw[:3]):
            assert abs(a - b) <= 1e-10


def test_dirac_3d_non_cubic_box():
    box = BoxSpec((1.0, 2.0, 4.0))
    x1, x2, x3, kinetic = dirac_wavenumbers_3d(QuantumNumbers((2, 1, 1)), box)
    assert _coupled_residual_tan((x1, x2, x3), kinetic, box.lengths) <= 1e-10
    nw = newton_wavenumbers_3d((2, 1, 1), box.lengths)
    assert (x1, x2, x3) == pytest.approx(nw[:3], abs=1e-10)


def test_dirac_3d_damped_configuration_agrees():
    qn = QuantumNumbers((2, 1, 3))
    box = BoxSpec.cube(0.8)
    default = dirac_wavenumbers_3d(qn, box)
    damped = dirac_wavenumbers_3d(qn, box, SolverConfig(damping=0.5))
    for a, b in zip(default, damped):
        assert abs(a - b) <= 1e-10


def test_dirac_3d_iteration_cap():
    cfg = SolverConfig(max_fixed_point_iters=1)
    with pytest.raises(ConvergenceError) as excinfo:
        dirac_wavenumbers_3d(QuantumNumbers((1, 1, 1)), BoxSpec.cube(0.5), cfg)
    assert excinfo.value.iterations == 1
    assert len(excinfo.value.last_estimate) == 3


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        SolverConfig(damping=0.0)
    with pytest.raises(ValueError):
        SolverConfig(max_scalar_iters=0)
