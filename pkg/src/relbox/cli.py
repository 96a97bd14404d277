"""Command-line front end: spectrum tables, state counting, field sampling.

Three subcommands (``spectrum``, ``count``, ``field``) emit deterministic
CSV or JSON.  Floats are serialized with 17 significant digits so repeated
runs are byte-identical and values survive a parse round trip.  Exit codes:
0 success, 2 bad usage, 3 solver failure, 4 enumeration capacity exceeded.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from .core import BoxSpec, QuantumNumbers
from .errors import BracketError, CapacityError, ConvergenceError
from .fields import BoxState, GridSpec, normalization_check, stationarity_residual
from .rootfind import DEFAULT_CONFIG, SolverConfig
from .spectra import MODELS, SpectrumRequest, _level_row, enumerate_levels

__all__ = ["cli", "main", "annotate_units"]

# Compton wavelengths used for presentation only (values as commonly quoted
# to three figures): electron in angstrom, charged pion in femtometre.
ELECTRON_LAMBDA_C_ANGSTROM = 3.86e-3
PION_LAMBDA_C_FM = 1.41

_PRESET_COLUMNS = {
    "electron": ("box_angstrom", ELECTRON_LAMBDA_C_ANGSTROM),
    "pion": ("box_fm", PION_LAMBDA_C_FM),
}


def annotate_units(table: list[dict], preset: str) -> list[dict]:
    """Append a physical box-length column for the chosen particle preset.

    ``electron`` adds ``box_angstrom`` (= lc * 3.86e-3), ``pion`` adds
    ``box_fm`` (= lc * 1.41); ``none`` returns the table unchanged.  The
    kinetic column stays in units of the particle's rest energy.
    """
    if preset in (None, "none"):
        return table
    if preset not in _PRESET_COLUMNS:
        raise ValueError(f"unknown preset {preset!r}")
    column, lam = _PRESET_COLUMNS[preset]
    out = []
    for row in table:
        new = dict(row)
        lc = row["lc"]
        if isinstance(lc, list):
            new[column] = [v * lam for v in lc]
        else:
            new[column] = lc * lam
        out.append(new)
    return out


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.17g}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (list, tuple)):
            return "|".join(";".join(_fmt(v) for v in item) for item in value)
        return ";".join(_fmt(v) for v in value)
    return str(value)


def _emit(rows, config, summary, fmt, out):
    if fmt == "json":
        payload = {"config": config, "rows": rows, "summary": summary}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = []
        for key, value in (summary or {}).items():
            lines.append(f"# {key}={_fmt(value)}")
        if rows:
            columns = list(rows[0].keys())
            lines.append(",".join(columns))
            for row in rows:
                lines.append(",".join(_fmt(row[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _parse_floats(ctx, param, value):
    if value is None:
        return None
    try:
        items = tuple(float(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter(f"{value!r} is not a comma-separated float list")
    if not items:
        raise click.BadParameter("empty list")
    for v in items:
        if not (v > 0.0) or not np.isfinite(v):
            raise click.BadParameter("entries must be positive finite numbers")
    return items


def _parse_ints(ctx, param, value):
    if value is None:
        return None
    try:
        items = tuple(int(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter(f"{value!r} is not a comma-separated integer list")
    for v in items:
        if v < 1:
            raise click.BadParameter("entries must be integers >= 1")
    return items


def _solver_config(tol: float | None) -> SolverConfig:
    if tol is None:
        return DEFAULT_CONFIG
    if not (tol > 0.0):
        raise click.UsageError("Invalid value for '--tol': must be > 0.")
    return SolverConfig(rel_tol=tol)


def _expand_models(model: str) -> list[str]:
    return list(MODELS) if model == "all" else [model]


def _boxes(dim, lcs, lengths):
    """(lc cell, BoxSpec) pairs; lc ascending when given as a list."""
    if lengths is not None:
        if len(lengths) != dim:
            raise click.UsageError(
                f"Invalid value for '--lengths': need {dim} values for --dim {dim}."
            )
        cell = list(lengths) if dim == 3 else lengths[0]
        return [(cell, BoxSpec(lengths))]
    return [(lc, BoxSpec.cube(lc, dim=dim)) for lc in sorted(set(lcs))]


def _reject_lc_with_lengths(ctx, lengths) -> None:
    explicit_lc = (
        ctx.get_parameter_source("lc") is not click.core.ParameterSource.DEFAULT
    )
    if lengths is not None and explicit_lc:
        raise click.UsageError("Set only one of '--lc' and '--lengths'.")


def _run_guarded(fn):
    try:
        return fn()
    except CapacityError as exc:
        click.echo(f"error: {exc} (lattice bound {exc.lattice_max})", err=True)
        sys.exit(4)
    except (ConvergenceError, BracketError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)


@click.group()
def cli():
    """Relativistic particle-in-a-box spectra, counts and wavefunctions.

    All lengths are in units of the Compton wavelength and all energies in
    units of the rest energy mc^2.  CSV columns are fixed per subcommand;
    multi-valued cells are ';'-joined.
    """


@cli.command()
@click.option("--dim", type=click.Choice(["1", "3"]), default="1", show_default=True)
@click.option(
    "--model",
    type=click.Choice(["kg", "dirac", "nonrel", "all"]),
    default="all",
    show_default=True,
)
@click.option(
    "--lc",
    callback=_parse_floats,
    default="1,10,100,300",
    show_default=True,
    help="Comma-separated cubic box sizes in Compton units.",
)
@click.option(
    "--lengths",
    callback=_parse_floats,
    default=None,
    help="Explicit per-axis box lengths (alternative to --lc).",
)
@click.option("--levels", type=int, default=None, help="Number of levels per box.")
@click.option("--tmax", type=float, default=None, help="Kinetic-energy cutoff.")
@click.option("--spin-counting", is_flag=True, help="Double spin-1/2 degeneracies.")
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None, help="Output path (default stdout).")
@click.option(
    "--preset", type=click.Choice(["electron", "pion", "none"]), default="none",
    show_default=True, help="Annotate box sizes in physical units.",
)
@click.option("--tol", type=float, default=None, help="Solver relative tolerance.")
@click.pass_context
def spectrum(ctx, dim, model, lc, lengths, levels, tmax, spin_counting, fmt, out, preset, tol):
    """Tabulate energy levels: the data behind the comparison figures.

    Emits one row per (model, box, level) ordered by model (kg, dirac,
    nonrel), box size ascending, kinetic energy ascending.  The nonrel
    model appears only at the largest box size, as a reference limit.
    """
    dim = int(dim)
    _reject_lc_with_lengths(ctx, lengths)
    if levels is not None and tmax is not None:
        raise click.UsageError("Set only one of '--levels' and '--tmax'.")
    if levels is None and tmax is None:
        levels = 4
    if levels is not None and levels < 1:
        raise click.UsageError("Invalid value for '--levels': must be >= 1.")
    if tmax is not None and not (tmax > 0.0):
        raise click.UsageError("Invalid value for '--tmax': must be > 0.")
    cfg = _solver_config(tol)
    boxes = _boxes(dim, lc, lengths)
    largest = boxes[-1][0]
    models = _expand_models(model)

    def build():
        rows = []
        for m in [m for m in MODELS if m in models]:
            for cell, box in boxes:
                if m == "nonrel" and cell != largest:
                    continue
                request = SpectrumRequest(
                    model=m,
                    box=box,
                    count=levels,
                    max_kinetic=tmax,
                    spin_counting=spin_counting,
                )
                for level in enumerate_levels(request, cfg):
                    rows.append(_level_row(level, dim, cell))
        return rows

    rows = annotate_units(_run_guarded(build), preset)
    config = {
        "command": "spectrum",
        "dim": dim,
        "model": model,
        "lc": None if lengths is not None else sorted(set(lc)),
        "lengths": list(lengths) if lengths is not None else None,
        "levels": levels,
        "tmax": tmax,
        "spin_counting": spin_counting,
        "preset": preset,
        "kinetic_units": "mc^2",
    }
    _emit(rows, config, {"n_rows": len(rows)}, fmt, out)


@cli.command()
@click.option("--dim", type=click.Choice(["1", "3"]), default="3", show_default=True)
@click.option(
    "--model",
    type=click.Choice(["kg", "dirac", "nonrel", "all"]),
    default="all",
    show_default=True,
)
@click.option("--lc", callback=_parse_floats, default="1", show_default=True)
@click.option("--lengths", callback=_parse_floats, default=None)
@click.option("--tmax", type=float, required=True, help="Kinetic-energy cutoff.")
@click.option("--spin-counting", is_flag=True)
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None)
@click.option("--tol", type=float, default=None)
@click.pass_context
def count(ctx, dim, model, lc, lengths, tmax, spin_counting, fmt, out, tol):
    """Count states with kinetic energy at or below the cutoff."""
    dim = int(dim)
    _reject_lc_with_lengths(ctx, lengths)
    if not (tmax > 0.0):
        raise click.UsageError("Invalid value for '--tmax': must be > 0.")
    cfg = _solver_config(tol)
    boxes = _boxes(dim, lc, lengths)
    models = _expand_models(model)

    def build():
        rows = []
        for m in [m for m in MODELS if m in models]:
            for cell, box in boxes:
                request = SpectrumRequest(
                    model=m, box=box, max_kinetic=tmax, spin_counting=spin_counting
                )
                total = sum(lv.degeneracy for lv in enumerate_levels(request, cfg))
                rows.append(
                    {"model": m, "dim": dim, "lc": cell, "tmax": tmax, "count": total}
                )
        return rows

    rows = _run_guarded(build)
    config = {
        "command": "count",
        "dim": dim,
        "model": model,
        "lc": None if lengths is not None else sorted(set(lc)),
        "lengths": list(lengths) if lengths is not None else None,
        "tmax": tmax,
        "spin_counting": spin_counting,
    }
    _emit(rows, config, {"n_rows": len(rows)}, fmt, out)


@cli.command()
@click.option("--dim", type=click.Choice(["1", "3"]), default="1", show_default=True)
@click.option("--n", callback=_parse_ints, required=True, help="Quantum numbers.")
@click.option("--lc", callback=_parse_floats, default=None, help="Cubic box size.")
@click.option("--lengths", callback=_parse_floats, default=None)
@click.option(
    "--grid", type=int, default=None,
    help="Points per axis (odd; default 201 in 1D, 21 in 3D).",
)
@click.option("--conjugate", is_flag=True, help="Sample the charge-conjugated state.")
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True,
)
@click.option("--out", type=click.Path(), default=None)
@click.option("--tol", type=float, default=None)
def field(dim, n, lc, lengths, grid, conjugate, fmt, out, tol):
    """Sample a box eigenstate: spinor, charge density and current.

    Emits one row per grid point (boundary included) plus a summary with
    the charge quadrature, the largest |current| and the finite-difference
    stationarity residual.  In CSV the summary appears as leading '#'
    comment lines.
    """
    dim = int(dim)
    if len(n) != dim:
        raise click.UsageError(f"Invalid value for '--n': need {dim} values for --dim {dim}.")
    if lc is not None and lengths is not None:
        raise click.UsageError("Set only one of '--lc' and '--lengths'.")
    if lc is None and lengths is None:
        raise click.UsageError("One of '--lc' and '--lengths' is required.")
    if lc is not None and len(lc) != 1:
        raise click.UsageError("Invalid value for '--lc': give exactly one box size.")
    if grid is None:
        grid = 201 if dim == 1 else 21
    if grid < 3 or grid % 2 == 0:
        raise click.UsageError("Invalid value for '--grid': need an odd count >= 3.")
    box = BoxSpec(lengths) if lengths is not None else BoxSpec.cube(lc[0], dim=dim)
    state = BoxState(box=box, qnums=QuantumNumbers(n), conjugated=conjugate)
    gridspec = GridSpec(points_per_axis=grid, include_boundary=True)

    def build():
        axes = [np.linspace(0.0, length, grid) for length in box.lengths]
        rows = []
        names = ("x", "y", "z")[:dim]
        for idx in np.ndindex(*([grid] * dim)):
            if not gridspec.include_boundary and any(
                i in (0, grid - 1) for i in idx
            ):
                continue
            pos = tuple(axes[a][idx[a]] for a in range(dim))
            s = state.sample(pos, time=0.0)
            row = {name: float(v) for name, v in zip(names, pos)}
            row["t"] = s.time
            row["re_phi"] = s.spinor.upper.real
            row["im_phi"] = s.spinor.upper.imag
            row["re_chi"] = s.spinor.lower.real
            row["im_chi"] = s.spinor.lower.imag
            row["rho"] = s.rho
            for a in range(dim):
                row[f"j_{names[a]}"] = s.current[a]
            rows.append(row)
        summary = {
            "normalization": normalization_check(state, gridspec),
            "max_abs_current": max(
                abs(v) for row in rows for k, v in row.items() if k.startswith("j_")
            ),
            "stationarity_residual": stationarity_residual(state, gridspec),
        }
        return rows, summary

    rows, summary = _run_guarded(build)
    config = {
        "command": "field",
        "dim": dim,
        "n": list(n),
        "lc": lc[0] if lc is not None else None,
        "lengths": list(lengths) if lengths is not None else None,
        "grid": grid,
        "conjugate": conjugate,
    }
    _emit(rows, config, summary, fmt, out)


def main():
    cli()


if __name__ == "__main__":
    main()
