"""Energy-level enumeration, degeneracy counting and comparison tables.

Levels are labelled by their quantum numbers and carry the scaled kinetic
energy T = E/mc^2 - 1.  Three models share the machinery:

* ``kg``     -- spin-0, wavenumbers n_i pi / L_i, relativistic dispersion
* ``dirac``  -- spin-1/2, wavenumbers from the transcendental equations,
                relativistic dispersion
* ``nonrel`` -- spin-0 wavenumbers with the quadratic dispersion x^2 / 2

On cubic boxes levels are grouped by the sorted representative of their
quantum-number triple (1-, 3- or 6-fold permutation degeneracy); distinct
triples whose energies agree to 1e-9 relative are reported as one level
with the degeneracies summed and every representative retained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BoxSpec, QuantumNumbers
from .errors import CapacityError
from .rootfind import (
    DEFAULT_CONFIG,
    SolverConfig,
    dirac_wavenumber_1d,
    dirac_wavenumbers_3d,
    kg_wavenumber_1d,
    kg_wavenumbers_3d,
)

__all__ = [
    "MODELS",
    "Level",
    "SpectrumRequest",
    "dispersion",
    "level_1d",
    "level_3d",
    "enumerate_levels",
    "count_states",
    "figure_table",
    "DEFAULT_LATTICE_MAX_1D",
    "DEFAULT_LATTICE_MAX_3D",
]

MODELS = ("kg", "dirac", "nonrel")

# Two levels count as distinct when their kinetic energies differ by more
# than this, relatively; closer pairs are merged with summed degeneracy.
MERGE_REL_TOL = 1e-9

# Largest quantum number the enumerators will scan per axis before raising
# CapacityError.  The 3D bound is cubic in cost, hence much smaller.
DEFAULT_LATTICE_MAX_1D = 100_000
DEFAULT_LATTICE_MAX_3D = 64


@dataclass(frozen=True)
class Level:
    """One solved energy level.

    ``qnums`` is the canonical representative (sorted ascending on cubes);
    ``also`` lists further representatives folded in by an accidental
    (equal-energy) merge and is almost always empty.
    """

    model: str
    qnums: QuantumNumbers
    wavenumbers: tuple[float, ...]
    kinetic: float
    degeneracy: int
    also: tuple[QuantumNumbers, ...] = ()

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.kinetic < 0.0:
            raise ValueError("kinetic energy cannot be negative")
        if self.degeneracy < 1:
            raise ValueError("degeneracy must be >= 1")


@dataclass(frozen=True)
class SpectrumRequest:
    """What to enumerate: either the first ``count`` levels or everything
    with kinetic energy at most ``max_kinetic``."""

    model: str
    box: BoxSpec
    count: int | None = None
    max_kinetic: float | None = None
    spin_counting: bool = False

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if (self.count is None) == (self.max_kinetic is None):
            raise ValueError("set exactly one of count / max_kinetic")
        if self.count is not None and self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.max_kinetic is not None and not (self.max_kinetic > 0.0):
            raise ValueError(f"max_kinetic must be > 0, got {self.max_kinetic}")


def dispersion(model: str, wavenumbers: tuple[float, ...]) -> float:
    """Scaled kinetic energy of a mode with the given wavenumbers."""
    norm_sq = math.fsum(x * x for x in wavenumbers)
    if model in ("kg", "dirac"):
        return norm_sq / (math.sqrt(norm_sq + 1.0) + 1.0)
    if model == "nonrel":
        return 0.5 * norm_sq
    raise ValueError(f"unknown model {model!r}")


def _spin_factor(model: str, spin_counting: bool) -> int:
    return 2 if (spin_counting and model == "dirac") else 1


def level_1d(
    model: str, n: int, box_length: float, cfg: SolverConfig = DEFAULT_CONFIG
) -> Level:
    """The nth 1D level of the given model (degeneracy left at 1)."""
    if model == "dirac":
        x = dirac_wavenumber_1d(n, box_length, cfg)
    elif model in ("kg", "nonrel"):
        x = kg_wavenumber_1d(n, box_length)
    else:
        raise ValueError(f"unknown model {model!r}")
    return Level(
        model=model,
        qnums=QuantumNumbers((n,)),
        wavenumbers=(x,),
        kinetic=dispersion(model, (x,)),
        degeneracy=1,
    )


def level_3d(
    model: str,
    qnums: QuantumNumbers,
    box: BoxSpec,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> Level:
    """One 3D level of the given model (degeneracy left at 1)."""
    if model == "dirac":
        x1, x2, x3, kinetic = dirac_wavenumbers_3d(qnums, box, cfg)
        xs = (x1, x2, x3)
    elif model in ("kg", "nonrel"):
        xs = kg_wavenumbers_3d(qnums, box)
        kinetic = dispersion(model, xs)
    else:
        raise ValueError(f"unknown model {model!r}")
    return Level(
        model=model,
        qnums=qnums,
        wavenumbers=xs,
        kinetic=dispersion(model, xs) if model == "nonrel" else kinetic,
        degeneracy=1,
    )


def enumerate_levels(
    request: SpectrumRequest,
    cfg: SolverConfig = DEFAULT_CONFIG,
    lattice_max: int | None = None,
) -> list[Level]:
    """Distinct levels in strictly increasing kinetic order.

    Enumeration is complete: the candidate lattice is grown until the
    lowest conceivable kinetic energy of any unscanned mode exceeds the
    cutoff (for spin-1/2 the bound uses the branch lower edge
    (n_i - 1/2) pi / L_i, which bounds every root from below).  If that
    requires scanning past ``lattice_max``, CapacityError is raised rather
    than silently truncating.
    """
    if request.box.dimension == 1:
        return _enumerate_1d(request, cfg, lattice_max)
    return _enumerate_3d(request, cfg, lattice_max)


def count_states(
    model: str,
    box: BoxSpec,
    max_kinetic: float,
    spin_counting: bool = False,
    cfg: SolverConfig = DEFAULT_CONFIG,
    lattice_max: int | None = None,
) -> int:
    """Degeneracy-weighted number of states with kinetic <= max_kinetic."""
    request = SpectrumRequest(
        model=model, box=box, max_kinetic=max_kinetic, spin_counting=spin_counting
    )
    levels = enumerate_levels(request, cfg, lattice_max)
    return sum(level.degeneracy for level in levels)


def _min_excluded_kinetic(model: str, box: BoxSpec, n_max: int) -> float:
    """Lower bound on the kinetic energy of any mode outside the scanned
    lattice (some index > n_max)."""
    dim = box.dimension
    best = math.inf
    for axis in range(dim):
        indices = [1] * dim
        indices[axis] = n_max + 1
        xs = tuple(_lower_bound_wavenumber(model, indices[i], box.lengths[i])
                   for i in range(dim))
        best = min(best, dispersion(model, xs))
    return best


def _lower_bound_wavenumber(model: str, n: int, length: float) -> float:
    if model == "dirac":
        return (n - 0.5) * math.pi / length
    return n * math.pi / length


def _enumerate_1d(
    request: SpectrumRequest, cfg: SolverConfig, lattice_max: int | None
) -> list[Level]:
    cap = DEFAULT_LATTICE_MAX_1D if lattice_max is None else lattice_max
    box_length = request.box.lengths[0]
    spin = _spin_factor(request.model, request.spin_counting)
    levels: list[Level] = []
    n = 1
    # 1D kinetic energies increase strictly with n (disjoint increasing
    # brackets), so enumeration in n order is already complete.
    while True:
        if n > cap:
            raise CapacityError(
                f"1D enumeration needs indices above the lattice bound {cap}",
                lattice_max=cap,
            )
        level = level_1d(request.model, n, box_length, cfg)
        if request.max_kinetic is not None and level.kinetic > request.max_kinetic:
            return levels
        levels.append(
            Level(
                model=level.model,
                qnums=level.qnums,
                wavenumbers=level.wavenumbers,
                kinetic=level.kinetic,
                degeneracy=spin,
            )
        )
        if request.count is not None and len(levels) == request.count:
            return levels
        n += 1


def _cubic_multiplicity(triple: tuple[int, int, int]) -> int:
    """Number of distinct permutations of a sorted triple: 1, 3 or 6."""
    a, b, c = triple
    if a == b == c:
        return 1
    if a == b or b == c:
        return 3
    return 6


def _sorted_triples(n_max: int):
    for a in range(1, n_max + 1):
        for b in range(a, n_max + 1):
            for c in range(b, n_max + 1):
                yield (a, b, c)


def _all_triples(n_max: int):
    for a in range(1, n_max + 1):
        for b in range(1, n_max + 1):
            for c in range(1, n_max + 1):
                yield (a, b, c)


def _enumerate_3d(
    request: SpectrumRequest, cfg: SolverConfig, lattice_max: int | None
) -> list[Level]:
    cap = DEFAULT_LATTICE_MAX_3D if lattice_max is None else lattice_max
    box = request.box
    model = request.model
    spin = _spin_factor(model, request.spin_counting)
    on_cube = box.is_cube
    cache: dict[tuple[int, int, int], Level] = {}

    n_max = 2
    while True:
        triples = _sorted_triples(n_max) if on_cube else _all_triples(n_max)
        entries = []
        for triple in triples:
            if triple not in cache:
                cache[triple] = level_3d(model, QuantumNumbers(triple), box, cfg)
            base = cache[triple]
            mult = _cubic_multiplicity(triple) if on_cube else 1
            entries.append((base, mult * spin))
        entries.sort(key=lambda item: (item[0].kinetic, item[0].qnums.indices))
        grouped = _merge_equal_energies(entries)

        if request.max_kinetic is not None:
            kept = [g for g in grouped if g.kinetic <= request.max_kinetic]
            threshold = request.max_kinetic
        else:
            kept = grouped[: request.count]
            if len(kept) < request.count:
                threshold = math.inf  # not enough levels yet: keep growing
            else:
                threshold = kept[-1].kinetic * (1.0 + MERGE_REL_TOL)
        if _min_excluded_kinetic(model, box, n_max) > threshold:
            return kept
        if n_max >= cap:
            raise CapacityError(
                f"3D enumeration needs indices above the lattice bound {cap}",
                lattice_max=cap,
            )
        n_max = min(cap, n_max * 2)


def _merge_equal_energies(entries) -> list[Level]:
    """Collapse entries whose kinetic energies agree to MERGE_REL_TOL."""
    merged: list[Level] = []
    for base, degeneracy in entries:
        if merged and math.isclose(
            merged[-1].kinetic, base.kinetic, rel_tol=MERGE_REL_TOL, abs_tol=0.0
        ):
            prev = merged[-1]
            merged[-1] = Level(
                model=prev.model,
                qnums=prev.qnums,
                wavenumbers=prev.wavenumbers,
                kinetic=prev.kinetic,
                degeneracy=prev.degeneracy + degeneracy,
                also=prev.also + (base.qnums,),
            )
        else:
            merged.append(
                Level(
                    model=base.model,
                    qnums=base.qnums,
                    wavenumbers=base.wavenumbers,
                    kinetic=base.kinetic,
                    degeneracy=degeneracy,
                    also=(),
                )
            )
    return merged


def figure_table(
    models: list[str],
    lc_values: list[float],
    count: int,
    dim: int,
    spin_counting: bool = False,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> list[dict]:
    """Rows for a spectrum-comparison figure.

    One row per (model, box size, level): the first ``count`` levels of each
    requested model on cubic boxes of the given sizes.  The non-relativistic
    model is tabulated only at the largest box, where it is meaningful as a
    limit.  Rows are ordered by model (kg, dirac, nonrel), then box size
    ascending, then kinetic energy ascending.
    """
    if not models or not lc_values:
        raise ValueError("need at least one model and one box size")
    for m in models:
        if m not in MODELS:
            raise ValueError(f"unknown model {m!r}")
    if dim not in (1, 3):
        raise ValueError(f"dim must be 1 or 3, got {dim}")
    ordered_models = [m for m in MODELS if m in models]
    lcs = sorted(set(float(v) for v in lc_values))
    largest = lcs[-1]
    rows: list[dict] = []
    for model in ordered_models:
        for lc in lcs:
            if model == "nonrel" and lc != largest:
                continue
            box = BoxSpec.cube(lc, dim=dim)
            request = SpectrumRequest(
                model=model, box=box, count=count, spin_counting=spin_counting
            )
            for level in enumerate_levels(request, cfg):
                rows.append(_level_row(level, dim, lc))
    return rows


def _level_row(level: Level, dim: int, lc) -> dict:
    return {
        "model": level.model,
        "dim": dim,
        "lc": lc,
        "qnums": list(level.qnums.indices),
        "wavenumbers": [float(x) for x in level.wavenumbers],
        "kinetic": float(level.kinetic),
        "degeneracy": level.degeneracy,
        "also": [list(q.indices) for q in level.also],
    }
