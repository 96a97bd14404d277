"""Cumulative state counts: why the relativistic fermion gas is denser.
=====================================================================

For boxes around a Compton wavelength across, the spin-1/2 wavenumbers sit
well below n pi / L, so more modes fit under any kinetic-energy cutoff
than for spin-0 (per polarization).  The effect fades as the box grows.
"""

import numpy as np

from relbox import BoxSpec, count_states

box = BoxSpec.cube(0.5)
print("cumulative counts on the cube of side 0.5 (no spin factor)")
print(f"{'T_max':>8} {'spin-0':>8} {'spin-1/2':>9}")
for tmax in np.linspace(2.0, 40.0, 12):
    kg = count_states("kg", box, float(tmax))
    dirac = count_states("dirac", box, float(tmax))
    print(f"{tmax:>8.2f} {kg:>8} {dirac:>9}")

print()
print("spin factor doubles every spin-1/2 entry:")
print("  with spin counting:",
      count_states("dirac", box, 25.0, spin_counting=True),
      "= 2 x", count_states("dirac", box, 25.0))

print()
big = BoxSpec.cube(50.0)
print("large box (side 50): the two counts approach each other")
for tmax in (0.01, 0.02, 0.05):
    kg = count_states("kg", big, tmax)
    dirac = count_states("dirac", big, tmax)
    print(f"  T_max={tmax:g}: spin-0 {kg}, spin-1/2 {dirac}")
