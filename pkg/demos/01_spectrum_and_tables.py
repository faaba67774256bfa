"""Closed-form levels of the Manning-Rosen well and the published tables.

Run with ``python demos/01_spectrum_and_tables.py``.
"""

# %% A single level
# Atomic units, mu = 1, screening length b = 40 and coupling A = 2b.
from manning_rosen import (PotentialSpec, QuantumNumbers, bound_states, critical_coupling,
                           energy, table_spec)
from manning_rosen.tables import discrepancy_ratios, reproduce

spec = PotentialSpec(A=80.0, alpha=0.75, b=40.0)
res = energy(spec, QuantumNumbers(n=0, l=1))
print(f"2p: E = {res.energy:.10f} hartree, eps = {res.bound.epsilon:.6f}, "
      f"Lambda = {res.bound.lambda_cap:.6f}")

# %% The whole p ladder
# Levels get shallower with n until the effective coupling runs out.
for r in bound_states(spec, l=1):
    print(f"  n={r.state.n}  E={r.energy: .8f}")

# %% Where a level disappears
q = QuantumNumbers(2, 1)
a_c = critical_coupling(0.75, q)
print(f"n=2, l=1 unbinds at A = {a_c:.6f}")
print("bound just above:", energy(spec.with_coupling(a_c + 1e-6), q).is_bound,
      "| just below:", energy(spec.with_coupling(a_c - 1e-6), q).is_bound)

# %% alpha and 1 - alpha give the same potential
print("alpha symmetry:", energy(spec, q).energy, energy(spec.mirrored(), q).energy)

# %% Molecules, in eV
# Table columns are dimensionless: A = 2 / column and b = 0.01 / column Angstrom.
for mol in ("HCl", "CH", "LiH", "CO"):
    e = energy(table_spec(mol, 0.025, 0.75), QuantumNumbers(0, 1)).energy
    print(f"{mol:4s} 2p at column 0.025: {e:.8f} eV")

# %% Reproducing the tables
for which in (1, 2, 3):
    report = reproduce(which)
    print("\n".join(report.summary_lines()))
    for row in report.worst(3, relative=which != 1):
        print(f"    {row.molecule or ''} {row.state_label} 1/b={row.column_inv_b:g} "
              f"alpha={row.alpha:g}: printed {row.e_paper:.9g}, closed form {row.e_closed_form:.9g}")

# %% The CO alpha = 0,1 column is off by a constant factor
ratios = [x for _, x in discrepancy_ratios(reproduce(3))]
print(f"CO Hulthen column over closed form: median {sorted(ratios)[len(ratios) // 2]:.5f}")
