"""Bound states of the Manning-Rosen potential.

Closed-form energies and normalized radial wavefunctions under the
exponential approximation of the centrifugal barrier, plus an independent
finite-difference solver of the radial equation to check them.
"""

__version__ = "0.1.0"

from .core import (ATOMIC, SPECTROSCOPIC, BoundState, MoleculeRecord, PotentialSpec,
                   QuantumNumbers, SpecError, UnitSystem, load_spec, spec_from_config,
                   spec_to_config, spectroscopic_energy_scale, validate_spec)
from .molecules import (MOLECULES, MoleculeDatabase, atomic_table_spec,
                        quantum_numbers_to_label, state_label_to_quantum_numbers, table_spec)
from .oracle import (CentrifugalMode, OracleConfig, OracleEigenvalue, approximation_error,
                     solve, solve_state)
from .specialfns import (JacobiParams, jacobi, jacobi_recurrence, jacobi_sum_form_A,
                         jacobi_sum_form_B, log_gamma, normalization_sum)
from .spectrum import (SpectrumResult, bound_states, compute_a, compute_epsilon,
                       compute_lambda, coulomb_limit_energy, critical_coupling, energy,
                       hulthen_energy, potential_curvature, potential_minimum,
                       potential_value)
from .wavefunction import (RadialWavefunction, count_nodes, evaluate, hulthen_wavefunction,
                           norm_constant, normalization_integral, radial_wavefunction)
