"""Finite-difference radial Schroedinger solver used as an independent check.

The radial Hamiltonian -(hbar^2/2mu) d^2/dr^2 + V_eff(r) is discretized with
second-order central differences on a uniform grid with Dirichlet walls at
r = 0 and r = r_max.  The symmetric tridiagonal eigenproblem is solved by
bisection plus inverse iteration (LAPACK stebz/stein), and eigenvalues from a
ladder of halved grid spacings are Richardson-extrapolated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .core import PotentialSpec, QuantumNumbers, validate_spec
from .spectrum import potential_value


class CentrifugalMode(str, enum.Enum):
    EXACT = "exact"
    APPROXIMATED = "approximated"


class OracleError(RuntimeError):
    pass


class NotBoundError(OracleError):
    pass


class ConvergenceError(OracleError):
    def __init__(self, message, estimate):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class OracleConfig:
    """Grid and solver settings.

    ``grid_points`` is the number of intervals on the finest grid; the ladder
    uses grid_points / 2**k for k = refine_levels-1 .. 0.  ``r_max`` of None
    means 60 b.  ``max_error``, when set, turns an extrapolation error
    estimate above it into a ConvergenceError.
    """

    r_max: float | None = None
    grid_points: int = 20_000
    centrifugal_mode: CentrifugalMode = CentrifugalMode.EXACT
    refine_levels: int = 3
    eig_tol: float = 1e-12
    max_error: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "centrifugal_mode", CentrifugalMode(self.centrifugal_mode))
        if self.refine_levels < 1:
            raise ValueError("refine_levels must be at least 1")
        coarse, rem = divmod(self.grid_points, 2 ** (self.refine_levels - 1))
        if rem:
            raise ValueError(f"grid_points={self.grid_points} is not divisible by "
                             f"2**{self.refine_levels - 1}")
        if coarse < 100:
            raise ValueError(f"coarsest grid has {coarse} intervals; need at least 100")
        if self.r_max is not None and not self.r_max > 0:
            raise ValueError("r_max must be positive")

    def ladder(self) -> list[int]:
        return [self.grid_points // 2 ** k for k in range(self.refine_levels - 1, -1, -1)]


@dataclass(frozen=True)
class OracleEigenvalue:
    state: QuantumNumbers
    energy: float
    grid_error_estimate: float
    ladder: tuple[float, ...] = ()


def _grid_levels(potential: Callable, kinetic: float, r_max: float, intervals: int,
                 count: int | None, tol: float):
    h = r_max / intervals
    r = h * np.arange(1, intervals)
    diag = 2.0 * kinetic / h ** 2 + potential(r)
    off = np.full(intervals - 2, -kinetic / h ** 2)
    if count is None:
        lower = diag.min() - 2.0 * kinetic / h ** 2  # Gershgorin
        w, v = eigh_tridiagonal(diag, off, select="v", select_range=(lower, 0.0), tol=tol)
    else:
        w, v = eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1), tol=tol)
    return w, v


def count_sign_changes(vec, rel_floor: float = 1e-10) -> int:
    """Sign changes of a discrete eigenvector, ignoring the noisy far tail."""
    v = np.asarray(vec)
    v = v[np.abs(v) > rel_floor * np.abs(v).max()]
    s = np.sign(v)
    return int(np.count_nonzero(s[1:] != s[:-1]))


def richardson(values) -> tuple[float, float]:
    """Romberg table over h^2, h^4, ... for values on grids with halved spacing.

    Returns (extrapolated value, |last column - previous column|).
    """
    row = [float(values[0])]
    for k in range(1, len(values)):
        new = [float(values[k])]
        for j in range(1, k + 1):
            new.append(new[j - 1] + (new[j - 1] - row[j - 1]) / (4 ** j - 1))
        row = new
    if len(row) == 1:
        return row[0], float("inf")
    return row[-1], abs(row[-1] - row[-2])


def solve_potential(potential: Callable, l: int, kinetic: float, config: OracleConfig,
                    r_max: float, centrifugal: Callable | None = None,
                    n_states: int | None = None) -> list[OracleEigenvalue]:
    """Bound levels of -kinetic d^2/dr^2 + potential(r) + kinetic*l(l+1)*centrifugal(r).

    ``centrifugal`` defaults to the exact 1/r^2.  Levels are labelled by the
    node count of the finest-grid eigenvector.
    """
    if centrifugal is None:
        centrifugal = lambda r: 1.0 / r ** 2  # noqa: E731

    def v_eff(r):
        return potential(r) + kinetic * l * (l + 1) * centrifugal(r)

    ladder = config.ladder()
    count = n_states
    if count is None:
        w, _ = _grid_levels(v_eff, kinetic, r_max, ladder[0], None, config.eig_tol)
        count = len(w)
    if count == 0:
        return []
    energies = []
    vecs = None
    for intervals in ladder:
        w, vecs = _grid_levels(v_eff, kinetic, r_max, intervals, count, config.eig_tol)
        energies.append(w)
    out = []
    for i in range(count):
        seq = [e[i] for e in energies]
        value, est = richardson(seq)
        nodes = count_sign_changes(vecs[:, i])
        out.append(OracleEigenvalue(QuantumNumbers(nodes, l), value, est, tuple(seq)))
    return out


def effective_centrifugal(spec: PotentialSpec, mode: CentrifugalMode) -> Callable:
    if CentrifugalMode(mode) is CentrifugalMode.EXACT:
        return lambda r: 1.0 / r ** 2
    b = spec.b
    return lambda r: np.exp(-r / b) / (b * np.expm1(-r / b)) ** 2


def solve(spec: PotentialSpec, l: int, config: OracleConfig = OracleConfig(),
          n_states: int | None = None) -> list[OracleEigenvalue]:
    """Lowest negative eigenvalues of the Manning-Rosen radial problem for one l."""
    validate_spec(spec)
    kinetic = spec.energy_scale * spec.b ** 2
    r_max = config.r_max if config.r_max is not None else 60.0 * spec.b
    levels = solve_potential(lambda r: potential_value(spec, r), l, kinetic, config, r_max,
                             effective_centrifugal(spec, config.centrifugal_mode), n_states)
    levels = [lv for lv in levels if lv.energy < 0]
    if config.max_error is not None:
        for lv in levels:
            if lv.grid_error_estimate > config.max_error:
                raise ConvergenceError(
                    f"state {lv.state}: grid error estimate {lv.grid_error_estimate:.3g} "
                    f"exceeds {config.max_error:.3g}", lv.grid_error_estimate)
    return levels


def find_state(levels: list[OracleEigenvalue], n: int) -> OracleEigenvalue:
    """Pick the level with n nodes; matching is never by energy order."""
    for lv in levels:
        if lv.state.n == n:
            return lv
    raise NotBoundError(f"no bound level with {n} nodes among {len(levels)} found")


def solve_state(spec: PotentialSpec, q: QuantumNumbers,
                config: OracleConfig = OracleConfig()) -> OracleEigenvalue:
    return find_state(solve(spec, q.l, config, n_states=q.n + 1), q.n)


def approximation_error(spec: PotentialSpec, q: QuantumNumbers,
                        config: OracleConfig = OracleConfig()) -> float:
    """E_exact - E_approx for the state with n nodes at angular momentum l."""
    exact = solve_state(spec, q, replace(config, centrifugal_mode=CentrifugalMode.EXACT))
    approx = solve_state(spec, q, replace(config, centrifugal_mode=CentrifugalMode.APPROXIMATED))
    return exact.energy - approx.energy
