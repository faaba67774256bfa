"""Closed-form spectrum of the Manning-Rosen potential, its shape, and limits.

The centrifugal barrier is replaced by e^{-r/b} / (b^2 (1 - e^{-r/b})^2);
with that replacement the levels below are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BoundState, PotentialSpec, QuantumNumbers, validate_spec
from .specialfns import normalization_sum


@dataclass(frozen=True)
class SpectrumResult:
    state: QuantumNumbers
    bound: BoundState | None
    is_bound: bool

    @property
    def energy(self) -> float | None:
        return self.bound.energy if self.bound else None


def compute_a(alpha: float, l: int) -> float:
    return math.sqrt((1.0 - 2.0 * alpha) ** 2 + 4.0 * l * (l + 1))


def compute_lambda(alpha: float, l: int) -> float:
    """Effective angular momentum; equals l when alpha is 0 or 1."""
    return (compute_a(alpha, l) - 1.0) / 2.0


def epsilon_signed(A: float, alpha: float, q: QuantumNumbers) -> float:
    """Root of the quantization condition, positive iff the level is bound.

    Sign is chosen so that epsilon = b sqrt(-2 mu E) / hbar; the bracket
    A - A_c is positive for a bound level.
    """
    n, l = q.n, q.l
    lam = compute_lambda(alpha, l)
    return (A - (n + 1) ** 2 - l * (l + 1) - (2 * n + 1) * lam) / (2.0 * (n + 1 + lam))


def compute_epsilon(spec: PotentialSpec, q: QuantumNumbers) -> float | None:
    """Positive dimensionless energy parameter, or None when not bound."""
    validate_spec(spec)
    eps = epsilon_signed(spec.A, spec.alpha, q)
    return eps if eps > 0 else None


def energy(spec: PotentialSpec, q: QuantumNumbers) -> SpectrumResult:
    eps = compute_epsilon(spec, q)
    if eps is None:
        return SpectrumResult(q, None, False)
    lam = compute_lambda(spec.alpha, q.l)
    e = -spec.energy_scale * eps * eps
    try:
        norm = 1.0 / math.sqrt(spec.b * normalization_sum(eps, lam, q.n))
    except ArithmeticError:
        norm = math.nan
    return SpectrumResult(q, BoundState(e, eps, lam, 2.0 * lam + 1.0, norm), True)


def bound_states(spec: PotentialSpec, l: int, n_max: int | None = None) -> list[SpectrumResult]:
    """All bound levels of angular momentum l in order of n (capped at n_max)."""
    out = []
    n = 0
    while n_max is None or n <= n_max:
        res = energy(spec, QuantumNumbers(n, l))
        if not res.is_bound:
            break
        out.append(res)
        n += 1
    return out


def critical_coupling(alpha: float, q: QuantumNumbers) -> float:
    """Coupling A at which level (n, l) reaches zero binding energy."""
    lam = compute_lambda(alpha, q.l)
    return (q.n + 1 + lam) ** 2 - lam * (lam + 1) + q.l * (q.l + 1)


def nu_identity_residual(A: float, alpha: float, q: QuantumNumbers, epsilon: float) -> float:
    """lambda(eps) - lambda_n(eps) from the hypergeometric reduction; zero on a level."""
    a = compute_a(alpha, q.l)
    lam = A - q.l * (q.l + 1) - (1 + a) * (0.5 + epsilon)
    lam_n = q.n * (1 + q.n + a + 2 * epsilon)
    return lam - lam_n


# -- special cases -----------------------------------------------------------

def hulthen_epsilon(A: float, q: QuantumNumbers) -> float:
    N = q.principal
    return (A - N * N) / (2.0 * N)


def hulthen_energy(spec: PotentialSpec, q: QuantumNumbers) -> float:
    """alpha in {0, 1} levels; depend on n and l only through n + l + 1."""
    N = q.principal
    return -(spec.A - N * N) ** 2 * spec.energy_scale / (4.0 * N * N)


def coulomb_limit_energy(Z_eff: float, q: QuantumNumbers, mu: float = 1.0) -> float:
    """-Z^2 mu / (2 N^2) in atomic units (hbar = e = 1)."""
    return -Z_eff ** 2 * mu / (2.0 * q.principal ** 2)


# -- potential shape ---------------------------------------------------------

def _screened(r, b):
    with np.errstate(over="ignore"):  # far tail: expm1 -> inf, y -> 0
        return 1.0 / np.expm1(np.asarray(r, dtype=float) / b)


def potential_value(spec: PotentialSpec, r):
    """V(r) = hbar^2/(2 mu b^2) [alpha(alpha-1) y^2 - A y], y = 1/(e^{r/b} - 1)."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("potential is defined for r > 0 only")
    y = _screened(r, spec.b)
    c = spec.alpha * (spec.alpha - 1.0)
    return (spec.energy_scale * (c * y - spec.A) * y)[()]


def potential_value_cd(spec: PotentialSpec, r):
    """Same potential through the -(C e^{-x} + D e^{-2x}) / (1 - e^{-x})^2 form."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("potential is defined for r > 0 only")
    C = spec.A
    D = -spec.A - spec.alpha * (spec.alpha - 1.0)
    x = r / spec.b
    ex = np.exp(-x)
    return (-spec.energy_scale * (C * ex + D * ex * ex) / np.expm1(-x) ** 2)[()]


def potential_minimum(spec: PotentialSpec) -> tuple[float, float] | None:
    """(r0, V(r0)) of the interior minimum, or None if the well is monotone.

    A stationary point exists at y0 = A / (2 alpha(alpha-1)); it is a minimum
    only when alpha(alpha-1) > 0 and A > 0.
    """
    validate_spec(spec)
    c = spec.alpha * (spec.alpha - 1.0)
    if not (c > 0 and spec.A > 0):
        return None
    r0 = spec.b * math.log1p(2.0 * c / spec.A)
    return r0, float(potential_value(spec, r0))


def printed_minimum_value(spec: PotentialSpec) -> float:
    """The commonly quoted -A^2 / (4 mu b^2 alpha(alpha-1)); hbar is absent."""
    c = spec.alpha * (spec.alpha - 1.0)
    return -spec.A ** 2 / (4.0 * spec.mu * spec.b ** 2 * c)


def potential_curvature(spec: PotentialSpec, rel_step: float = 1e-4) -> float:
    """d^2V/dr^2 at r0 by Richardson-extrapolated central differences."""
    m = potential_minimum(spec)
    if m is None:
        raise ValueError("potential has no interior minimum")
    r0, v0 = m
    h = spec.b * rel_step
    if h >= r0:
        h = r0 / 4

    def d2(step):
        vp = float(potential_value(spec, r0 + step))
        vm = float(potential_value(spec, r0 - step))
        return (vp - 2.0 * v0 + vm) / step ** 2

    return (4.0 * d2(h / 2) - d2(h)) / 3.0


def printed_curvature(spec: PotentialSpec) -> float:
    """A^2 [A + 2c]^2 / (8 b^4 c^3) with c = alpha(alpha-1), as usually printed."""
    c = spec.alpha * (spec.alpha - 1.0)
    return spec.A ** 2 * (spec.A + 2 * c) ** 2 / (8.0 * spec.b ** 4 * c ** 3)
