"""Normalized radial wavefunctions and their quadrature/node checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import roots_jacobi

from .core import BoundState, PotentialSpec, QuantumNumbers
from .specialfns import JacobiParams, jacobi, normalization_sum
from .spectrum import energy, hulthen_epsilon

DEFAULT_RCUT_B = 60.0


class NotBoundError(ValueError):
    pass


class QuadratureError(RuntimeError):
    pass


@dataclass(frozen=True)
class RadialWavefunction:
    spec: PotentialSpec
    state: QuantumNumbers
    bound: BoundState
    norm: float

    @property
    def jacobi_params(self) -> JacobiParams:
        return JacobiParams(2 * self.bound.epsilon, 2 * self.bound.lambda_cap + 1, self.state.n)

    def __call__(self, r, route: str = "recurrence"):
        return evaluate(self, r, route)

    def sample(self, r_max: float | None = None, samples: int = 4000):
        """(r, R(r)) on a uniform grid over [0, r_max]."""
        if r_max is None:
            r_max = DEFAULT_RCUT_B * self.spec.b
        r = np.linspace(0.0, r_max, samples)
        return r, evaluate(self, r)


def norm_constant(spec: PotentialSpec, q: QuantumNumbers) -> float:
    """N_nl = 1/sqrt(s(n)), with s(n) = b * normalization_sum."""
    res = energy(spec, q)
    if not res.is_bound:
        raise NotBoundError(f"state {q} is not bound")
    s = spec.b * normalization_sum(res.bound.epsilon, res.bound.lambda_cap, q.n)
    if not (s > 0 and math.isfinite(s)):
        raise ArithmeticError(f"normalization sum is {s} for {q}; cancellation lost the result")
    return 1.0 / math.sqrt(s)


def radial_wavefunction(spec: PotentialSpec, q: QuantumNumbers, norm: float | None = None) -> RadialWavefunction:
    res = energy(spec, q)
    if not res.is_bound:
        raise NotBoundError(f"state {q} is not bound")
    if norm is None:
        norm = res.bound.norm
    return RadialWavefunction(spec, q, res.bound, norm)


def hulthen_wavefunction(spec: PotentialSpec, q: QuantumNumbers) -> RadialWavefunction:
    """alpha in {0, 1}: Lambda = l and epsilon = (A - N^2) / (2N)."""
    if spec.alpha not in (0.0, 1.0):
        raise ValueError(f"Hulthen reduction needs alpha in {{0, 1}}, got {spec.alpha}")
    eps = hulthen_epsilon(spec.A, q)
    if eps <= 0:
        raise NotBoundError(f"state {q} is not bound")
    lam = float(q.l)
    e = -spec.energy_scale * eps * eps
    norm = 1.0 / math.sqrt(spec.b * normalization_sum(eps, lam, q.n))
    return RadialWavefunction(spec, q, BoundState(e, eps, lam, 2 * lam + 1, norm), norm)


def evaluate(w: RadialWavefunction, r, route: str = "recurrence"):
    """N z^eps (1-z)^(1+Lambda) P_n^(2eps, 2Lambda+1)(1 - 2z), z = e^{-r/b}.

    The envelope is formed as exp(log magnitude) so far tails underflow
    cleanly to zero instead of producing 0 * inf.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("radial coordinate must be non-negative")
    x = r / w.spec.b
    eps, lam = w.bound.epsilon, w.bound.lambda_cap
    z = np.exp(-x)
    with np.errstate(divide="ignore"):
        log_env = -eps * x + (1.0 + lam) * np.log(-np.expm1(-x))
    env = np.exp(log_env + math.log(w.norm))
    poly = jacobi(w.jacobi_params, 1.0 - 2.0 * z, route)
    return (env * poly)[()]


def normalization_integral(w: RadialWavefunction, r_cut: float | None = None,
                           tol: float = 1e-12) -> float:
    """Adaptive quadrature of |R|^2 over [0, r_cut], extending r_cut until the tail is negligible."""
    b = w.spec.b
    if r_cut is None:
        r_cut = DEFAULT_RCUT_B * b
    breaks = list(node_positions(w)) + [b * x for x in (0.5, 1, 2, 5, 10, 20, 40)]

    def f(r):
        return float(evaluate(w, r)) ** 2

    for _ in range(8):
        pts = sorted(p for p in breaks if 0 < p < r_cut)
        total, err = integrate.quad(f, 0.0, r_cut, points=pts or None, limit=500,
                                    epsabs=tol, epsrel=tol)
        # tail of a z^{2 eps} envelope beyond r_cut
        tail = f(r_cut) * b / (2 * w.bound.epsilon)
        if tail <= 1e-14 * total:
            break
        r_cut *= 2
    else:
        raise QuadratureError(f"tail still {tail:.3g} at r_cut={r_cut:.6g}")
    if err > 1e-10:
        raise QuadratureError(f"quadrature reached only {err:.3g} absolute error")
    return total


def node_positions(w: RadialWavefunction) -> np.ndarray:
    """Radii of the interior zeros from the roots of the Jacobi factor."""
    n = w.state.n
    if n == 0:
        return np.empty(0)
    p = w.jacobi_params
    xi, _ = roots_jacobi(n, p.rho, p.nu)
    z = (1.0 - xi) / 2.0
    return np.sort(-w.spec.b * np.log(z))


def count_nodes(w: RadialWavefunction, r_cut: float | None = None, samples: int = 10_000) -> int:
    """Strict sign changes of R on a dense grid over the open interval (0, r_cut)."""
    if r_cut is None:
        r_cut = DEFAULT_RCUT_B * w.spec.b
    r = np.linspace(0.0, r_cut, samples + 2)[1:-1]
    return sign_changes(evaluate(w, r))


def sign_changes(values) -> int:
    s = np.sign(np.asarray(values))
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))
