"""Log-gamma, Jacobi polynomials by three routes, and the normalization sum.

Gamma ratios are formed in log space; raw gamma values overflow once the
Jacobi parameter 2*epsilon reaches the 40s that the tabulated states use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class JacobiParams:
    rho: float
    nu: float
    degree: int

    def __post_init__(self):
        if not (self.rho > -1 and self.nu > -1):
            raise ValueError(f"Jacobi parameters must exceed -1, got rho={self.rho}, nu={self.nu}")
        if int(self.degree) != self.degree or self.degree < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.degree}")
        object.__setattr__(self, "degree", int(self.degree))


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"log_gamma is defined here only for x > 0, got {x}")
    return math.lgamma(x)


def log_binomial(top: float, k: int) -> float:
    """ln C(top, k) for real top with top - k + 1 > 0."""
    return log_gamma(top + 1) - log_gamma(k + 1) - log_gamma(top - k + 1)


def jacobi_sum_form_A(p: JacobiParams, xi):
    """P_n^(rho,nu)(xi) from the binomial sum in (1 - xi) and (1 + xi)."""
    n, rho, nu = p.degree, p.rho, p.nu
    xi = np.asarray(xi, dtype=float)
    if n == 0:
        return np.ones_like(xi)[()]
    one_minus, one_plus = 1.0 - xi, 1.0 + xi
    total = np.zeros_like(xi)
    for k in range(n + 1):
        coeff = math.exp(log_binomial(n + rho, k) + log_binomial(n + nu, n - k) - n * math.log(2.0))
        sign = -1.0 if (n - k) % 2 else 1.0
        total = total + sign * coeff * one_minus ** (n - k) * one_plus ** k
    return total[()]


def _power_series(n: int, rho: float, nu: float, t):
    """sum_r c_r t^r with c_0 = C(n+rho, n) and c_{r+1}/c_r from the Gamma ratios."""
    c = 1.0
    for k in range(1, n + 1):
        c *= (rho + k) / k
    total = np.full_like(t, c)
    power = np.ones_like(t)
    for r in range(n):
        c *= (n - r) / (r + 1) * (n + rho + nu + r + 1) / (r + rho + 1)
        power = power * t
        total = total + c * power
    return total


def jacobi_sum_form_B(p: JacobiParams, xi):
    """P_n^(rho,nu)(xi) as a power series in (xi - 1)/2.

    For xi < 0 the series is taken at -xi with rho and nu swapped (the
    reflection P_n^(rho,nu)(xi) = (-1)^n P_n^(nu,rho)(-xi)), which keeps
    |t| <= 1/2 and avoids the cancellation of the alternating terms near
    xi = -1.
    """
    n, rho, nu = p.degree, p.rho, p.nu
    xi = np.asarray(xi, dtype=float)
    if n == 0:
        return np.ones_like(xi)[()]
    right = _power_series(n, rho, nu, (xi - 1.0) / 2.0)
    left = _power_series(n, nu, rho, (-xi - 1.0) / 2.0) * (-1.0) ** n
    return np.where(xi >= 0, right, left)[()]


def jacobi_recurrence(p: JacobiParams, xi):
    """P_n^(rho,nu)(xi) by the upward three-term recurrence (reference route)."""
    n, a, b = p.degree, p.rho, p.nu
    xi = np.asarray(xi, dtype=float)
    p_prev = np.ones_like(xi)
    if n == 0:
        return p_prev[()]
    p_cur = (a + 1) + (a + b + 2) * (xi - 1) / 2
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * xi + a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        p_prev, p_cur = p_cur, (c2 * p_cur - c3 * p_prev) / c1
    return p_cur[()]


JACOBI_ROUTES = {
    "recurrence": jacobi_recurrence,
    "form_a": jacobi_sum_form_A,
    "form_b": jacobi_sum_form_B,
}


def jacobi(p: JacobiParams, xi, route: str = "recurrence"):
    try:
        fn = JACOBI_ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown Jacobi route {route!r}") from None
    return fn(p, xi)


def jacobi_at_one(p: JacobiParams) -> float:
    """Closed form P_n(1) = Gamma(n+rho+1) / (n! Gamma(rho+1))."""
    return math.exp(log_gamma(p.degree + p.rho + 1) - log_gamma(p.degree + 1)
                    - log_gamma(p.rho + 1))


MAX_NORM_CONDITION = 1e7


def normalization_sum(epsilon: float, lam: float, n: int, *, printed: bool = False) -> float:
    """Dimensionless s(n)/b = int_0^1 z^(2eps-1) (1-z)^(2Lam+2) P_n(1-2z)^2 dz.

    Evaluated as the closed-form double sum over the products of the two
    explicit polynomial expansions.  Each term carries the Beta-integral
    factor 1/(n + 2eps + r - p); ``printed=True`` drops that factor to
    reproduce the sum exactly as it is usually quoted, for comparison only.

    The alternating terms cancel heavily for large n and epsilon; an
    ArithmeticError is raised when sum(|t|)/|sum(t)| exceeds
    MAX_NORM_CONDITION, since each term is only good to ~1e-14.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if lam <= -1:
        raise ValueError(f"Lambda must exceed -1, got {lam}")
    e2, l2 = 2.0 * epsilon, 2.0 * lam
    lg = math.lgamma
    log_pre = lg(n + l2 + 2) + 2 * lg(n + e2 + 1) - lg(n + e2 + l2 + 2)
    terms = []
    for p in range(n + 1):
        for r in range(n + 1):
            alpha0 = n + e2 + r - p
            log_t = (log_pre + lg(alpha0 + 1) + math.log(p + l2 + 2)
                     - lg(p + 1) - lg(r + 1) - lg(n - p + 1) - lg(n - r + 1)
                     - lg(n + e2 - p + 1) - lg(e2 + r + 1)
                     - math.log(n + e2 + r + l2 + 2))
            if not printed:
                log_t -= math.log(alpha0)
            sign = -1.0 if (n + p + r) % 2 else 1.0
            terms.append(sign * math.exp(log_t))
    total = math.fsum(terms)
    if not printed:
        cond = math.fsum(abs(t) for t in terms) / abs(total) if total else math.inf
        if total <= 0 or cond > MAX_NORM_CONDITION:
            raise ArithmeticError(
                f"normalization sum ill-conditioned (n={n}, eps={epsilon:.6g}, "
                f"Lambda={lam:.6g}): value {total:.3g}, condition {cond:.3g}")
    return total
