import math

import mpmath as mp
import numpy as np
import pytest
from scipy.special import roots_jacobi

from manning_rosen import (PotentialSpec, QuantumNumbers, atomic_table_spec, compute_epsilon,
                           count_nodes, evaluate, hulthen_wavefunction, norm_constant,
                           normalization_integral, radial_wavefunction)
from manning_rosen.specialfns import normalization_sum
from manning_rosen.spectrum import hulthen_epsilon
from manning_rosen.wavefunction import NotBoundError, node_positions

TABLE = PotentialSpec(80.0, 0.75, 40.0)


def test_boundary_values():
    w = radial_wavefunction(TABLE, QuantumNumbers(0, 1))
    assert evaluate(w, 0.0) == 0.0
    assert evaluate(w, 50 * 40.0) == 0.0 or abs(evaluate(w, 50 * 40.0)) < 1e-300
    assert np.isfinite(evaluate(w, np.array([0.0, 1e-8, 1e4]))).all()
    with pytest.raises(ValueError):
        evaluate(w, -1.0)


def test_decays_monotonically_beyond_last_node():
    w = radial_wavefunction(TABLE, QuantumNumbers(3, 1))
    last = node_positions(w)[-1]
    r = np.linspace(last, 60 * 40.0, 5000)
    v = np.abs(evaluate(w, r))
    peak = np.argmax(v)
    assert np.all(np.diff(v[peak:]) <= 0)


def test_ratio_against_direct_formula():
    q = QuantumNumbers(2, 1)
    w = radial_wavefunction(TABLE, q)
    eps, lam = w.bound.epsilon, w.bound.lambda_cap
    mp.mp.dps = 30
    for r in (3.0, 20.0, 75.0, 300.0):
        z = mp.e ** (-mp.mpf(r) / 40)
        direct = w.norm * z ** eps * (1 - z) ** (1 + lam) * mp.jacobi(2, 2 * eps, 2 * lam + 1, 1 - 2 * z)
        assert float(evaluate(w, r)) == pytest.approx(float(direct), rel=1e-11)


@pytest.mark.parametrize("inv_b, alpha", [(0.025, 0.75), (0.05, 1.5), (0.1, 0.75), (0.075, 0.0)])
def test_normalized_to_one(inv_b, alpha):
    spec = atomic_table_spec(inv_b, alpha)
    for l in range(1, 5):
        for n in range(7):
            q = QuantumNumbers(n, l)
            if compute_epsilon(spec, q) is None:
                break
            w = radial_wavefunction(spec, q, norm=norm_constant(spec, q))
            assert abs(normalization_integral(w) - 1.0) <= 1e-8


def test_unnormalized_integral_is_s_of_n():
    q = QuantumNumbers(3, 2)
    res_w = radial_wavefunction(TABLE, q, norm=1.0)
    s = TABLE.b * normalization_sum(res_w.bound.epsilon, res_w.bound.lambda_cap, q.n)
    assert normalization_integral(res_w) == pytest.approx(s, rel=1e-8)


def test_rcut_doubling_is_stable():
    w = radial_wavefunction(TABLE, QuantumNumbers(1, 1))
    a = normalization_integral(w, r_cut=60 * 40.0)
    b = normalization_integral(w, r_cut=120 * 40.0)
    assert abs(a - b) < 1e-12


def test_norm_matches_mpmath_quadrature():
    q = QuantumNumbers(0, 1)
    w = radial_wavefunction(TABLE, q)
    mp.mp.dps = 25
    eps, lam = w.bound.epsilon, w.bound.lambda_cap
    f = lambda r: (mp.e ** (-eps * r / 40) * (1 - mp.e ** (-r / 40)) ** (1 + lam)) ** 2
    s = mp.quad(f, [0, 40, 200, 2400])
    assert 1 / math.sqrt(float(s)) == pytest.approx(norm_constant(TABLE, q), rel=1e-9)


def test_norm_scales_with_inverse_sqrt_b():
    q = QuantumNumbers(2, 2)
    # fixed A and alpha keep eps and Lambda fixed while b varies
    n1 = norm_constant(PotentialSpec(80.0, 0.75, 1.0), q)
    for b in (4.0, 40.0, 123.0):
        assert norm_constant(PotentialSpec(80.0, 0.75, b), q) == pytest.approx(n1 / math.sqrt(b), rel=1e-13)


def test_not_bound_rejected():
    with pytest.raises(NotBoundError):
        norm_constant(PotentialSpec(3.9, 0.0, 1.0), QuantumNumbers(0, 1))
    with pytest.raises(NotBoundError):
        radial_wavefunction(PotentialSpec(3.9, 0.0, 1.0), QuantumNumbers(0, 1))


@pytest.mark.parametrize("n", range(7))
def test_node_count_and_positions(n):
    spec = atomic_table_spec(0.025, 0.75)
    q = QuantumNumbers(n, 1)
    w = radial_wavefunction(spec, q)
    assert count_nodes(w) == n
    nodes = node_positions(w)
    assert len(nodes) == n
    if n:
        eps, lam = w.bound.epsilon, w.bound.lambda_cap
        xi, _ = roots_jacobi(n, 2 * eps, 2 * lam + 1)
        z = (1 - xi) / 2
        assert np.all((z > 0) & (z < 1))
        assert np.allclose(np.abs(evaluate(w, nodes)), 0, atol=1e-10 * np.abs(w.sample()[1]).max())


def test_four_f_like_three_nodes():
    spec = atomic_table_spec(0.025, 0.75)
    assert count_nodes(radial_wavefunction(spec, QuantumNumbers(3, 3))) == 3


@pytest.mark.parametrize("route", ["form_a", "form_b"])
def test_jacobi_route_independence(route):
    w = radial_wavefunction(TABLE, QuantumNumbers(4, 2))
    r = np.linspace(0.5, 400, 3001)
    ref = evaluate(w, r)
    alt = evaluate(w, r, route)
    scale = np.abs(ref).max()
    mask = np.abs(ref) > 1e-3 * scale
    assert np.allclose(alt[mask], ref[mask], rtol=1e-9, atol=0)
    assert np.allclose(alt, ref, rtol=0, atol=1e-9 * scale)


def test_hulthen_wavefunction_matches_general_path():
    spec = PotentialSpec(80.0, 0.0, 40.0)
    rng = np.random.default_rng(5)
    r = rng.uniform(0.01, 600, 100)
    for q in (QuantumNumbers(0, 0), QuantumNumbers(2, 1), QuantumNumbers(3, 3)):
        h = hulthen_wavefunction(spec, q)
        g = radial_wavefunction(spec, q)
        assert h.bound.epsilon == pytest.approx(compute_epsilon(spec, q), rel=1e-12)
        assert h.bound.epsilon == pytest.approx(hulthen_epsilon(80.0, q), rel=1e-12)
        vals_g = evaluate(g, r)
        keep = np.abs(vals_g) > 1e-250
        assert np.allclose(evaluate(h, r)[keep], vals_g[keep], rtol=1e-12, atol=0)
    ground = hulthen_wavefunction(spec, QuantumNumbers(0, 0))
    assert count_nodes(ground) == 0


def test_hulthen_wavefunction_rejects_other_alpha():
    with pytest.raises(ValueError):
        hulthen_wavefunction(TABLE, QuantumNumbers(0, 0))
