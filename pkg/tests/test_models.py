import math

import numpy as np
import pytest

import oracles
from chebexpm import models
from chebexpm.integrators import CF4_A, CF4_B

RZ = models.RosenZenerParams()
WP = models.WalkerPrestonParams()


@pytest.mark.parametrize("t", [-4.0, -1.3, 0.0, 0.7, 4.0])
def test_rosen_zener_against_index_construction(t):
    f1, f2 = models.rz_envelope(RZ, t)
    H = models.rosen_zener_h(RZ, t)
    assert H.shape == (20, 20)
    assert np.array_equal(H, oracles.rosen_zener_by_index(RZ.k, f1, f2))
    assert np.array_equal(H, H.conj().T)


def test_rosen_zener_envelope():
    f1, f2 = models.rz_envelope(RZ, 0.0)
    assert (f1, f2) == (2.0, -0.0)
    f1, f2 = models.rz_envelope(RZ, 1.0)
    assert f1 == pytest.approx(2 * math.cos(5) / math.cosh(1), rel=1e-15)
    assert f2 == pytest.approx(-2 * math.sin(5) / math.cosh(1), rel=1e-15)
    with pytest.raises(ValueError):
        models.RosenZenerParams(k=0)


def test_walker_preston_grid_and_constants():
    assert WP.dx == pytest.approx(0.08)
    assert WP.grid[0] == -0.8 and WP.grid.size == 64
    assert WP.grid[-1] == pytest.approx(4.32 - 0.08)
    assert WP.tf == pytest.approx(2 * math.pi / 0.01787)


def test_kinetic_matrix_spectrum():
    T = models.kinetic_matrix(WP)
    assert np.array_equal(T, T.T)
    assert T[0, -1] == T[-1, 0] == WP.kinetic_prefactor
    # +1 corners close the chain antiperiodically: eigenvalues 2 c (1 - cos((2j + 1) pi / N))
    j = np.arange(WP.N)
    expected = np.sort(2 * WP.kinetic_prefactor * (1 - np.cos((2 * j + 1) * np.pi / WP.N)))
    assert np.allclose(np.sort(oracles.eigvalsh(T)), expected, atol=1e-15)
    assert 0 < expected[0] and expected[-1] < WP.kinetic_max


def test_walker_preston_bounds_contain_spectrum():
    for t in np.linspace(WP.t0, WP.tf, 50):
        H, b = models.walker_preston_h(WP, t)
        w = np.linalg.eigvalsh(H)
        assert b.emin <= w[0] and w[-1] <= b.emax


def test_weighted_bounds_contain_spectrum():
    # the Magnus exponents combine two times with one negative weight
    tau = WP.tf / 64
    for n in range(0, 64, 7):
        t1, t2 = n * tau + 0.2113 * tau, n * tau + 0.7887 * tau
        for w in ((CF4_A, CF4_B), (CF4_B, CF4_A)):
            H = w[0] * models.walker_preston_h(WP, t1)[0] + w[1] * models.walker_preston_h(WP, t2)[0]
            b = models.walker_preston_bounds(WP, w, (t1, t2))
            ev = np.linalg.eigvalsh(H)
            assert b.emin <= ev[0] and ev[-1] <= b.emax
    with pytest.raises(ValueError):
        models.walker_preston_bounds(WP, (-1.0, 0.5), (0.0, 1.0))


def test_morse_ground_state():
    u = models.morse_ground_state(WP)
    assert np.linalg.norm(u) == pytest.approx(1.0, abs=1e-15)
    H = models.kinetic_matrix(WP) + np.diag(models.morse(WP, WP.grid))
    omega0 = WP.alpha_m * math.sqrt(2 * WP.D / WP.mu)
    e0 = omega0 / 2 - omega0**2 / (16 * WP.D)
    # coarse grid: within a couple of percent of the exact level
    assert np.vdot(u, H @ u).real == pytest.approx(e0, rel=0.02)
