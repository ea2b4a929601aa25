import itertools
import math

import numpy as np
import pytest

import oracles
from chebexpm import integrators, models
from chebexpm.integrators import (
    CF4_A,
    CF4_B,
    CF4_C1,
    CF4_C2,
    Propagator,
    StepMethod,
    propagate,
    reference_solution,
    step,
)
from chebexpm.matcore import CostLedger


def test_cf4_coefficients():
    assert CF4_C1 + CF4_C2 == pytest.approx(1.0, abs=3e-16)
    assert CF4_C2 - CF4_C1 == pytest.approx(1 / math.sqrt(3), abs=3e-16)
    assert CF4_A + CF4_B == pytest.approx(0.5, abs=3e-16)
    assert CF4_A - CF4_B == pytest.approx(math.sqrt(3) / 3, abs=3e-16)
    assert StepMethod.CF4.order == 4 and StepMethod("midpoint").order == 2


def _two_level(t):
    return np.array([[math.cos(t), 0.3 + 0.2j * t], [0.3 - 0.2j * t, -math.cos(t)]])


def test_constant_hamiltonian_is_exact():
    rng = np.random.default_rng(0)
    H = oracles.random_hermitian(rng, 6, 3.0)
    ref = oracles.expm_minus_i(2.0 * H)
    for method in ("midpoint", "cf4"):
        for backend in integrators.BACKENDS:
            res = propagate(Propagator(lambda t: H, 0.0, 2.0, 4), method, backend)
            assert np.linalg.norm(res.U - ref, 2) < 1e-13


def test_step_costs():
    rz = models.RosenZenerParams()
    H = lambda t: models.rosen_zener_h(rz, t)  # noqa: E731
    led = CostLedger()
    step("midpoint", H, 0.0, 0.5, "cheb", led)
    mid = led.total_cost
    led = CostLedger()
    step("cf4", H, 0.0, 0.5, "cheb", led)
    # two exponentials plus the product joining them
    assert led.total_cost >= 2 * 2 + 1 and led.total_cost <= 2 * mid + 1
    res = propagate(Propagator(H, -4.0, 4.0, 8), "cf4", "cheb")
    assert sum(res.step_costs) == res.exp_products
    assert res.accum_products == 7
    assert res.total_cost == res.exp_products + 7
    res = propagate(Propagator(H, -4.0, 4.0, 8), "cf4", "diag")
    assert res.exp_products == 8  # only the joining products are counted


def test_orders_on_two_level_problem():
    ref = reference_solution(_two_level, 0.0, 2.0, M_ref=256, tol=1e-12)
    for method, order in (("midpoint", 2), ("cf4", 4)):
        e = [np.linalg.norm(propagate(Propagator(_two_level, 0.0, 2.0, M), method, "cheb").U - ref, 2) for M in (8, 16, 32)]
        rates = [math.log2(a / b) for a, b in zip(e, e[1:])]
        assert all(abs(r - order) < 0.3 for r in rates), rates


def test_symmetric_route_matches_complex_route():
    wp = models.WalkerPrestonParams(N=16)
    H = lambda t: models.walker_preston_h(wp, t)[0]  # noqa: E731
    bf = lambda w, t: models.walker_preston_bounds(wp, w, t)  # noqa: E731
    a = propagate(Propagator(H, 0.0, 50.0, 5, bf, True), "cf4", "cheb")
    b = propagate(Propagator(H, 0.0, 50.0, 5, bf, False), "cf4", "cheb")
    c = propagate(Propagator(H, 0.0, 50.0, 5), "cf4", "diag")
    assert np.linalg.norm(a.U - c.U, 2) < 1e-13
    assert np.linalg.norm(b.U - c.U, 2) < 1e-13
    assert a.exp_cost.complex_products == 5  # joining products only
    assert a.exp_cost.real_products > 0


def test_reference_solution_checks():
    with pytest.raises(ValueError):
        reference_solution(_two_level, 0.0, 1.0, M_ref=12)
    with pytest.raises(RuntimeError):
        reference_solution(lambda t: 40 * _two_level(5 * t), 0.0, 4.0, M_ref=8)


def test_propagator_validation():
    with pytest.raises(ValueError):
        Propagator(_two_level, 0.0, 1.0, 0)
    with pytest.raises(ValueError):
        Propagator(_two_level, 1.0, 1.0, 3)
    with pytest.raises(ValueError):
        integrators.exp_minus_i(np.eye(2), 1.0, "taylor", CostLedger())


RZ = models.RosenZenerParams()


def _rz(t):
    return models.rosen_zener_h(RZ, t)


def test_constant_hamiltonian_cf4_single_step():
    H = oracles.random_hermitian(np.random.default_rng(3), 6, 1.0)
    U = step("cf4", lambda t: H, 0.0, 0.7, "cheb", CostLedger())
    assert np.linalg.norm(U - oracles.expm_minus_i(0.7 * H), 2) <= 1e-14


def test_cf4_local_error_is_fifth_order():
    errs = []
    for tau in (0.1, 0.05, 0.025):
        U = step("cf4", _rz, 0.3, tau, "cheb", CostLedger())
        ref = propagate(Propagator(_rz, 0.3, 0.3 + tau, 1024), "cf4", "diag").U
        errs.append(np.linalg.norm(U - ref, 2))
    rates = [math.log2(a / b) for a, b in zip(errs, errs[1:])]
    assert all(abs(r - 5) < 0.5 for r in rates), rates


def test_rosen_zener_unitarity_over_256_steps():
    U = propagate(Propagator(_rz, RZ.t0, RZ.tf, 256), "cf4", "cheb").U
    assert np.linalg.norm(U.conj().T @ U - np.eye(20), 2) <= 1e-12


def test_backend_independence():
    for method in ("midpoint", "cf4"):
        Us = [propagate(Propagator(_rz, RZ.t0, RZ.tf, 64), method, b).U for b in integrators.BACKENDS]
        for a, b in itertools.combinations(Us, 2):
            assert np.linalg.norm(a - b, 2) <= 1e-12


def test_cost_monotonicity():
    wp = models.WalkerPrestonParams()
    H = lambda t: models.walker_preston_h(wp, t)[0]  # noqa: E731
    bf = lambda w, t: models.walker_preston_bounds(wp, w, t)  # noqa: E731
    prev = None
    for M in (16, 32, 64, 128):
        res = propagate(Propagator(H, wp.t0, wp.tf, M, bf, True), "cf4", "cheb")
        per_exp = max(res.step_costs)
        if prev is not None:
            assert res.exp_products >= prev[0]
            assert per_exp <= prev[1]
        prev = (res.exp_products, per_exp)
