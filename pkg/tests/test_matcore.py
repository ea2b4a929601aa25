import io
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from chebexpm.matcore import (
    ConvergenceWarning,
    CostLedger,
    check_hermitian,
    check_symmetric,
    mat_mul,
    one_norm,
    read_matrix,
    solve_right,
    two_norm,
    write_matrix,
)


def test_ledger_counts_inverse_as_four_thirds():
    led = CostLedger()
    led.complex_products += 8
    led.inverses += 1
    assert led.total_cost == Fraction(28, 3)
    assert led.as_dict() == {"complex_products": "8", "real_products": "0", "inverses": 1, "total_cost": "28/3"}


def test_ledger_charge_adds():
    a, b = CostLedger(), CostLedger()
    a.real_products += 2
    b.complex_products += 3
    b.inverses += 2
    a.charge(b)
    assert (a.real_products, a.complex_products, a.inverses) == (2, 3, 2)
    assert a.total_cost == 5 + Fraction(8, 3)


def test_mat_mul_charges_by_type():
    led = CostLedger()
    R = np.eye(3)
    C = np.eye(3, dtype=complex)
    mat_mul(R, R, led)
    mat_mul(R, C, led)
    mat_mul(C, C, led)
    assert led.real_products == 1 and led.complex_products == 2
    with pytest.raises(ValueError):
        mat_mul(np.eye(2), np.eye(3), led)


def test_mat_mul_without_ledger():
    A = np.arange(4.0).reshape(2, 2)
    assert np.array_equal(mat_mul(A, A, None), A @ A)


def test_solve_right_matches_explicit_inverse():
    rng = np.random.default_rng(1)
    P = rng.standard_normal((6, 6)) + 6 * np.eye(6)
    Q = rng.standard_normal((6, 6))
    led = CostLedger()
    X = solve_right(P, Q, led)
    assert np.allclose(X @ P, Q, atol=1e-13)
    assert led.inverses == 1 and led.total_cost == Fraction(4, 3)


def test_solve_right_rejects_singular():
    with pytest.raises(np.linalg.LinAlgError):
        solve_right(np.ones((3, 3)), np.eye(3), CostLedger())


def test_two_norm_against_jacobi():
    rng = np.random.default_rng(2)
    for n in (1, 4, 12):
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        assert two_norm(A) == pytest.approx(oracles.spectral_norm(A), rel=1e-9)


def test_two_norm_known_values():
    assert two_norm(np.zeros((3, 3))) == 0.0
    assert two_norm(np.diag([1.0, -7.0, 3.0])) == pytest.approx(7.0, rel=1e-12)
    # rank one u v^T has norm |u| |v|
    u, v = np.array([1.0, 2.0, 2.0]), np.array([3.0, 0.0, 4.0])
    assert two_norm(np.outer(u, v)) == pytest.approx(15.0, rel=1e-12)


def test_two_norm_warns_when_not_converged():
    A = np.diag([1.0, 0.999999])
    with pytest.warns(ConvergenceWarning):
        two_norm(A, rtol=1e-16, maxiter=2)


def test_one_norm():
    A = np.array([[1, -2], [3j, 4]])
    assert one_norm(A) == 6.0


def test_checks():
    with pytest.raises(ValueError):
        check_hermitian(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        check_hermitian(np.ones((2, 3)))
    with pytest.raises(ValueError):
        check_hermitian(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        check_symmetric(np.array([[0, 1j], [-1j, 0]]))
    S = check_symmetric(np.array([[1, 2], [2, 1]], dtype=complex))
    assert S.dtype == np.float64


def test_write_then_read_example():
    A = np.array([[0.1, 2.0], [-3e-300, 1 / 3]])
    buf = io.StringIO()
    write_matrix(A, buf)
    assert buf.getvalue() == "2\n0.1 2.0\n-3e-300 0.3333333333333333\n"
    assert np.array_equal(read_matrix(io.StringIO(buf.getvalue())), A)


def test_read_complex_and_errors():
    A = read_matrix(io.StringIO("2\n1 0.5,-1\n0.5,1 2\n"))
    assert A.dtype == complex and A[0, 1] == 0.5 - 1j
    for bad in ("", "x\n", "2\n1 2\n", "2\n1 2\n3\n", "0\n"):
        with pytest.raises(ValueError):
            read_matrix(io.StringIO(bad))


finite = st.floats(allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.tuples(finite, finite), min_size=n * n, max_size=n * n)))
def test_round_trip_is_exact(entries):
    n = int(round(len(entries) ** 0.5))
    A = np.array([complex(a, b) for a, b in entries]).reshape(n, n)
    buf = io.StringIO()
    write_matrix(A, buf)
    B = read_matrix(io.StringIO(buf.getvalue()))
    assert np.array_equal(A.view(float), B.view(float))
