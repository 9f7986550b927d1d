import numpy as np
import pytest

from hyposhift.errors import InvalidDimension, NoLimitDeclared
from hyposhift.linalg import self_commutator
from hyposhift.shifts import (
    exact_commutator_diagonal,
    materialize,
    rational_family,
    shift_model,
    symbol_curve,
    tabulated,
    unilateral,
)

from conftest import basis_vector


def test_materialize_unilateral():
    m = materialize(shift_model(unilateral()), 3)
    expected = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]], dtype=complex)
    np.testing.assert_array_equal(m, expected)


def test_materialize_rational():
    m = materialize(shift_model(rational_family(2.0)), 3)
    assert m[1, 0] == pytest.approx(0.5)
    assert m[2, 1] == pytest.approx(2.0 / 3.0)
    assert np.count_nonzero(m) == 2


def test_materialize_strict_subdiagonal():
    m = materialize(shift_model(tabulated([0.5], limit=0.5)), 2)
    assert m[0, 0] == 0


def test_materialize_rejects_small_dimension():
    with pytest.raises(InvalidDimension):
        materialize(shift_model(unilateral()), 1)


def test_materialize_nilpotent():
    m = materialize(shift_model(rational_family(1.5)), 6)
    np.testing.assert_allclose(np.linalg.matrix_power(m, 6), 0.0, atol=1e-15)


def test_rational_family_requires_lam_above_one():
    with pytest.raises(ValueError):
        rational_family(0.5)
    with pytest.raises(ValueError):
        rational_family(1.0)


def test_exact_diagonal_unilateral():
    diag = exact_commutator_diagonal(shift_model(unilateral()), 5)
    np.testing.assert_array_equal(diag, [1, 0, 0, 0, 0])


def test_exact_diagonal_rational():
    diag = exact_commutator_diagonal(shift_model(rational_family(2.0)), 3)
    np.testing.assert_allclose(diag, [0.25, 7.0 / 36.0, 17.0 / 144.0], atol=1e-15)


def test_exact_diagonal_telescopes():
    for lam in (1.5, 2.0, 5.0):
        model = shift_model(rational_family(lam))
        for n in (1, 7, 1000):
            diag = exact_commutator_diagonal(model, n)
            w_last = model.weights.weight(n - 1)
            assert np.sum(diag) == pytest.approx(w_last**2, abs=1e-14)


def test_exact_diagonal_partial_sum_example():
    diag = exact_commutator_diagonal(shift_model(rational_family(2.0)), 1000)
    assert np.sum(diag) == pytest.approx((1000.0 / 1001.0) ** 2, abs=1e-12)
    assert np.sum(diag) == pytest.approx(0.998003, abs=1e-6)


def test_exact_diagonal_positive_for_increasing_weights():
    for lam in (1.1, 2.0, 10.0):
        diag = exact_commutator_diagonal(shift_model(rational_family(lam)), 200)
        assert np.all(diag > 0)


def test_leading_corner_consistency(rng):
    # (materialize(model, n))^k e_j equals the infinite model applied k times
    model = shift_model(rational_family(2.0))
    n = 12
    t = materialize(model, n)
    for _ in range(10):
        j = int(rng.integers(0, n - 1))
        k = int(rng.integers(0, n - j))
        v = np.linalg.matrix_power(t, k) @ basis_vector(n, j)
        coeff = np.prod([model.weights.weight(j + i) for i in range(k)])
        expected = coeff * basis_vector(n, j + k) if j + k < n else np.zeros(n)
        np.testing.assert_allclose(v, expected, atol=1e-14)


def test_truncation_commutator_matches_exact_diagonal_except_corner():
    model = shift_model(rational_family(2.0))
    n = 9
    finite = np.real(np.diagonal(self_commutator(materialize(model, n))))
    exact = exact_commutator_diagonal(model, n)
    np.testing.assert_allclose(finite[: n - 1], exact[: n - 1], atol=1e-14)
    assert abs(finite[n - 1] - exact[n - 1]) > 0.1


def test_symbol_curve_unilateral_four_points():
    pts = symbol_curve(shift_model(unilateral()), 4)
    np.testing.assert_allclose(pts, [1, 1j, -1, -1j], atol=1e-14)


def test_symbol_curve_rational_is_unit_circle():
    pts = symbol_curve(shift_model(rational_family(3.0)), 64)
    np.testing.assert_allclose(np.abs(pts), 1.0, atol=1e-14)


def test_symbol_curve_tabulated_radius():
    pts = symbol_curve(shift_model(tabulated([0.5, 0.5], limit=0.5)), 32)
    np.testing.assert_allclose(np.abs(pts), 0.5, atol=1e-14)


def test_symbol_curve_needs_limit():
    with pytest.raises(NoLimitDeclared):
        symbol_curve(shift_model(tabulated([0.5, 0.6])), 32)


def test_tabulated_extension_needs_limit():
    model = shift_model(tabulated([0.5, 0.6]))
    with pytest.raises(NoLimitDeclared):
        materialize(model, 8)
