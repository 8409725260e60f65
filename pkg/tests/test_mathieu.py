"""Characteristic values, coefficient vectors and pointwise evaluation."""

import numpy as np
import pytest
import scipy.special

from mathieu_wavelets import (
    EVEN,
    ODD,
    ConvergenceError,
    InvalidOrderError,
    OrderParameterPair,
    ParameterError,
    ParityError,
    TruncationError,
    characteristic_value,
    eval_ce,
    eval_se,
    fourier_coefficients,
    ode_residual,
    orthogonality_integral,
    recurrence_residual,
)

from oracles import integrate_angular_equation


def coeffs(nu, q, kind=EVEN):
    pair = OrderParameterPair(nu, q)
    cv = characteristic_value(pair, kind)
    return cv, fourier_coefficients(pair, cv)


class TestCharacteristicValue:
    # magnitudes published for the q=5 family members
    @pytest.mark.parametrize("nu,expected", [
        (1, 1.858),
        (5, 25.550),
        (15, 225.056),
    ])
    def test_reference_values(self, nu, expected):
        cv = characteristic_value(OrderParameterPair(nu, 5.0))
        assert abs(cv.a - expected) < 5e-4

    @pytest.mark.parametrize("nu", [1, 3, 5, 15])
    @pytest.mark.parametrize("q", [0.1, 1.0, 5.0])
    def test_against_scipy(self, nu, q):
        cv = characteristic_value(OrderParameterPair(nu, q))
        assert cv.a == pytest.approx(scipy.special.mathieu_a(nu, q), abs=1e-9)
        cvo = characteristic_value(OrderParameterPair(nu, q), ODD)
        assert cvo.a == pytest.approx(scipy.special.mathieu_b(nu, q), abs=1e-9)

    @pytest.mark.parametrize("nu", [1, 3, 5, 7, 15])
    def test_q_zero_is_nu_squared(self, nu):
        for kind in (EVEN, ODD):
            cv = characteristic_value(OrderParameterPair(nu, 0.0), kind)
            assert abs(cv.a - nu * nu) < 1e-10

    def test_stable_under_larger_truncation(self):
        pair = OrderParameterPair(5, 5.0)
        cv = characteristic_value(pair)
        again = characteristic_value(pair, EVEN, n_matrix=cv.matrix_order + 10)
        assert abs(again.a - cv.a) <= 1e-10 * max(1.0, abs(cv.a))

    def test_monotone_in_order(self):
        values = [characteristic_value(OrderParameterPair(nu, 5.0)).a
                  for nu in (1, 5, 15)]
        assert values[0] < values[1] < values[2]

    def test_small_q_continuity(self):
        cv = characteristic_value(OrderParameterPair(3, 1e-6))
        assert abs(cv.a - 9.0) < 1e-4

    def test_rejects_even_order(self):
        with pytest.raises(InvalidOrderError):
            OrderParameterPair(4, 5.0)
        with pytest.raises(InvalidOrderError):
            OrderParameterPair(0, 1.0)
        with pytest.raises(InvalidOrderError):
            OrderParameterPair(-3, 1.0)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ParameterError):
            OrderParameterPair(1, -0.5)
        with pytest.raises(ParameterError):
            OrderParameterPair(1, float("nan"))
        with pytest.raises(ParameterError):
            characteristic_value(OrderParameterPair(1, 5.0), EVEN, n_matrix=5)
        with pytest.raises(ParameterError):
            characteristic_value(OrderParameterPair(1, 5.0), kind="mixed")


class TestFourierCoefficients:
    def test_q_zero_unit_basis(self):
        for nu in (1, 3, 5, 7, 15):
            _, vec = coeffs(nu, 0.0)
            expected = np.zeros(len(vec))
            expected[(nu - 1) // 2] = 1.0
            assert np.max(np.abs(vec.coeffs - expected)) < 1e-12

    def test_leading_ratio_from_first_recurrence_row(self):
        # rearranged first row: c1/c0 = (a - 1 - q)/q, direct substitution
        cv, vec = coeffs(1, 5.0)
        expected = (cv.a - 1.0 - 5.0) / 5.0
        assert vec.coeffs[1] / vec.coeffs[0] == pytest.approx(expected, abs=1e-12)
        assert vec.coeffs[1] / vec.coeffs[0] == pytest.approx(-0.8284, abs=2e-4)

    @pytest.mark.parametrize("nu,q", [(1, 5.0), (5, 5.0), (15, 0.1)])
    def test_recurrence_residual(self, nu, q):
        _, vec = coeffs(nu, q)
        assert recurrence_residual(vec) < 1e-8 * np.max(np.abs(vec.coeffs))

    def test_unit_norm_and_sign(self):
        for nu, q, kind in [(1, 5.0, EVEN), (5, 5.0, EVEN), (3, 2.0, ODD)]:
            _, vec = coeffs(nu, q, kind)
            assert abs(np.sum(vec.coeffs ** 2) - 1.0) < 1e-12
            assert vec.coeffs[(nu - 1) // 2] > 0.0

    def test_tail_decay(self):
        _, vec = coeffs(5, 5.0)
        assert abs(vec.coeffs[-1]) < 1e-12 * np.max(np.abs(vec.coeffs))

    def test_short_length_raises_with_suggestion(self):
        pair = OrderParameterPair(1, 5.0)
        cv = characteristic_value(pair)
        with pytest.raises(TruncationError) as info:
            fourier_coefficients(pair, cv, length=3)
        assert info.value.suggested_length is not None
        assert info.value.suggested_length > 3
        # the suggestion is usable
        vec = fourier_coefficients(pair, cv, length=info.value.suggested_length)
        assert abs(vec.coeffs[-1]) < 1e-12 * np.max(np.abs(vec.coeffs))

    def test_mismatched_pair_rejected(self):
        cv = characteristic_value(OrderParameterPair(1, 5.0))
        with pytest.raises(ParameterError):
            fourier_coefficients(OrderParameterPair(1, 4.0), cv)


class TestEvaluation:
    def test_ce_q_zero_is_cosine(self):
        _, vec = coeffs(1, 0.0)
        assert eval_ce(vec, 0.0) == pytest.approx(1.0, abs=1e-12)
        w = np.linspace(0.0, 2 * np.pi, 17)
        assert np.max(np.abs(eval_ce(vec, w) - np.cos(w))) < 1e-12

    def test_se_q_zero_is_sine(self):
        _, vec = coeffs(1, 0.0, ODD)
        assert eval_se(vec, 0.0) == 0.0
        assert eval_se(vec, np.pi / 2) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("nu,q", [(1, 5.0), (5, 5.0), (3, 0.7)])
    def test_ce_vanishes_at_quarter_period(self, nu, q):
        _, vec = coeffs(nu, q)
        bound = 1e-12 * np.sum(np.abs(vec.coeffs))
        assert abs(eval_ce(vec, np.pi / 2)) < bound

    def test_ce_matches_ode_integration(self):
        cv, vec = coeffs(1, 5.0)
        expected = integrate_angular_equation(cv.a, 5.0, eval_ce(vec, 0.0), 0.0, 0.3)
        assert abs(eval_ce(vec, 0.3) - expected) < 1e-6

    def test_se_matches_ode_integration(self):
        cv, vec = coeffs(1, 5.0, ODD)
        m = 2.0 * np.arange(len(vec)) + 1.0
        slope = float(np.sum(vec.coeffs * m))       # se'(0) from the series
        expected = integrate_angular_equation(cv.a, 5.0, 0.0, slope, 0.3)
        assert abs(eval_se(vec, 0.3) - expected) < 1e-6

    def test_parity_symmetry(self):
        _, vec = coeffs(5, 5.0)
        _, veco = coeffs(5, 5.0, ODD)
        w = np.linspace(-3.0, 3.0, 23)
        assert np.max(np.abs(eval_ce(vec, w) - eval_ce(vec, -w))) < 1e-14
        assert np.max(np.abs(eval_se(veco, w) + eval_se(veco, -w))) < 1e-14

    def test_periodicity(self):
        _, vec = coeffs(3, 2.0)
        w = np.linspace(0.0, 2 * np.pi, 11)
        assert np.max(np.abs(eval_ce(vec, w + 2 * np.pi) - eval_ce(vec, w))) < 1e-13

    def test_against_scipy_special(self):
        _, vec = coeffs(5, 5.0)
        w = np.linspace(0.0, 2.5, 7)
        ref = np.array([scipy.special.mathieu_cem(5, 5.0, np.degrees(x))[0] for x in w])
        assert np.max(np.abs(eval_ce(vec, w) - ref)) < 1e-10

    def test_parity_mismatch_raises(self):
        _, vec = coeffs(1, 5.0)
        _, veco = coeffs(1, 5.0, ODD)
        with pytest.raises(ParityError):
            eval_se(vec, 0.3)
        with pytest.raises(ParityError):
            eval_ce(veco, 0.3)


class TestOdeResidual:
    def test_pure_cosine_is_exact(self):
        _, vec = coeffs(1, 0.0)
        grid = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
        assert ode_residual(vec, 1.0, 0.0, grid) == 0.0

    def test_converged_solution(self):
        cv, vec = coeffs(1, 5.0)
        grid = np.linspace(0.0, 2 * np.pi, 512, endpoint=False)
        assert ode_residual(vec, cv.a, 5.0, grid) < 1e-8 * np.sum(np.abs(vec.coeffs))

    def test_perturbed_eigenvalue_is_detected(self):
        cv, vec = coeffs(5, 5.0)
        grid = np.linspace(0.0, 2 * np.pi, 512, endpoint=False)
        assert ode_residual(vec, cv.a + 0.1, 5.0, grid) > 1e-2

    def test_empty_grid_rejected(self):
        _, vec = coeffs(1, 5.0)
        with pytest.raises(ParameterError):
            ode_residual(vec, 1.0, 5.0, [])


class TestOrthogonality:
    def test_distinct_even_orders(self):
        _, c1 = coeffs(1, 5.0)
        _, c3 = coeffs(3, 5.0)
        assert abs(orthogonality_integral(c1, c3)) < 1e-8

    def test_square_integral_is_pi(self):
        _, c1 = coeffs(1, 0.0)
        assert orthogonality_integral(c1, c1) == pytest.approx(np.pi, abs=1e-10)

    @pytest.mark.parametrize("nu,q", [(1, 5.0), (5, 5.0), (3, 1.0)])
    def test_parseval_norm(self, nu, q):
        _, vec = coeffs(nu, q)
        assert orthogonality_integral(vec, vec) == pytest.approx(np.pi, abs=1e-8)

    def test_mixed_parity_vanishes(self):
        _, c1 = coeffs(1, 5.0)
        _, s1 = coeffs(1, 5.0, ODD)
        assert abs(orthogonality_integral(c1, s1)) < 1e-12

    def test_mismatched_q_rejected(self):
        _, c1 = coeffs(1, 5.0)
        _, c3 = coeffs(3, 4.0)
        with pytest.raises(ParameterError):
            orthogonality_integral(c1, c3)

    def test_undersized_grid_rejected(self):
        _, c1 = coeffs(1, 5.0)
        with pytest.raises(ParameterError):
            orthogonality_integral(c1, c1, n_quad=8)
