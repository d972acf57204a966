import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lctbank import FrequencyGrid, LctParams, Signal, dtlct, quasi_period_factor, time_chirp, validate_params
from lctbank.errors import NonPositiveB, NonUnimodular
from lctbank.transform import evaluate_dtlct, freq_chirp, prefactor

from helpers import T_EXAMPLE, grid_points, random_signal
from oracles import dtft, dtlct_bruteforce


class TestParams:
    def test_fourier_case_valid(self):
        p = validate_params(0, 1, -1, 0)
        assert p.as_tuple() == (0.0, 1.0, -1.0, 0.0)

    def test_frft_quarter_pi_valid(self):
        c, s = math.cos(math.pi / 4), math.sin(math.pi / 4)
        validate_params(c, s, -s, c)

    @given(st.floats(-10, 10, allow_nan=False))
    def test_frft_any_angle_with_positive_b(self, angle):
        if math.sin(angle) > 1e-6:
            p = LctParams.frft(angle)
            assert abs(p.a * p.d - p.b * p.c - 1) <= 1e-12

    def test_non_unimodular(self):
        with pytest.raises(NonUnimodular):
            validate_params(1, 1, 1, 1)

    @pytest.mark.parametrize("b", [0.0, -1.0])
    def test_b_must_be_positive(self, b):
        with pytest.raises(NonPositiveB):
            validate_params(1, b, 0, 1)

    def test_unimodular_tolerance_edge(self):
        validate_params(1 + 5e-13, 1, 0, 1)
        with pytest.raises(NonUnimodular):
            validate_params(1 + 1e-11, 1, 0, 1)


class TestSignal:
    def test_zero_extension(self):
        x = Signal([1, 2, 3], start_index=-1)
        np.testing.assert_array_equal(x.window(-3, 4), [0, 0, 1, 2, 3, 0, 0])

    def test_rejects_empty_and_bad_period(self):
        with pytest.raises(ValueError):
            Signal([])
        with pytest.raises(ValueError):
            Signal([1.0], period=0.0)
        with pytest.raises(ValueError):
            Signal([np.nan])

    def test_samples_are_read_only(self):
        x = Signal([1.0, 2.0])
        with pytest.raises(ValueError):
            x.samples[0] = 5

    def test_grid_needs_two_points(self):
        with pytest.raises(ValueError):
            FrequencyGrid(1)


class TestChirps:
    def test_time_chirp_at_origin(self, frft):
        assert time_chirp(0, frft, 0.3) == 1

    def test_time_chirp_vanishes_for_a_zero(self, fourier):
        np.testing.assert_array_equal(time_chirp(np.arange(-5, 6), fourier, 0.7), 1)

    def test_time_chirp_frft_example(self, frft):
        # a/b = 1 so the exponent is T^2/2 = 0.00125
        assert abs(time_chirp(1, frft, T_EXAMPLE) - cmath.exp(0.00125j)) < 1e-15

    def test_quasi_period_trivial_cases(self, frft):
        p = LctParams(1.0, 1.0, 0.0, 1.0)
        q = LctParams(1.0, 2.0, -0.5, 0.0)
        np.testing.assert_allclose(quasi_period_factor(np.linspace(0, 5, 7), q, 0.2), 1, atol=0)
        assert abs(quasi_period_factor(-math.pi, p, 0.2) - 1) == 0
        assert abs(quasi_period_factor(-math.pi, frft, T_EXAMPLE) - 1) == 0

    def test_quasi_period_frft_value(self, frft):
        # d b 2 pi (0 + pi) / T^2 = 400 pi^2
        expected = complex(-0.4174081102500188, 0.908719136751014)
        assert abs(quasi_period_factor(0.0, frft, T_EXAMPLE) - expected) < 1e-11

    def test_prefactor_branch(self):
        p = LctParams(0.0, 2.0, -0.5, 0.0)
        pref = prefactor(p)
        assert abs(pref * pref - 1 / (2j * math.pi * 2.0)) < 1e-15
        assert abs(cmath.phase(pref) + math.pi / 4) < 1e-15


class TestDtlct:
    def test_matches_bruteforce(self, frft, rng):
        x = random_signal(rng, 20, start=-7)
        w = grid_points(64)
        ref = dtlct_bruteforce(x.samples, x.start_index, x.period, frft, w)
        np.testing.assert_allclose(evaluate_dtlct(x, frft, w), ref, rtol=0, atol=1e-11)

    def test_impulse(self, frft):
        grid = FrequencyGrid(32)
        X = dtlct(Signal.impulse(0, T_EXAMPLE), frft, grid).values
        w = grid.points
        expected = prefactor(frft) * np.exp(1j * frft.d * frft.b * w * w / (2 * T_EXAMPLE**2))
        np.testing.assert_allclose(X, expected, rtol=1e-13, atol=0)

    def test_fourier_reduction(self, fourier, rng):
        x = random_signal(rng, 33, start=3, period=1.0)
        w = grid_points(128)
        expected = cmath.sqrt(1 / (2j * math.pi)) * dtft(x.samples, x.start_index, w)
        np.testing.assert_allclose(evaluate_dtlct(x, fourier, w), expected, rtol=0, atol=1e-12)

    def test_chirp_factorization(self, frft, rng):
        x = random_signal(rng, 40, start=-10)
        w = grid_points(200)
        chirped = x.samples * time_chirp(x.indices, frft, x.period)
        expected = freq_chirp(w, frft, x.period) * dtft(chirped, x.start_index, w)
        np.testing.assert_allclose(evaluate_dtlct(x, frft, w, normalized=False), expected, rtol=0, atol=1e-11)

    def test_multitone_peak_location(self, frft):
        w0 = 100 * math.pi / 512
        n = np.arange(256)
        x = Signal(np.conj(time_chirp(n, frft, T_EXAMPLE)) * np.exp(1j * w0 * n), 0, T_EXAMPLE)
        grid = FrequencyGrid(512)
        k = int(np.argmax(np.abs(dtlct(x, frft, grid).values)))
        assert k == grid.nearest_index(w0)

    def test_spectrum_carries_period(self, frft):
        s = dtlct(Signal([1, 2], period=0.3), frft, FrequencyGrid(4))
        assert s.period == 0.3 and len(s.values) == 4

    def test_deterministic(self, frft, rng):
        x = random_signal(rng, 300)
        w = grid_points(700)
        assert np.array_equal(evaluate_dtlct(x, frft, w), evaluate_dtlct(x, frft, w))


signals = st.integers(1, 24).flatmap(
    lambda n: st.tuples(
        st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=n, max_size=n),
        st.integers(-20, 20),
    )
)
angles = st.floats(0.05, math.pi - 0.05)
periods = st.sampled_from([0.05, 0.1, 0.5, 1.0])


@settings(max_examples=40, deadline=None)
@given(signals, signals, angles, periods, st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_linearity(xs, ys, angle, T, alpha):
    p = LctParams.frft(angle)
    x, y = Signal(xs[0], xs[1], T), Signal(ys[0], ys[1], T)
    lo = min(x.start_index, y.start_index)
    hi = max(x.stop_index, y.stop_index)
    z = Signal(alpha * x.window(lo, hi) + 2.5 * y.window(lo, hi), lo, T)
    w = grid_points(48)
    lhs = evaluate_dtlct(z, p, w)
    rhs = alpha * evaluate_dtlct(x, p, w) + 2.5 * evaluate_dtlct(y, p, w)
    # |X(w)| <= sum |x| / sqrt(2 pi b), so this is a relative bound
    scale = abs(alpha) * np.sum(np.abs(x.samples)) + 2.5 * np.sum(np.abs(y.samples))
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(scale, 1e-300)


@settings(max_examples=40, deadline=None)
@given(signals, angles, periods)
def test_quasi_periodicity(xs, angle, T):
    p = LctParams.frft(angle)
    x = Signal(xs[0], xs[1], T)
    w = grid_points(32)
    lhs = evaluate_dtlct(x, p, w + 2 * math.pi)
    rhs = quasi_period_factor(w, p, T) * evaluate_dtlct(x, p, w)
    scale = max(1.0, float(np.sum(np.abs(x.samples))))
    assert np.max(np.abs(lhs - rhs)) <= 1e-10 * scale
