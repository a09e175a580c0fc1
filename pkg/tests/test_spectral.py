import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from latticefn.functions import build_rooted_sinc, eval_rooted_sinc
from latticefn.lattice import LatticeSpec, QuantizedSequence, SampledSignal, quantize_sequence
from latticefn.spectral import (BandwidthEstimate, LOWER_BOUND, band_energy_exact,
                                band_energy_quadrature, check_lower_bound, dtft,
                                estimate_bandwidth, exhaustive_lower_bound_sweep,
                                lower_bound_sweep, quantized_fourier_series_check,
                                rescale_spectrum, synthesize_fourier_series)

sequences = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), min_size=1, max_size=8) \
    .filter(lambda d: any(d.values()))


def test_dtft_examples():
    grid = dtft({0: 1}, [0.0, 1.0, math.pi])
    assert np.allclose(grid.values, 1.0)
    grid = dtft({0: 1, 1: 1}, [0.0, math.pi])
    assert np.allclose(grid.values, [2.0, 0.0], atol=1e-15)
    with pytest.raises(ValueError):
        dtft({0: 1}, [4.0])


def test_dtft_separates_offset():
    q = QuantizedSequence({0: 2}, LatticeSpec(1, 0.5, 0, 0.25))
    grid = dtft(q, [0.3])
    assert grid.values[0] == pytest.approx(1.0)
    assert grid.dc_offset == 0.25


@given(sequences, st.floats(0, math.pi), st.integers(-5, 5))
def test_dtft_symmetry_and_shift(seq, w, shift):
    x = [dtft(seq, [-w]).values[0], dtft(seq, [w]).values[0]]
    assert x[0] == pytest.approx(np.conj(x[1]), abs=1e-9)
    shifted = {n + shift: v for n, v in seq.items()}
    y = dtft(shifted, [w]).values[0]
    assert y == pytest.approx(np.exp(-1j * w * shift) * x[1], abs=1e-9)


def test_band_energy_examples():
    r = band_energy_exact({0: 1}, LOWER_BOUND, math.pi)
    assert r.total_energy == 1.0
    assert r.fraction == pytest.approx((math.pi - 0.8) / math.pi, abs=1e-15)
    assert r.fraction == pytest.approx(0.745352, abs=1e-6)
    r = band_energy_exact({0: 1, 1: 1}, LOWER_BOUND, math.pi)
    assert r.band_energy == pytest.approx(band_energy_quadrature({0: 1, 1: 1}, 0.8, math.pi),
                                          rel=1e-8)


def test_band_validation_and_zero():
    with pytest.raises(ValueError):
        band_energy_exact({0: 1}, 1.0, 0.5)
    with pytest.raises(ValueError):
        band_energy_exact({0: 1}, 0.0, 4.0)
    r = band_energy_exact({0: 0}, 0.0, math.pi)
    assert r.fraction == 0.0 and r.total_energy == 0.0


@settings(max_examples=50, deadline=None)
@given(sequences, st.floats(0, math.pi), st.floats(0, math.pi))
def test_band_energy_matches_quadrature(seq, a, b):
    lo, hi = sorted((a, b))
    if hi - lo < 1e-6:
        return
    exact = band_energy_exact(seq, lo, hi).band_energy
    assert exact == pytest.approx(band_energy_quadrature(seq, lo, hi), rel=1e-8, abs=1e-10)


@given(sequences, st.floats(0.01, 3.1))
def test_additivity_and_parseval(seq, split):
    total = sum(v * v for v in seq.values())
    whole = band_energy_exact(seq, 0, math.pi)
    assert whole.total_energy == total
    assert whole.band_energy == pytest.approx(total, rel=1e-12)
    left = band_energy_exact(seq, 0, split).band_energy
    right = band_energy_exact(seq, split, math.pi).band_energy
    assert left + right == pytest.approx(total, rel=1e-9, abs=1e-9)


def test_bandwidth_of_half_band_sinc():
    n = np.arange(-200, 201)
    est = estimate_bandwidth(np.sinc(n / 2), epsilon=1e-3)
    assert est.sigma_hat == pytest.approx(math.pi / 2, abs=0.05)


def test_bandwidth_of_impulse_is_full_band():
    assert estimate_bandwidth({0: 1}, epsilon=1e-3).sigma_hat >= math.pi * (1 - 1e-3)


@given(sequences, st.floats(0.01, 100))
def test_bandwidth_scale_invariant(seq, c):
    a = estimate_bandwidth(seq).sigma_hat
    b = estimate_bandwidth({n: c * v for n, v in seq.items()}).sigma_hat
    assert abs(a - b) <= 2e-6


def test_bandwidth_rejects_zero_and_bad_epsilon():
    with pytest.raises(ValueError):
        estimate_bandwidth({0: 0})
    with pytest.raises(ValueError):
        estimate_bandwidth({0: 1}, epsilon=0)


def test_bandwidth_of_lattice_function():
    f = build_rooted_sinc([-1, 2, -3])
    n = np.arange(-3, 3)
    est = estimate_bandwidth(dict(zip(n.tolist(), np.round(eval_rooted_sinc(f, n)))), T=0.5)
    assert est.omega_hat >= LOWER_BOUND
    assert est.sigma_hat == pytest.approx(2 * est.omega_hat)


def test_check_lower_bound_examples():
    c = check_lower_bound(QuantizedSequence({0: 1}))
    assert c.verdict and c.report.fraction == pytest.approx(0.745352, abs=1e-6)
    n = np.arange(-100, 101)
    spec = LatticeSpec(1, 0.1)
    q = quantize_sequence(SampledSignal(tuple(np.sin(0.3 * n)), spec, -100))
    c = check_lower_bound(q)
    assert c.verdict and c.report.fraction > 0
    with pytest.raises(ValueError):
        check_lower_bound(QuantizedSequence({}))


def test_offset_does_not_change_verdict():
    a = check_lower_bound(QuantizedSequence({0: 1, 3: -2}))
    b = check_lower_bound(QuantizedSequence({0: 1, 3: -2}, LatticeSpec(1, 1, 0, 7)))
    assert a.report == b.report and b.dc_offset == 7


def test_sweep_small_and_partition_independent():
    full = exhaustive_lower_bound_sweep(3, 1)
    assert full.cases == 26 and not full.failures
    import itertools
    cases = list(itertools.product(range(-1, 2), repeat=3))
    parts = [lower_bound_sweep(cases[i::4]) for i in range(4)]
    best = min(parts, key=lambda r: (r.min_fraction, r.argmin))
    assert (best.min_fraction, best.argmin) == (full.min_fraction, full.argmin)
    assert sum(p.cases for p in parts) == full.cases


def test_rescale():
    r = rescale_spectrum(BandwidthEstimate(0.8, 1e-6), LatticeSpec(0.5, 1))
    assert r.sigma == pytest.approx(1.6)
    grid = dtft({0: 1, 2: -1}, np.linspace(-3, 3, 7))
    same = rescale_spectrum(grid, LatticeSpec())
    assert np.allclose(same.omegas, grid.omegas) and np.allclose(same.values, grid.values)
    assert not same.has_dc_impulse
    shifted = rescale_spectrum(grid, LatticeSpec(0.5, 0.25, 0.3, 2))
    assert shifted.dc_impulse == 2
    assert np.allclose(shifted.values,
                       0.125 * np.exp(-1j * grid.omegas / 0.5 * 0.3) * grid.values)
    with pytest.raises(TypeError):
        rescale_spectrum(3, LatticeSpec())


def test_fourier_series_impulse():
    r = quantized_fourier_series_check({0: 1})
    assert r.fraction == pytest.approx(1 - LOWER_BOUND / math.pi, abs=1e-15)


def test_fourier_series_against_synthesis():
    c = {-1: 1, 0: 1, 1: 1}
    xi_o = 2.5
    r = quantized_fourier_series_check(c, xi_o)
    assert r.fraction > 0
    inner = LOWER_BOUND / math.pi * xi_o / 2

    def power(xi):
        return abs(synthesize_fourier_series(c, xi_o, xi)[0]) ** 2

    outer = sum(integrate.quad(power, a, b, epsabs=0, epsrel=1e-12)[0]
                for a, b in ((-xi_o / 2, -inner), (inner, xi_o / 2)))
    whole = integrate.quad(power, -xi_o / 2, xi_o / 2, epsabs=0, epsrel=1e-12)[0]
    assert r.fraction == pytest.approx(outer / whole, rel=1e-8)


@given(sequences)
def test_fourier_series_dual_of_sequence_bound(seq):
    a = quantized_fourier_series_check(seq).fraction
    b = check_lower_bound(QuantizedSequence(seq)).report.fraction
    assert a == pytest.approx(b, rel=1e-12)


def test_fourier_series_validation():
    with pytest.raises(ValueError):
        quantized_fourier_series_check({0: 0})
    with pytest.raises(ValueError):
        quantized_fourier_series_check({0: 1}, inner_fraction=1.5)
