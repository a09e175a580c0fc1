import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from latticefn.functions import build_rooted_sinc, eval_rooted_sinc
from latticefn.lattice import (LatticeSpec, QuantizedSequence, SampledSignal,
                               UNIT_LATTICE, is_lattice_samples, quantize)
from latticefn.pipeline import (KERNELS, Interpolator, ad_convert, coherent_frequency,
                                consistency_roundtrip, fold_frequency, interpolate,
                                quantized_sinusoid_experiment)
from latticefn.spectral import check_lower_bound

specs = st.builds(LatticeSpec, st.floats(0.25, 4), st.floats(0.05, 2),
                  st.floats(-1, 1), st.floats(-1, 1))
code_maps = st.dictionaries(st.integers(-10, 10), st.integers(-6, 6), max_size=6)


def test_ad_convert_zero_signal():
    q = ad_convert(lambda t: 0.0, LatticeSpec(0.5, 0.3, 0.1, 0.0), (-10, 10))
    assert q.is_zero()


def test_ad_convert_lattice_function():
    f = build_rooted_sinc([-1, 2, -3])
    q = ad_convert(lambda t: eval_rooted_sinc(f, t), UNIT_LATTICE, (-20, 20))
    assert q.codes == {-3: -3, -1: 5, 2: 2}
    assert q.codes == {n: int(f.value_at_integer(n)) for n in range(-20, 21)
                       if f.value_at_integer(n)}


def test_ad_convert_against_per_sample_oracle():
    spec = LatticeSpec(1, 0.5)
    q = ad_convert(lambda t: math.sin(0.3 * t), spec, range(0, 64))
    for n in range(64):
        assert q[n] == math.floor(math.sin(0.3 * n) / 0.5 + 0.5)


def test_ad_convert_window_validation():
    with pytest.raises(ValueError):
        ad_convert(np.sin, UNIT_LATTICE, range(0, 10, 2))


def test_interpolation_examples():
    q = QuantizedSequence({0: 1})
    assert interpolate(q, Interpolator("sinc"), 0.5) == pytest.approx(2 / math.pi, abs=1e-15)
    assert interpolate(q, Interpolator("triangular"), 0.5) == 0.5
    assert interpolate(q, Interpolator("triangular"), 0.25) == 0.75
    assert interpolate(q, Interpolator("zoh"), -0.5) == 1.0
    assert interpolate(q, Interpolator("zoh"), 0.5) == 0.0
    q2 = QuantizedSequence({0: 1, 1: 3})
    assert interpolate(q2, Interpolator("triangular"), 0.5) == 2.0
    assert interpolate(q2, Interpolator("zoh"), 0.5) == 3.0


@given(code_maps, specs, st.sampled_from(sorted(KERNELS)))
def test_interpolation_condition(codes, spec, kernel):
    q = QuantizedSequence(codes, spec)
    interp = Interpolator(kernel, spec.T)
    for n in range(-12, 13):
        assert interpolate(q, interp, spec.instant(n)) == pytest.approx(
            q.amplitude(n), abs=1e-9)


def test_interpolator_validation():
    with pytest.raises(ValueError):
        Interpolator("lanczos")
    with pytest.raises(ValueError):
        Interpolator(lambda x: np.maximum(0, 1 - np.abs(x) / 2))
    assert Interpolator(lambda x: np.sinc(x)).name == "<lambda>"


@settings(max_examples=50, deadline=None)
@given(code_maps, specs, st.sampled_from(sorted(KERNELS)))
def test_roundtrip_property(codes, spec, kernel):
    q = QuantizedSequence(codes, spec)
    report = consistency_roundtrip(q, Interpolator(kernel, spec.T))
    assert report and not report.mismatches


def test_roundtrip_of_non_lattice_signal():
    spec = LatticeSpec(0.7, 0.3, 0.2, 0.05)
    q = ad_convert(lambda t: np.exp(-t * t / 20) * np.cos(2.1 * t), spec, (-15, 15))
    for kernel in KERNELS:
        assert consistency_roundtrip(q, Interpolator(kernel, spec.T)).consistent


def test_corrupted_kernel_is_caught():
    def leaky(x):
        return np.sinc(x) + 0.1 * np.sinc(x - 1)

    bad = Interpolator(leaky, strict=False)
    report = consistency_roundtrip(QuantizedSequence({0: 10}), bad)
    assert not report
    assert report.mismatches == ((1, 0, 1),)


def test_resampling_without_quantization():
    rng = np.random.default_rng(3)
    a = rng.normal(size=9)
    interp = Interpolator("sinc", 0.5)
    t = np.arange(9) * 0.5
    g = sum(a[n] * interp(t - n * 0.5) for n in range(9))
    assert np.allclose(g, a, atol=1e-12)


def test_interpolated_lattice_function_stays_on_lattice():
    spec = LatticeSpec(0.5, 0.25, 0.1, 0.3)
    q = QuantizedSequence({-2: 3, 0: -1, 4: 7}, spec)
    g = interpolate(q, Interpolator("sinc", spec.T), [spec.instant(n) for n in range(-8, 9)])
    assert is_lattice_samples(SampledSignal(tuple(g), spec, -8), tol=1e-9)


def test_fold_and_coherent_frequency():
    assert fold_frequency(0.3, 2.0) == pytest.approx(0.3)
    assert fold_frequency(1.7, 2.0) == pytest.approx(0.3)
    assert fold_frequency(2.3, 2.0) == pytest.approx(0.3)
    assert fold_frequency(-0.3, 2.0) == pytest.approx(0.3)
    w, c = coherent_frequency(2 * math.pi * 7 / 1024, 1, 1024)
    assert c == 7 and w == 2 * math.pi * 7 / 1024
    _, c = coherent_frequency(2 * math.pi * 8 / 1024, 1, 1024)
    assert c % 2 == 1 and math.gcd(c, 1024) == 1


def test_harmonics_match_odd_predictions():
    report = quantized_sinusoid_experiment(2 * math.pi * 7 / 1024, LatticeSpec(1, 0.4), 1024)
    assert report.detected_peaks
    assert not report.unmatched_peaks
    assert all(k % 2 == 1 for k in report.peak_orders)
    assert all(0 <= f <= report.omega_s / 2 for f, _ in report.detected_peaks)
    assert report.max_even_relative < 1e-3
    assert report.magnitude_at_harmonic(1) == pytest.approx(1.0, abs=0.15)


def test_harmonics_peaks_cross_checked_by_direct_dft():
    report = quantized_sinusoid_experiment(2 * math.pi * 7 / 1024, LatticeSpec(1, 0.4), 1024)
    _, codes = report.codes.window(0, 1023)
    x = codes * 0.4
    n = np.arange(1024)
    for f, mag in report.detected_peaks:
        direct = abs(np.sum(x * np.exp(-1j * f * n))) * 2 / 1024
        assert direct == pytest.approx(mag, rel=1e-9)


def test_square_wave_limit():
    spec = LatticeSpec(1, 4, 0, 2)
    report = quantized_sinusoid_experiment(2 * math.pi * 7 / 1024, spec, 1024)
    _, codes = report.codes.window(0, 1023)
    assert set(codes * 4 + 2) == {-2, 2}
    ratio = report.magnitude_at_harmonic(3) / report.magnitude_at_harmonic(1)
    assert ratio == pytest.approx(1 / 3, rel=0.2)


def test_fine_quantizer_still_passes_bound():
    spec = LatticeSpec(1, 2.0 ** -20)
    report = quantized_sinusoid_experiment(2 * math.pi * 7 / 1024, spec, 1024)
    assert report.peak_orders == (1,)
    assert check_lower_bound(report.codes).verdict


def test_harmonic_preconditions():
    with pytest.raises(ValueError):
        quantized_sinusoid_experiment(math.pi, UNIT_LATTICE, 1024)
    with pytest.raises(ValueError):
        quantized_sinusoid_experiment(0.1, UNIT_LATTICE, 128)


def test_noncoherent_request_is_snapped():
    report = quantized_sinusoid_experiment(0.44, LatticeSpec(1, 0.4), 2048)
    assert report.requested_fundamental == 0.44
    assert abs(report.fundamental - 0.44) <= 2 * report.bin_width
    assert not report.unmatched_peaks
