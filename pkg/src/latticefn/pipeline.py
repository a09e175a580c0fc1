"""
A/D conversion, interpolation and consistency round trips.

An interpolator psi with psi(0) = 1 and psi(nT) = 0 for n != 0 maps a
quantized sequence to a lattice function: resampling and requantizing its
output returns the original codes.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .lattice import (QuantizedSequence, SampledSignal, quantize_array,
                      quantize_sequence)

__all__ = [
    "KERNELS",
    "Interpolator",
    "HarmonicReport",
    "ad_convert",
    "interpolate",
    "consistency_roundtrip",
    "RoundtripReport",
    "fold_frequency",
    "coherent_frequency",
    "quantized_sinusoid_experiment",
]


def _sinc_kernel(x):
    return np.sinc(x)


def _triangular_kernel(x):
    return np.maximum(0.0, 1.0 - np.abs(x))


def _zoh_kernel(x):
    # half-open [-1/2, 1/2) so exactly one sample owns each instant
    return ((x >= -0.5) & (x < 0.5)).astype(float)


KERNELS = {
    "sinc": _sinc_kernel,
    "triangular": _triangular_kernel,
    "zoh": _zoh_kernel,
}


@dataclass(frozen=True)
class Interpolator:
    """
    Kernel psi(t / T) for a sampling period T.

    ``kernel`` is one of :data:`KERNELS` or a callable of the normalized
    time t / T. With ``strict`` the interpolation conditions are checked at
    construction; pass ``strict=False`` to build deliberately broken kernels.
    """

    kernel: object = "sinc"
    period: float = 1.0
    strict: bool = True
    _fn: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if callable(self.kernel):
            fn = self.kernel
        elif self.kernel in KERNELS:
            fn = KERNELS[self.kernel]
        else:
            raise ValueError(f"unknown kernel {self.kernel!r}; choose from {sorted(KERNELS)}")
        if not self.period > 0:
            raise ValueError("period must be positive")
        object.__setattr__(self, "_fn", fn)
        if self.strict:
            n = np.arange(-64, 65)
            vals = np.asarray(fn(n.astype(float)), dtype=float)
            expected = (n == 0).astype(float)
            if np.max(np.abs(vals - expected)) > 1e-12:
                raise ValueError("kernel violates psi(0) = 1, psi(n) = 0 for n != 0")

    @property
    def name(self):
        return self.kernel if isinstance(self.kernel, str) else getattr(
            self.kernel, "__name__", "custom")

    def __call__(self, t):
        return self._fn(np.asarray(t, dtype=float) / self.period)


def ad_convert(signal, spec, window):
    """
    Sample ``signal`` at n*T + tau for n in ``window`` and quantize.

    ``window`` is a range of integers or an inclusive ``(first, last)`` pair.
    """
    if isinstance(window, tuple):
        window = range(window[0], window[1] + 1)
    if not isinstance(window, range) or window.step != 1:
        raise ValueError("window must be a contiguous integer range")
    instants = np.array([spec.instant(n) for n in window], dtype=float)
    try:
        samples = np.broadcast_to(np.asarray(signal(instants), dtype=float), instants.shape)
    except (TypeError, ValueError):
        samples = np.array([float(signal(t)) for t in instants])
    return quantize_sequence(SampledSignal(tuple(float(x) for x in samples), spec,
                                           window.start))


def interpolate(q, interp, t):
    """
    g(t) = sum_n a_n psi(t - n T - tau) with a_n = m_n delta + gamma.

    Indices outside the support carry amplitude gamma; since the kernels
    sum to one over any shifted lattice, that background contributes the
    constant gamma.
    """
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=float))
    spec = q.spec
    out = np.full(t.shape, float(spec.gamma))
    for n, m in q.codes.items():
        out += m * spec.delta * interp(t - spec.instant(n))
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class RoundtripReport:
    consistent: bool
    window: tuple
    mismatches: tuple = ()
    max_resample_error: float = 0.0

    def __bool__(self):
        return self.consistent

    def as_dict(self):
        return {"consistent": self.consistent, "window": list(self.window),
                "mismatches": [list(m) for m in self.mismatches],
                "max_resample_error": self.max_resample_error}


def consistency_roundtrip(q, interp, margin=2):
    """
    Interpolate, resample at the lattice instants and requantize.

    Instants cover the support plus ``margin`` samples either side, so a
    kernel leaking into neighbouring instants is caught.
    """
    if q.is_zero():
        lo, hi = -margin, margin
    else:
        lo, hi = min(q.codes) - margin, max(q.codes) + margin
    n = np.arange(lo, hi + 1)
    resampled = interpolate(q, interp, q.spec.tau + n * q.spec.T)
    recovered = quantize_array(resampled, q.spec)
    expected = np.array([q[int(i)] for i in n])
    bad = tuple((int(i), int(e), int(r)) for i, e, r in zip(n, expected, recovered) if e != r)
    err = float(np.max(np.abs(resampled - (expected * q.spec.delta + q.spec.gamma))))
    return RoundtripReport(not bad, (int(lo), int(hi)), bad, err)


def fold_frequency(omega, omega_s):
    """Alias a frequency (rad/s) into the baseband [0, omega_s / 2]."""
    r = math.fmod(omega, omega_s)
    if r < 0:
        r += omega_s
    return omega_s - r if r > omega_s / 2 else r


def coherent_frequency(omega, T, length):
    """
    Nearest frequency with an odd whole number of periods coprime to ``length``.

    Returns (frequency rad/s, cycles).
    """
    cycles = omega * T * length / (2 * math.pi)
    candidates = [c for c in range(1, (length + 1) // 2)
                  if c % 2 == 1 and 2 * c < length and math.gcd(c, length) == 1]
    if not candidates:
        raise ValueError("no coherent frequency below Nyquist for this length")
    best = min(candidates, key=lambda c: (abs(c - cycles), c))
    return 2 * math.pi * best / (T * length), best


@dataclass(frozen=True)
class HarmonicReport:
    """
    Peaks of the spectrum of a quantized sinusoid and their odd-harmonic origin.

    Frequencies are in rad/s, magnitudes are single-sided amplitudes.
    """

    fundamental: float
    omega_s: float
    bin_width: float
    detected_peaks: tuple
    aliased_predictions: tuple
    peak_orders: tuple
    max_even_relative: float
    requested_fundamental: float = None
    codes: QuantizedSequence = field(default=None, repr=False, compare=False)

    @property
    def unmatched_peaks(self):
        return tuple(p for p, k in zip(self.detected_peaks, self.peak_orders) if k is None)

    def magnitude_at_harmonic(self, k):
        target = fold_frequency(k * self.fundamental, self.omega_s)
        for f, mag in self.detected_peaks:
            if abs(f - target) <= self.bin_width / 2:
                return mag
        return 0.0

    def as_dict(self):
        return {
            "fundamental": self.fundamental,
            "requested_fundamental": self.requested_fundamental,
            "omega_s": self.omega_s,
            "bin_width": self.bin_width,
            "detected_peaks": [list(p) for p in self.detected_peaks],
            "peak_orders": list(self.peak_orders),
            "aliased_predictions": [list(p) for p in self.aliased_predictions],
            "max_even_relative": self.max_even_relative,
        }


def quantized_sinusoid_experiment(Omega_o, spec, window_len, threshold=1e-3,
                                  coherent=True, max_order=None):
    """
    Quantize sin(Omega_o t), sampled on ``spec``, and locate its harmonics.

    With ``coherent`` the fundamental is moved to the nearest frequency that
    fits an odd whole number of cycles in the window, so the flat-window DFT
    has no leakage. Peaks are local maxima of the DFT magnitude above
    ``threshold`` times the largest one; each is matched to the lowest odd k
    whose folded harmonic k*Omega_o lies within one bin.
    """
    omega_s = 2 * math.pi / spec.T
    if not Omega_o < omega_s / 2:
        raise ValueError("fundamental must lie below the Nyquist frequency pi/T")
    if window_len < 256:
        raise ValueError("window_len must be at least 256")
    requested = Omega_o
    if coherent:
        Omega_o, _ = coherent_frequency(Omega_o, spec.T, window_len)

    q = ad_convert(lambda t: np.sin(Omega_o * t), spec, range(window_len))
    n, codes = q.window(0, window_len - 1)
    amplitude = codes * spec.delta + spec.gamma
    spectrum = np.abs(np.fft.rfft(amplitude)) * 2.0 / window_len
    freqs = np.arange(spectrum.size) * omega_s / window_len
    bin_width = omega_s / window_len

    ref = spectrum[1:].max()
    peaks = []
    for i in range(1, spectrum.size):
        left = spectrum[i - 1] if i > 1 else -np.inf  # DC is not a harmonic
        right = spectrum[i + 1] if i + 1 < spectrum.size else -np.inf
        if spectrum[i] >= threshold * ref and spectrum[i] > left and spectrum[i] >= right:
            peaks.append((float(freqs[i]), float(spectrum[i])))

    if max_order is None:
        max_order = window_len
    predictions = tuple((k, fold_frequency(k * Omega_o, omega_s))
                        for k in range(1, max_order + 1, 2))
    orders = []
    for f, _ in peaks:
        match = next((k for k, p in predictions if abs(p - f) <= bin_width), None)
        orders.append(match)

    even = []
    for k in range(2, max_order + 1, 2):
        i = int(round(fold_frequency(k * Omega_o, omega_s) / bin_width))
        if 0 < i < spectrum.size:
            even.append(spectrum[i])
    max_even = float(max(even) / ref) if even else 0.0

    return HarmonicReport(Omega_o, omega_s, bin_width, tuple(peaks), predictions,
                          tuple(orders), max_even, requested, q)
