"""
Quantizing a sinusoid creates odd harmonics, aliased into the baseband.

The quantizer is an odd staircase, so a pure tone comes out with energy at
odd multiples of its frequency only. The fundamental is snapped to a whole
odd number of cycles in the window so each harmonic falls on one DFT bin.
"""

import math

from latticefn import LatticeSpec, check_lower_bound, quantized_sinusoid_experiment

omega = 2 * math.pi * 7 / 1024
for delta in (0.4, 4.0, 2.0 ** -20):
    gamma = 2.0 if delta == 4.0 else 0.0
    r = quantized_sinusoid_experiment(omega, LatticeSpec(1, delta, 0, gamma), 1024)
    top = sorted(zip(r.detected_peaks, r.peak_orders), key=lambda p: -p[0][1])[:5]
    print(f"delta={delta:g}: {len(r.detected_peaks)} peaks, even/odd ratio {r.max_even_relative:.1e}")
    for (f, mag), k in top:
        print(f"    k={k:<4} at {f:.4f} rad/s, amplitude {mag:.4f}")
    print("    energy above 0.8 rad/sample:", check_lower_bound(r.codes).report.fraction)
