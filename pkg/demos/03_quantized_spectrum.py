"""
No nonzero quantized sequence is confined to low frequencies.

Every nonzero integer sequence keeps part of its energy above 0.8
rad/sample. Here the share is computed in closed form for a few sequences,
checked by quadrature, and minimized exhaustively over small code sets.
"""

import math

import numpy as np

from latticefn import (LatticeSpec, QuantizedSequence, band_energy_exact, check_lower_bound,
                       estimate_bandwidth, exhaustive_lower_bound_sweep)
from latticefn.spectral import band_energy_quadrature

for seq in [{0: 1}, {0: 1, 1: 1}, {0: 1, 1: 2, 2: 1}, dict(enumerate([1, 4, 6, 4, 1]))]:
    r = band_energy_exact(seq, 0.8, math.pi)
    quad = band_energy_quadrature(seq, 0.8, math.pi)
    print(f"{list(seq.values())}: share above 0.8 = {r.fraction:.6f} "
          f"(quadrature {quad / r.total_energy:.6f})")

sweep = exhaustive_lower_bound_sweep(5, 2)
print(f"{sweep.cases} sequences of length 5, codes in [-2, 2]: "
      f"minimum share {sweep.min_fraction:.6f} at {sweep.argmin}")

# a finely quantized sinusoid at low frequency still passes
n = np.arange(-200, 201)
spec = LatticeSpec(1, 1e-3)
q = QuantizedSequence.from_array(np.floor(np.sin(0.1 * n) / 1e-3 + 0.5).astype(int), -200, spec)
print("sin(0.1 n), delta 1e-3: share above 0.8 =", check_lower_bound(q).report.fraction)

est = estimate_bandwidth(q, T=0.5)
print(f"1e-6 energy bandwidth: {est.omega_hat:.3f} rad/sample = {est.sigma_hat:.3f} rad/s at T = 0.5")
