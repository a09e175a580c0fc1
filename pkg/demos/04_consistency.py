"""
A/D conversion followed by interpolation lands on a lattice function.

Sample and quantize an arbitrary signal, then interpolate with any kernel
that is 1 at zero and 0 at the other sample instants. Resampling and
requantizing returns the same codes. A kernel that leaks into the
neighbouring instant breaks this.
"""

import numpy as np

from latticefn import Interpolator, LatticeSpec, ad_convert, consistency_roundtrip, interpolate
from latticefn.lattice import QuantizedSequence

spec = LatticeSpec(T=0.5, delta=0.2, tau=0.1, gamma=0.05)
q = ad_convert(lambda t: np.exp(-t * t / 8) * np.cos(3 * t), spec, (-12, 12))
print("codes:", q.codes)

for kernel in ("sinc", "triangular", "zoh"):
    report = consistency_roundtrip(q, Interpolator(kernel, spec.T))
    print(f"{kernel:>10}: consistent={report.consistent} "
          f"max resample error={report.max_resample_error:.2e}")

t = spec.instant(3) + 0.25
print("sinc interpolation between samples:", interpolate(q, Interpolator("sinc", spec.T), t))


def leaky(x):
    return np.sinc(x) + 0.1 * np.sinc(x - 1)


report = consistency_roundtrip(QuantizedSequence({0: 10}), Interpolator(leaky, strict=False))
print("leaky kernel: consistent =", report.consistent, "mismatches (n, want, got) =", report.mismatches)
