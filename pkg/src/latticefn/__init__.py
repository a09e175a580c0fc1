"""
Lattice functions for the analysis of analog-to-digital conversion.

Exact certification of integral-valued polynomials and bandlimited
functions, A/D simulation with consistent resampling/requantization, and
spectral checks of the 0.8 rad/sample lower bound on quantized sequences.
"""

from .exact_arith import Rational, binomial, lcm_of_set, nth_prime
from .differences import DifferenceTable, kth_difference_at_zero, newton_reconstruct
from .polynomials import (IntegralPolynomial, decode_natural, decode_polynomial,
                          encode_polynomial, encode_sequence, evaluate_at_integer,
                          is_integral_valued)
from .lattice import (UNIT_LATTICE, LatticeSpec, QuantizedSequence, SampledSignal,
                      denormalize, is_lattice_samples, normalize_to_integral,
                      quantize, quantize_sequence)
from .functions import (RootedSincFunction, SincSeries, build_rooted_sinc,
                        eval_rooted_sinc, eval_sinc_series, root_values,
                        verify_sinc_identity)
from .spectral import (BandEnergyReport, BandwidthEstimate, SpectrumGrid,
                       band_energy_exact, check_lower_bound, dtft, estimate_bandwidth,
                       exhaustive_lower_bound_sweep, lower_bound_sweep,
                       quantized_fourier_series_check, rescale_spectrum)
from .pipeline import (HarmonicReport, Interpolator, ad_convert, consistency_roundtrip,
                       interpolate, quantized_sinusoid_experiment)

__version__ = "0.1.0"
