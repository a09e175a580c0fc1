"""
Forward differences at zero and Newton forward-difference reconstruction.

Everything is exact: inputs are coerced to :class:`fractions.Fraction`.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import binomial

__all__ = ["DifferenceTable", "kth_difference_at_zero", "newton_reconstruct",
           "differences_at_zero"]


def kth_difference_at_zero(values, k):
    """
    k-th forward difference at zero from the samples f(0), ..., f(k).

    Uses the alternating binomial sum directly, so each order is computed
    independently of the lower ones.

    Parameters
    ----------
    values : sequence of rationals
        Samples f(0), f(1), ...; at least ``k + 1`` of them.
    k : int
        Difference order.

    Returns
    -------
    Fraction
    """
    if k < 0:
        raise ValueError("difference order must be nonnegative")
    if len(values) < k + 1:
        raise ValueError(f"need {k + 1} samples for the order-{k} difference, "
                         f"got {len(values)}")
    total = Fraction(0)
    for i in range(k + 1):
        total += (-1) ** (k - i) * binomial(k, i) * Fraction(values[i])
    return total


def differences_at_zero(values):
    """All differences Δ^0 f(0) .. Δ^K f(0) where K = len(values) - 1."""
    return [kth_difference_at_zero(values, k) for k in range(len(values))]


def newton_reconstruct(diffs_at_zero, n):
    """
    Evaluate the interpolating polynomial with the given differences at zero.

    f(n) = sum_k C(n, k) Δ^k f(0). Generalized binomials make this valid for
    negative ``n`` as well.
    """
    if not diffs_at_zero:
        raise ValueError("need at least one difference")
    return sum((binomial(n, k) * Fraction(d) for k, d in enumerate(diffs_at_zero)),
               Fraction(0))


@dataclass(frozen=True)
class DifferenceTable:
    """Samples f(0..K) alongside their differences at zero."""

    base_values: tuple
    diffs_at_zero: tuple

    def __post_init__(self):
        if len(self.base_values) != len(self.diffs_at_zero):
            raise ValueError("base_values and diffs_at_zero must have equal length")

    @classmethod
    def from_values(cls, values):
        values = tuple(Fraction(v) for v in values)
        return cls(values, tuple(differences_at_zero(values)))

    def __call__(self, n):
        return newton_reconstruct(self.diffs_at_zero, n)
