"""
Exact integer and rational arithmetic used by every certification routine.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Nothing in here ever touches floating point.
"""

import math
import threading
from fractions import Fraction

__all__ = ["Rational", "as_rational", "lcm_of_set", "binomial",
           "nth_prime", "prime_index", "PrimeTable", "PRIMES"]

Rational = Fraction


def as_rational(value):
    """
    Convert an int, Fraction or fraction string ("-1/30", "3") to a Rational.

    Floats are rejected: a float has already lost whatever exact value the
    caller had in mind.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact fraction: {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def lcm_of_set(values):
    """Least common multiple of a nonempty collection of positive integers."""
    values = list(values)
    if not values:
        raise ValueError("lcm of an empty set is undefined")
    for v in values:
        if int(v) != v or v < 1:
            raise ValueError(f"lcm_of_set expects positive integers, got {v!r}")
    return math.lcm(*(int(v) for v in values))


def binomial(n, k):
    """
    Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.

    Parameters
    ----------
    n : int
        Upper argument; negative values are allowed.
    k : int
        Lower argument, k >= 0.

    Returns
    -------
    int
        The exact coefficient. Zero when 0 <= n < k.
    """
    if k < 0:
        raise ValueError("binomial requires k >= 0")
    if n >= 0:
        return math.comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    return (-1) ** k * math.comb(k - n - 1, k)


class PrimeTable:
    """
    Grow-only ordered table of primes, extended by a segmented sieve.

    Reads of already computed entries never block; extension holds a lock so
    concurrent callers see a consistent prefix.
    """

    def __init__(self, initial_limit=128):
        if initial_limit < 4:
            raise ValueError("initial_limit must be at least 4")
        self._lock = threading.Lock()
        self._primes = _simple_sieve(initial_limit)
        self._limit = initial_limit  # all primes < _limit are present

    def __len__(self):
        return len(self._primes)

    @property
    def primes(self):
        return tuple(self._primes)

    def _extend(self):
        with self._lock:
            lo = self._limit
            hi = 2 * lo
            segment = bytearray([1]) * (hi - lo)
            for p in self._primes:
                if p * p >= hi:
                    break
                start = max(p * p, ((lo + p - 1) // p) * p)
                segment[start - lo::p] = bytes(len(range(start - lo, hi - lo, p)))
            # primes in [sqrt(hi), lo) are already known; segment is complete
            new = [lo + i for i, flag in enumerate(segment) if flag]
            self._primes = self._primes + new
            self._limit = hi

    def __getitem__(self, i):
        if i < 0:
            raise IndexError("prime index must be nonnegative")
        while i >= len(self._primes):
            self._extend()
        return self._primes[i]

    def index_of(self, p):
        """Index of the prime ``p`` in the table (p_0 = 2)."""
        while self._limit <= p:
            self._extend()
        lo, hi = 0, len(self._primes)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._primes[mid] < p:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self._primes) or self._primes[lo] != p:
            raise ValueError(f"{p} is not prime")
        return lo


def _simple_sieve(limit):
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, limit, p)))
    return [i for i, f in enumerate(flags) if f]


PRIMES = PrimeTable()


def nth_prime(i):
    """Return p_i, the (i+1)-th prime (p_0 = 2)."""
    if i < 0:
        raise ValueError("prime index must be nonnegative")
    return PRIMES[i]


def prime_index(p):
    return PRIMES.index_of(p)
