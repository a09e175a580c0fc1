"""
Integral-valued polynomials and the prime-power encoding of finite sequences.

A polynomial with rational coefficients takes integer values at every
integer exactly when its forward differences at zero, up to its degree, are
all integers. :func:`is_integral_valued` returns that verdict together with
the differences as a certificate.

Finite sequences of naturals are numbered by

    (a_0, ..., a_N)  ->  2**a_0 * 3**a_1 * ... * p_N**a_N - 1,

which is a bijection onto the naturals once sequences are kept in canonical
form (last entry nonzero, or the single sequence ``(0,)``).
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .differences import differences_at_zero
from .exact_arith import PRIMES, as_rational

__all__ = [
    "IntegralPolynomial",
    "is_integral_valued",
    "evaluate_at_integer",
    "encode_sequence",
    "decode_natural",
    "canonical_sequence",
    "encode_rational",
    "decode_rational",
    "encode_polynomial",
    "decode_polynomial",
]


@dataclass(frozen=True)
class IntegralPolynomial:
    """
    Polynomial a_0 + a_1 x + ... + a_N x**N with exact rational coefficients.

    Coefficients are stored lowest degree first with trailing zeros removed;
    the zero polynomial is ``(0,)`` and has degree 0.
    """

    monomial_coefficients: tuple

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.monomial_coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "monomial_coefficients", tuple(coeffs))

    @classmethod
    def from_strings(cls, text):
        """Parse ``"0,-1/2,1/2"`` (ascending powers) into a polynomial."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if not parts:
            raise ValueError("no coefficients given")
        return cls(tuple(as_rational(p) for p in parts))

    @classmethod
    def from_roots(cls, roots, leading=1):
        coeffs = [as_rational(leading)]
        for r in roots:
            r = as_rational(r)
            shifted = [Fraction(0)] + coeffs
            for i, c in enumerate(coeffs):
                shifted[i] -= r * c
            coeffs = shifted
        return cls(tuple(coeffs))

    @property
    def degree(self):
        return len(self.monomial_coefficients) - 1

    @property
    def is_zero(self):
        return self.monomial_coefficients == (Fraction(0),)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.monomial_coefficients):
            acc = acc * x + c
        return acc

    def newton_coefficients(self):
        """Differences at zero Δ^k P(0) for k = 0..degree."""
        return differences_at_zero([evaluate_at_integer(self, n)
                                    for n in range(self.degree + 1)])


def evaluate_at_integer(p, n):
    """Exact value P(n) by Horner's rule."""
    if int(n) != n:
        raise ValueError(f"expected an integer argument, got {n!r}")
    acc = Fraction(0)
    for c in reversed(p.monomial_coefficients):
        acc = acc * int(n) + c
    return acc


def is_integral_valued(p):
    """
    Decide whether ``p`` maps every integer to an integer.

    Returns
    -------
    integral : bool
    certificate : list of Fraction
        The differences Δ^k P(0), 0 <= k <= deg P. ``integral`` is true iff
        every entry has denominator 1.
    """
    certificate = p.newton_coefficients()
    return all(d.denominator == 1 for d in certificate), certificate


def canonical_sequence(entries):
    """Drop trailing zeros; the empty/all-zero sequence becomes ``(0,)``."""
    entries = [int(a) for a in entries]
    while len(entries) > 1 and entries[-1] == 0:
        entries.pop()
    return tuple(entries) if entries else (0,)


def encode_sequence(entries):
    """
    Number a canonical finite sequence of naturals by prime powers.

    Raises
    ------
    ValueError
        For negative entries or a non-canonical sequence (trailing zero).
    """
    entries = tuple(entries)
    if not entries:
        raise ValueError("sequence must be nonempty")
    if any(int(a) != a or a < 0 for a in entries):
        raise ValueError("sequence entries must be natural numbers")
    if canonical_sequence(entries) != entries:
        raise ValueError(f"sequence {entries} is not canonical (trailing zero)")
    product = 1
    for i, a in enumerate(entries):
        if a:
            product *= PRIMES[i] ** int(a)
    return product - 1


def decode_natural(n):
    """Inverse of :func:`encode_sequence`: exponents of the factorization of n+1."""
    if int(n) != n or n < 0:
        raise ValueError("decode_natural expects a natural number")
    m = int(n) + 1
    exponents = []
    i = 0
    while m > 1:
        p = PRIMES[i]
        if p * p > m:
            # m is prime now
            j = PRIMES.index_of(m)
            exponents.extend([0] * (j - len(exponents)))
            exponents.append(1)
            m = 1
            break
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        exponents.append(e)
        i += 1
    return canonical_sequence(exponents)


# Rationals are numbered through a zigzag of the numerator and a Cantor
# pairing with the denominator; the result is an injection Q -> N with 0 -> 0.

def _zigzag(z):
    return 2 * z if z >= 0 else -2 * z - 1


def _unzigzag(n):
    return n // 2 if n % 2 == 0 else -(n + 1) // 2


def _pair(x, y):
    return (x + y) * (x + y + 1) // 2 + y


def _unpair(z):
    w = (math.isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def encode_rational(q):
    q = as_rational(q)
    return _pair(_zigzag(q.numerator), q.denominator - 1)


def decode_rational(n):
    x, y = _unpair(int(n))
    num, den = _unzigzag(x), y + 1
    q = Fraction(num, den)
    if q.numerator != num or q.denominator != den:
        raise ValueError(f"{n} is not the code of any reduced rational")
    return q


def encode_polynomial(p):
    """Number a rational polynomial: per-coefficient rational codes, then primes."""
    return encode_sequence(canonical_sequence(encode_rational(c)
                                              for c in p.monomial_coefficients))


def decode_polynomial(n):
    return IntegralPolynomial(tuple(decode_rational(c) for c in decode_natural(n)))
