"""
Bandlimited integral-valued functions.

Two constructions:

* :class:`RootedSincFunction` -- sin(pi t) divided by a scaled polynomial
  with distinct integer roots. The scale 1/a must be a positive multiple of
  lcm_j prod_{i != j} |t_i - t_j| for the function to be integral valued.
* :class:`SincSeries` -- a finite cardinal series sum_n a_n sinc(k t / T - n).

Root values are available exactly (as Fractions); float evaluation switches
to those exact limits inside a small guard radius around each root.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact_arith import lcm_of_set

__all__ = [
    "GUARD_RADIUS",
    "RootedSincFunction",
    "build_rooted_sinc",
    "pairwise_products",
    "root_values",
    "eval_rooted_sinc",
    "SincSeries",
    "eval_sinc_series",
    "sinc",
    "sinc_identity_coefficients",
    "verify_sinc_identity",
]

GUARD_RADIUS = 1e-6


def sinc(x):
    """Normalized sinc, sin(pi x)/(pi x) with sinc(0) = 1."""
    return np.sinc(x)


def _sin_pi(t):
    # sin(pi t) with the argument reduced to [-1/2, 1/2]; exact zeros at integers
    t = np.asarray(t, dtype=float)
    n = np.round(t)
    sign = np.where(np.mod(n, 2) == 0, 1.0, -1.0)
    return sign * np.sin(np.pi * (t - n))


def pairwise_products(roots):
    """prod_{i != j} |t_i - t_j| for each root t_j (empty product is 1)."""
    roots = [int(r) for r in roots]
    return [math.prod(abs(tj - ti) for i, ti in enumerate(roots) if i != j)
            for j, tj in enumerate(roots)]


def root_values(roots, inv_a):
    """
    Exact values at the roots, (-1)**t_j / (a * prod_{i != j} (t_j - t_i)).

    These are the limits of sin(pi t) / (pi a prod (t - t_i)).
    """
    inv_a = Fraction(inv_a)
    values = []
    for j, tj in enumerate(roots):
        signed = math.prod(tj - ti for i, ti in enumerate(roots) if i != j)
        values.append((-1) ** (tj % 2) * inv_a / signed)
    return values


@dataclass(frozen=True)
class RootedSincFunction:
    """
    f(t) = sin(pi t) / ([pi] a prod_i (t - t_i)) with 1/a = k * lcm(products).

    With ``includes_pi`` (the default) the denominator carries the factor pi
    and the values at the roots are the integers from :func:`root_values`.
    Without it every value is pi times larger, so the function is no longer
    integral valued; the flag exists to evaluate both readings.
    """

    roots: tuple
    k: int = 1
    includes_pi: bool = True
    products: tuple = field(init=False, repr=False)
    lcm: int = field(init=False, repr=False)

    def __post_init__(self):
        roots = tuple(int(r) for r in self.roots)
        if not roots:
            raise ValueError("need at least one root")
        if len(set(roots)) != len(roots):
            raise ValueError(f"roots must be distinct (simple zeros), got {roots}")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError("k must be a positive integer")
        object.__setattr__(self, "roots", roots)
        products = tuple(pairwise_products(roots))
        object.__setattr__(self, "products", products)
        object.__setattr__(self, "lcm", lcm_of_set(products))

    @property
    def inv_a(self):
        """|a|^-1 = k * lcm(products)."""
        return self.k * self.lcm

    @property
    def a(self):
        return Fraction(1, self.inv_a)

    def exact_root_values(self):
        """Values at the roots as exact Fractions (pi-included form)."""
        return dict(zip(self.roots, root_values(self.roots, self.inv_a)))

    def value_at_integer(self, n):
        """Exact value f(n) at an integer n (pi-included form)."""
        return self.exact_root_values().get(int(n), Fraction(0))

    def tail_constant(self):
        """C with |f(t)| <= C/|t| whenever |t| >= max|t_i| + 1."""
        reach = max(abs(r) for r in self.roots) + 1
        c = reach * self.inv_a
        return c / math.pi if self.includes_pi else float(c)

    def __call__(self, t):
        return eval_rooted_sinc(self, t)


def build_rooted_sinc(roots, k=1, includes_pi=True):
    """Construct the integral-valued member with the given roots and multiplier."""
    return RootedSincFunction(tuple(roots), k, includes_pi)


def eval_rooted_sinc(f, t):
    """
    Evaluate ``f`` at real ``t`` (scalar or array).

    Within :data:`GUARD_RADIUS` of a root the exact limit value is returned.
    """
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=float))
    inv_a = float(f.inv_a)
    denom = np.ones_like(t)
    for r in f.roots:
        denom = denom * (t - r)
    scale = math.pi if f.includes_pi else 1.0
    out = np.empty_like(t)
    near = np.zeros(t.shape, dtype=bool)
    for r, v in f.exact_root_values().items():
        mask = np.abs(t - r) < GUARD_RADIUS
        limit = float(v) if f.includes_pi else float(v) * math.pi
        out[mask] = limit
        near |= mask
    far = ~near
    out[far] = _sin_pi(t[far]) * inv_a / (scale * denom[far])
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class SincSeries:
    """
    Finite cardinal series f(t) = sum_n a_n sinc(k t / T - n).

    The kernels sit on the fine grid t = n T / k; the coarse lattice instants
    t = m T correspond to n = m k. With ``integral_constrained`` the
    coefficients a_{m k} for m >= 0 (the values at nonnegative lattice
    instants) must be integers.
    """

    coefficients: dict
    period: float = 1.0
    decimation: int = 1
    integral_constrained: bool = False

    def __post_init__(self):
        if not self.period > 0:
            raise ValueError("period must be positive")
        if int(self.decimation) != self.decimation or self.decimation < 1:
            raise ValueError("decimation must be a positive integer")
        coeffs = {int(n): a for n, a in dict(self.coefficients).items() if a != 0}
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items())))
        if self.integral_constrained:
            bad = [n for n, a in coeffs.items()
                   if n >= 0 and n % self.decimation == 0 and a != int(a)]
            if bad:
                raise ValueError(f"coefficients at lattice indices {bad} must be integers")

    def __call__(self, t):
        return eval_sinc_series(self, t)


def eval_sinc_series(s, t):
    """Sum of a_n sinc(k t / T - n) over the finite support."""
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=float))
    x = s.decimation * t / s.period
    out = np.zeros_like(x)
    for n, a in s.coefficients.items():
        out += float(a) * np.sinc(x - n)
    return float(out[0]) if scalar else out


def sinc_identity_coefficients(roots, k=1):
    """Coefficients gamma_j making sum gamma_j sinc(t - t_j) equal the rooted sinc."""
    f = build_rooted_sinc(roots, k)
    return f.exact_root_values()


def verify_sinc_identity(roots, k, grid):
    """
    Largest |sinc-series side - rooted-sinc side| over ``grid``.

    The series side uses the exact root values as coefficients; the other
    side is the closed-form pi-included rooted sinc with the same scale.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    f = build_rooted_sinc(roots, k, includes_pi=True)
    series = SincSeries(sinc_identity_coefficients(roots, k))
    return float(np.max(np.abs(eval_sinc_series(series, grid) - eval_rooted_sinc(f, grid))))
