"""
Sampling/quantization lattices and the objects that live on them.

A lattice is the grid of points (n*T + tau, m*delta + gamma). The quantizer
is mid-tread with unbounded codes; exact midpoints go to the upper level.
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "LatticeSpec",
    "UNIT_LATTICE",
    "QuantizedSequence",
    "SampledSignal",
    "quantize",
    "quantize_array",
    "quantize_sequence",
    "is_lattice_samples",
    "normalize_to_integral",
    "denormalize",
    "normalized_function",
]


@dataclass(frozen=True)
class LatticeSpec:
    """Sampling period ``T``, quantization step ``delta`` and their offsets."""

    T: float = 1.0
    delta: float = 1.0
    tau: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("T", "delta", "tau", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"lattice parameter {name} must be finite")
        if not self.T > 0:
            raise ValueError("sampling period T must be positive")
        if not self.delta > 0:
            raise ValueError("quantization step delta must be positive")

    def level(self, m):
        """Amplitude of code ``m``."""
        return m * self.delta + self.gamma

    def instant(self, n):
        return n * self.T + self.tau

    def as_dict(self):
        return {"T": self.T, "delta": self.delta, "tau": self.tau, "gamma": self.gamma}


UNIT_LATTICE = LatticeSpec(1, 1, 0, 0)


def quantize(x, spec=UNIT_LATTICE):
    """
    Nearest code m for the amplitude ``x``; ties round toward +inf.

    Works exactly for Fraction/int inputs when the lattice parameters are
    exact as well.
    """
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError(f"cannot quantize non-finite amplitude {x!r}")
    return math.floor((x - spec.gamma) / spec.delta + Fraction(1, 2))


def quantize_array(x, spec=UNIT_LATTICE):
    """Vectorized :func:`quantize` for float arrays."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("cannot quantize non-finite amplitudes")
    return np.floor((x - spec.gamma) / spec.delta + 0.5).astype(np.int64)


@dataclass(frozen=True)
class QuantizedSequence:
    """
    Finitely supported integer codes on a lattice.

    ``codes`` maps sample index n to code m_n; indices not present carry code
    zero, i.e. amplitude ``gamma``.
    """

    codes: dict = field(default_factory=dict)
    spec: LatticeSpec = UNIT_LATTICE

    def __post_init__(self):
        clean = {}
        for n, m in dict(self.codes).items():
            if int(n) != n or int(m) != m:
                raise ValueError(f"index and code must be integers, got ({n!r}, {m!r})")
            if m:
                clean[int(n)] = int(m)
        object.__setattr__(self, "codes", dict(sorted(clean.items())))

    @classmethod
    def from_array(cls, codes, start=0, spec=UNIT_LATTICE):
        return cls({start + i: int(m) for i, m in enumerate(codes)}, spec)

    @property
    def support(self):
        return list(self.codes)

    def is_zero(self):
        return not self.codes

    def __getitem__(self, n):
        return self.codes.get(n, 0)

    def amplitude(self, n):
        return self.spec.level(self[n])

    def window(self, start=None, stop=None):
        """Indices and codes over ``start..stop`` inclusive (default: support)."""
        if start is None:
            start = min(self.codes, default=0)
        if stop is None:
            stop = max(self.codes, default=0)
        n = np.arange(start, stop + 1)
        return n, np.array([self[int(i)] for i in n], dtype=np.int64)

    # serialization -------------------------------------------------------

    def to_dict(self):
        d = self.spec.as_dict()
        d["codes"] = [[n, m] for n, m in self.codes.items()]
        return d

    @classmethod
    def from_dict(cls, d):
        missing = [k for k in ("T", "delta", "codes") if k not in d]
        if missing:
            raise ValueError(f"quantized sequence is missing field(s): {', '.join(missing)}")
        try:
            spec = LatticeSpec(float(d["T"]), float(d["delta"]),
                               float(d.get("tau", 0.0)), float(d.get("gamma", 0.0)))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad lattice field: {exc}") from None
        codes = {}
        for entry in d["codes"]:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ValueError(f"field 'codes': expected [n, m] pairs, got {entry!r}")
            n, m = entry
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (n, m)):
                raise ValueError(f"field 'codes': non-integer pair {entry!r}")
            if n in codes:
                raise ValueError(f"field 'codes': duplicate index {n}")
            codes[n] = m
        return cls(codes, spec)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from None
        if not isinstance(d, dict):
            raise ValueError("quantized sequence JSON must be an object")
        return cls.from_dict(d)

    def to_csv(self):
        """CSV with columns n,code,amplitude over the support."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "code", "amplitude"])
        for n, m in self.codes.items():
            writer.writerow([n, m, repr(self.spec.level(m))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text, spec=UNIT_LATTICE):
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames is None or not {"n", "code"} <= set(reader.fieldnames):
            raise ValueError("CSV needs columns n and code")
        return cls({int(row["n"]): int(row["code"]) for row in reader}, spec)


@dataclass(frozen=True)
class SampledSignal:
    """Real amplitudes at instants n*T + tau for n = start, start+1, ..."""

    samples: tuple
    spec: LatticeSpec = UNIT_LATTICE
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))

    @property
    def indices(self):
        return range(self.start, self.start + len(self.samples))

    @property
    def instants(self):
        return np.array([self.spec.instant(n) for n in self.indices])


def quantize_sequence(s):
    """Quantize every sample of ``s``; zero codes are dropped from the support."""
    if all(isinstance(x, float) for x in s.samples):
        codes = quantize_array(s.samples, s.spec).tolist() if s.samples else []
    else:
        codes = [quantize(x, s.spec) for x in s.samples]
    return QuantizedSequence(dict(zip(s.indices, codes)), s.spec)


def is_lattice_samples(s, tol=0.0):
    """True iff every sample lies within ``tol`` of a level m*delta + gamma."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    for x in s.samples:
        if isinstance(x, float) and not math.isfinite(x):
            return False
        if abs(x - s.spec.level(quantize(x, s.spec))) > tol:
            return False
    return True


def normalize_to_integral(q):
    """Same codes on the unit lattice (T=1, delta=1, tau=0, gamma=0)."""
    return QuantizedSequence(q.codes, UNIT_LATTICE)


def denormalize(q, spec):
    """Inverse of :func:`normalize_to_integral` given the original lattice."""
    return QuantizedSequence(q.codes, spec)


def normalized_function(f, spec):
    """Map a lattice function f to (f(t*T + tau) - gamma) / delta on the unit lattice."""
    def f_o(t):
        return (f(t * spec.T + spec.tau) - spec.gamma) / spec.delta
    return f_o
