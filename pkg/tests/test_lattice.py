import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from latticefn.lattice import (UNIT_LATTICE, LatticeSpec, QuantizedSequence,
                               SampledSignal, denormalize, is_lattice_samples,
                               normalize_to_integral, normalized_function, quantize,
                               quantize_array, quantize_sequence)


def scan_quantize(x, spec):
    """Oracle: nearest level among nearby candidates, ties to the larger level."""
    centre = int(round((x - spec.gamma) / spec.delta))
    best = None
    for m in range(centre - 3, centre + 4):
        d = abs(x - (m * spec.delta + spec.gamma))
        if best is None or d < best[0] or (d == best[0] and m > best[1]):
            best = (d, m)
    return best[1]


@pytest.mark.parametrize("x, spec, expected", [
    (0.4, UNIT_LATTICE, 0),
    (0.5, UNIT_LATTICE, 1),
    (-0.5, UNIT_LATTICE, 0),
    (2.3, LatticeSpec(1, 0.5, 0, 0.1), 4),
])
def test_quantize_examples(x, spec, expected):
    assert quantize(x, spec) == expected
    assert scan_quantize(x, spec) == expected


def test_quantize_exact_inputs():
    spec = LatticeSpec(1, Fraction(1, 3), 0, Fraction(1, 7))
    assert quantize(Fraction(1, 7) + Fraction(1, 6), spec) == 1  # exact midpoint


def test_quantize_non_finite():
    with pytest.raises(ValueError):
        quantize(math.nan)
    with pytest.raises(ValueError):
        quantize_array([1.0, math.inf])


def test_lattice_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(0, 1)
    with pytest.raises(ValueError):
        LatticeSpec(1, -0.1)


specs = st.builds(LatticeSpec,
                  st.floats(0.1, 10), st.floats(0.01, 4), st.floats(-3, 3), st.floats(-3, 3))


@given(st.floats(-1e3, 1e3), specs)
def test_quantize_matches_scan_and_error_bound(x, spec):
    m = quantize(x, spec)
    assert abs(x - spec.level(m)) <= spec.delta / 2 * (1 + 1e-12) + 1e-12
    assert m == quantize_array([x], spec)[0]


@given(st.integers(-10_000, 10_000), specs)
def test_requantization_is_idempotent(m, spec):
    assert quantize(spec.level(m), spec) == m


@given(st.floats(-100, 100), st.floats(-100, 100), specs)
def test_monotone(x, y, spec):
    if x > y:
        x, y = y, x
    assert quantize(x, spec) <= quantize(y, spec)


def test_quantize_sequence_examples():
    q = quantize_sequence(SampledSignal((0.1, 0.9, 2.2)))
    assert q.codes == {1: 1, 2: 2}
    assert q.window(0, 2)[1].tolist() == [0, 1, 2]

    exact = SampledSignal((Fraction(-3), Fraction(0), Fraction(5, 2)),
                          LatticeSpec(1, Fraction(1, 2)), start=-1)
    q = quantize_sequence(exact)
    assert [q.amplitude(n) for n in exact.indices] == list(exact.samples)

    n = np.arange(20)
    x = np.sin(2 * np.pi * 0.05 * n)
    spec = LatticeSpec(1, 0.5)
    q = quantize_sequence(SampledSignal(tuple(x), spec))
    assert [q[i] for i in n] == [scan_quantize(float(v), spec) for v in x]


def test_is_lattice_samples():
    assert is_lattice_samples(SampledSignal((0.0, 1.0, -3.0)))
    assert not is_lattice_samples(SampledSignal((0.5,)))
    assert is_lattice_samples(SampledSignal((0.5 + 1e-12,)), tol=1e-9) is False
    assert is_lattice_samples(SampledSignal((1 + 1e-12,)), tol=1e-9)
    with pytest.raises(ValueError):
        is_lattice_samples(SampledSignal((0.0,)), tol=-1)


def test_normalize_roundtrip_and_amplitudes():
    spec = LatticeSpec(2, 0.25, 1, 0.5)
    q = QuantizedSequence({0: 3}, spec)
    unit = normalize_to_integral(q)
    assert unit.codes == {0: 3} and unit.spec == UNIT_LATTICE
    assert denormalize(unit, spec) == q
    assert q.amplitude(0) == 1.25
    assert unit.amplitude(0) == 3


def test_normalized_function():
    spec = LatticeSpec(0.5, 0.25, 0.1, 0.3)

    def f(t):
        return spec.gamma + spec.delta * 4 * np.cos(np.pi * (t - spec.tau) / spec.T)

    f_o = normalized_function(f, spec)
    assert [round(f_o(n), 12) for n in range(4)] == [4, -4, 4, -4]


def test_json_and_csv_roundtrip():
    q = QuantizedSequence({5: -2, -1: 3, 2: 0}, LatticeSpec(0.5, 0.1, 0.2, -0.3))
    d = json.loads(q.to_json())
    assert d["codes"] == [[-1, 3], [5, -2]]
    assert QuantizedSequence.from_json(q.to_json()) == q
    text = q.to_csv()
    assert text.splitlines()[0] == "n,code,amplitude"
    assert QuantizedSequence.from_csv(text, q.spec) == q


@pytest.mark.parametrize("payload, field", [
    ({"delta": 1, "codes": []}, "T"),
    ({"T": 1, "delta": 1, "codes": [[1, 2, 3]]}, "codes"),
    ({"T": 1, "delta": 1, "codes": [[1, 0.5]]}, "codes"),
    ({"T": -1, "delta": 1, "codes": []}, "lattice"),
])
def test_malformed_json_names_field(payload, field):
    with pytest.raises(ValueError, match=field):
        QuantizedSequence.from_dict(payload)
