"""JSON schemas of every CLI output and of the quantized-sequence file format."""

_number = {"type": "number"}
_fraction = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_seed = {"type": "integer"}
_band = {"type": "array", "items": _number, "minItems": 2, "maxItems": 2}

QUANTIZED_SEQUENCE = {
    "type": "object",
    "required": ["T", "delta", "tau", "gamma", "codes"],
    "properties": {
        "T": {"type": "number", "exclusiveMinimum": 0},
        "delta": {"type": "number", "exclusiveMinimum": 0},
        "tau": _number,
        "gamma": _number,
        "codes": {"type": "array",
                  "items": {"type": "array", "items": {"type": "integer"},
                            "minItems": 2, "maxItems": 2}},
    },
}

BAND_ENERGY_REPORT = {
    "type": "object",
    "required": ["total_energy", "band_energy", "fraction", "band"],
    "properties": {
        "total_energy": {"type": "number", "minimum": 0},
        "band_energy": {"type": "number", "minimum": 0},
        "fraction": {"type": "number", "minimum": 0, "maximum": 1},
        "band": _band,
    },
}

SCHEMAS = {
    "verify poly": {
        "type": "object",
        "required": ["integral", "certificate", "coefficients", "seed"],
        "properties": {
            "integral": {"type": "boolean"},
            "certificate": {"type": "array", "items": _fraction},
            "coefficients": {"type": "array", "items": _fraction},
            "seed": _seed,
        },
    },
    "verify roundtrip": {
        "type": "object",
        "required": ["consistent", "kernel", "window", "mismatches",
                     "max_resample_error", "seed"],
        "properties": {
            "consistent": {"type": "boolean"},
            "kernel": {"type": "string"},
            "window": {"type": "array", "items": {"type": "integer"}},
            "mismatches": {"type": "array"},
            "max_resample_error": _number,
            "seed": _seed,
        },
    },
    "verify identity": {
        "type": "object",
        "required": ["cases", "max_deviation", "tolerance", "passed", "seed"],
        "properties": {
            "cases": {"type": "array", "items": {
                "type": "object", "required": ["roots", "k", "deviation"]}},
            "max_deviation": _number,
            "tolerance": _number,
            "passed": {"type": "boolean"},
            "seed": _seed,
        },
    },
    "encode": {
        "type": "object",
        "required": ["sequence", "code", "seed"],
        "properties": {"sequence": {"type": "array", "items": {"type": "integer"}},
                       "code": {"type": "integer", "minimum": 0}, "seed": _seed},
    },
    "decode": {
        "type": "object",
        "required": ["sequence", "code", "seed"],
        "properties": {"sequence": {"type": "array", "items": {"type": "integer"}},
                       "code": {"type": "integer", "minimum": 0}, "seed": _seed},
    },
    "construct rooted-sinc": {
        "type": "object",
        "required": ["roots", "k", "inv_a", "includes_pi", "sample_values", "seed"],
        "properties": {
            "roots": {"type": "array", "items": {"type": "integer"}},
            "k": {"type": "integer", "minimum": 1},
            "inv_a": {"type": "integer", "minimum": 1},
            "includes_pi": {"type": "boolean"},
            "sample_values": {"type": "array", "items": {
                "type": "array", "minItems": 2, "maxItems": 2}},
            "seed": _seed,
        },
    },
    "analyze spectrum": {
        "type": "object",
        "required": ["report", "grid", "dc_offset", "seed"],
        "properties": {"report": BAND_ENERGY_REPORT, "grid": {"type": "integer"},
                       "dc_offset": _number, "seed": _seed},
    },
    "analyze bandwidth": {
        "type": "object",
        "required": ["sigma_hat", "epsilon", "T", "omega_hat", "seed"],
        "properties": {"sigma_hat": {"type": "number", "minimum": 0},
                       "epsilon": _number, "T": _number, "omega_hat": _number,
                       "seed": _seed},
    },
    "analyze bound": {
        "type": "object",
        "required": ["total_energy", "band_energy", "fraction", "band", "verdict",
                     "dc_offset", "continuous_bound", "seed"],
        "properties": dict(BAND_ENERGY_REPORT["properties"], verdict={"type": "boolean"},
                           dc_offset=_number, continuous_bound=_number, seed=_seed),
    },
    "analyze fourier": {
        "type": "object",
        "required": ["outer_fraction", "inner_fraction", "xi_o", "report", "seed"],
        "properties": {"outer_fraction": _number, "inner_fraction": _number,
                       "xi_o": _number, "report": BAND_ENERGY_REPORT, "seed": _seed},
    },
    "analyze sweep": {
        "type": "object",
        "required": ["cases", "min_fraction", "argmin", "failures", "length",
                     "max_code", "seed"],
        "properties": {"cases": {"type": "integer"}, "min_fraction": _number,
                       "argmin": {"type": "array", "items": {"type": "integer"}},
                       "failures": {"type": "array"}, "length": {"type": "integer"},
                       "max_code": {"type": "integer"}, "seed": _seed},
    },
    "simulate adc": dict(QUANTIZED_SEQUENCE,
                         required=QUANTIZED_SEQUENCE["required"] + ["seed"]),
    "simulate harmonics": {
        "type": "object",
        "required": ["fundamental", "requested_fundamental", "omega_s", "bin_width",
                     "detected_peaks", "peak_orders", "aliased_predictions",
                     "max_even_relative", "seed"],
        "properties": {
            "fundamental": _number,
            "detected_peaks": {"type": "array", "items": {
                "type": "array", "items": _number, "minItems": 2, "maxItems": 2}},
            "peak_orders": {"type": "array", "items": {"type": ["integer", "null"]}},
            "seed": _seed,
        },
    },
    "plot overlay": {
        "type": "object",
        "required": ["columns", "rows", "crossings", "seed"],
        "properties": {"columns": {"type": "array", "items": {"type": "string"}},
                       "rows": {"type": "integer", "minimum": 1},
                       "crossings": {"type": "object"}, "seed": _seed},
    },
}
