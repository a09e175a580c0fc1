"""
Command-line entry point: ``latticefn <group> <command> [options]``.

Exit status is 0 on success, 1 when a verification comes out negative and
2 for usage or domain errors (bad flags, malformed files, zero sequences).
JSON goes to stdout (or ``--out``); tabular mirrors go to ``--out-dir``.
"""

import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import click
import numpy as np

from . import functions, lattice, pipeline, plotting, polynomials, spectral

DEFAULT_SEED = 0
SEED_ENV = "LATTICE_DSP_SEED"


@dataclass
class RunConfig:
    """Global settings shared by every subcommand."""

    out_dir: Path = None
    seed: int = DEFAULT_SEED
    fmt: str = "json"
    lattice_tol: float = 1e-9
    identity_tol: float = 1e-8
    epsilon: float = 1e-6
    subcommand: str = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("lattice_tol", "identity_tol", "epsilon"):
            if not getattr(self, name) > 0:
                raise click.BadParameter(f"{name} must be positive")


class VerificationFailed(Exception):
    pass


def _fail(message):
    raise click.UsageError(message)


def _int_list(text, what):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        _fail(f"{what}: expected comma-separated integers, got {text!r}")


def _angle(text):
    t = text.strip().lower().replace(" ", "")
    if "pi" not in t:
        return float(t)
    num, _, den = t.partition("/")
    coef = num.replace("*", "").replace("pi", "")
    coef = {"": 1.0, "-": -1.0}[coef] if coef in ("", "-") else float(coef)
    return coef * math.pi / (float(den) if den else 1.0)


def _band(text):
    try:
        lo, hi = text.split(":")
        return _angle(lo), _angle(hi)
    except ValueError:
        _fail(f"--band: expected LO:HI (e.g. 0.8:pi), got {text!r}")


def _span(text, what):
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError:
        _fail(f"{what}: expected LO:HI, got {text!r}")


def _load_sequence(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}")
    if str(path).endswith(".csv"):
        return lattice.QuantizedSequence.from_csv(text)
    return lattice.QuantizedSequence.from_json(text)


def _dump(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write(text, out):
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        _fail(f"cannot write {out}: {exc.strerror}")


def _aux_path(cfg, name):
    if cfg.out_dir is None:
        return None
    try:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        _fail(f"cannot create {cfg.out_dir}: {exc.strerror}")
    return cfg.out_dir / name


def _emit(cfg, payload, out=None, table=None, name="output", plot_kw=None):
    """Write ``payload`` in the configured format; mirror ``table`` to --out-dir."""
    payload = dict(payload, seed=cfg.seed)
    if cfg.fmt == "json":
        _write(_dump(payload), out)
        if table is not None:
            path = _aux_path(cfg, f"{name}.csv")
            if path is not None:
                plotting.emit_plot_csv(table, path)
    elif cfg.fmt == "csv":
        if table is None:
            _fail(f"{cfg.subcommand} has no CSV form")
        _write(plotting.emit_plot_csv(table), out)
    else:
        if table is None:
            _fail(f"{cfg.subcommand} has no SVG form")
        _write(plotting.render_svg(table, **(plot_kw or {})), out)
    return payload


class _Group(click.Group):
    """Maps domain errors to exit status 2 and failed verifications to 1."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except VerificationFailed:
            ctx.exit(1)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)


@click.group(cls=_Group)
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path),
              help="Directory for CSV/SVG mirrors.")
@click.option("--seed", type=int, default=None,
              help=f"Seed for randomized sweeps (default: ${SEED_ENV} or 0).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "svg"]),
              default="json", show_default=True)
@click.option("--lattice-tol", type=float, default=1e-9, show_default=True)
@click.option("--identity-tol", type=float, default=1e-8, show_default=True)
@click.option("--epsilon", type=float, default=1e-6, show_default=True,
              help="Energy threshold for bandwidth estimates.")
@click.pass_context
def cli(ctx, out_dir, seed, fmt, lattice_tol, identity_tol, epsilon):
    """Lattice functions: certification, simulation and spectral checks."""
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = int(env) if env else DEFAULT_SEED
        except ValueError:
            _fail(f"{SEED_ENV} must be an integer, got {env!r}")
    ctx.obj = RunConfig(out_dir, seed, fmt, lattice_tol, identity_tol, epsilon)


def _config(ctx):
    cfg = ctx.find_object(RunConfig)
    cfg.subcommand = ctx.command_path.split(" ", 1)[-1]
    cfg.params = dict(ctx.params)
    return cfg


# verify ---------------------------------------------------------------------

@cli.group(cls=_Group)
def verify():
    """Certification and consistency checks."""


@verify.command("poly")
@click.option("--coeffs", required=True,
              help='Exact coefficients, lowest power first: "0,-1/2,1/2" is x(x-1)/2.')
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def verify_poly(ctx, coeffs, out):
    """Certify that a rational polynomial is integral valued."""
    cfg = _config(ctx)
    p = polynomials.IntegralPolynomial.from_strings(coeffs)
    integral, certificate = polynomials.is_integral_valued(p)
    _emit(cfg, {"integral": integral,
                "certificate": [str(d) for d in certificate],
                "coefficients": [str(c) for c in p.monomial_coefficients]}, out)
    if not integral:
        raise VerificationFailed


@verify.command("roundtrip")
@click.option("--in", "in_path", required=True, type=click.Path(dir_okay=False))
@click.option("--kernel", type=click.Choice(sorted(pipeline.KERNELS)), default="sinc",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def verify_roundtrip(ctx, in_path, kernel, out):
    """Interpolate, resample and requantize a sequence file."""
    cfg = _config(ctx)
    q = _load_sequence(in_path)
    report = pipeline.consistency_roundtrip(q, pipeline.Interpolator(kernel, q.spec.T))
    _emit(cfg, dict(report.as_dict(), kernel=kernel), out)
    if not report.consistent:
        raise VerificationFailed


@verify.command("identity")
@click.option("--roots", help="Distinct integer roots, e.g. -1,2,-3.")
@click.option("--k", type=int, default=1, show_default=True)
@click.option("--random", "n_random", type=int, default=0,
              help="Check this many random root sets instead (uses --seed).")
@click.option("--grid", type=int, default=10_000, show_default=True)
@click.option("--span", default="-20:20", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def verify_identity(ctx, roots, k, n_random, grid, span, out):
    """Compare the sinc series of the root values with the rooted sinc."""
    cfg = _config(ctx)
    lo, hi = _span(span, "--span")
    ts = np.concatenate([np.linspace(lo, hi, grid), np.arange(math.ceil(lo), hi + 1)])
    if n_random:
        rng = np.random.default_rng(cfg.seed)
        sets = [(sorted(rng.choice(np.arange(-10, 11), size=rng.integers(1, 6),
                                   replace=False).tolist()), int(rng.integers(1, 4)))
                for _ in range(n_random)]
    elif roots:
        sets = [(_int_list(roots, "--roots"), k)]
    else:
        _fail("give --roots or --random")
    cases = [{"roots": r, "k": kk, "deviation": functions.verify_sinc_identity(r, kk, ts)}
             for r, kk in sets]
    worst = max(c["deviation"] for c in cases)
    passed = worst < cfg.identity_tol
    _emit(cfg, {"cases": cases, "max_deviation": worst, "tolerance": cfg.identity_tol,
                "passed": passed}, out)
    if not passed:
        raise VerificationFailed


# encode / decode --------------------------------------------------------------

@cli.command("encode")
@click.option("--seq", required=True, help="Canonical natural sequence, e.g. 2,1.")
@click.pass_context
def encode(ctx, seq):
    """Prime-power code of a finite natural sequence (prints the integer)."""
    cfg = _config(ctx)
    entries = _int_list(seq, "--seq")
    code = polynomials.encode_sequence(entries)
    if cfg.fmt == "json" and cfg.out_dir is not None:
        path = _aux_path(cfg, "encode.json")
        path.write_text(_dump({"sequence": entries, "code": code, "seed": cfg.seed}))
    click.echo(str(code))


@cli.command("decode")
@click.option("--n", "code", required=True, type=click.IntRange(min=0))
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def decode(ctx, code, out):
    """Natural sequence numbered by ``code``."""
    cfg = _config(ctx)
    _emit(cfg, {"sequence": list(polynomials.decode_natural(code)), "code": code}, out)


# construct ----------------------------------------------------------------------

@cli.group(cls=_Group)
def construct():
    """Build bandlimited lattice functions."""


@construct.command("rooted-sinc")
@click.option("--roots", required=True, help="Distinct integer roots, e.g. -1,2,-3.")
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--no-pi", is_flag=True, help="Drop the pi from the denominator.")
@click.option("--range", "n_range", default=None,
              help="Integer sample range LO:HI (default: roots +/- 5).")
@click.option("--grid-csv", type=click.Path(dir_okay=False),
              help="Also write a dense t,f evaluation grid here.")
@click.option("--grid", type=int, default=2001, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def construct_rooted_sinc(ctx, roots, k, no_pi, n_range, grid_csv, grid, out):
    """Integral-valued sin(pi t)/(pi a prod(t - t_i)) with lcm-derived scale."""
    cfg = _config(ctx)
    f = functions.build_rooted_sinc(_int_list(roots, "--roots"), k, includes_pi=not no_pi)
    if n_range:
        lo, hi = (int(v) for v in _span(n_range, "--range"))
    else:
        lo, hi = min(f.roots) - 5, max(f.roots) + 5
    samples = []
    for n in range(lo, hi + 1):
        if f.includes_pi:
            v = f.value_at_integer(n)
            samples.append([n, int(v) if v.denominator == 1 else str(v)])
        else:
            samples.append([n, float(f(n))])
    t = np.linspace(lo, hi, grid)
    table = {"t": t, "f": f(t)}
    if grid_csv:
        try:
            plotting.emit_plot_csv(table, grid_csv)
        except OSError as exc:
            _fail(f"cannot write {grid_csv}: {exc.strerror}")
    _emit(cfg, {"roots": list(f.roots), "k": f.k, "inv_a": f.inv_a,
                "includes_pi": f.includes_pi, "products": list(f.products),
                "sample_values": samples}, out, table, "rooted_sinc",
          {"markers": [(n, v) for n, v in samples if isinstance(v, int)]})


# analyze --------------------------------------------------------------------------

@cli.group(cls=_Group)
def analyze():
    """Spectral analysis of quantized sequences."""


@analyze.command("spectrum")
@click.option("--in", "in_path", required=True, type=click.Path(dir_okay=False))
@click.option("--band", default="0.8:pi", show_default=True)
@click.option("--grid", type=click.IntRange(min=2), default=4096, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def analyze_spectrum(ctx, in_path, band, grid, out):
    """DTFT on a grid over [0, pi] and the energy in --band."""
    cfg = _config(ctx)
    q = _load_sequence(in_path)
    lo, hi = _band(band)
    report = spectral.band_energy_exact(q, lo, hi)
    spec = spectral.dtft(q, np.linspace(0, math.pi, grid))
    table = {"omega": spec.omegas, "re": spec.values.real, "im": spec.values.imag,
             "abs": np.abs(spec.values)}
    _emit(cfg, {"report": report.as_dict(), "grid": grid, "dc_offset": spec.dc_offset},
          out, table, "spectrum", {"title": "|X(e^iw)|"})


@analyze.command("bandwidth")
@click.option("--in", "in_path", required=True, type=click.Path(dir_okay=False))
@click.option("--epsilon", type=float, default=None,
              help="Energy threshold (default: the global --epsilon).")
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def analyze_bandwidth(ctx, in_path, epsilon, out):
    """Epsilon-energy bandwidth in rad/s."""
    cfg = _config(ctx)
    q = _load_sequence(in_path)
    est = spectral.estimate_bandwidth(q, q.spec.T, epsilon or cfg.epsilon)
    _emit(cfg, dict(est.as_dict(), omega_hat=est.omega_hat), out)


@analyze.command("bound")
@click.option("--in", "in_path", required=True, type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def analyze_bound(ctx, in_path, out):
    """Energy share above 0.8 rad/sample; exit 1 if it is not positive."""
    cfg = _config(ctx)
    q = _load_sequence(in_path)
    check = spectral.check_lower_bound(q)
    _emit(cfg, dict(check.as_dict(), continuous_bound=spectral.LOWER_BOUND / q.spec.T), out)
    if not check.verdict:
        raise VerificationFailed


@analyze.command("fourier")
@click.option("--coeffs", required=True, help="Integer coefficients n:c, e.g. -1:1,0:1,1:1.")
@click.option("--xi-o", type=float, default=1.0, show_default=True)
@click.option("--inner-fraction", type=float, default=spectral.LOWER_BOUND / math.pi)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def analyze_fourier(ctx, coeffs, xi_o, inner_fraction, out):
    """Energy of a quantized Fourier series outside the inner interval."""
    cfg = _config(ctx)
    c = _index_map(coeffs)
    report = spectral.quantized_fourier_series_check(c, xi_o, inner_fraction)
    _emit(cfg, {"outer_fraction": report.fraction, "inner_fraction": inner_fraction,
                "xi_o": xi_o, "report": report.as_dict()}, out)
    if report.fraction <= spectral.VERDICT_THRESHOLD:
        raise VerificationFailed


@analyze.command("sweep")
@click.option("--length", type=click.IntRange(1, 8), default=5, show_default=True)
@click.option("--max-code", type=click.IntRange(1, 4), default=2, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def analyze_sweep(ctx, length, max_code, out):
    """Exhaustive minimum of the band share above 0.8 over small code sequences."""
    cfg = _config(ctx)
    result = spectral.exhaustive_lower_bound_sweep(length, max_code)
    _emit(cfg, dict(result.as_dict(), length=length, max_code=max_code), out)
    if result.failures:
        raise VerificationFailed


def _index_map(text):
    out = {}
    for item in text.replace(" ", "").split(","):
        if not item:
            continue
        try:
            n, v = item.split(":")
            out[int(n)] = Fraction(v)
        except ValueError:
            _fail(f"expected n:value pairs, got {item!r}")
    return {n: float(v) for n, v in out.items()}


# simulate -------------------------------------------------------------------------

_SIGNALS = {
    "sin": lambda w, A: (lambda t: A * np.sin(w * t)),
    "cos": lambda w, A: (lambda t: A * np.cos(w * t)),
    "sinc": lambda w, A: (lambda t: A * np.sinc(w * t / math.pi)),
    "zero": lambda w, A: (lambda t: np.zeros_like(np.asarray(t, dtype=float))),
}


@cli.group(cls=_Group)
def simulate():
    """A/D conversion experiments."""


@simulate.command("adc")
@click.option("--signal", type=click.Choice(sorted(_SIGNALS) + ["rooted-sinc"]),
              default="sin", show_default=True)
@click.option("--omega", type=float, default=0.44, show_default=True, help="rad/s")
@click.option("--amplitude", type=float, default=1.0, show_default=True)
@click.option("--roots", help="Roots for --signal rooted-sinc.")
@click.option("--T", "T", type=float, default=1.0, show_default=True)
@click.option("--delta", type=float, default=0.25, show_default=True)
@click.option("--tau", type=float, default=0.0, show_default=True)
@click.option("--gamma", type=float, default=0.0, show_default=True)
@click.option("--n", "n", type=click.IntRange(min=1), default=1024, show_default=True)
@click.option("--start", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def simulate_adc(ctx, signal, omega, amplitude, roots, T, delta, tau, gamma, n, start, out):
    """Sample and quantize a test signal; writes a quantized-sequence file."""
    cfg = _config(ctx)
    spec = lattice.LatticeSpec(T, delta, tau, gamma)
    if signal == "rooted-sinc":
        if not roots:
            _fail("--signal rooted-sinc needs --roots")
        fn = functions.build_rooted_sinc(_int_list(roots, "--roots"))
    else:
        fn = _SIGNALS[signal](omega, amplitude)
    q = pipeline.ad_convert(fn, spec, range(start, start + n))
    _emit(cfg, q.to_dict(), out, None)
    path = _aux_path(cfg, "sequence.csv")
    if path is not None:
        path.write_text(q.to_csv())


@simulate.command("harmonics")
@click.option("--omega0", type=float, default=0.44, show_default=True, help="rad/s")
@click.option("--T", "T", type=float, default=1.0, show_default=True)
@click.option("--delta", type=float, default=0.4, show_default=True)
@click.option("--gamma", type=float, default=0.0, show_default=True)
@click.option("--len", "length", type=click.IntRange(min=256), default=2048,
              show_default=True)
@click.option("--threshold", type=float, default=1e-3, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def simulate_harmonics(ctx, omega0, T, delta, gamma, length, threshold, out):
    """Quantized coherent sinusoid: detected peaks and their odd-harmonic orders."""
    cfg = _config(ctx)
    spec = lattice.LatticeSpec(T, delta, 0.0, gamma)
    report = pipeline.quantized_sinusoid_experiment(omega0, spec, length, threshold)
    freqs = np.array([p[0] for p in report.detected_peaks])
    mags = np.array([p[1] for p in report.detected_peaks])
    table = {"omega": freqs, "magnitude": mags} if freqs.size else None
    _emit(cfg, report.as_dict(), out, table, "harmonics")


# plot -------------------------------------------------------------------------------

@cli.group(cls=_Group)
def plot():
    """Overlay datasets as CSV (and SVG)."""


@plot.command("overlay")
@click.option("--roots", default="-1,2,-3", show_default=True)
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--coeffs", default="-1:6,2:5,-3:1", show_default=True,
              help="Sinc-series coefficients n:a_n.")
@click.option("--span", default="-6:6", show_default=True)
@click.option("--points", type=click.IntRange(min=1), default=1201, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.pass_context
def plot_overlay(ctx, roots, k, coeffs, span, points, out):
    """Rooted sinc and a sinc series on one grid, with lattice crossings marked."""
    cfg = _config(ctx)
    lo, hi = _span(span, "--span")
    f = functions.build_rooted_sinc(_int_list(roots, "--roots"), k)
    g = functions.SincSeries(_index_map(coeffs))
    t = np.linspace(lo, hi, points) if points > 1 else np.array([lo])
    t = np.round(t, 12)
    table = {"t": t, "rooted_sinc": f(t), "sinc_series": g(t)}
    crossings = {name: plotting.lattice_crossings(t, table[name], cfg.lattice_tol)
                 for name in ("rooted_sinc", "sinc_series")}
    markers = sorted(set(crossings["rooted_sinc"]) | set(crossings["sinc_series"]))
    if cfg.out_dir is not None:
        plotting.emit_plot_csv(table, _aux_path(cfg, "overlay.csv"))
        plotting.render_svg(table, _aux_path(cfg, "overlay.svg"), markers=markers)
    _emit(cfg, {"columns": list(table), "rows": int(t.size),
                "crossings": {k_: [list(p) for p in v] for k_, v in crossings.items()}},
          out, table, "overlay_table", {"markers": markers})


def main(argv=None):
    """Run the CLI and return its exit status."""
    try:
        rv = cli.main(args=argv, prog_name="latticefn", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


run = main

if __name__ == "__main__":
    sys.exit(main())
