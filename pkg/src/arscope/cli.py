"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical or domain
error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .diagnostics import histogram, lagged_scatter, normal_scores, time_plot
from .errors import ArscopeError, DataError, InputError
from .estimation import Z_PLOT, empirical_acf, empirical_pac, fit_ar, summary_stats
from .identification import Z_ID, IdentifyOptions, classify
from .io import dumps, fmt, read_series, to_tsv, write_json, write_profile, write_series
from .model import ModelSpec
from .simulation import DEFAULT_BURN_IN, NoiseSpec, simulate_arima

PAPER_PHI = (0.25, 0.5)
PAPER_N = 500


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _floats(text: str) -> tuple[float, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _formats(choice: str) -> tuple[str, ...]:
    return ("tsv", "svg", "json") if choice == "all" else (choice,)


def _add_series_input(p):
    p.add_argument("file", help="series file (plain: one value per line; csv with --column)")
    p.add_argument("--column", help="CSV column name or zero-based index")
    p.add_argument("--input-format", choices=("plain", "csv"), help="override format detection")


def _add_analysis(p):
    p.add_argument("--max-lag", type=int, default=25)
    p.add_argument("--z-id", type=float, default=Z_ID, help="identification band multiplier")
    p.add_argument("--z-plot", type=float, default=Z_PLOT, help="band drawn on ACF/PAC plots")
    p.add_argument("--alpha", type=float, default=0.05, choices=(0.05, 0.01))


def _add_output(p, default_format="all"):
    p.add_argument("-o", "--out", help="output directory (default: results to stdout)")
    p.add_argument("--format", choices=("tsv", "svg", "json", "all"), default=default_format)


def _add_model(p):
    p.add_argument("--phi", type=_floats, default=(), help="AR coefficients, e.g. 0.25,0.5")
    p.add_argument("--theta", type=_floats, default=(), help="MA coefficients")
    p.add_argument("--theta0", type=float, default=0.0)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--n", type=int, default=PAPER_N)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="arscope", description="AR process simulation and ACF/PAC structure diagnostics")
    ap.add_argument("--version", action="version", version=f"arscope {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", help="simulate an ARIMA(p,d,q) series")
    _add_model(p)
    p.add_argument("-o", "--out", help="series file (default: stdout)")

    for name, helptext in (("acf", "empirical autocorrelations"), ("pac", "empirical partial autocorrelations")):
        p = sub.add_parser(name, help=helptext)
        _add_series_input(p)
        _add_analysis(p)
        _add_output(p)

    p = sub.add_parser("fit", help="Yule-Walker AR(p) fit")
    _add_series_input(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("-o", "--out", help="directory for fit.json and residuals.txt")

    p = sub.add_parser("identify", help="white noise / AR(p) verdict")
    _add_series_input(p)
    _add_analysis(p)
    p.add_argument("-o", "--out", help="directory for verdict.json")

    p = sub.add_parser("diagnose", help="histogram, normal scores, time plot, lagged scatter")
    _add_series_input(p)
    p.add_argument("--lags", type=lambda s: tuple(int(v) for v in s.split(",")), default=(1, 2))
    p.add_argument("--bins", type=int, help="histogram bins (default: Sturges)")
    _add_output(p)

    p = sub.add_parser("reproduce-paper", help="AR(2) experiment: phi = (0.25, 0.5), n = 500")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=PAPER_N)
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN)
    _add_analysis(p)
    p.add_argument("-o", "--out", default="paper-run", help="output directory")
    return ap


def _load(args):
    return read_series(args.file, format=args.input_format, column=args.column)


def _outdir(path) -> Path:
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create {out}: {exc.strerror}") from None
    return out


def _emit(obj, args, stem: str, z_plot: float = Z_PLOT) -> None:
    if args.out is None:
        sys.stdout.write(to_tsv(obj))
        return
    out = _outdir(args.out)
    for f in _formats(args.format):
        write_profile(obj, out / f"{stem}.{f}", f, z_plot=z_plot)


def fit_summary(fit, n: int) -> dict:
    resid_var = float(np.var(fit.residuals.values)) if fit.residuals is not None and fit.residuals.n else None
    return {
        "order": fit.p,
        "phi_hat": [float(v) for v in fit.phi_hat],
        "sigma2_hat": fit.sigma2_hat,
        "sample_mean": fit.sample_mean,
        "gamma0_hat": fit.gamma0_hat,
        "n": n,
        "residual_variance": resid_var,
    }


def verdict_summary(v) -> dict:
    return {
        "verdict": v.label,
        "order_estimate": v.order_estimate,
        "significant_lags": list(v.significant_lags),
        "decision_band": v.decision_band,
        "q_statistic": v.whiteness.q,
        "q_lags": v.whiteness.m,
        "q_threshold": v.whiteness.threshold,
        "alpha": v.whiteness.alpha,
        "whiteness_pass": v.whiteness.passed,
        "acf_classification": v.acf_classification,
        "n": v.n,
    }


def _options(args) -> IdentifyOptions:
    return IdentifyOptions(z_id=args.z_id, z_plot=args.z_plot, alpha=args.alpha)


def cmd_simulate(args) -> None:
    model = ModelSpec(phi=args.phi, theta=args.theta, theta0=args.theta0, d=args.d, mu=args.mu)
    series = simulate_arima(model, NoiseSpec(args.seed, args.n, args.sigma), args.burn_in)
    header = {
        "seed": args.seed,
        "n": args.n,
        "phi": ",".join(map(repr, args.phi)),
        "theta": ",".join(map(repr, args.theta)),
        "theta0": args.theta0,
        "d": args.d,
        "mu": args.mu,
        "sigma": args.sigma,
        "burn_in": args.burn_in,
    }
    if args.out:
        write_series(series, args.out, header)
    else:
        sys.stdout.write("".join(f"{fmt(v)}\n" for v in series.values))


def cmd_acf(args) -> None:
    series = _load(args)
    _emit(empirical_acf(series, min(args.max_lag, series.n - 1)), args, "acf", args.z_plot)


def cmd_pac(args) -> None:
    series = _load(args)
    _emit(empirical_pac(series, min(args.max_lag, series.n - 1), z_plot=args.z_plot), args, "pac")


def cmd_fit(args) -> None:
    series = _load(args)
    fit = fit_ar(series, args.order)
    summary = fit_summary(fit, series.n)
    sys.stdout.write(dumps(summary))
    if args.out:
        out = _outdir(args.out)
        write_json(summary, out / "fit.json")
        write_series(fit.residuals, out / "residuals.txt", {"order": fit.p})


def cmd_identify(args) -> None:
    verdict = classify(_load(args), args.max_lag, _options(args))
    summary = verdict_summary(verdict)
    sys.stdout.write(dumps(summary))
    if args.out:
        write_json(summary, _outdir(args.out) / "verdict.json")


def cmd_diagnose(args) -> None:
    series = _load(args)
    plots = {
        "histogram": histogram(series, args.bins if args.bins else "sturges"),
        "normal_scores": normal_scores(series),
        "time_plot": time_plot(series),
    }
    for k in args.lags:
        plots[f"lagged_scatter_{k}"] = lagged_scatter(series, k)
    st = summary_stats(series)
    summary = {
        "n": st.n,
        "mean": st.mean,
        "variance": st.variance,
        "min": st.min,
        "max": st.max,
        "normal_scores_correlation": plots["normal_scores"].metadata["correlation"],
    }
    if args.out is None:
        sys.stdout.write(dumps(summary))
        return
    out = _outdir(args.out)
    for stem, plot in plots.items():
        for f in _formats(args.format):
            if f != "json":
                write_profile(plot, out / f"{stem}.{f}", f)
    write_json(summary, out / "summary.json")


def cmd_reproduce(args) -> None:
    out = _outdir(args.out)
    series = simulate_arima(ModelSpec(phi=PAPER_PHI), NoiseSpec(args.seed, args.n, 1.0), args.burn_in)
    write_series(series, out / "series.txt", {"seed": args.seed, "n": args.n, "phi": "0.25,0.5", "sigma": 1.0})
    max_lag = min(args.max_lag, series.n - 1)
    acf = empirical_acf(series, max_lag)
    pac = empirical_pac(series, max_lag, z_plot=args.z_plot)
    fit = fit_ar(series, 2)
    verdict = classify(series, max_lag, _options(args))
    for stem, obj in (
        ("histogram", histogram(series)),
        ("normal_scores", normal_scores(series)),
        ("acf", acf),
        ("pac", pac),
    ):
        for f in ("tsv", "svg"):
            write_profile(obj, out / f"{stem}.{f}", f, z_plot=args.z_plot)
    fit_json = fit_summary(fit, series.n)
    write_json(fit_json, out / "fit.json")
    write_json(verdict_summary(verdict), out / "verdict.json")
    phi = ", ".join(f"{v:.3f}" for v in fit.phi_hat)
    sys.stdout.write(f"fitted AR(2): ({phi})  true: (0.250, 0.500)  verdict: {verdict.label}\n")


COMMANDS = {
    "simulate": cmd_simulate,
    "acf": cmd_acf,
    "pac": cmd_pac,
    "fit": cmd_fit,
    "identify": cmd_identify,
    "diagnose": cmd_diagnose,
    "reproduce-paper": cmd_reproduce,
}


def _error(message: str) -> None:
    use_color = sys.stderr.isatty() and "NO_COLOR" not in os.environ
    prefix = "\033[31merror:\033[0m" if use_color else "error:"
    print(f"{prefix} {message}", file=sys.stderr)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _error(str(exc))
        return 1
    try:
        COMMANDS[args.command](args)
    except InputError as exc:
        _error(str(exc))
        return 1
    except ArscopeError as exc:
        _error(str(exc))
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
