"""Data behind the descriptive plots: histogram, normal scores, time plot,
lagged scatter, and ACF/PAC stem charts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from .errors import DomainError, InputError
from .model import LagProfile, PacProfile
from .simulation import TimeSeries

PlotKind = Literal["histogram", "normal_scores", "time_plot", "lagged_scatter", "acf_stem", "pac_stem"]


@dataclass(frozen=True)
class PlotData:
    """Plot-ready points.

    Histograms carry ``(bin_left, bin_right, count)`` rows, every other kind
    ``(x, y)`` rows.
    """

    kind: PlotKind
    points: np.ndarray
    metadata: dict = field(default_factory=dict)


# Wichura's AS 241 (PPND16) coefficients, lowest order first.
_A = (3.3871328727963666080e0, 1.3314166789178437745e2, 1.9715909503065514427e3,
      1.3731693765509461125e4, 4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3)
_B = (1.0, 4.2313330701600911252e1, 6.8718700749205790830e2, 5.3941960214247511077e3,
      2.1213794301586595867e4, 3.9307895800092710610e4, 2.8729085735721942674e4,
      5.2264952788528545610e3)
_C = (1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
      3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4)
_D = (1.0, 2.05319162663775882187e0, 1.67638483018380384940e0, 6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
      1.05075007164441684324e-9)
_E = (6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
      2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7)
_F = (1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15)


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * x + c
    return acc


def inverse_normal_cdf(u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Standard normal quantile via a rational approximation (AS 241).

    Accurate to about 1e-16 relative; ``u`` must lie strictly inside (0, 1).
    """
    arr = np.asarray(u, dtype=np.float64)
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError("inverse_normal_cdf needs 0 < u < 1")
    q = arr - 0.5
    out = np.empty_like(arr)

    central = np.abs(q) <= 0.425
    if np.any(central):
        qc = q[central]
        r = 0.180625 - qc * qc
        out[central] = qc * _horner(_A, r) / _horner(_B, r)

    tail = ~central
    if np.any(tail):
        qt = q[tail]
        r = np.sqrt(-np.log(np.where(qt < 0, arr[tail], 0.5 - qt)))
        near = r <= 5.0
        val = np.where(
            near,
            _horner(_C, r - 1.6) / _horner(_D, r - 1.6),
            _horner(_E, r - 5.0) / _horner(_F, r - 5.0),
        )
        out[tail] = np.where(qt < 0, -val, val)

    return float(out) if out.ndim == 0 else out


def _values(series) -> np.ndarray:
    return (series if isinstance(series, TimeSeries) else TimeSeries(series)).values


def sturges_bins(n: int) -> int:
    return math.ceil(math.log2(n)) + 1


def histogram(series: TimeSeries | np.ndarray, bins: Union[int, str] = "sturges") -> PlotData:
    """Equal-width bins over [min, max]; the last bin is closed on both ends.

    A constant series yields one bin of width 1 centred on the value.
    """
    z = _values(series)
    n = len(z)
    if n < 2:
        raise InputError("histogram needs n >= 2")
    if bins == "sturges":
        nbins = sturges_bins(n)
    elif isinstance(bins, (int, np.integer)) and bins >= 1:
        nbins = int(bins)
    else:
        raise InputError(f"unknown bin rule {bins!r}")
    lo, hi = float(z.min()), float(z.max())
    if lo == hi:
        edges = np.array([lo - 0.5, lo + 0.5])
        counts = np.array([n])
    else:
        counts, edges = np.histogram(z, bins=nbins, range=(lo, hi))
    pts = np.column_stack((edges[:-1], edges[1:], counts.astype(np.float64)))
    return PlotData("histogram", pts, {"n": n, "bins": len(counts), "title": "Histogram"})


def plotting_positions(n: int) -> np.ndarray:
    i = np.arange(1, n + 1)
    return (i - 0.375) / (n + 0.25)


def normal_scores(series: TimeSeries | np.ndarray) -> PlotData:
    """(normal quantile, order statistic) pairs at Blom positions (i - 3/8)/(n + 1/4)."""
    z = _values(series)
    n = len(z)
    if n < 3:
        raise InputError("normal scores need n >= 3")
    theo = inverse_normal_cdf(plotting_positions(n))
    ordered = np.sort(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        corr = float(np.corrcoef(theo, ordered)[0, 1]) if ordered[0] != ordered[-1] else float("nan")
    return PlotData(
        "normal_scores",
        np.column_stack((theo, ordered)),
        {"n": n, "correlation": corr, "title": "Normal Scores Plot"},
    )


def lagged_scatter(series: TimeSeries | np.ndarray, k: int = 1) -> PlotData:
    z = _values(series)
    n = len(z)
    if not 1 <= k < n:
        raise InputError(f"lag must satisfy 1 <= k < n = {n}, got {k}")
    return PlotData(
        "lagged_scatter",
        np.column_stack((z[: n - k], z[k:])),
        {"n": n, "lag": k, "title": f"Lag {k} scatter"},
    )


def time_plot(series: TimeSeries | np.ndarray) -> PlotData:
    z = _values(series)
    t = np.arange(1, len(z) + 1, dtype=np.float64)
    return PlotData("time_plot", np.column_stack((t, z)), {"n": len(z), "title": "Time plot"})


def acf_stem(profile: LagProfile, z_plot: float = 1.96) -> PlotData:
    lags = np.arange(profile.max_lag + 1, dtype=np.float64)
    meta = {"n": profile.n, "title": "ACF", "gamma0": profile.gamma0}
    if profile.n:
        meta["band"] = z_plot / math.sqrt(profile.n)
    return PlotData("acf_stem", np.column_stack((lags, profile.values)), meta)


def pac_stem(profile: PacProfile) -> PlotData:
    lags = np.arange(1, profile.max_k + 1, dtype=np.float64)
    meta = {"n": profile.n, "title": "PAC"}
    if profile.band is not None:
        meta["band"] = profile.band
    return PlotData("pac_stem", np.column_stack((lags, profile.values)), meta)
