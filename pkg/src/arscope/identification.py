"""AR order identification from empirical ACF/PAC profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import InputError
from .estimation import Z_PLOT, empirical_acf, empirical_pac
from .model import LagProfile, PacProfile
from .simulation import TimeSeries

Z_ID = 3.0

# Upper chi-square critical values chi2_{1-alpha, m}, m = 1..40.
CHI2_CRITICAL = {
    0.05: (
        3.8415, 5.9915, 7.8147, 9.4877, 11.0705, 12.5916, 14.0671, 15.5073,
        16.9190, 18.3070, 19.6751, 21.0261, 22.3620, 23.6848, 24.9958, 26.2962,
        27.5871, 28.8693, 30.1435, 31.4104, 32.6706, 33.9244, 35.1725, 36.4150,
        37.6525, 38.8851, 40.1133, 41.3371, 42.5570, 43.7730, 44.9853, 46.1943,
        47.3999, 48.6024, 49.8018, 50.9985, 52.1923, 53.3835, 54.5722, 55.7585,
    ),
    0.01: (
        6.6349, 9.2103, 11.3449, 13.2767, 15.0863, 16.8119, 18.4753, 20.0902,
        21.6660, 23.2093, 24.7250, 26.2170, 27.6882, 29.1412, 30.5779, 31.9999,
        33.4087, 34.8053, 36.1909, 37.5662, 38.9322, 40.2894, 41.6384, 42.9798,
        44.3141, 45.6417, 46.9629, 48.2782, 49.5879, 50.8922, 52.1914, 53.4858,
        54.7755, 56.0609, 57.3421, 58.6192, 59.8925, 61.1621, 62.4281, 63.6907,
    ),
}

AcfClass = Literal["decaying", "persistent", "cutoff", "inconclusive"]


@dataclass(frozen=True)
class CutoffResult:
    order: int
    significant_lags: tuple[int, ...]
    band: float


@dataclass(frozen=True)
class WhitenessResult:
    q: float
    m: int
    threshold: float
    alpha: float
    passed: bool


@dataclass(frozen=True)
class IdentifyOptions:
    z_id: float = Z_ID
    z_plot: float = Z_PLOT
    alpha: float = 0.05
    m: int = 20
    band_mult: float = 2.0
    run_length: int = 5


@dataclass(frozen=True)
class IdentificationVerdict:
    order_estimate: int
    significant_lags: tuple[int, ...]
    decision_band: float
    whiteness: WhitenessResult
    acf_classification: AcfClass
    n: int
    acf: LagProfile = field(repr=False, compare=False)
    pac: PacProfile = field(repr=False, compare=False)

    @property
    def label(self) -> str:
        if self.order_estimate == 0:
            return "white noise" if self.whiteness.passed else "unidentified"
        return f"AR({self.order_estimate})"


def pac_cutoff(pac: PacProfile | np.ndarray, n: int, z_id: float = Z_ID) -> CutoffResult:
    """Largest lag whose |phi_kk| strictly exceeds z_id / sqrt(n)."""
    vals = np.asarray(pac.values if isinstance(pac, PacProfile) else pac, dtype=np.float64)
    if len(vals) == 0:
        raise InputError("PAC profile is empty")
    if n < 4:
        raise InputError("pac_cutoff needs n >= 4")
    band = z_id / math.sqrt(n)
    lags = tuple(int(k) for k in np.flatnonzero(np.abs(vals) > band) + 1)
    return CutoffResult(max(lags, default=0), lags, band)


def portmanteau_whiteness(acf: LagProfile | np.ndarray, n: int, m: int = 20, alpha: float = 0.05) -> WhitenessResult:
    """Ljung-Box Q = n(n+2) sum_{k<=m} r_k^2 / (n-k) against chi2_{1-alpha, m}."""
    r = np.asarray(acf.values if isinstance(acf, LagProfile) else acf, dtype=np.float64)
    if alpha not in CHI2_CRITICAL:
        raise InputError(f"alpha must be one of {sorted(CHI2_CRITICAL)}")
    table = CHI2_CRITICAL[alpha]
    if not 1 <= m <= len(table):
        raise InputError(f"m must lie in 1..{len(table)}, got {m}")
    if len(r) <= m:
        raise InputError(f"ACF needs lags 1..{m}")
    if n <= m:
        raise InputError("n must exceed m")
    k = np.arange(1, m + 1)
    q = float(n * (n + 2) * np.sum(r[1 : m + 1] ** 2 / (n - k)))
    threshold = table[m - 1]
    return WhitenessResult(q, m, threshold, alpha, q <= threshold)


def acf_decay_check(
    acf: LagProfile | np.ndarray, n: int, band_mult: float = 2.0, run_length: int = 5
) -> AcfClass:
    """Heuristic shape class of an empirical ACF.

    Checked in order: ``cutoff`` (lags 1..k0 outside the band and every later
    lag inside, 1 <= k0 <= 3), ``decaying`` (inside the band for
    ``run_length`` consecutive lags starting within the first
    ceil(10 + ln n) lags), ``persistent`` (outside at more than half the
    lags), else ``inconclusive``. The band is ``band_mult / sqrt(n)``.
    """
    r = np.asarray(acf.values if isinstance(acf, LagProfile) else acf, dtype=np.float64)
    lags = np.abs(r[1:])
    if len(lags) < 10:
        raise InputError("acf_decay_check needs at least 10 lags")
    band = band_mult / math.sqrt(n)
    outside = lags > band

    for k0 in range(1, 4):
        if outside[:k0].all() and not outside[k0:].any():
            return "cutoff"

    window = math.ceil(10 + math.log(n))
    for start in range(min(window, len(lags))):
        run = outside[start : start + run_length]
        if len(run) == run_length and not run.any():
            return "decaying"
    if outside.sum() > len(lags) / 2:
        return "persistent"
    return "inconclusive"


def classify(series: TimeSeries | np.ndarray, max_lag: int = 25, options: IdentifyOptions | None = None) -> IdentificationVerdict:
    opts = options or IdentifyOptions()
    ts = series if isinstance(series, TimeSeries) else TimeSeries(series)
    n = ts.n
    if n < 30:
        raise InputError("classification needs n >= 30")
    max_lag = min(max_lag, n - 1)
    acf = empirical_acf(ts, max_lag)
    pac = empirical_pac(ts, max_lag, z_plot=opts.z_plot)
    cut = pac_cutoff(pac, n, opts.z_id)
    white = portmanteau_whiteness(acf, n, min(opts.m, max_lag), opts.alpha)
    shape = acf_decay_check(acf, n, opts.band_mult, opts.run_length)
    return IdentificationVerdict(cut.order, cut.significant_lags, cut.band, white, shape, n, acf, pac)
