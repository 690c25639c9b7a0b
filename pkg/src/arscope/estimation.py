"""Empirical moments, autocorrelations, partial autocorrelations and AR fits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._backend import kernels
from .errors import DegenerateSeriesError, IllConditionedProfileError, InputError
from .model import LagProfile, PacProfile
from .simulation import TimeSeries

Z_PLOT = 1.96


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    variance: float
    min: float
    max: float
    n: int


@dataclass(frozen=True)
class LevinsonResult:
    """Row ``k - 1`` of ``table`` holds phi_k1..phi_kk (zero padded).

    ``variances[k]`` is the order-k prediction variance in profile units
    (lag-0 value 1), so multiply by gamma0 for an innovation variance.
    """

    table: np.ndarray
    pac: np.ndarray
    variances: np.ndarray

    def coefficients(self, k: int) -> np.ndarray:
        return self.table[k - 1, :k].copy()


@dataclass(frozen=True)
class FitResult:
    phi_hat: np.ndarray
    sigma2_hat: float
    p: int
    residuals: Optional[TimeSeries]
    sample_mean: float
    gamma0_hat: float


def _as_series(series) -> TimeSeries:
    return series if isinstance(series, TimeSeries) else TimeSeries(series)


def summary_stats(series: TimeSeries | Sequence[float]) -> SummaryStats:
    z = _as_series(series).values
    if len(z) < 2:
        raise InputError("summary statistics need n >= 2")
    mean = float(np.mean(z))
    var = float(np.mean((z - mean) ** 2))
    return SummaryStats(mean, var, float(z.min()), float(z.max()), len(z))


def empirical_acf(series: TimeSeries | Sequence[float], max_lag: int) -> LagProfile:
    """Sample autocorrelations r_0..r_max_lag.

    Both sums use the full-sample mean, and the denominator always runs over
    all n terms, so the profile is positive semidefinite and ``|r_k| <= 1``.
    Lags above n/4 are computed but marked through ``unreliable_from``.
    """
    z = _as_series(series).values
    n = len(z)
    if n < 2:
        raise InputError("empirical ACF needs n >= 2")
    if not 0 <= max_lag <= n - 1:
        raise InputError(f"max_lag must lie in [0, {n - 1}], got {max_lag}")
    dev = z - np.mean(z)
    sums = kernels.lag_products(np.ascontiguousarray(dev), int(max_lag))
    denom = sums[0]
    if not denom > 0.0:
        raise DegenerateSeriesError("series is constant; autocorrelations are undefined")
    r = np.clip(sums / denom, -1.0, 1.0)
    r[0] = 1.0
    limit = n // 4
    return LagProfile(
        r,
        float(denom / n),
        "empirical",
        n=n,
        unreliable_from=limit + 1 if max_lag > limit else None,
    )


def levinson_durbin(profile: LagProfile | Sequence[float], max_k: int) -> LevinsonResult:
    """Solve the Toeplitz systems of orders 1..max_k in one order recursion."""
    r = np.ascontiguousarray(profile.values if isinstance(profile, LagProfile) else profile, dtype=np.float64)
    if len(r) == 0 or r[0] != 1.0:
        raise InputError("profile must start with values[0] = 1")
    if max_k < 1 or len(r) <= max_k:
        raise InputError(f"need max_k >= 1 and lags 0..{max_k}; profile has {len(r) - 1}")
    table, var, bad = kernels.levinson(r, int(max_k))
    if bad:
        raise IllConditionedProfileError(
            f"prediction variance is not positive at order {bad}; profile is not positive definite",
            order=bad,
        )
    return LevinsonResult(table, np.diag(table).copy(), var)


def empirical_pac(series: TimeSeries | Sequence[float], max_k: int, z_plot: float = Z_PLOT) -> PacProfile:
    ts = _as_series(series)
    n = ts.n
    if not 1 <= max_k < n:
        raise InputError(f"need 1 <= max_k < n, got max_k={max_k}, n={n}")
    acf = empirical_acf(ts, max_k)
    lev = levinson_durbin(acf, max_k)
    return PacProfile(lev.pac, band=z_plot / np.sqrt(n), kind="empirical", n=n, table=lev.table)


def fit_ar(data: TimeSeries | LagProfile | Sequence[float], p: int) -> FitResult:
    """Yule-Walker AR(p) fit.

    ``data`` is normally a series. A :class:`LagProfile` is accepted too, in
    which case the fit runs on that profile and no residuals are produced.
    """
    if p < 0:
        raise InputError("order must be >= 0")
    if isinstance(data, LagProfile):
        acf, ts, mean = data, None, 0.0
        if acf.max_lag < p:
            raise InputError(f"profile needs lags 0..{p}")
    else:
        ts = _as_series(data)
        if ts.n <= 4 * p:
            raise InputError(f"AR({p}) fit needs n > {4 * p}, got n = {ts.n}")
        acf = empirical_acf(ts, p)
        mean = float(np.mean(ts.values))

    gamma0 = acf.gamma0
    if p == 0:
        phi = np.zeros(0)
        sigma2 = gamma0
    else:
        phi = levinson_durbin(acf, p).coefficients(p)
        sigma2 = max(0.0, gamma0 * (1.0 - float(np.dot(phi, acf.values[1 : p + 1]))))
    resid = residuals(ts, phi, mean) if ts is not None else None
    return FitResult(phi, sigma2, p, resid, mean, gamma0)


def residuals(series: TimeSeries | Sequence[float], phi: Sequence[float], mean: float = 0.0) -> TimeSeries:
    """(z_t - mean) - sum_i phi_i (z_{t-i} - mean) for t = p+1..n."""
    z = _as_series(series).values
    coeffs = np.ascontiguousarray(phi, dtype=np.float64)
    p = len(coeffs)
    if len(z) <= p:
        raise InputError(f"residuals need n > p, got n = {len(z)}, p = {p}")
    x = z - mean
    return TimeSeries(kernels.ar_residuals(np.ascontiguousarray(x), coeffs))
