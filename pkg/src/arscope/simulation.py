"""Seeded Gaussian white noise and ARIMA(p, d, q) sample paths.

Normal variates come from numpy's ``Generator(PCG64(seed)).standard_normal``
(ziggurat method), scaled by sigma. For a fixed numpy build the output is a
pure function of ``(seed, n, sigma)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._backend import kernels
from .errors import DomainError, InputError, NumericalError
from .model import ROOT_EPS, ModelSpec, characteristic_roots

DEFAULT_BURN_IN = 1000


@dataclass(frozen=True)
class TimeSeries:
    values: np.ndarray
    aligned_noise: Optional[np.ndarray] = None

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or len(vals) < 1:
            raise InputError("a time series needs at least one value")
        if not np.all(np.isfinite(vals)):
            raise InputError("time series values must be finite")
        object.__setattr__(self, "values", vals)
        if self.aligned_noise is not None:
            noise = np.ascontiguousarray(self.aligned_noise, dtype=np.float64)
            if noise.shape != vals.shape:
                raise InputError("aligned_noise must have the same length as values")
            object.__setattr__(self, "aligned_noise", noise)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class NoiseSpec:
    seed: int
    n: int
    sigma: float = 1.0

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2**64:
            raise InputError("seed must be a 64-bit unsigned integer")
        if int(self.n) != self.n or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n}")
        if not (math.isfinite(self.sigma) and self.sigma >= 0):
            raise InputError(f"sigma must be finite and >= 0, got {self.sigma}")


def _draw(seed: int, n: int, sigma: float) -> np.ndarray:
    if sigma == 0:
        return np.zeros(n)
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    return rng.standard_normal(n) * sigma


def gaussian_white_noise(spec: NoiseSpec) -> TimeSeries:
    vals = _draw(spec.seed, spec.n, spec.sigma)
    return TimeSeries(vals, aligned_noise=vals.copy())


def simulate_arima(model: ModelSpec, noise: NoiseSpec, burn_in: int = DEFAULT_BURN_IN) -> TimeSeries:
    """Generate ``noise.n`` observations of an ARIMA(p, d, q) process.

    The ARMA part runs from zero pre-sample values over ``burn_in + n``
    innovations; the first ``burn_in`` values are dropped, the rest is summed
    ``d`` times from zero and shifted by ``mu``. ``model.sigma2`` is ignored in
    favour of ``noise.sigma``.

    ``aligned_noise`` holds the innovations of the retained window. For a pure
    AR model (q = 0, theta0 = 0) they are the innovations as realized in
    floating point: position t >= d + p holds ``x_t - sum_i phi_i x_{t-i}``
    where ``x`` is the output with ``mu`` removed and differenced d times, so
    :func:`arscope.estimation.residuals` reproduces them bit for bit. They
    differ from the raw normal draws by rounding only. For models with an MA
    part or drift the raw draws are returned. No invertibility check is made
    on theta.
    """
    if int(burn_in) != burn_in or burn_in < 0:
        raise InputError("burn_in must be a nonnegative integer")
    ra = characteristic_roots(model.phi)
    if not ra.stationary:
        raise DomainError(
            f"AR part is not stationary: max root modulus {ra.moduli[0]:.10g} >= 1 - {ROOT_EPS:g}"
        )
    total = burn_in + noise.n
    a = _draw(noise.seed, total, noise.sigma)
    phi = np.array(model.phi, dtype=np.float64)

    with np.errstate(over="ignore", invalid="ignore"):
        eps = a
        if model.theta0 != 0.0 or model.q:
            eps = model.theta0 + a
            for j, th in enumerate(model.theta, start=1):
                eps[j:] -= th * a[:-j]
        w, realized = kernels.ar_filter(np.ascontiguousarray(eps), phi)
        _check_finite(w, "recursion step")

        vals = w[burn_in:]
        for _ in range(model.d):
            vals = np.cumsum(vals)
        if model.mu != 0.0:
            vals = vals + model.mu
    _check_finite(vals, "output index")

    if model.q or model.theta0 != 0.0:
        return TimeSeries(vals, aligned_noise=a[burn_in:].copy())
    innov = realized[burn_in:].copy()
    head = model.d + model.p
    if noise.n > head:
        x = vals - model.mu if model.mu != 0.0 else vals
        if model.d:
            x = np.diff(x, n=model.d)
        innov[head:] = kernels.ar_residuals(np.ascontiguousarray(x), phi)
    return TimeSeries(vals, aligned_noise=innov)


def _check_finite(x: np.ndarray, where: str) -> None:
    bad = np.flatnonzero(~np.isfinite(x))
    if len(bad):
        raise NumericalError(f"non-finite value in simulated path at {where} {bad[0]}")


def difference(series: TimeSeries | Sequence[float], d: int = 1) -> TimeSeries:
    """Apply ``1 - B`` d times; the result is d values shorter."""
    vals = _values(series)
    if d < 0:
        raise InputError("d must be >= 0")
    if d == 0:
        return series if isinstance(series, TimeSeries) else TimeSeries(vals)
    if len(vals) <= d:
        raise InputError(f"cannot difference {len(vals)} values {d} times")
    return TimeSeries(np.diff(vals, n=d))


def integrate(series: TimeSeries | Sequence[float], d: int = 1) -> TimeSeries:
    """Cumulative sum applied d times with zero starting values."""
    vals = _values(series)
    if d < 0:
        raise InputError("d must be >= 0")
    for _ in range(d):
        vals = np.cumsum(vals)
    return TimeSeries(vals)


def _values(series) -> np.ndarray:
    if isinstance(series, TimeSeries):
        return series.values
    return TimeSeries(series).values
