"""Analytic properties of AR(p) processes.

Characteristic roots and stationarity, the theoretical autocorrelation
function (by recursion and by the root expansion), the theoretical partial
autocorrelations, and the Yule-Walker map from autocorrelations back to
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

import numpy as np

from .errors import (
    DegenerateInputError,
    DomainError,
    InputError,
    NumericalError,
    UnsupportedCaseError,
)

ROOT_EPS = 1e-8
DISTINCT_ROOT_TOL = 1e-6
_NEWTON_MAX_ITER = 50
_COND_LIMIT = 1e12


@dataclass(frozen=True)
class ModelSpec:
    """ARIMA(p, d, q) parameters.

    ``phi`` and ``theta`` use the sign convention
    ``Phi(B) = 1 - phi_1 B - ...`` and ``Theta(B) = 1 - theta_1 B - ...``.
    """

    phi: tuple[float, ...] = ()
    theta: tuple[float, ...] = ()
    theta0: float = 0.0
    d: int = 0
    sigma2: float = 1.0
    mu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "phi", _as_coeffs(self.phi, "phi"))
        object.__setattr__(self, "theta", _as_coeffs(self.theta, "theta"))
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0):
            raise InputError(f"sigma2 must be finite and > 0, got {self.sigma2}")
        if int(self.d) != self.d or self.d < 0:
            raise InputError(f"d must be a nonnegative integer, got {self.d}")
        for name in ("theta0", "mu"):
            if not math.isfinite(getattr(self, name)):
                raise InputError(f"{name} must be finite")

    @property
    def p(self) -> int:
        return len(self.phi)

    @property
    def q(self) -> int:
        return len(self.theta)


@dataclass(frozen=True)
class RootAnalysis:
    roots: np.ndarray
    moduli: np.ndarray
    stationary: bool
    margin: float


@dataclass(frozen=True)
class LagProfile:
    """Correlations indexed by lag 0..K.

    ``values[0]`` is exactly 1. ``gamma0`` is the lag-0 autocovariance, so
    ``gamma(k) = values[k] * gamma0``. ``unreliable_from`` is the first lag
    above n/4 for empirical profiles that extend that far.
    """

    values: np.ndarray
    gamma0: float
    kind: Literal["theoretical", "empirical"] = "theoretical"
    n: Optional[int] = None
    unreliable_from: Optional[int] = None

    @property
    def max_lag(self) -> int:
        return len(self.values) - 1

    def autocovariances(self) -> np.ndarray:
        return self.values * self.gamma0


@dataclass(frozen=True)
class PacProfile:
    """Partial autocorrelations; ``values[k - 1]`` holds phi_kk."""

    values: np.ndarray
    band: Optional[float] = None
    kind: Literal["theoretical", "empirical"] = "theoretical"
    n: Optional[int] = None
    table: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def max_k(self) -> int:
        return len(self.values)


def _as_coeffs(values, name="phi") -> tuple[float, ...]:
    out = tuple(float(v) for v in values)
    if not all(math.isfinite(v) for v in out):
        raise InputError(f"{name} coefficients must be finite: {out}")
    return out


def _poly(phi: np.ndarray) -> np.ndarray:
    # G^p - phi_1 G^(p-1) - ... - phi_p, highest power first
    return np.concatenate(([1.0], -phi))


def characteristic_roots(phi: Sequence[float]) -> RootAnalysis:
    """Roots of ``G^p - phi_1 G^(p-1) - ... - phi_p = 0``.

    Companion-matrix eigenvalues give the starting points; each root is then
    polished with Newton steps. Roots come back sorted by descending modulus.
    """
    coeffs = np.array(_as_coeffs(phi), dtype=np.float64)
    p = len(coeffs)
    if p == 0:
        empty = np.zeros(0, dtype=np.complex128)
        return RootAnalysis(empty, np.zeros(0), True, 1.0)

    poly = _poly(coeffs)
    tol = 1e-8 * max(1.0, float(np.linalg.norm(coeffs)))
    roots = np.roots(poly).astype(np.complex128)
    dpoly = np.polyder(poly)
    polished = []
    for g in roots:
        for _ in range(_NEWTON_MAX_ITER):
            f = np.polyval(poly, g)
            if abs(f) <= 1e-3 * tol:
                break
            df = np.polyval(dpoly, g)
            if df == 0:
                break
            step = f / df
            g_new = g - step
            if abs(np.polyval(poly, g_new)) >= abs(f):
                break
            g = g_new
        polished.append(g)
    roots = np.array(polished, dtype=np.complex128)
    # snap conjugate-pair noise on real roots so real inputs give real roots
    roots = np.where(np.abs(roots.imag) <= 1e-14 * np.maximum(1.0, np.abs(roots)), roots.real + 0j, roots)

    residuals = np.abs(np.polyval(poly, roots))
    if np.any(residuals > tol):
        raise NumericalError(f"root polishing failed, max residual {residuals.max():.3g}")

    order = sorted(range(p), key=lambda i: (-abs(roots[i]), -roots[i].real, -roots[i].imag))
    roots = roots[order]
    moduli = np.abs(roots)
    top = float(moduli[0])
    return RootAnalysis(roots, moduli, top < 1.0 - ROOT_EPS, 1.0 - top)


def is_stationary(phi: Sequence[float]) -> bool:
    return characteristic_roots(phi).stationary


def _require_stationary(phi: Sequence[float]) -> RootAnalysis:
    ra = characteristic_roots(phi)
    if not ra.stationary:
        raise DomainError(
            f"AR part is not stationary: max root modulus {ra.moduli[0]:.10g} >= 1 - {ROOT_EPS:g}"
        )
    return ra


def _spec_phi(spec) -> tuple[float, ...]:
    if isinstance(spec, ModelSpec):
        if spec.q or spec.d:
            raise InputError("theoretical ACF is only defined here for q = 0, d = 0")
        return spec.phi
    return _as_coeffs(spec)


def theoretical_acf(spec: ModelSpec | Sequence[float], max_lag: int, sigma2: float = 1.0) -> LagProfile:
    """rho(0..max_lag) of a stationary AR(p).

    rho(1..p) solve the linear system obtained from the recursion
    ``rho(k) = sum_i phi_i rho(|k - i|)`` for k = 1..p; higher lags follow the
    recursion itself. ``spec`` may be a :class:`ModelSpec` or a bare
    coefficient list (then ``sigma2`` supplies the noise variance).
    """
    phi = np.array(_spec_phi(spec))
    if isinstance(spec, ModelSpec):
        sigma2 = spec.sigma2
    if max_lag < 0:
        raise InputError("max_lag must be >= 0")
    _require_stationary(phi)
    p = len(phi)

    head = np.zeros(p)
    if p:
        a = np.eye(p)
        b = np.zeros(p)
        for k in range(1, p + 1):
            for i in range(1, p + 1):
                j = abs(k - i)
                if j == 0:
                    b[k - 1] += phi[i - 1]
                else:
                    a[k - 1, j - 1] -= phi[i - 1]
        try:
            head = np.linalg.solve(a, b)
        except np.linalg.LinAlgError as exc:
            raise NumericalError(f"singular ACF system: {exc}") from None

    size = max(max_lag, p) + 1
    rho = np.zeros(size)
    rho[0] = 1.0
    rho[1 : p + 1] = head
    for k in range(p + 1, size):
        rho[k] = float(np.dot(phi, rho[k - p : k][::-1]))
    gamma0 = sigma2 / (1.0 - float(np.dot(phi, rho[1 : p + 1])))
    return LagProfile(rho[: max_lag + 1].copy(), gamma0, "theoretical")


@dataclass(frozen=True)
class ClosedFormAcf:
    profile: LagProfile
    roots: np.ndarray
    constants: np.ndarray


def acf_closed_form(phi: Sequence[float], max_lag: int) -> ClosedFormAcf:
    """rho(k) = sum_i C_i G_i^k over the characteristic roots.

    The constants are fitted to rho(0..p-1) from :func:`theoretical_acf`.
    Only distinct roots are supported; a repeated root raises
    :class:`UnsupportedCaseError`.
    """
    phi = _as_coeffs(phi)
    ra = _require_stationary(phi)
    p = len(phi)
    if max_lag < 0:
        raise InputError("max_lag must be >= 0")
    if p == 0:
        vals = np.zeros(max_lag + 1)
        vals[0] = 1.0
        return ClosedFormAcf(LagProfile(vals, 1.0), ra.roots, np.zeros(0, dtype=complex))

    g = ra.roots
    for i in range(p):
        for j in range(i + 1, p):
            if abs(g[i] - g[j]) <= DISTINCT_ROOT_TOL:
                raise UnsupportedCaseError(
                    f"repeated characteristic root near {g[i]:.6g}; closed form needs distinct roots"
                )
    base = theoretical_acf(phi, max(p - 1, 0))
    vander = np.vander(g, p, increasing=True).T  # row k: G_i^k
    consts = np.linalg.solve(vander, base.values[:p].astype(complex))
    powers = g[np.newaxis, :] ** np.arange(max_lag + 1)[:, np.newaxis]
    vals = powers @ consts
    if np.max(np.abs(vals.imag)) > 1e-8:
        raise NumericalError(f"closed-form ACF has imaginary residue {np.max(np.abs(vals.imag)):.3g}")
    out = vals.real.copy()
    out[0] = 1.0
    return ClosedFormAcf(LagProfile(out, base.gamma0, "theoretical"), g, consts)


def _toeplitz(r: np.ndarray, k: int) -> np.ndarray:
    idx = np.abs(np.subtract.outer(np.arange(k), np.arange(k)))
    return r[idx]


def _profile_values(rho) -> np.ndarray:
    vals = np.asarray(rho.values if isinstance(rho, LagProfile) else rho, dtype=np.float64)
    if len(vals) == 0 or vals[0] != 1.0:
        raise InputError("profile must start with values[0] = 1")
    return vals


def theoretical_pac(rho: LagProfile | Sequence[float], max_k: int) -> PacProfile:
    """phi_kk for k = 1..max_k, each from its own dense k x k solve."""
    r = _profile_values(rho)
    if max_k < 1 or len(r) <= max_k:
        raise InputError(f"need lags 0..{max_k}, profile has {len(r) - 1}")
    pac = np.zeros(max_k)
    for k in range(1, max_k + 1):
        mat = _toeplitz(r, k)
        try:
            sol = np.linalg.solve(mat, r[1 : k + 1])
        except np.linalg.LinAlgError:
            raise NumericalError(f"singular PAC system at order {k}") from None
        pac[k - 1] = sol[-1]
    return PacProfile(pac, kind="theoretical")


def yule_walker_coeffs(rho: LagProfile | Sequence[float], p: int) -> np.ndarray:
    """Solve the order-p Yule-Walker system for phi_1..phi_p."""
    r = _profile_values(rho)
    if p < 1 or len(r) <= p:
        raise InputError(f"need p >= 1 and lags 0..{p}")
    mat = _toeplitz(r, p)
    if np.linalg.cond(mat) > _COND_LIMIT:
        raise DegenerateInputError(f"Yule-Walker matrix of order {p} is singular")
    return np.linalg.solve(mat, r[1 : p + 1])
