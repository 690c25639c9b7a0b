"""Simulate AR/ARIMA processes and look for autoregressive structure in a
sample through its empirical ACF and PAC."""

__version__ = "0.1.0"

from ._backend import NAME as backend
from .diagnostics import (
    PlotData,
    histogram,
    inverse_normal_cdf,
    lagged_scatter,
    normal_scores,
    time_plot,
)
from .errors import (
    ArscopeError,
    DataError,
    DegenerateInputError,
    DegenerateSeriesError,
    DomainError,
    IllConditionedProfileError,
    InputError,
    NumericalError,
    UnsupportedCaseError,
)
from .estimation import (
    FitResult,
    empirical_acf,
    empirical_pac,
    fit_ar,
    levinson_durbin,
    residuals,
    summary_stats,
)
from .identification import (
    IdentificationVerdict,
    IdentifyOptions,
    acf_decay_check,
    classify,
    pac_cutoff,
    portmanteau_whiteness,
)
from .model import (
    LagProfile,
    ModelSpec,
    PacProfile,
    RootAnalysis,
    acf_closed_form,
    characteristic_roots,
    is_stationary,
    theoretical_acf,
    theoretical_pac,
    yule_walker_coeffs,
)
from .simulation import (
    NoiseSpec,
    TimeSeries,
    difference,
    gaussian_white_noise,
    integrate,
    simulate_arima,
)

__all__ = [
    "backend",
    "PlotData",
    "histogram",
    "inverse_normal_cdf",
    "lagged_scatter",
    "normal_scores",
    "time_plot",
    "ArscopeError",
    "DataError",
    "DegenerateInputError",
    "DegenerateSeriesError",
    "DomainError",
    "IllConditionedProfileError",
    "InputError",
    "NumericalError",
    "UnsupportedCaseError",
    "FitResult",
    "empirical_acf",
    "empirical_pac",
    "fit_ar",
    "levinson_durbin",
    "residuals",
    "summary_stats",
    "IdentificationVerdict",
    "IdentifyOptions",
    "acf_decay_check",
    "classify",
    "pac_cutoff",
    "portmanteau_whiteness",
    "LagProfile",
    "ModelSpec",
    "PacProfile",
    "RootAnalysis",
    "acf_closed_form",
    "characteristic_roots",
    "is_stationary",
    "theoretical_acf",
    "theoretical_pac",
    "yule_walker_coeffs",
    "NoiseSpec",
    "TimeSeries",
    "difference",
    "gaussian_white_noise",
    "integrate",
    "simulate_arima",
]
