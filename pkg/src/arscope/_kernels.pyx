# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. ``_pykernels`` mirrors every function here."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def ar_filter(const double[::1] eps, const double[::1] phi):
    """Run w_t = sum_i phi_i w_{t-i} + eps_t from zero pre-sample values.

    Returns ``(w, realized)`` where ``realized[t] = w[t] - s_t`` is the
    innovation as it exists in floating point.
    """
    cdef Py_ssize_t n = eps.shape[0], p = phi.shape[0]
    cdef Py_ssize_t t, i
    cdef double s
    w_arr = np.zeros(n, dtype=np.float64)
    real_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] w = w_arr
    cdef double[::1] real = real_arr
    for t in range(n):
        s = 0.0
        for i in range(p):
            if t - 1 - i < 0:
                break
            s = s + phi[i] * w[t - 1 - i]
        w[t] = s + eps[t]
        real[t] = w[t] - s
    return w_arr, real_arr


def ar_residuals(const double[::1] x, const double[::1] phi):
    """x_t - sum_i phi_i x_{t-i} for t = p..n-1 (0-based)."""
    cdef Py_ssize_t n = x.shape[0], p = phi.shape[0]
    cdef Py_ssize_t t, i
    cdef double s
    out_arr = np.empty(n - p, dtype=np.float64)
    cdef double[::1] out = out_arr
    for t in range(p, n):
        s = 0.0
        for i in range(p):
            s = s + phi[i] * x[t - 1 - i]
        out[t - p] = x[t] - s
    return out_arr


def lag_products(const double[::1] d, Py_ssize_t max_lag):
    """c_k = sum_{t} d_t d_{t+k} for k = 0..max_lag."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t k, t
    cdef double acc
    out_arr = np.zeros(max_lag + 1, dtype=np.float64)
    cdef double[::1] out = out_arr
    for k in range(max_lag + 1):
        acc = 0.0
        for t in range(n - k):
            acc = acc + d[t] * d[t + k]
        out[k] = acc
    return out_arr


def levinson(const double[::1] r, Py_ssize_t max_k):
    """Order recursion for the Toeplitz systems built from r_0..r_max_k.

    Returns ``(table, variances, bad_order)``; ``bad_order`` is 0 on success,
    otherwise the first order whose prediction variance is not positive.
    """
    table_arr = np.zeros((max_k, max_k), dtype=np.float64)
    var_arr = np.zeros(max_k + 1, dtype=np.float64)
    cdef double[:, ::1] a = table_arr
    cdef double[::1] v = var_arr
    cdef Py_ssize_t k, j
    cdef double num, kk

    v[0] = r[0]
    for k in range(1, max_k + 1):
        if not v[k - 1] > 0.0:
            return table_arr, var_arr, k
        num = r[k]
        for j in range(1, k):
            num = num - a[k - 2, j - 1] * r[k - j]
        kk = num / v[k - 1]
        a[k - 1, k - 1] = kk
        for j in range(1, k):
            a[k - 1, j - 1] = a[k - 2, j - 1] - kk * a[k - 2, k - 1 - j]
        v[k] = v[k - 1] * (1.0 - kk * kk)
    if v[max_k] < 0.0:
        return table_arr, var_arr, max_k
    return table_arr, var_arr, 0
