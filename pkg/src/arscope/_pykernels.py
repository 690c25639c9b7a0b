"""Pure-Python fallback for the compiled ``_kernels`` extension.

Recursions accumulate in the same order as the C loops, so ``ar_filter`` and
``ar_residuals`` agree bit-for-bit with the compiled versions. ``lag_products``
and ``levinson`` lean on numpy dot products and agree to rounding only.
"""

import numpy as np


def ar_filter(eps, phi):
    eps = np.ascontiguousarray(eps, dtype=np.float64)
    coeffs = [float(c) for c in phi]
    p = len(coeffs)
    w = [0.0] * len(eps)
    real = [0.0] * len(eps)
    for t, e in enumerate(eps.tolist()):
        s = 0.0
        for i in range(min(p, t)):
            s = s + coeffs[i] * w[t - 1 - i]
        w[t] = s + e
        real[t] = w[t] - s
    return np.array(w, dtype=np.float64), np.array(real, dtype=np.float64)


def ar_residuals(x, phi):
    x = np.ascontiguousarray(x, dtype=np.float64)
    p = len(phi)
    n = len(x)
    s = np.zeros(n - p)
    # one ufunc per term keeps the scalar accumulation order
    for i in range(p):
        s = s + float(phi[i]) * x[p - 1 - i : n - 1 - i]
    return x[p:] - s


def lag_products(d, max_lag):
    d = np.ascontiguousarray(d, dtype=np.float64)
    n = len(d)
    return np.array([np.dot(d[: n - k], d[k:]) for k in range(max_lag + 1)])


def levinson(r, max_k):
    r = np.asarray(r, dtype=np.float64)
    a = np.zeros((max_k, max_k))
    v = np.zeros(max_k + 1)
    v[0] = r[0]
    for k in range(1, max_k + 1):
        if not v[k - 1] > 0.0:
            return a, v, k
        prev = a[k - 2, : k - 1] if k > 1 else a[0, :0]
        kk = (r[k] - np.dot(prev, r[k - 1 : 0 : -1])) / v[k - 1]
        a[k - 1, : k - 1] = prev - kk * prev[::-1]
        a[k - 1, k - 1] = kk
        v[k] = v[k - 1] * (1.0 - kk * kk)
    if v[max_k] < 0.0:
        return a, v, max_k
    return a, v, 0
