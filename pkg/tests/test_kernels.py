"""Compiled and pure-Python kernels must agree."""

import numpy as np
import pytest

import arscope
from arscope import _pykernels

from conftest import random_stationary_phi

try:
    from arscope import _kernels as ckernels
except ImportError:  # pragma: no cover
    ckernels = None

needs_ext = pytest.mark.skipif(ckernels is None, reason="extension not built")


def test_backend_name():
    assert arscope.backend in ("cython", "python")


@pytest.mark.parametrize("p", [0, 1, 2, 5, 10])
def test_ar_filter_semantics(kernels, p):
    rng = np.random.default_rng(p)
    phi = random_stationary_phi(rng, p) if p else np.zeros(0)
    eps = rng.standard_normal(300)
    w, realized = kernels.ar_filter(eps, phi)
    ref = np.zeros(300)
    for t in range(300):
        ref[t] = eps[t] + sum(phi[i] * ref[t - 1 - i] for i in range(p) if t - 1 - i >= 0)
    np.testing.assert_allclose(w, ref, atol=1e-12)
    np.testing.assert_allclose(realized, eps, atol=1e-13)


def test_levinson_reports_bad_order(kernels):
    _, _, bad = kernels.levinson(np.ones(5), 4)
    assert bad == 2


@needs_ext
@pytest.mark.parametrize("seed", range(5))
def test_recursions_bit_identical(seed):
    rng = np.random.default_rng(seed)
    phi = random_stationary_phi(rng, int(rng.integers(1, 8)))
    eps = rng.standard_normal(2000)
    wc, rc = ckernels.ar_filter(eps, phi)
    wp, rp = _pykernels.ar_filter(eps, phi)
    assert wc.tobytes() == wp.tobytes() and rc.tobytes() == rp.tobytes()
    assert ckernels.ar_residuals(wc, phi).tobytes() == _pykernels.ar_residuals(wc, phi).tobytes()


@needs_ext
@pytest.mark.parametrize("seed", range(5))
def test_reductions_agree(seed):
    rng = np.random.default_rng(seed)
    d = rng.standard_normal(1000)
    d -= d.mean()
    c1, c2 = ckernels.lag_products(d, 30), _pykernels.lag_products(d, 30)
    np.testing.assert_allclose(c1, c2, rtol=1e-12, atol=1e-10)
    r = c1 / c1[0]
    t1, v1, b1 = ckernels.levinson(r, 30)
    t2, v2, b2 = _pykernels.levinson(r, 30)
    assert b1 == b2 == 0
    np.testing.assert_allclose(t1, t2, atol=1e-12)
    np.testing.assert_allclose(v1, v2, atol=1e-12)


def test_forced_python_backend():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "import arscope; print(arscope.backend)"],
        env={"ARSCOPE_BACKEND": "python", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
