import importlib

import numpy as np
import pytest

from arscope import _pykernels


def _backends():
    out = [pytest.param(_pykernels, id="python")]
    try:
        out.append(pytest.param(importlib.import_module("arscope._kernels"), id="cython"))
    except ImportError:
        out.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    return out


@pytest.fixture(params=_backends())
def kernels(request):
    return request.param


def random_stationary_phi(rng, p, max_modulus=0.9, min_sep=0.05):
    """AR coefficients built from randomly placed distinct roots inside the unit disc.

    Uses numpy's polynomial expansion, independent of the library's root finder.
    """
    while True:
        roots = []
        while len(roots) < p:
            r = rng.uniform(0.1, max_modulus)
            if p - len(roots) >= 2 and rng.random() < 0.5:
                ang = rng.uniform(0.2, np.pi - 0.2)
                z = r * np.exp(1j * ang)
                roots.extend([z, np.conj(z)])
            else:
                roots.append(r * rng.choice([-1.0, 1.0]) + 0j)
        roots = np.array(roots)
        gaps = [abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1 :]]
        if not gaps or min(gaps) > min_sep:
            break
    return -np.real(np.poly(roots))[1:]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
