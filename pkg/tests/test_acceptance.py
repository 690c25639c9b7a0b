"""Exit criteria. Each test prints one PASS/FAIL line (also collected into the
pytest terminal summary). Run standalone with ``python tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, random_stationary_phi  # noqa: E402

from arscope.cli import main as cli_main  # noqa: E402
from arscope.diagnostics import histogram, normal_scores  # noqa: E402
from arscope.estimation import empirical_acf, empirical_pac, fit_ar, levinson_durbin, residuals  # noqa: E402
from arscope.identification import classify, pac_cutoff, portmanteau_whiteness  # noqa: E402
from arscope.io import read_series, write_series  # noqa: E402
from arscope.model import (  # noqa: E402
    ModelSpec,
    acf_closed_form,
    theoretical_acf,
    theoretical_pac,
    yule_walker_coeffs,
)
from arscope.simulation import NoiseSpec, gaussian_white_noise, simulate_arima  # noqa: E402

PAPER = ModelSpec(phi=(0.25, 0.5))
N = 500
BAND_PLOT = 1.96 / np.sqrt(N)


def report(num, title, ok, detail, elapsed):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}: {detail} ({elapsed:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_c1_paper_coefficient_recovery():
    with Timer() as t:
        est = np.array([fit_ar(simulate_arima(PAPER, NoiseSpec(s, N)), 2).phi_hat for s in range(200)])
    within = np.all(np.abs(est - PAPER.phi) <= 0.15, axis=1).mean()
    mean = est.mean(axis=0)
    ok = within >= 0.95 and np.all(np.abs(mean - PAPER.phi) <= 0.02) and t.elapsed < 10
    detail = f"{within:.1%} of 200 seeds within 0.15; mean estimate ({mean[0]:.4f}, {mean[1]:.4f})"
    assert report(1, "AR(2) coefficient recovery", ok, detail, t.elapsed)


def test_c2_pac_cutoff_at_lag_two():
    with Timer() as t:
        orders, inside = [], []
        for s in range(200):
            pac = empirical_pac(simulate_arima(PAPER, NoiseSpec(s, N)), 25)
            orders.append(pac_cutoff(pac, N, 3.0).order)
            inside.extend(np.abs(pac.values[2:25]) <= BAND_PLOT)
    hit = np.mean(np.array(orders) == 2)
    frac = np.mean(inside)
    ok = hit >= 0.90 and frac >= 0.90 and t.elapsed < 10
    detail = f"order 2 in {hit:.1%} of seeds; {frac:.1%} of lags 3..25 inside +-1.96/sqrt(500)"
    assert report(2, "PAC cut-off at lag 2", ok, detail, t.elapsed)


def test_c3_exact_theory():
    with Timer() as t:
        rho = theoretical_acf(PAPER, 10)
        pac = theoretical_pac(rho, 10)
        yw = yule_walker_coeffs(rho, 2)
    err_rho = np.max(np.abs(rho.values[1:4] - [0.5, 0.625, 0.40625]))
    err_pac = np.max(np.abs(pac.values[:2] - 0.5))
    tail = np.max(np.abs(pac.values[2:10]))
    err_yw = np.max(np.abs(yw - PAPER.phi))
    ok = err_rho <= 1e-12 and err_pac <= 1e-12 and tail <= 1e-10 and err_yw <= 1e-10
    detail = f"rho err {err_rho:.1e}, pac err {err_pac:.1e}, pac tail {tail:.1e}, YW err {err_yw:.1e}"
    assert report(3, "exact theory oracle", ok, detail, t.elapsed)


def test_c4_closed_form_agreement():
    rng = np.random.default_rng(404)
    with Timer() as t:
        worst = 0.0
        for _ in range(100):
            phi = random_stationary_phi(rng, int(rng.integers(1, 7)), min_sep=0.1)
            a = acf_closed_form(phi, 50).profile.values
            b = theoretical_acf(phi, 50).values
            worst = max(worst, float(np.max(np.abs(a - b))))
    ok = worst <= 1e-8 and t.elapsed < 5
    assert report(4, "closed form vs recursion", ok, f"max abs diff {worst:.1e} over 100 specs, lags <= 50", t.elapsed)


def _dense_row(r, k):
    idx = np.abs(np.subtract.outer(np.arange(k), np.arange(k)))
    return np.linalg.solve(r[idx], r[1 : k + 1])


def test_c5_levinson_vs_dense():
    rng = np.random.default_rng(505)
    with Timer() as t:
        worst = 0.0
        for i in range(100):
            kmax = int(rng.integers(1, 21))
            if i % 2:
                r = theoretical_acf(random_stationary_phi(rng, int(rng.integers(1, 11))), kmax).values
            else:
                r = empirical_acf(rng.standard_normal(300), kmax).values
            lev = levinson_durbin(r, kmax)
            for k in range(1, kmax + 1):
                worst = max(worst, float(np.max(np.abs(lev.coefficients(k) - _dense_row(r, k)))))
    ok = worst <= 1e-10 and t.elapsed < 5
    assert report(5, "Levinson-Durbin vs dense solve", ok, f"max abs diff {worst:.1e} on 100 profiles", t.elapsed)


def test_c6_size_calibration():
    with Timer() as t:
        zero, passes = 0, 0
        for s in range(1000):
            z = gaussian_white_noise(NoiseSpec(s, N))
            zero += pac_cutoff(empirical_pac(z, 25), N, 3.0).order == 0
            passes += portmanteau_whiteness(empirical_acf(z, 20), N, 20, 0.05).passed
    ok = zero >= 850 and 910 <= passes <= 990 and t.elapsed < 30
    detail = f"order 0 in {zero / 10:.1f}% of 1000 seeds; portmanteau pass rate {passes / 10:.1f}%"
    assert report(6, "white-noise size calibration", ok, detail, t.elapsed)


def test_c7_innovation_identity():
    rng = np.random.default_rng(707)
    with Timer() as t:
        exact = 0
        for s in range(100):
            phi = random_stationary_phi(rng, int(rng.integers(1, 9)))
            z = simulate_arima(ModelSpec(phi=phi), NoiseSpec(s, 400))
            res = residuals(z, phi, 0.0)
            exact += res.values.tobytes() == z.aligned_noise[len(phi) :].tobytes()
    ok = exact == 100
    assert report(7, "innovation identity", ok, f"{exact}/100 specs bit-exact", t.elapsed)


def test_c8_histogram_and_normal_scores():
    with Timer() as t:
        mass_ok, modal, corr_ok = 0, 0, 0
        for s in range(1000):
            z = simulate_arima(PAPER, NoiseSpec(s, N))
            h = histogram(z)
            mass_ok += h.points[:, 2].sum() == N
            lo, hi = h.points[0, 0], h.points[-1, 1]
            centre = h.points[:, :2].mean(axis=1)[np.argmax(h.points[:, 2])]
            modal += lo + (hi - lo) / 3 <= centre <= lo + 2 * (hi - lo) / 3
            w = gaussian_white_noise(NoiseSpec(s, N))
            corr_ok += normal_scores(w).metadata["correlation"] >= 0.99
    ok = mass_ok == 1000 and modal >= 950 and corr_ok >= 990 and t.elapsed < 30
    detail = (
        f"mass conserved {mass_ok}/1000; modal bin in middle third {modal / 10:.1f}%; "
        f"normal-scores r >= 0.99 in {corr_ok / 10:.1f}%"
    )
    assert report(8, "histogram and normal-scores analogues", ok, detail, t.elapsed)


def test_c9_determinism_and_round_trip(tmp_path, capsys):
    with Timer() as t:
        for d in ("a", "b"):
            assert cli_main(["reproduce-paper", "--seed", "42", "-o", str(tmp_path / d)]) == 0
            assert cli_main(["simulate", "--phi", "0.25,0.5", "--seed", "42", "-o", str(tmp_path / f"{d}.txt")]) == 0
        capsys.readouterr()
        files = sorted(p.name for p in (tmp_path / "a").iterdir())
        same = all((tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes() for f in files)
        same = same and (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()

        mem = simulate_arima(PAPER, NoiseSpec(42, N))
        write_series(mem, tmp_path / "rt.txt")
        disk = read_series(tmp_path / "rt.txt")
        round_trip = (
            disk.values.tobytes() == mem.values.tobytes()
            and empirical_acf(disk, 25).values.tobytes() == empirical_acf(mem, 25).values.tobytes()
            and empirical_pac(disk, 25).values.tobytes() == empirical_pac(mem, 25).values.tobytes()
            and fit_ar(disk, 2).phi_hat.tobytes() == fit_ar(mem, 2).phi_hat.tobytes()
            and classify(disk) == classify(mem)
        )
    ok = same and round_trip
    detail = f"{len(files) + 1} CLI outputs byte-identical: {same}; file round trip exact: {round_trip}"
    assert report(9, "determinism and round trips", ok, detail, t.elapsed)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
