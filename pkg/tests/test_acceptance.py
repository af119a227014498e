"""The fourteen acceptance criteria, each at its stated tolerance.

Every test records a one-line verdict (see conftest) and then asserts it.
"""

import cmath
import math

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, ZERO_ORDINATES
from zetaspec.fourier import (ShiftedLineSpec, forward_halfline_ft_many, hurwitz_expansion_identity,
                              inverse_halfline_ft, momentum_solution_and_residual, naive_inversion_check,
                              psi_hat_values, zeta_integral_check)
from zetaspec.hurwitz import hurwitz_zeta, psi
from zetaspec.operators import (HalfLineFunction, delta_apply, dilation_partial, hamiltonian_conjugated,
                                hamiltonian_series, isometry_check, kubert_apply, power_function,
                                psi_function)
from zetaspec.spectral import find_zeros
from zetaspec.suites import SuiteConfig, run_suite
from zetaspec.values import SpectralPoint
from zetaspec.wkb import (balance_residuals, printed_coefficients, s0, s1, series_coefficients,
                          wkb_asymptotic_coeffs, wkb_psi)

ZERO_POINTS = [SpectralPoint.on_critical_line(t) for t in ZERO_ORDINATES[:5]]
GENERIC_Z = [0.3 + 2j, 2 + 1j, -1.5 + 4j, 3.5 - 7j, 0.8 + 25j]


def record(n, ok, detail):
    ACCEPTANCE_LINES[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, ACCEPTANCE_LINES[n]


def test_01_eigen_relation_conjugated():
    points = ZERO_POINTS + [SpectralPoint.from_z(z) for z in GENERIC_Z]
    worst = 0.0
    for sp in points:
        for x in (0.5, 1.0, 2.0, 5.0, 10.0):
            r = hamiltonian_conjugated(sp, x)
            p = psi(sp, x).value
            worst = max(worst, abs(r.value - sp.E * p) / max(1e-8 * abs(p), r.error))
    record(1, worst <= 1.0, f"max |H psi - E psi| / max(1e-8 |psi|, estimate) = {worst:.2e} over 50 cases")


def test_02_eigen_relation_series():
    worst = 0.0
    est10 = 0.0
    turnovers = []
    for sp in ZERO_POINTS + [SpectralPoint.from_z(2)]:
        for x in (5.0, 10.0, 20.0):
            r = hamiltonian_series(sp, x)
            ref = sp.E * psi(sp, x).value
            worst = max(worst, abs(r.value - ref) / r.error)
            pairs = dict(r.diagnostics["log10_terms"])
            k = r.diagnostics["k_star"]
            ks = [q for q in sorted(pairs) if q >= 2]
            assert r.diagnostics["turnover_reached"]
            assert pairs[ks[0]] > pairs[k] < pairs[ks[-1]]
            if x == 10.0:
                est10 = max(est10, r.error)
                turnovers.append(k)
    ok = worst <= 1.0 and est10 < 1e-9
    record(2, ok, f"max err/estimate = {worst:.2f}, max estimate at x=10 = {est10:.1e}, "
                  f"turnover k* at x=10: {sorted(set(turnovers))}")


def test_03_delta_recurrence():
    rng = np.random.default_rng(20240611)
    worst = 0.0
    for _ in range(200):
        z = complex(rng.uniform(0, 6), rng.uniform(-20, 20))
        x = rng.uniform(0.5, 10)
        d = delta_apply(psi_function(z), x)
        ref = cmath.exp(-z * math.log(x))
        worst = max(worst, abs(d - ref) / abs(ref))
    record(3, worst < 1e-12, f"max relative error of Delta psi_z - x^-z on 200 draws = {worst:.2e}")


def test_04_kubert_scaling():
    worst = 0.0
    for z in (0.5 + 3j, complex(0.5, ZERO_ORDINATES[0]), 2 + 1j, -1.5 + 0.5j, 0.1 - 6j):
        f = psi_function(z)
        for x in (0.3, 1.0, 4.0):
            base = f.value(x)
            for n in (2, 3, 4, 5):
                ref = cmath.exp(z * math.log(n)) * base
                worst = max(worst, abs(kubert_apply(n, f, x) - ref) / abs(ref))
    record(4, worst < 1e-10, f"max relative error of T_n psi - n^z psi = {worst:.2e}")


def test_05_dilation():
    worst = 0.0
    for z in (2 + 0j, 2 + 4j, 3 + 0j, 3 - 1.5j):
        for x in (0.5, 1.0, 2.0):
            r = dilation_partial(power_function(z), x, 64)
            ref = hurwitz_zeta(z, 1.0).value * cmath.exp(-z * math.log(x))
            worst = max(worst, abs(r.value - ref) / r.error)
    record(5, worst <= 1.0, f"max |sum + tail - zeta(z) x^-z| / estimate = {worst:.2f}")


def test_06_wkb_asymptotics():
    xs = np.geomspace(1e3, 1e4, 9)
    spread = 0.0
    for sp in ZERO_POINTS:
        ratios = np.array([psi(sp, x).value / wkb_psi(sp, x) for x in xs])
        spread = max(spread, float(np.max(np.abs(ratios - ratios.mean())) / abs(ratios.mean())))
    slopes = []
    for sp in ZERO_POINTS:
        mags = [abs(cmath.exp(s0(sp.E, x) + s1(sp.E, x))) for x in xs]
        slopes.append(np.polyfit(np.log(xs), np.log(mags), 1)[0])
    dev = max(abs(s - 0.5) for s in slopes)
    record(6, spread < 1e-3 and dev < 1e-3, f"ratio spread = {spread:.1e}, |slope - 1/2| = {dev:.1e}")


def test_07_wkb_balances_and_coefficients():
    worst = 0.0
    for sp in ZERO_POINTS[:3]:
        E = sp.E
        for x in (abs(E.real) / 2, abs(E.real), 5 * abs(E.real), 50 * abs(E.real)):
            worst = max(worst, max(balance_residuals(E, x).values()))
    coef_err = 0.0
    printed_gap = 0.0
    for E in (14.0, ZERO_POINTS[0].E):
        fit = wkb_asymptotic_coeffs(E)
        oracle = series_coefficients(E)
        coef_err = max(coef_err, max(abs(a - b) / max(1.0, abs(b))
                                     for a, b in zip((fit.c0, fit.c1, fit.c2), oracle)))
        printed_gap = max(printed_gap, max(abs(a - b) for a, b in zip(printed_coefficients(E), oracle)))
    report = run_suite("verify-wkb", SuiteConfig(Es=(14.0,)))
    note = report.notes["wkb"]["14.0"]
    recorded = "printed" in note and "series_oracle" in note and note["printed_matches"] is False
    ok = worst < 1e-9 and coef_err < 1e-6 and recorded
    record(7, ok, f"max balance residual = {worst:.1e}, fit vs series oracle = {coef_err:.1e}, "
                  f"printed triple differs by {printed_gap:.2f} (recorded in report notes)")


def test_08_fourier_closed_form():
    ps = np.array([3 + 1j, -4 + 0.5j, 6.3 + 0.5j, 10 + 2j, -12 + 1.5j,
                   0.2 + 0.7j, -1 + 1.2j, 2 * math.pi + 0.5j, 25 + 1.8j, -7.5 + 2j])
    worst = 0.0
    worst_ratio = 0.0
    for z in (complex(0.5, ZERO_ORDINATES[0]), -2.5 + 1j, 0.3 + 2j):
        v, e = psi_hat_values(z, ps)
        fw, fe = forward_halfline_ft_many(psi_function(z), ps)
        worst = max(worst, float(np.max(e + fe)))
        worst_ratio = max(worst_ratio, float(np.max(np.abs(v - fw) / np.maximum(e + fe, 1e-300))))
    record(8, worst <= 1e-6 and worst_ratio <= 1.0,
           f"max combined estimate = {worst:.1e}, max |closed - quadrature| / estimate = {worst_ratio:.2f}")


def test_09_zero_detection():
    vals = []
    for sp in ZERO_POINTS[:2]:
        vals.append(abs(zeta_integral_check(sp).value))
    sp = ZERO_POINTS[0]
    a = zeta_integral_check(sp, ShiftedLineSpec(eps=0.5))
    b = zeta_integral_check(sp, ShiftedLineSpec(eps=2.0))
    c = zeta_integral_check(SpectralPoint.from_z(0.5 + 3j), ShiftedLineSpec(eps=0.5))
    d = zeta_integral_check(SpectralPoint.from_z(0.5 + 3j), ShiftedLineSpec(eps=2.0))
    indep = max(abs(a.value - b.value) / (a.error + b.error), abs(c.value - d.value) / (c.error + d.error))
    ok = max(vals) < 1e-5 and indep <= 1.0
    record(9, ok, f"|int psi_hat dp| at first two zeros = {max(vals):.1e}, eps 0.5 vs 2 gap / estimate = {indep:.2f}")


def test_10_momentum_ode():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        z = complex(rng.uniform(-3, 0.95), rng.uniform(-25, 25))
        p = complex(rng.uniform(-30, 30), rng.uniform(0.05, 4))
        g, res = momentum_solution_and_residual(SpectralPoint.from_z(z), p)
        worst = max(worst, abs(res) / abs(g))
    record(10, worst < 1e-12, f"max |residual| / |g| on 100 points = {worst:.1e}")


def test_11_negative_result():
    xs = np.linspace(0.05, 1.0, 20)
    worst = 0.0
    for z in (-2.5 + 1j, -1.5 - 2j, -0.5 + 5j):
        for x in xs:
            worst = max(worst, abs(naive_inversion_check(z, float(x)).value))
    ident = 0.0
    for z in (-3 + 0j, -1.5 - 2j, -0.5 + 0j, -2.2 + 7j, -0.1 + 1j):
        for x in np.linspace(0.05, 1.0, 8):
            ident = max(ident, abs(hurwitz_expansion_identity(z, float(x)).value))
    record(11, worst < 1e-6 and ident < 1e-7,
           f"max |naive f(x)| = {worst:.1e}, max Hurwitz identity gap = {ident:.1e}")


def test_12_spectrum():
    recs = find_zeros(0.0, 50.0, 0.1)
    ords = max(abs(r.t - t) for r, t in zip(recs, ZERO_ORDINATES))
    resid = max(r.residual for r in recs)
    real = all(r.E == complex(-2 * r.t, 0.0) and r.z.real == 0.5 for r in recs)
    ok = len(recs) == 10 and ords < 1e-9 and resid < 1e-10 and real
    record(12, ok, f"{len(recs)} zeros, max ordinate error = {ords:.1e}, max |zeta| = {resid:.1e}, E exactly real: {real}")


def _memo(F):
    cache = {}

    def G(w):
        w = np.asarray(w, dtype=complex)
        key = w.tobytes()
        if key not in cache:
            cache[key] = F(w)
        return cache[key]

    return G


def test_13_inversion_theorem():
    spec = ShiftedLineSpec(eps=1.0, tol=1e-7)
    cases = [
        ("exp", HalfLineFunction(lambda x: np.exp(-np.asarray(x)) + 0j, (-math.inf, math.inf), decay=-math.inf),
         lambda x: math.exp(-x), (0.4, 1.0, 2.5)),
        ("gauss", HalfLineFunction(lambda x: np.exp(-np.asarray(x) ** 2) + 0j, (-math.inf, math.inf),
                                   decay=-math.inf), lambda x: math.exp(-x * x), (0.4, 1.0)),
        ("psi_2", psi_function(2), lambda x: psi(SpectralPoint.from_z(2), x).value, (1.5,)),
    ]
    worst = 0.0
    below = 0.0
    for name, f, exact, xs in cases:
        F = _memo(lambda w, f=f: forward_halfline_ft_many(f, w)[0])
        for x in xs:
            worst = max(worst, abs(inverse_halfline_ft(F, x, spec).value - exact(x)))
        if name != "psi_2":
            for x in (-0.5, -2.0):
                below = max(below, abs(inverse_halfline_ft(F, x, spec).value))
    record(13, worst < 1e-6 and below < 1e-8,
           f"max |inverse(forward f) - f| = {worst:.1e}, max |inverse| at x < 0 = {below:.1e}")


def test_14_isometry():
    g = HalfLineFunction(lambda x: np.exp(-np.asarray(x) ** 2) + 0j, (-math.inf, math.inf), decay=-math.inf)
    worst = 0.0
    for lam in (-1.0, 0.3, 2.0):
        a, b = isometry_check(g, lam, 8.0, 0.5)
        worst = max(worst, abs(a.value - b.value))
    record(14, worst < 1e-8, f"max | ||U f|| - ||f|| | = {worst:.1e}")
