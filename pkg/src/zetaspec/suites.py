"""Verification suites run by the command-line interface.

Every suite is a pure function of its SuiteConfig; parallelism is injected as a
``map_fn`` (builtin map or an executor's map), and results keep input order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import __version__
from .errors import DivergenceError
from .fourier import (HalfLineSpec, ShiftedLineSpec, forward_halfline_ft_many, hurwitz_expansion_identity,
                      momentum_solution_and_residual, naive_inversion_check, psi_hat_printed,
                      psi_hat_values, zeta_integral_check)
from .hurwitz import hurwitz_zeta, hurwitz_zeta_hankel, psi
from .operators import (dilation_partial, hamiltonian_conjugated, hamiltonian_series, kubert_apply,
                        power_function, psi_function)
from .report import CheckRecord, VerificationReport, format_complex
from .spectral import boundary_residual, find_zeros
from .values import SpectralPoint, TruncationPolicy
from .wkb import (balance_residuals, printed_coefficients, series_coefficients, wkb_asymptotic_coeffs,
                  wkb_psi)

FIRST_ZERO = 14.134725141734693790
DEFAULT_TOL = {
    "verify-eigen": 1e-8,
    "verify-kubert": 1e-10,
    "verify-fourier": 1e-6,
    "verify-wkb": 1e-3,
    "zeros": 1e-10,
}


@dataclass(frozen=True)
class SuiteConfig:
    zs: tuple[complex, ...] = ()
    Es: tuple[float, ...] = ()
    xs: tuple[float, ...] = ()
    tol: float | None = None
    n_max: int = 5
    t_min: float = 0.0
    t_max: float = 50.0
    step: float = 0.1
    policy: TruncationPolicy = TruncationPolicy()


def environment() -> dict:
    return {
        "package": "zetaspec",
        "version": __version__,
        "precision": "binary64",
        "determinism": "no random seeds; results are independent of thread count",
    }


def _cplx(z: complex) -> list[float]:
    return [complex(z).real, complex(z).imag]


# ------------------------------------------------------------------ eigen

def _eigen_point(args):
    z, x, tol, policy = args
    sp = SpectralPoint.from_z(z)
    tag = f"z={format_complex(z)};x={x!r}"
    out = []
    p = psi(sp, x)
    ref = sp.E * p.value
    scale = max(1.0, abs(ref))
    # Delta psi = x^{-z}
    if x > 0:
        pm1 = psi(sp, x - 1.0)
        v = p.value - pm1.value
        r = cmath.exp(-z * math.log(x))
        out.append(CheckRecord.make("verify-eigen", "delta", tag, v, r, p.error + pm1.error,
                                    tol * max(1.0, abs(r))))
    c = hamiltonian_conjugated(sp, x)
    out.append(CheckRecord.make("verify-eigen", "conjugated", tag, c.value, ref,
                                c.error + abs(sp.E) * p.error, tol * scale))
    try:
        s = hamiltonian_series(sp, x, policy)
        out.append(CheckRecord.make("verify-eigen", "series", tag, s.value, ref,
                                    s.error + abs(sp.E) * p.error, tol * scale))
    except DivergenceError:
        pass
    h = hurwitz_zeta_hankel(z, x) if not (z.imag == 0 and z.real == 1) else None
    if h is not None:
        est = h.error + p.error
        out.append(CheckRecord.make("verify-eigen", "hankel", tag, h.value, p.value, est,
                                    tol * max(1.0, abs(p.value)), converged=est <= tol * max(1.0, abs(p.value))))
    return out


def suite_eigen(cfg: SuiteConfig, map_fn: Callable = map):
    tol = cfg.tol if cfg.tol is not None else DEFAULT_TOL["verify-eigen"]
    zs = cfg.zs or (complex(0.5, FIRST_ZERO), 2 + 1j)
    xs = cfg.xs or (0.5, 1.0, 2.0, 5.0, 10.0)
    jobs = [(complex(z), float(x), tol, cfg.policy) for z in zs for x in xs]
    checks = [c for grp in map_fn(_eigen_point, jobs) for c in grp]
    return checks, {}


# ------------------------------------------------------------------ kubert

def _kubert_point(args):
    z, x, n_max, tol = args
    f = psi_function(z)
    base = f.value(x)
    tag = f"z={format_complex(z)};x={x!r}"
    out = []
    for n in range(1, n_max + 1):
        v = kubert_apply(n, f, x)
        r = cmath.exp(z * math.log(n)) * base
        out.append(CheckRecord.make("verify-kubert", f"T{n}", tag, v, r, 0.0, tol * abs(r)))
    if z.real > 1 and x > 0:
        d = dilation_partial(power_function(z), x, 64)
        r = hurwitz_zeta(z, 1.0).value * cmath.exp(-z * math.log(x))
        out.append(CheckRecord.make("verify-kubert", "dilation", tag, d.value, r, d.error, tol * abs(r)))
    return out


def suite_kubert(cfg: SuiteConfig, map_fn: Callable = map):
    tol = cfg.tol if cfg.tol is not None else DEFAULT_TOL["verify-kubert"]
    zs = cfg.zs or (0.5 + 3j,)
    xs = cfg.xs or (0.3, 1.0, 4.0)
    jobs = [(complex(z), float(x), cfg.n_max, tol) for z in zs for x in xs]
    return [c for grp in map_fn(_kubert_point, jobs) for c in grp], {}


# ------------------------------------------------------------------ fourier

_P_GRID = (3 + 1j, -4 + 0.5j, 6.3 + 0.5j, 10 + 2j, -12 + 1.5j)


def _fourier_z(args):
    z, xs, tol = args
    sp = SpectralPoint.from_z(z)
    tag = f"z={format_complex(z)}"
    out = []
    notes = {}
    if z.real < 1:
        ps = np.array(_P_GRID)
        v, e = psi_hat_values(z, ps)
        fw, fe = forward_halfline_ft_many(psi_function(z), ps, HalfLineSpec())
        for p, a, b, ea, eb in zip(ps, v, fw, e, fe):
            est = float(ea + eb)
            out.append(CheckRecord.make("verify-fourier", "closed_form", f"{tag};p={format_complex(p)}",
                                        a, b, est, tol, converged=est <= tol))
        pr = psi_hat_printed(sp, ps[0]).value
        notes["printed_transform_mismatch"] = abs(pr - fw[0])
        zi = zeta_integral_check(sp, ShiftedLineSpec())
        ref = -math.pi * zi.diagnostics["zeta"]
        out.append(CheckRecord.make("verify-fourier", "zeta_integral", tag, zi.value, ref,
                                    zi.error, tol, converged=zi.error <= tol))
        notes["zeta_integral_ratio"] = _cplx(zi.diagnostics["ratio"]) if zi.diagnostics["ratio"] is not None else None
    for p in (1 + 1j, 0.3 + 2j, -5 + 0.7j):
        g, res = momentum_solution_and_residual(sp, p)
        out.append(CheckRecord.make("verify-fourier", "momentum_ode", f"{tag};p={format_complex(p)}",
                                    res / g, 0.0, 0.0, 1e-12))
    if z.real < 0:
        for x in xs:
            if not 0 < x <= 1:
                continue
            f = naive_inversion_check(z, x)
            out.append(CheckRecord.make("verify-fourier", "naive_inversion", f"{tag};x={x!r}",
                                        f.value, 0.0, f.error, tol))
            h = hurwitz_expansion_identity(z, x)
            out.append(CheckRecord.make("verify-fourier", "hurwitz_identity", f"{tag};x={x!r}",
                                        h.value, 0.0, h.error, 1e-7))
    return out, notes


def suite_fourier(cfg: SuiteConfig, map_fn: Callable = map):
    tol = cfg.tol if cfg.tol is not None else DEFAULT_TOL["verify-fourier"]
    zs = cfg.zs or (complex(0.5, FIRST_ZERO), -2.5 + 1j)
    xs = cfg.xs or (0.25, 0.5, 0.999)
    res = list(map_fn(_fourier_z, [(complex(z), tuple(xs), tol) for z in zs]))
    checks = [c for grp, _ in res for c in grp]
    notes = {format_complex(z): n for z, (_, n) in zip(zs, res) if n}
    return checks, {"fourier": notes} if notes else {}


# ------------------------------------------------------------------ wkb

def _wkb_E(args):
    E, xs, tol = args
    sp = SpectralPoint.from_E(E)
    tag = f"E={E!r}"
    ratios = np.array([psi(sp, x).value / wkb_psi(sp, x) for x in xs])
    mean = complex(ratios.mean())
    spread = float(np.max(np.abs(ratios - mean)) / abs(mean))
    out = [CheckRecord.make("verify-wkb", "ratio_spread", tag, spread, 0.0, 0.0, tol)]
    for x in (7.0 * max(abs(E), 1.0) / 14.0 + 1.0, 50.0 * max(abs(E), 1.0)):
        b = balance_residuals(E, x)
        for k, v in b.items():
            out.append(CheckRecord.make("verify-wkb", f"balance_{k}", f"{tag};x={x!r}", v, 0.0, 0.0, 1e-9))
    c = wkb_asymptotic_coeffs(E)
    o = series_coefficients(E)
    for name, a, b in zip(("c0", "c1", "c2"), (c.c0, c.c1, c.c2), o):
        out.append(CheckRecord.make("verify-wkb", f"coeff_{name}", tag, a, b, 0.0, 1e-6 * max(1.0, abs(b))))
    pr = printed_coefficients(E)
    notes = {"fitted": [_cplx(c.c0), _cplx(c.c1), _cplx(c.c2)],
             "series_oracle": [_cplx(v) for v in o],
             "printed": [_cplx(v) for v in pr],
             "printed_matches": bool(all(abs(a - b) <= 1e-6 * max(1, abs(b)) for a, b in zip(o, pr))),
             "fit_condition": c.cond}
    return out, notes


def suite_wkb(cfg: SuiteConfig, map_fn: Callable = map):
    tol = cfg.tol if cfg.tol is not None else DEFAULT_TOL["verify-wkb"]
    Es = cfg.Es or tuple(-2.0 * complex(z).imag for z in cfg.zs) or (-2 * FIRST_ZERO,)
    xs = cfg.xs or tuple(np.geomspace(1e3, 1e4, 9))
    res = list(map_fn(_wkb_E, [(float(E), tuple(xs), tol) for E in Es]))
    checks = [c for grp, _ in res for c in grp]
    return checks, {"wkb": {repr(float(E)): n for E, (_, n) in zip(Es, res)}}


# ------------------------------------------------------------------ zeros

def suite_zeros(cfg: SuiteConfig, map_fn: Callable = map):
    tol = cfg.tol if cfg.tol is not None else DEFAULT_TOL["zeros"]
    recs = find_zeros(cfg.t_min, cfg.t_max, cfg.step, map_fn)
    checks = []
    table = []
    for r in recs:
        zv = complex(r.residual)
        inputs = f"n={r.index};t={r.t!r};E={r.E.real!r}"
        # the Hankel recomputation of |zeta| cross-validates each refinement
        bres = boundary_residual(r)
        checks.append(CheckRecord.make("zeros", f"zero-{r.index}", inputs, zv, 0.0, 0.0, tol,
                                       converged=bres < 1e-8))
        table.append({"n": r.index, "t": r.t, "E": r.E.real, "residual": r.residual, "boundary": bres})
    return checks, {"zeros": table}


SUITES = {
    "verify-eigen": suite_eigen,
    "verify-kubert": suite_kubert,
    "verify-fourier": suite_fourier,
    "verify-wkb": suite_wkb,
    "zeros": suite_zeros,
}


def run_suite(name: str, cfg: SuiteConfig, map_fn: Callable = map) -> VerificationReport:
    import time

    t0 = time.perf_counter()
    if name == "report-all":
        checks, notes = [], {}
        for fn in SUITES.values():
            sub = SuiteConfig(tol=cfg.tol, n_max=cfg.n_max, t_min=cfg.t_min, t_max=cfg.t_max, step=cfg.step,
                              policy=cfg.policy)
            c, n = fn(sub, map_fn)
            checks += c
            notes.update(n)
    else:
        checks, notes = SUITES[name](cfg, map_fn)
    return VerificationReport(name, tuple(checks), environment(), notes, time.perf_counter() - t0)
