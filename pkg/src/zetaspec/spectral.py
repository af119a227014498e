"""Zeros of zeta on the critical line and the eigenvalues E_n = i(2 z_n - 1)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .errors import ConvergenceError, DomainError
from .hurwitz import HankelContourSpec, hurwitz_zeta_hankel, riemann_zeta, riemann_zeta_and_derivative
from .scalar_core import log_gamma
from .values import SpectralPoint


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    t: float
    z: complex
    E: complex
    residual: float
    diagnostics: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def spectral_point(self) -> SpectralPoint:
        return SpectralPoint(self.z, self.E)


def theta(t: float) -> float:
    """Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) ln pi."""
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def hardy_z(t: float) -> float:
    """Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t."""
    zv = riemann_zeta(complex(0.5, t)).value
    th = theta(t)
    return (complex(math.cos(th), math.sin(th)) * zv).real


def scan_critical_line(t_lo: float, t_hi: float, step: float = 0.1) -> list[tuple[float, float]]:
    """Brackets [a, b] on which Z changes sign, from a uniform grid of spacing ``step``."""
    if not 0 <= t_lo < t_hi:
        raise DomainError("need 0 <= t_lo < t_hi")
    if not 0 < step <= 0.5:
        raise DomainError("step must lie in (0, 0.5]")
    n = max(1, math.ceil((t_hi - t_lo) / step))
    ts = np.linspace(t_lo, t_hi, n + 1)
    zs = [hardy_z(t) for t in ts]
    out = []
    for i in range(n):
        a, b = zs[i], zs[i + 1]
        if a == 0.0:
            out.append((float(ts[i]) - step / 2, float(ts[i]) + step / 2))
        elif a * b < 0:
            out.append((float(ts[i]), float(ts[i + 1])))
    return out


def refine_zero(bracket: tuple[float, float], index: int = 0,
                bisect_tol: float = 1e-6, residual_tol: float = 1e-10, max_newton: int = 30) -> ZeroRecord:
    """Bisection on Z to ``bisect_tol``, then Newton on zeta(1/2 + it) using zeta'.

    Newton steps larger than 0.1 are halved; a step leaving the bracket falls
    back to bisection.
    """
    a, b = bracket
    za, zb = hardy_z(a), hardy_z(b)
    if za * zb > 0:
        raise DomainError("bracket does not contain a sign change")
    n_bisect = 0
    while b - a > bisect_tol:
        m = 0.5 * (a + b)
        zm = hardy_z(m)
        n_bisect += 1
        if zm == 0.0:
            a = b = m
            break
        if za * zm < 0:
            b, zb = m, zm
        else:
            a, za = m, zm
    t = 0.5 * (a + b)
    lo, hi = a - bisect_tol, b + bisect_tol
    n_newton = 0
    for _ in range(max_newton):
        zeta, dzeta = riemann_zeta_and_derivative(complex(0.5, t))
        # d/dt zeta(1/2 + it) = i zeta'
        step = (zeta.value / (1j * dzeta.value)).real
        if abs(step) > 0.1:
            step *= 0.5
        t_new = t - step
        if not lo <= t_new <= hi:
            raise ConvergenceError(f"Newton left the bracket [{lo}, {hi}]")
        n_newton += 1
        t = t_new
        if abs(step) <= 4e-16 * abs(t):
            break
    sp = SpectralPoint.on_critical_line(t)
    res = abs(riemann_zeta(sp.z).value)
    if not res < residual_tol:
        raise ConvergenceError(f"|zeta| = {res:.2e} above {residual_tol:g} at t = {t}")
    return ZeroRecord(index, t, sp.z, sp.E, res, {"bisections": n_bisect, "newton_steps": n_newton})


def find_zeros(t_lo: float, t_hi: float, step: float = 0.1,
               map_fn: Callable[[Callable, Iterable], Iterable] = map) -> list[ZeroRecord]:
    """Scan, refine and index the zeros with t_lo <= t <= t_hi.

    Indices count from the first zero above t = 0; ``map_fn`` may be an
    executor's map, the result is sorted by t regardless.
    """
    offset = len(scan_critical_line(0.0, t_lo, step)) if t_lo > 0 else 0
    brackets = scan_critical_line(t_lo, t_hi, step)
    jobs = [(br, offset + i + 1) for i, br in enumerate(brackets)]
    recs = list(map_fn(lambda job: refine_zero(job[0], job[1]), jobs))
    return sorted(recs, key=lambda r: r.t)


def zero_to_eigenvalue(z: complex) -> complex:
    """E = i(2z - 1); for Re z = 1/2 the imaginary part is exactly 0."""
    return SpectralPoint.from_z(z).E


def is_trivial_zero(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0 and z.real < 0 and z.real == math.floor(z.real) and int(z.real) % 2 == 0


def boundary_residual(record: ZeroRecord | complex, spec: HankelContourSpec = HankelContourSpec()) -> float:
    """|psi_z(0)| = |zeta(z)| recomputed through the Hankel-contour route."""
    z = record.z if isinstance(record, ZeroRecord) else complex(record)
    return abs(hurwitz_zeta_hankel(z, 0.0, spec).value)
