"""Operator algebra on functions of the half line.

Delta f(x) = f(x) - f(x-1), its inverse -sum_{k>=1} f(x+k), the Berry-Keating
operator h_BK = -i(2x d/dx + 1), the Hamiltonian H = Delta^{-1} h_BK Delta
(applied by conjugation and by its Bernoulli-series form), Kubert operators
and partial sums of the dilation operator zeta(-i x p).

h_BK = xp + px with p = -i d/dx: xp f = -i x f', px f = -i (x f)' = -i(f + x f'),
so the sum is -i(2x f' + f).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DivergenceError, DomainError, PreconditionError
from .hurwitz import (DEFAULT_EM, EulerMaclaurinConfig, hurwitz_zeta, hurwitz_zeta_scaled,
                      psi_derivative, psi_derivative_values, psi_values)
from .quadrature import integrate_panels
from .scalar_core import BERNOULLI_MAX, log_abs_bernoulli_over_factorial
from .values import SpectralPoint, TruncationMode, TruncationPolicy, ValueWithError

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class HalfLineFunction:
    """A function on an open interval of the real line.

    func:       vectorised x -> complex values (set ``vectorized=False`` for scalar-only callables)
    domain:     open interval (lo, hi)
    derivative: optional analytic (x, k) -> k-th derivative
    decay:      sigma with f(x) = O(x^sigma) as x -> inf; -inf for exponential decay
    tail:       optional y -> sum_{j>=1} f(y + j) (a closed-form tail completion)
    error:      optional vectorised x -> bound on the evaluation error of func
    """

    func: Callable
    domain: tuple[float, float] = (-1.0, math.inf)
    derivative: Callable | None = None
    decay: float | None = None
    tail: Callable | None = None
    vectorized: bool = True
    error: Callable | None = None

    def __call__(self, x):
        if self.vectorized:
            return self.func(x)
        return np.vectorize(self.func, otypes=[complex])(x)

    def value(self, x: float) -> complex:
        self.check(x)
        return complex(np.asarray(self(np.array([float(x)])))[0])

    def check(self, x) -> None:
        lo, hi = self.domain
        xs = np.atleast_1d(x)
        if np.any(xs <= lo) or np.any(xs >= hi):
            raise DomainError(f"argument outside the domain ({lo}, {hi})")

    def deriv(self, x: float, k: int = 1) -> ValueWithError:
        """k-th derivative; analytic if available, otherwise finite differences
        (flagged in the diagnostics)."""
        self.check(x)
        if k == 0:
            return ValueWithError(self.value(x), 0.0)
        if self.derivative is not None:
            d = self.derivative(x, k)
            return d if isinstance(d, ValueWithError) else ValueWithError(d, 0.0)
        return _finite_difference(self, x, k)


_STENCILS = {
    1: (np.array([-2, -1, 1, 2]), np.array([1, -8, 8, -1]) / 12.0),
    2: (np.array([-2, -1, 0, 1, 2]), np.array([-1, 16, -30, 16, -1]) / 12.0),
}


def _finite_difference(f: HalfLineFunction, x: float, k: int) -> ValueWithError:
    # 4th-order central stencil, one Richardson step (h -> h/2)
    if k not in _STENCILS:
        raise DomainError("finite-difference fallback supports k = 1, 2 only")
    offs, w = _STENCILS[k]
    h = EPS ** 0.2 * max(1.0, abs(x))
    lo, hi = f.domain
    h = min(h, (x - lo) / 2.5, (hi - x) / 2.5)

    def d(step):
        vals = np.asarray(f(x + offs * step), dtype=complex)
        return complex(np.dot(w, vals)) / step ** k, float(np.dot(np.abs(w), np.abs(vals))) / step ** k

    d1, m1 = d(h)
    d2, m2 = d(h / 2)
    rich = (16.0 * d2 - d1) / 15.0
    err = abs(d2 - d1) / 15.0 + 4 * EPS * m2
    return ValueWithError(rich, err, diagnostics={"finite_difference": True, "h": h})


# ----------------------------------------------------------- factories

def power_function(z: complex) -> HalfLineFunction:
    """phi_z(x) = x^{-z} on x > 0, with analytic derivatives and a zeta tail."""
    z = complex(z)

    def func(x):
        return np.exp(-z * np.log(np.asarray(x, dtype=float)))

    def derivative(x, k):
        c = complex(1.0)
        for j in range(k):
            c *= -(z + j)
        return c * cmath.exp(-(z + k) * math.log(x))

    def tail(y):
        return hurwitz_zeta(z, y + 1.0)

    return HalfLineFunction(func, (0.0, math.inf), derivative, -z.real, tail)


def psi_function(z: complex, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> HalfLineFunction:
    """psi_z(x) = -zeta(z, x+1) on x > -1."""
    z = complex(z)
    sp = SpectralPoint.from_z(z)

    def func(x):
        return psi_values(z, x, cfg)[0]

    def derivative(x, k):
        return psi_derivative(sp, x, k, cfg)

    def error(x):
        return psi_values(z, x, cfg)[1]

    return HalfLineFunction(func, (-1.0, math.inf), derivative, 1.0 - z.real, error=error)


# ----------------------------------------------------------- operators

def delta_apply(f: HalfLineFunction, x: float) -> complex:
    """Delta f(x) = f(x) - f(x-1)."""
    f.check(x)
    f.check(x - 1.0)
    v = np.asarray(f(np.array([x, x - 1.0])), dtype=complex)
    return complex(v[0] - v[1])


def delta_inv_apply(f: HalfLineFunction, x: float,
                    policy: TruncationPolicy = TruncationPolicy(TruncationMode.FIXED_K)) -> ValueWithError:
    """Delta^{-1} f(x) = -sum_{k>=1} f(x+k).

    With a tail completion the first K terms are summed and the rest taken from
    ``f.tail``.  Otherwise f must decay faster than 1/x; the neglected tail is
    bounded by an integral comparison (power decay) or a ratio test
    (exponential decay), and in tolerance mode K doubles until the bound is met.
    """
    f.check(x + 1.0)
    K = policy.K
    if f.tail is not None:
        ks = x + np.arange(1, K + 1)
        vals = np.asarray(f(ks), dtype=complex)
        s = vals.sum()
        t = f.tail(x + K)
        t = t if isinstance(t, ValueWithError) else ValueWithError(t, 0.0)
        total = s + t.value
        err = t.error + 4 * EPS * (np.abs(vals).sum() + abs(t.value))
        return ValueWithError(-total, err, K, {"K": K, "tail": "closed_form"})
    if f.decay is None or not f.decay < -1.0:
        raise PreconditionError("Delta^{-1} needs decay faster than 1/x or a tail completion")
    while True:
        ks = x + np.arange(1, K + 1)
        vals = np.asarray(f(ks), dtype=complex)
        s = vals.sum()
        last = abs(vals[-1])
        if math.isinf(f.decay):
            r = last / max(abs(vals[-2]), 1e-300) if K > 1 else 1.0
            bound = last * r / (1.0 - r) if r < 1.0 else math.inf
        else:
            # f ~ (y + c)^sigma: the last ratio fixes the effective base Y = y + c,
            # and sum_{j>=1} f(Y + j) <= int_Y^inf t^sigma dt = f(Y) Y / (-sigma - 1)
            Y = x + K
            if K > 1 and vals[-2] != 0:
                r = last / abs(vals[-2])
                if 0 < r < 1:
                    Y = max(Y, 1.0 / -math.expm1(math.log(r) / -f.decay))
            bound = last * Y / (-f.decay - 1.0)
        err = bound + 4 * EPS * np.abs(vals).sum()
        if policy.mode == TruncationMode.FIXED_K or err <= policy.tol * max(abs(s), 1e-300):
            return ValueWithError(-s, err, K, {"K": K, "tail": "bound"})
        if K >= 1 << 22:
            raise ConvergenceError(f"Delta^{{-1}} tail bound {err:.2e} not below tol after K={K}")
        K *= 2


def h_bk_apply(f: HalfLineFunction, x: float) -> ValueWithError:
    """h_BK f(x) = -i(2x f'(x) + f(x))."""
    fx = f.value(x)
    d = f.deriv(x, 1)
    v = -1j * (2.0 * x * d.value + fx)
    err = 2.0 * abs(x) * d.error + 2 * EPS * (abs(2 * x * d.value) + abs(fx))
    return ValueWithError(v, err, diagnostics=dict(d.diagnostics))


def hamiltonian_conjugated(sp: SpectralPoint, x: float,
                           policy: TruncationPolicy = TruncationPolicy(TruncationMode.FIXED_K),
                           cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """H psi_z(x) = Delta^{-1} h_BK Delta psi_z (x), applied numerically.

    g = h_BK Delta psi_z is evaluated at x+1, ..., x+K from psi and psi'; the
    tail sum_{k>K} g(x+k) is completed with the closed form
    h_BK Delta psi_z (y) = i(2z-1) y^{-z}, i.e. i(2z-1) zeta(z, x+K+1).
    """
    if not x > 0:
        raise DomainError("hamiltonian_conjugated needs x > 0")
    z = sp.z
    K = policy.K
    y = x + np.arange(1, K + 1, dtype=float)
    p1, e1 = psi_values(z, y, cfg)
    p0, e0 = psi_values(z, y - 1.0, cfg)
    d1, de1 = psi_derivative_values(z, y, 1, cfg)
    d0, de0 = psi_derivative_values(z, y - 1.0, 1, cfg)
    dpsi = p1 - p0
    ddpsi = d1 - d0
    g = -1j * (2.0 * y * ddpsi + dpsi)
    g_err = 2.0 * y * (de1 + de0) + e1 + e0 + 4 * EPS * (2 * y * (np.abs(d1) + np.abs(d0)) + np.abs(p1) + np.abs(p0))
    E = 1j * (2.0 * z - 1.0)
    tail = hurwitz_zeta(z, x + K + 1.0, cfg)
    s = g.sum()
    total = s + E * tail.value
    err = float(g_err.sum()) + abs(E) * tail.error + 4 * EPS * (float(np.abs(g).sum()) + abs(E * tail.value))
    return ValueWithError(-total, err, K, {"K": K, "tail": "zeta"})


def _series_terms(z: complex, x: float, kmax: int, cfg: EulerMaclaurinConfig):
    """T_k = B_k/k! psi^{(k)}(x) for k = 0..kmax, as (log|T_k|, T_k, error_k)."""
    a = x + 1.0
    la = math.log(a)
    lbf, sbf = log_abs_bernoulli_over_factorial(kmax)
    logs = np.full(kmax + 1, -np.inf)
    terms = np.zeros(kmax + 1, dtype=complex)
    errs = np.zeros(kmax + 1)
    # (z)_k kept as unit phase times exp(plog) to avoid overflow
    pm, plog = 1.0 + 0j, 0.0
    for k in range(kmax + 1):
        if k:
            pm *= z + k - 1
            m = abs(pm)
            if m == 0.0:
                break  # z a nonpositive integer: all later terms vanish
            plog += math.log(m)
            pm /= m
        if sbf[k] == 0.0:
            continue
        S = hurwitz_zeta_scaled(z + k, a, cfg)
        # psi^{(k)} = -(-1)^k (z)_k zeta(z+k, a),  zeta(z+k, a) = a^{-(z+k)} S
        L = lbf[k] + plog + cmath.log(pm) - (z + k) * la + cmath.log(S.value)
        sign = -sbf[k] * (-1.0) ** k
        logs[k] = L.real
        terms[k] = sign * cmath.exp(L) if L.real > -740 else 0.0
        errs[k] = abs(terms[k]) * (S.error / abs(S.value) + 4 * (k + 2) * EPS)
    return logs, terms, errs


def hamiltonian_series(sp: SpectralPoint, x: float,
                       policy: TruncationPolicy = TruncationPolicy(),
                       cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """Left side of i[2 sum_k B_k/k! psi^{(k)} - 2x psi' - psi], truncated per ``policy``.

    The Bernoulli series is asymptotic, not convergent: its terms shrink until
    k ~ 2 pi (x+1) and then grow factorially.  In optimal-term mode it is cut
    at its smallest term, which enters with weight 1/2 (the leading converging
    factor); that term's magnitude (times the outer factor 2) is the error
    estimate; the diagnostics carry the turnover index ``k_star`` and the
    log10 term magnitudes.
    """
    if not x > 0:
        raise DomainError("hamiltonian_series needs x > 0")
    z = sp.z
    kmax = min(BERNOULLI_MAX - 1, int(1.3 * 2 * math.pi * (x + 1.0)) + 30)
    if policy.mode == TruncationMode.FIXED_K:
        kmax = min(max(kmax, policy.K), BERNOULLI_MAX - 1)
    logs, terms, errs = _series_terms(z, x, kmax, cfg)
    nz = np.flatnonzero(np.isfinite(logs))
    turnover_reached = True
    if policy.mode == TruncationMode.OPTIMAL:
        k_star = int(nz[np.argmin(logs[nz])])
        if k_star <= 2 and len(nz) > 3:
            raise DivergenceError(f"Bernoulli series terms grow from the start at x={x}")
        turnover_reached = k_star < nz[-1]
    elif policy.mode == TruncationMode.FIXED_K:
        k_star = policy.K
    else:
        k_star = None
        s = 0j
        for k in nz:
            if abs(terms[k]) <= policy.tol * max(abs(s), 1e-300):
                k_star = int(k)
                break
            if k > 2 and logs[k] > logs[nz[nz < k][-1]]:
                raise ConvergenceError(f"series turned over at k={k} before reaching tol {policy.tol:g}")
            s += terms[k]
        if k_star is None:
            raise ConvergenceError("tolerance not reached within the Bernoulli cache")
    used = np.arange(kmax + 1) < k_star
    series = terms[used].sum()
    smallest = abs(terms[k_star]) if k_star <= kmax else 0.0
    if policy.mode == TruncationMode.OPTIMAL:
        series = series + 0.5 * terms[k_star]
    d1 = psi_derivative(sp, x, 1, cfg)
    p0 = terms[0]  # T_0 = B_0 psi = psi
    val = 1j * (2.0 * series - 2.0 * x * d1.value - p0)
    mag = 2 * float(np.abs(terms[used]).sum()) + abs(2 * x * d1.value) + abs(p0)
    err = (2.0 * smallest + 2 * float(errs[used].sum()) + 2 * x * d1.error + errs[0]
           + 4 * EPS * mag)
    diag = {
        "k_star": k_star,
        "smallest_term": smallest,
        "turnover_reached": bool(turnover_reached),
        "log10_terms": [(int(k), float(logs[k] / math.log(10))) for k in nz],
    }
    return ValueWithError(val, err, int(used.sum()), diag)


def kubert_apply(n: int, f: HalfLineFunction, x: float) -> complex:
    """T_n f(x) = sum_{k=0}^{n-1} f((x-k)/n)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    args = (x - np.arange(n)) / n
    f.check(args)
    return complex(np.asarray(f(args), dtype=complex).sum())


def dilation_partial(f: HalfLineFunction, x: float, N: int) -> ValueWithError:
    """sum_{n>=1} f(n x): N direct terms plus a tail from the midpoint
    Euler-Maclaurin rule  sum_{n>N} g(n) ~ int_{N+1/2}^inf g + g'(N+1/2)/24.

    The diagnostics hold the bare partial sum.
    """
    if N < 1:
        raise DomainError("N must be a positive integer")
    if not x > 0:
        raise DomainError("dilation_partial needs x > 0")
    if f.decay is None or not f.decay < -1.0:
        raise PreconditionError("sum f(nx) converges absolutely only for decay faster than 1/x")
    n = np.arange(1, N + 1, dtype=float)
    vals = np.asarray(f(n * x), dtype=complex)
    partial = complex(vals.sum())
    g = np.asarray(f(np.arange(N, N + 4, dtype=float) * x), dtype=complex)
    # int_{c}^inf g(u) du with u = c e^s
    c = N + 0.5
    sigma = f.decay
    rate = 1.0 if math.isinf(sigma) else -sigma - 1.0
    s_max = 45.0 / rate
    freq = 1.0
    if f.derivative is not None:
        # oscillation of x^{-z}-like data in the log variable
        freq = max(1.0, abs(f.deriv(c * x, 1).value) * c * x / max(abs(f.value(c * x)), 1e-300))
    width = min(0.5, 4.0 / freq)
    edges = np.linspace(0.0, s_max, max(2, math.ceil(s_max / width)) + 1)
    integ, qerr, _ = integrate_panels(lambda s: np.asarray(f(c * np.exp(s) * x), dtype=complex) * c * np.exp(s),
                                      edges, 16)
    d1 = g[1] - g[0]
    d3 = g[3] - 3 * g[2] + 3 * g[1] - g[0]
    tail = integ + d1 / 24.0
    err = (2.0 * abs(d3) * (7.0 / 5760.0 + 1.0 / 576.0) + qerr
           + 4 * EPS * (float(np.abs(vals).sum()) + abs(integ)))
    return ValueWithError(partial + tail, err, N, {"partial_sum": partial, "tail": tail})


# ------------------------------------------------------------ isometry

def bk_flow(f: HalfLineFunction, lam: float) -> HalfLineFunction:
    """(U_lam f)(x) = e^{-lam} f(e^{-2 lam} x), the flow generated by h_BK."""
    s, d = math.exp(-lam), math.exp(-2.0 * lam)
    lo, hi = f.domain
    return HalfLineFunction(lambda x: s * np.asarray(f(d * np.asarray(x, dtype=float))),
                            (lo / d, hi / d), decay=f.decay)


def l2_norm(f: HalfLineFunction, x_max: float, width: float, n: int = 16) -> ValueWithError:
    """sqrt(int_0^{x_max} |f|^2) by Gauss-Legendre panels of the given width."""
    edges = np.linspace(0.0, x_max, max(1, math.ceil(x_max / width)) + 1)
    v, e, m = integrate_panels(lambda x: np.abs(np.asarray(f(x))) ** 2, edges, n)
    nrm = math.sqrt(max(v.real, 0.0))
    return ValueWithError(nrm, e / (2 * max(nrm, 1e-300)), m)


def isometry_check(f: HalfLineFunction, lam: float, x_max: float, width: float):
    """(||f||, ||U_lam f||), the latter integrated on the image of the grid."""
    scale = math.exp(2.0 * lam)
    return l2_norm(f, x_max, width), l2_norm(bk_flow(f, lam), x_max * scale, width * scale)
