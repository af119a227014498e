"""Momentum-space machinery for psi_z(x) = -zeta(z, x+1) on the half line.

Conventions
-----------
F(w) = int_0^inf f(x) e^{ixw} dx  (analytic for Im w above the growth rate of f),
f(x) = (1/2 pi) int_{i eps - inf}^{i eps + inf} F(w) e^{-iwx} dw, which returns
f(x) for x > 0, 0 for x < 0 and f(0+)/2 at x = 0.

Powers p^{z-1} and (-ip)^{z-1} use a Log cut along the negative imaginary axis,
and (-1)^z = e^{i pi z}.

The transform of psi_z, obtained by closing the Hankel contour of its integral
representation and collecting the residues at t = -ip and t = 2 pi i k, is

    psi_hat(p) = Gamma(1-z) [ (-ip)^{z-1}/(1 - e^{ip})
                 - i (2pi)^{z-1} ( e^{i pi (z-1)/2} S_+(p) + e^{-i pi (z-1)/2} S_-(p) ) ],
    S_{+-}(p) = sum_{k>=1} k^{z-1}/(p +- 2 pi k).

``psi_hat_printed`` evaluates the widely quoted variant with the bracket
(S_+ - (-1)^z S_-) instead; it does not reproduce the transform and is kept
only for comparison.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .hurwitz import hurwitz_zeta, riemann_zeta
from .operators import HalfLineFunction
from .quadrature import geometric_edges, integrate_panels, panel_nodes
from .scalar_core import gamma, log_gamma
from .values import SpectralPoint, ValueWithError

EPS = np.finfo(float).eps
TWO_PI = 2.0 * math.pi


def log_neg_imag_cut(w):
    """Vectorised Log with its cut along the negative imaginary axis: arg in (-pi/2, 3pi/2]."""
    w = np.asarray(w, dtype=complex)
    lg = np.log(w)
    ang = lg.imag
    ang = np.where(ang <= -math.pi / 2, ang + TWO_PI, ang)
    return lg.real + 1j * ang


def power_neg_imag_cut(base, exponent: complex):
    return np.exp(exponent * log_neg_imag_cut(base))


# ------------------------------------------------------------------ configs

@dataclass(frozen=True)
class SeriesAccelerationConfig:
    """Direct terms K plus a tail for the sums S_+-(p).

    ``zeta_tail`` expands 1/(p +- 2 pi k) in p/(2 pi k) and sums the tail with
    Hurwitz zeta values (K is raised to at least |p|/pi so the expansion ratio
    is <= 1/2); ``integral_comparison`` uses the Euler-Maclaurin remainder
    int_K^inf g - g(K)/2 - g'(K)/12 with the integral done by quadrature.
    """

    K: int = 32
    tail_method: str = "zeta_tail"
    tol: float = 1e-15

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if self.tail_method not in ("zeta_tail", "integral_comparison"):
            raise ValueError("tail_method must be 'zeta_tail' or 'integral_comparison'")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class ShiftedLineSpec:
    """Integration line Im w = eps, central window |Re w| <= U.

    For the inversion integral the part of the integrand that decays only like
    1/w is removed with a model sum_n a_n (i/(w + i beta))^n fitted beyond U and
    inverted exactly; U is doubled (at most ``max_doublings`` times) until the
    remaining tail bound is below ``tol``.
    """

    eps: float = 1.0
    U: float = 60.0
    nodes: int = 16
    tol: float = 1e-10
    model_terms: int = 5
    beta: float = 1.0
    max_doublings: int = 3

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("the integration line must lie strictly above the real axis (eps > 0)")
        if not self.U > 0 or self.nodes < 2 or self.model_terms < 1 or not self.beta > 0:
            raise DomainError("invalid ShiftedLineSpec")


@dataclass(frozen=True)
class HalfLineSpec:
    """Quadrature of int_0^X f(x) e^{ixw} dx.

    ``alpha`` is the growth exponent required of Im w, ``max_panel`` caps the panel
    length (which is also tied to pi/|Re w|), and X is chosen so that
    |f(X)| e^{-X Im w} is below ``tol``.
    """

    alpha: float = 0.0
    tol: float = 1e-13
    nodes: int = 16
    max_panel: float = 1.0


# ---------------------------------------------------------- closed form

def _ksums(z: complex, p: np.ndarray, cfg: SeriesAccelerationConfig):
    if z.real >= 1.0:
        raise ConvergenceError("the k-sums converge only for Re z < 1")
    pmax = float(np.max(np.abs(p))) if p.size else 0.0
    K = max(cfg.K, math.ceil(pmax / math.pi) + 1)
    k = np.arange(1, K + 1, dtype=float)
    kz = np.exp((z - 1.0) * np.log(k))
    sp = np.empty(p.shape, dtype=complex)
    sm = np.empty(p.shape, dtype=complex)
    mag = np.empty(p.shape)
    for s in range(0, p.size, 512):
        blk = p[s:s + 512, None]
        a = kz / (blk + TWO_PI * k)
        b = kz / (blk - TWO_PI * k)
        sp[s:s + 512] = a.sum(axis=1)
        sm[s:s + 512] = b.sum(axis=1)
        mag[s:s + 512] = np.abs(a).sum(axis=1) + np.abs(b).sum(axis=1)
    err = 4 * EPS * mag
    if cfg.tail_method == "zeta_tail":
        tp, tm, te = _tail_zeta(z, p, K, cfg)
    else:
        tp, tm, te = _tail_integral(z, p, K)
    return sp + tp, sm + tm, err + te, K


def _tail_zeta(z: complex, p: np.ndarray, K: int, cfg: SeriesAccelerationConfig):
    # sum_{k>K} k^{z-1}/(p + 2 pi k) = (1/2pi) sum_m (-p/2pi)^m zeta(2-z+m, K+1)
    r = p / TWO_PI
    tp = np.zeros(p.shape, dtype=complex)
    tm = np.zeros(p.shape, dtype=complex)
    err = np.zeros(p.shape)
    powm = np.ones(p.shape, dtype=complex)
    for m in range(200):
        zt = hurwitz_zeta(2.0 - z + m, K + 1.0)
        term = powm * zt.value
        sgn = (-1.0) ** m
        tp += sgn * term
        tm -= term
        err += 2 * np.abs(powm) * zt.error
        last = np.abs(term)
        if np.all(last <= cfg.tol * 1e-3 * np.maximum(np.abs(tp), 1e-300)) or np.all(last == 0):
            # geometric ratio <= 1/2: remainder bounded by the last term
            err += 2 * last
            break
        powm = powm * r
    else:
        raise ConvergenceError("zeta-tail expansion did not converge")
    return tp / TWO_PI, tm / TWO_PI, err / TWO_PI


def _tail_integral(z: complex, p: np.ndarray, K: int):
    # Euler-Maclaurin: sum_{k>K} g = int_K^inf g - g(K)/2 - g'(K)/12 + O(g''')
    decay = 1.0 - z.real
    s_max = 45.0 / decay
    width = min(0.5, 4.0 / max(abs(z.imag), 1e-9))
    edges = np.linspace(0.0, s_max, max(2, math.ceil(s_max / width)) + 1)
    out = []
    for sign in (1.0, -1.0):
        nodes, w = panel_nodes(edges, 32)
        nodes2, w2 = panel_nodes(edges, 16)

        def integ(nd, wt):
            kk = K * np.exp(nd)
            g = np.exp((z - 1.0) * np.log(kk)) * kk
            vals = np.empty(p.shape, dtype=complex)
            mags = np.empty(p.shape)
            for s in range(0, p.size, 256):
                m = g / (p[s:s + 256, None] + sign * TWO_PI * kk)
                vals[s:s + 256] = m @ wt
                mags[s:s + 256] = np.abs(m) @ np.abs(wt)
            return vals, mags

        i1, mg = integ(nodes, w)
        i2, _ = integ(nodes2, w2)
        kz = K ** (z - 1.0)
        den = p + sign * TWO_PI * K
        gK = kz / den
        dgK = (z - 1.0) * kz / K / den - sign * TWO_PI * kz / den ** 2
        tail = i1 - gK / 2 - dgK / 12
        g3 = np.abs(gK) * (abs((z - 2) * (z - 3) * (z - 4)) + 6 * TWO_PI ** 3 * K ** 3 / np.abs(den) ** 3) / K ** 3
        out.append((tail, np.abs(i1 - i2) + 8 * EPS * mg + 2 * g3 / 720))
    return out[0][0], out[1][0], out[0][1] + out[1][1]


def _check_p(p: np.ndarray) -> None:
    if np.any(p.imag <= 0):
        raise DomainError("psi_hat is evaluated for Im p > 0")


def psi_hat_values(z: complex, p, cfg: SeriesAccelerationConfig = SeriesAccelerationConfig(),
                   form: str = "corrected"):
    """Vectorised closed-form transform; returns (values, error estimates)."""
    z = complex(z)
    if z.imag == 0 and z.real == math.floor(z.real) and z.real >= 1:
        raise PoleError("Gamma(1-z) has a pole at positive integer z")
    p = np.atleast_1d(np.asarray(p, dtype=complex))
    _check_p(p)
    Sp, Sm, kerr, K = _ksums(z, p, cfg)
    g1z = gamma(1.0 - z)
    lead = power_neg_imag_cut(-1j * p, z - 1.0) / (-np.expm1(1j * p))
    c = -1j * cmath.exp((z - 1.0) * math.log(TWO_PI))
    if form == "corrected":
        ep, em = cmath.exp(0.5j * math.pi * (z - 1.0)), cmath.exp(-0.5j * math.pi * (z - 1.0))
        bracket = ep * Sp + em * Sm
        berr = (abs(ep) + abs(em)) * kerr
    elif form == "printed":
        mz = cmath.exp(1j * math.pi * z)
        bracket = Sp - mz * Sm
        berr = (1 + abs(mz)) * kerr
    else:
        raise ValueError("form must be 'corrected' or 'printed'")
    val = g1z * (lead + c * bracket)
    err = abs(g1z) * (abs(c) * berr + 8 * EPS * (np.abs(lead) + abs(c) * (np.abs(Sp) + np.abs(Sm))))
    return val, err


def psi_hat_closed(sp: SpectralPoint, p: complex,
                   cfg: SeriesAccelerationConfig = SeriesAccelerationConfig()) -> ValueWithError:
    v, e = psi_hat_values(sp.z, [p], cfg)
    return ValueWithError(v[0], e[0])


def psi_hat_printed(sp: SpectralPoint, p: complex,
                    cfg: SeriesAccelerationConfig = SeriesAccelerationConfig()) -> ValueWithError:
    v, e = psi_hat_values(sp.z, [p], cfg, form="printed")
    return ValueWithError(v[0], e[0])


# ------------------------------------------------------ half-line forward

def _forward_grid(f: HalfLineFunction, v_min: float, u_max: float, spec: HalfLineSpec):
    if not v_min > spec.alpha:
        raise DomainError(f"forward transform needs Im w > alpha = {spec.alpha}")
    growth = max(f.decay, 0.0) if f.decay is not None and math.isfinite(f.decay) else 0.0
    X = 10.0
    for _ in range(50):
        X_new = (math.log(1.0 / spec.tol) + growth * math.log(X + 2.0)) / v_min + 1.0
        if abs(X_new - X) < 1e-3:
            break
        X = X_new
    if f.decay is not None and math.isinf(f.decay) and f.decay < 0:
        # exponentially decaying data (assumed eventually monotone): stop at the
        # first probe where |f| e^{-xv} is below tol here and one step further
        Y = 1.0
        while 1.25 * Y < X:
            if all(abs(f.value(q)) * math.exp(-q * v_min) < spec.tol for q in (Y, 1.25 * Y)):
                X = Y
                break
            Y *= 1.25
    width = min(spec.max_panel, math.pi / max(u_max, 1e-300))
    edges = np.linspace(0.0, X, max(2, math.ceil(X / width)) + 1)
    return edges, X, growth


def forward_halfline_ft_many(f: HalfLineFunction, ws, spec: HalfLineSpec = HalfLineSpec()):
    """F(w) = int_0^inf f(x) e^{ixw} dx for an array of w on a common panel grid.

    Returns (values, error estimates).  The estimate is the 2n-vs-n node
    difference plus a rounding floor, plus the propagated evaluation error
    of f when ``f.error`` is given, plus the bound
    |f(X)| e^{-X v} / (v - growth/X) on the truncated tail.
    """
    ws = np.atleast_1d(np.asarray(ws, dtype=complex))
    v_min = float(ws.imag.min())
    u_max = float(np.abs(ws.real).max())
    edges, X, growth = _forward_grid(f, v_min, u_max, spec)
    n1, w1 = panel_nodes(edges, spec.nodes)
    n2, w2 = panel_nodes(edges, 2 * spec.nodes)
    f1 = np.asarray(f(n1), dtype=complex) * w1
    f2 = np.asarray(f(n2), dtype=complex) * w2
    a2 = np.abs(f2)
    d2 = None if f.error is None else np.abs(w2) * np.asarray(f.error(n2), dtype=float)
    out = np.empty(ws.shape, dtype=complex)
    err = np.empty(ws.shape)
    for s in range(0, ws.size, 64):
        wb = ws[s:s + 64, None]
        i1 = np.exp(1j * wb * n1) @ f1
        e2 = np.exp(1j * wb * n2)
        i2 = e2 @ f2
        out[s:s + 64] = i2
        err[s:s + 64] = np.abs(i2 - i1) + 8 * EPS * (np.abs(e2) @ a2)
        if d2 is not None:
            err[s:s + 64] += np.abs(e2) @ d2
    fX = abs(f.value(X))
    v = ws.imag
    denom = np.maximum(v - growth / X, 1e-3 * v)
    err += fX * np.exp(-X * v) / denom
    return out, err


def forward_halfline_ft(f: HalfLineFunction, w: complex, spec: HalfLineSpec = HalfLineSpec()) -> ValueWithError:
    v, e = forward_halfline_ft_many(f, [w], spec)
    return ValueWithError(v[0], e[0])


# ------------------------------------------------------ shifted-line inverse

def _model_inverse(a: np.ndarray, x: float, beta: float) -> complex:
    # (1/2pi) int (i/(w + i beta))^n e^{-iwx} dw = x^{n-1} e^{-beta x}/(n-1)!  (x > 0)
    if x < 0:
        return 0j
    if x == 0:
        return 0.5 * a[0]
    return complex(sum(a[n - 1] * x ** (n - 1) * math.exp(-beta * x) / math.factorial(n - 1)
                       for n in range(1, len(a) + 1)))


def _fit_model(fit_w: np.ndarray, Fw: np.ndarray, nm: int, beta: float, scale: float):
    base = 1j / (fit_w + 1j * beta)
    B = np.stack([(base * scale) ** n for n in range(1, nm + 1)], axis=1)
    coef, *_ = np.linalg.lstsq(B, Fw, rcond=None)
    return coef * scale ** np.arange(1, nm + 1), Fw - B @ coef


def _model_tail(d: np.ndarray, x: float, eps: float, beta: float, edges: np.ndarray, nodes: int) -> float:
    # |(1/2 pi) int_{|Re w| > U} m_d(w) e^{-iwx} dw| for the model with coefficients d
    def m(u):
        w = u + 1j * eps
        return sum(d[n - 1] * (1j / (w + 1j * beta)) ** n for n in range(1, len(d) + 1)) * np.exp(-1j * w * x)

    inner, qerr, _ = integrate_panels(m, edges, nodes)
    return abs(_model_inverse(d, x, beta) - inner / TWO_PI) + qerr / TWO_PI


def inverse_halfline_ft(F: Callable, x: float, spec: ShiftedLineSpec = ShiftedLineSpec()) -> ValueWithError:
    """(1/2 pi) int_{Im w = eps} F(w) e^{-iwx} dw.

    ``F`` must accept a numpy array of w.  The slowly decaying part of F is
    removed by a fitted model with an exact inverse; the remainder is
    integrated over |Re w| <= U by Gauss-Legendre panels.
    """
    eps, beta, nm = spec.eps, spec.beta, spec.model_terms
    U = spec.U
    width = min(1.0, eps, 6.0 / max(abs(x), 1e-300))
    for _ in range(spec.max_doublings + 1):
        fit_u = np.concatenate([-np.geomspace(U, 4 * U, 4 * nm)[::-1], np.geomspace(U, 4 * U, 4 * nm)])
        fit_w = fit_u + 1j * eps
        Fw = np.asarray(F(fit_w), dtype=complex)
        a, R = _fit_model(fit_w, Fw, nm, beta, U)
        # |R| ~ c/|u|^{nm+1}: tail beyond U bounded by |R(U)| U / nm on each side
        edge = np.abs(R[[4 * nm - 1, 4 * nm]])
        tail = float(edge.sum()) * U / nm * math.exp(eps * x) / TWO_PI
        if nm > 1:
            # the fitted coefficients carry the unresolved higher orders; the
            # shift against a fit one order lower, with a safety factor of 4
            # (the observed undershoot is up to 2x), is the model's part of the tail
            a_lo = np.append(_fit_model(fit_w, Fw, nm - 1, beta, U)[0], 0)
            edges = np.linspace(-U, U, max(2, math.ceil(2 * U / width)) + 1)
            tail += 4.0 * _model_tail(a - a_lo, x, eps, beta, edges, spec.nodes)
        if tail <= spec.tol:
            break
        U *= 2.0
    edges = np.linspace(-U, U, max(2, math.ceil(2 * U / width)) + 1)

    def integrand(u):
        w = u + 1j * eps
        m = sum(a[n - 1] * (1j / (w + 1j * beta)) ** n for n in range(1, nm + 1))
        return (np.asarray(F(w), dtype=complex) - m) * np.exp(-1j * w * x)

    val, qerr, nev = integrate_panels(integrand, edges, spec.nodes)
    res = val / TWO_PI + _model_inverse(a, x, beta)
    err = qerr / TWO_PI + tail
    return ValueWithError(res, err, nev, {"U": U, "model": [complex(c) for c in a], "tail_bound": tail})


def zeta_integral_check(sp: SpectralPoint, spec: ShiftedLineSpec = ShiftedLineSpec(),
                        cfg: SeriesAccelerationConfig = SeriesAccelerationConfig()) -> ValueWithError:
    """int_{Im p = eps} psi_hat_z(p) dp, with its ratio to zeta(z) in the diagnostics.

    By the inversion theorem at the jump x = 0 this equals 2 pi * psi_z(0+)/2
    = -pi zeta(z); the ratio is therefore -pi for every z.
    """
    if not sp.z.real < 1.0:
        raise ConvergenceError("closed-form transform needs Re z < 1")

    def F(p):
        return psi_hat_values(sp.z, p, cfg)[0]

    inv = inverse_halfline_ft(F, 0.0, spec)
    val = TWO_PI * inv.value
    zeta = riemann_zeta(sp.z)
    diag = dict(inv.diagnostics)
    diag["zeta"] = zeta.value
    diag["ratio"] = val / zeta.value if abs(zeta.value) > 1e-6 else None
    return ValueWithError(val, TWO_PI * inv.error, inv.terms, diag)


# ------------------------------------------------------ momentum ODE

def momentum_g(z: complex, p):
    """g(p) = p^{z-1} / (1 - e^{-ip}) with the negative-imaginary-axis cut."""
    p = np.asarray(p, dtype=complex)
    return power_neg_imag_cut(p, complex(z) - 1.0) / (-np.expm1(-1j * p))


def momentum_solution_and_residual(sp: SpectralPoint, p: complex) -> tuple[complex, complex]:
    """g(p) and the residual [2p/(1-e^{ip})] g + 2ip g' + i g - E g, with g' in closed form."""
    z = sp.z
    p = complex(p)
    if p == 0:
        raise DomainError("p = 0 is a branch point")
    if p.imag == 0 and p.real != 0 and abs(p.real / TWO_PI - round(p.real / TWO_PI)) < 1e-15:
        raise PoleError("g has poles at p = 2 pi k")
    lp = complex(log_neg_imag_cut(p))
    pz1 = cmath.exp((z - 1.0) * lp)
    pz2 = cmath.exp((z - 2.0) * lp)
    one_m = -complex(np.expm1(-1j * p))  # 1 - e^{-ip}
    g = pz1 / one_m
    gp = (z - 1.0) * pz2 / one_m - 1j * pz1 * cmath.exp(-1j * p) / one_m ** 2
    res = 2 * p / (-complex(np.expm1(1j * p))) * g + 2j * p * gp + 1j * g - sp.E * g
    return g, res


def naive_inversion_check(z: complex, x: float, spec: ShiftedLineSpec = ShiftedLineSpec(U=2 * math.pi * 6.5)) -> ValueWithError:
    """f(x) = (1/2 pi) int_{Im p = eps} e^{-ipx} g(p) dp for x <= 1.

    The line is integrated over |Re p| <= U; the two remaining half-lines are
    turned upward onto the vertical rays Re p = +-U (no singularities lie above
    the line, and e^{-ipx} g(p) ~ e^{(x-1) Im p} |p|^{Re z - 1} on the rays).
    """
    z = complex(z)
    if not z.real < 0:
        raise DomainError("naive inversion is checked for Re z < 0")
    if x > 1:
        raise DomainError("the upward deformation is valid for x <= 1 only")
    eps, U, n = spec.eps, spec.U, spec.nodes

    def h(p):
        # e^{-ipx}/(1 - e^{-ip}) = e^{ip(1-x)}/(e^{ip} - 1), bounded in the upper half-plane
        return power_neg_imag_cut(p, z - 1.0) * np.exp(1j * p * (1.0 - x)) / np.expm1(1j * p)

    width = min(0.5, eps / 2)
    edges = np.linspace(-U, U, max(2, math.ceil(2 * U / width)) + 1)
    v_line, e_line, m1 = integrate_panels(lambda u: h(u + 1j * eps), edges, n)
    S = 1e6
    redges = geometric_edges(0.0, S, 0.25, 1.5)
    # line from -U to U; the right half-line equals +int_0^inf h(U + i(eps+s)) i ds,
    # the left one -int_0^inf h(-U + i(eps+s)) i ds
    total, err, nev = v_line, e_line, m1
    for side in (1.0, -1.0):
        v, e, m = integrate_panels(lambda s, c=side * U: h(c + 1j * (eps + s)) * 1j, redges, n)
        total += side * v
        err += e
        nev += m
    pS = abs(complex(U, eps + S))
    tail = 2 * pS ** (z.real - 1) * math.exp((x - 1) * (eps + S)) * S / abs(z.real)
    val = total / TWO_PI
    return ValueWithError(val, (err + tail) / TWO_PI, nev)


# ------------------------------------------------------ Hurwitz expansion identity

def _polylog_unit(s: complex, mu: float, tol: float = 1e-17):
    """Li_s(e^{i mu}) for Re s > 1 and mu in [-pi, pi], via
    Li_s(e^w) = Gamma(1-s)(-w)^{s-1} + sum_k zeta(s-k) w^k/k!   (|w| < 2 pi),
    with the harmonic-number form for integer s."""
    w = 1j * mu
    if mu == 0:
        zv = riemann_zeta(s)
        return zv.value, zv.error
    is_int = s.imag == 0 and s.real == math.floor(s.real)
    n_int = int(s.real) if is_int else None
    acc = 0j
    err = 0.0
    if is_int:
        harm = sum(1.0 / j for j in range(1, n_int))
        lead = w ** (n_int - 1) / math.factorial(n_int - 1) * (harm - cmath.log(-w))
    else:
        lead = cmath.exp(log_gamma(1.0 - s)) * cmath.exp((s - 1.0) * cmath.log(-w))
    acc += lead
    wk = 1.0 + 0j
    small = 0
    for k in range(400):
        if k:
            wk *= w / k
        if is_int and k == n_int - 1:
            continue
        zv = riemann_zeta(s - k)
        t = zv.value * wk
        acc += t
        err += abs(wk) * zv.error + 4 * EPS * abs(t)
        if abs(t) <= tol * abs(acc):
            small += 1
            if small >= 3:
                err += abs(t)
                break
        else:
            small = 0
    else:
        raise ConvergenceError("polylog expansion did not converge")
    return acc, err + 4 * EPS * abs(lead)


def hurwitz_expansion_identity(z: complex, x: float) -> ValueWithError:
    """Difference of the two sides of

        zeta(z, x)/Gamma(1-z) = -i (2pi)^{z-1} ( e^{i pi z/2} Li_{1-z}(e^{2 pi i x})
                                                - e^{-i pi z/2} Li_{1-z}(e^{-2 pi i x}) ),

    valid for 0 < x <= 1 and Re z < 0.  Diagnostics hold both sides.
    """
    z = complex(z)
    if not (z.real < 0 and 0 < x <= 1):
        raise ConvergenceError("the expansion converges only for Re z < 0 and 0 < x <= 1")
    lhs_z = hurwitz_zeta(z, x)
    g1z = gamma(1.0 - z)
    lhs = lhs_z.value / g1z
    lhs_err = lhs_z.error / abs(g1z) + 16 * EPS * abs(lhs)
    s = 1.0 - z
    mu = TWO_PI * x
    mu = mu - TWO_PI * round(mu / TWO_PI)  # into [-pi, pi]
    lp, ep = _polylog_unit(s, mu)
    lm, em = _polylog_unit(s, -mu)
    c = -1j * cmath.exp((z - 1.0) * math.log(TWO_PI))
    a, b = cmath.exp(0.5j * math.pi * z), cmath.exp(-0.5j * math.pi * z)
    rhs = c * (a * lp - b * lm)
    rhs_err = abs(c) * (abs(a) * ep + abs(b) * em) + 8 * EPS * abs(c) * (abs(a * lp) + abs(b * lm))
    diff = lhs - rhs
    return ValueWithError(diff, lhs_err + rhs_err, diagnostics={"lhs": lhs, "rhs": rhs})

