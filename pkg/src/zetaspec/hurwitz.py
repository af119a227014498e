"""Hurwitz and Riemann zeta functions and the eigenfunction psi_z(x) = -zeta(z, x+1).

Two independent evaluation routes are provided:

* Euler-Maclaurin summation (`hurwitz_zeta`, vectorised in the second argument
  by `hurwitz_zeta_array`);
* quadrature of the Hankel-contour integral

      -zeta(z, x+1) = Gamma(1-z)/(2 pi i) * int_C e^{xt} t^{z-1} / (1 - e^{-t}) dt

  (`hurwitz_zeta_hankel`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .quadrature import integrate_panels
from .scalar_core import bernoulli_over_factorial, digamma, gamma, log_gamma, pochhammer
from .values import SpectralPoint, ValueWithError

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Parameters of the Euler-Maclaurin evaluation of zeta(z, a).

    ``direct_terms`` is a lower bound on N (None: chosen from |z|); the number
    of correction terms M grows up to ``correction_terms`` until the first
    omitted one is below ``target_tol`` relative to the value.
    """

    direct_terms: int | None = None
    correction_terms: int = 60
    target_tol: float = 1e-15
    max_doublings: int = 6

    def __post_init__(self):
        if self.direct_terms is not None and self.direct_terms < 1:
            raise ValueError("direct_terms must be >= 1")
        if not 1 <= self.correction_terms <= 250:
            raise ValueError("correction_terms must lie in [1, 250] (Bernoulli cache / 2)")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")


DEFAULT_EM = EulerMaclaurinConfig()


def _direct_count(z: complex, a: np.ndarray, cfg: EulerMaclaurinConfig, scale: float) -> np.ndarray:
    target = scale * (abs(z) + 10.0)
    n = np.maximum(1, np.ceil(target - a.real)).astype(int)
    if cfg.direct_terms is not None:
        n = np.maximum(n, cfg.direct_terms)
    return n


def _em_once(z: complex, a: np.ndarray, cfg: EulerMaclaurinConfig, scale: float, scaled: bool = False):
    # scaled=True returns a^z zeta(z, a), which stays representable when
    # zeta itself would underflow (large Re z)
    n = _direct_count(z, a, cfg, scale)
    nmax = int(n.max())
    k = np.arange(nmax)
    base = a[:, None] + k[None, :]
    shift = np.log(a) if scaled else np.zeros(len(a))
    terms = np.exp(-z * (np.log(base) - shift[:, None]))
    terms[k[None, :] >= n[:, None]] = 0.0
    direct = terms.sum(axis=1)
    mag = np.abs(terms).sum(axis=1)

    A = a + n
    logA = np.log(A)
    pw = np.exp(-z * (logA - shift))  # A^{-z}, times a^z if scaled
    integral = A * pw / (z - 1.0)
    s = direct + integral + 0.5 * pw
    mag = mag + np.abs(integral) + 0.5 * np.abs(pw)

    bf = bernoulli_over_factorial(2 * cfg.correction_terms + 2)
    # j-th correction: B_{2j}/(2j)! (z)_{2j-1} A^{-z-2j+1}
    poch = complex(z)  # (z)_1
    apow = pw / A  # A^{-z-1}
    inv_a2 = 1.0 / (A * A)
    done = np.zeros(len(a), dtype=bool)
    err = np.zeros(len(a))
    M = np.zeros(len(a), dtype=int)
    for j in range(1, cfg.correction_terms + 2):
        term = bf[2 * j] * poch * apow
        at = np.abs(term)
        if j == cfg.correction_terms + 1:
            err = np.where(done, err, at)
            break
        small = at <= cfg.target_tol * np.abs(s)
        newly = small & ~done
        err = np.where(newly, at, err)
        M = np.where(newly, j - 1, M)
        done |= small
        if done.all():
            break
        s = np.where(done, s, s + term)
        mag = np.where(done, mag, mag + at)
        poch *= (z + 2 * j - 1) * (z + 2 * j)
        apow = apow * inv_a2
    exp_err = 1.0 + abs(z) * np.log(np.abs(A) + 2.0)
    rounding = 4.0 * EPS * exp_err * mag
    return s, err + rounding, done, n, M


def hurwitz_zeta_array(z: complex, a, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised Euler-Maclaurin zeta(z, a) over an array of a (Re a > 0).

    Returns (values, error_estimates) as numpy arrays shaped like ``a``.
    """
    z = complex(z)
    if z == 1:
        raise PoleError("zeta(z, a) has a pole at z = 1")
    a_arr = np.atleast_1d(np.asarray(a, dtype=complex))
    shape = np.shape(a)
    flat = a_arr.ravel()
    if np.any(flat.real <= 0):
        raise DomainError("hurwitz_zeta requires Re a > 0")
    scale = 1.0
    for _ in range(cfg.max_doublings + 1):
        vals, errs, ok, _, _ = _em_once(z, flat, cfg, scale)
        if ok.all():
            return vals.reshape(shape), errs.reshape(shape)
        scale *= 2.0
    raise ConvergenceError(f"Euler-Maclaurin did not reach tol {cfg.target_tol:g} for z={z}")


def hurwitz_zeta(z: complex, a: complex, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """zeta(z, a) = sum_{k>=0} (a+k)^{-z}, analytically continued in z."""
    z = complex(z)
    if z == 1:
        raise PoleError("zeta(z, a) has a pole at z = 1")
    a_arr = np.array([complex(a)])
    if a_arr[0].real <= 0:
        raise DomainError("hurwitz_zeta requires Re a > 0")
    scale = 1.0
    for _ in range(cfg.max_doublings + 1):
        vals, errs, ok, n, M = _em_once(z, a_arr, cfg, scale)
        if ok[0]:
            return ValueWithError(vals[0], errs[0], int(n[0]) + int(M[0]),
                                  {"N": int(n[0]), "M": int(M[0])})
        scale *= 2.0
    raise ConvergenceError(f"Euler-Maclaurin did not reach tol {cfg.target_tol:g} for z={z}, a={a}")


def hurwitz_zeta_scaled(w: complex, a: float, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """a^w zeta(w, a) for Re a > 0; equals 1 + O((a/(a+1))^{Re w}) for large Re w."""
    w = complex(w)
    if w == 1:
        raise PoleError("zeta(z, a) has a pole at z = 1")
    a_arr = np.array([complex(a)])
    if a_arr[0].real <= 0:
        raise DomainError("hurwitz_zeta requires Re a > 0")
    scale = 1.0
    for _ in range(cfg.max_doublings + 1):
        vals, errs, ok, n, M = _em_once(w, a_arr, cfg, scale, scaled=True)
        if ok[0]:
            return ValueWithError(vals[0], errs[0], int(n[0]) + int(M[0]))
        scale *= 2.0
    raise ConvergenceError(f"Euler-Maclaurin did not reach tol {cfg.target_tol:g} for z={w}, a={a}")


def riemann_zeta_and_derivative(z: complex, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """(zeta(z), zeta'(z)) by Euler-Maclaurin at a = 1 and its term-wise z-derivative."""
    z = complex(z)
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    zeta = hurwitz_zeta(z, 1.0, cfg)
    n = zeta.diagnostics["N"]
    bf = bernoulli_over_factorial(2 * cfg.correction_terms + 2)

    k = np.arange(1, n + 1, dtype=float)
    lk = np.log(k)
    t = np.exp(-z * lk)
    d = -(lk * t).sum()
    mag = np.abs(lk * t).sum()
    A = float(n + 1)
    la = math.log(A)
    pw = cmath.exp(-z * la)
    integ = A * pw / (z - 1.0)
    d += -la * integ - integ / (z - 1.0) - 0.5 * la * pw
    mag += abs(la * integ) + abs(integ / (z - 1.0)) + abs(0.5 * la * pw)

    P, dP = complex(z), 1.0 + 0j  # (z)_{2j-1} and its z-derivative
    apow = pw / A
    err = 0.0
    for j in range(1, cfg.correction_terms + 2):
        term = bf[2 * j] * (dP - la * P) * apow
        if abs(term) <= cfg.target_tol * max(abs(d), 1e-300) or j == cfg.correction_terms + 1:
            err = abs(term)
            break
        d += term
        mag += abs(term)
        for m in (2 * j - 1, 2 * j):
            dP = dP * (z + m) + P
            P = P * (z + m)
        apow /= A * A
    rounding = 4.0 * EPS * (1.0 + abs(z) * math.log(A + 2.0)) * mag
    return zeta, ValueWithError(d, err + rounding, zeta.terms)


def riemann_zeta(z: complex, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """zeta(z) on the whole plane; for Re z < 0 the functional equation is used so
    that Euler-Maclaurin never sums the large alternating terms of a deep left
    half-plane argument."""
    z = complex(z)
    if z.real >= 0.0:
        return hurwitz_zeta(z, 1.0, cfg)
    if z.imag == 0.0 and z.real == math.floor(z.real) and int(z.real) % 2 == 0:
        return ValueWithError(0.0, 0.0, 0, {"trivial_zero": True})
    w = 1.0 - z
    zw = hurwitz_zeta(w, 1.0, cfg)
    fac = cmath.exp(z * math.log(2.0) + (z - 1.0) * math.log(math.pi) + log_gamma(w)) * cmath.sin(math.pi * z / 2)
    v = fac * zw.value
    return ValueWithError(v, abs(fac) * zw.error + 8 * EPS * abs(v) * (1 + abs(z)), zw.terms,
                          {"reflected": True})


# ----------------------------------------------------------------- psi

def psi(sp: SpectralPoint, x: float, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """psi_z(x) = -zeta(z, x+1), for x > -1."""
    if not x > -1.0:
        raise DomainError("psi_z(x) is defined for x > -1")
    return -hurwitz_zeta(sp.z, x + 1.0, cfg)


def psi_values(z: complex, x, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised psi_z(x) for an array of x > -1; returns (values, errors)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= -1.0):
        raise DomainError("psi_z(x) is defined for x > -1")
    v, e = hurwitz_zeta_array(z, x + 1.0, cfg)
    return -v, e


def _polynomial_derivative(z: complex, k: int) -> float | None:
    # For z = -m, psi_z is a polynomial of degree m + 1: the (m+1)-th derivative
    # is the limit (z)_k zeta(z+k) -> (-1)^m m! (a zero times the pole), giving
    # m!, and all higher ones vanish.
    if z.imag != 0.0 or z.real > 0 or z.real != math.floor(z.real):
        return None
    m = int(-z.real)
    if k < m + 1:
        return None
    return float(math.factorial(m)) if k == m + 1 else 0.0


_LAURENT_RADIUS = 1e-7


def _pole_rounding(z: complex, k: int) -> float:
    d = abs(z + (k - 1))
    return EPS * (abs(z) + k) / d if d > 0 else 0.0


def _near_pole_derivative(z: complex, x: np.ndarray, k: int):
    # z = -(k-1) + delta with tiny delta: (z)_k zeta(z+k, a) is a zero times a pole.
    # With zeta(1+delta, a) = 1/delta - digamma(a) + O(delta) the product is
    # (z)_{k-1} (1 - delta digamma(a)) + O(delta^2 ln^2 a).
    delta = z + (k - 1)
    if k < 1 or delta == 0 or abs(delta) >= _LAURENT_RADIUS:
        return None
    P = pochhammer(z, k - 1)
    a = np.asarray(x, dtype=float) + 1.0
    dg = np.array([digamma(v) for v in a.ravel()]).reshape(a.shape)
    vals = -((-1) ** k) * P * (1.0 - delta * dg)
    errs = abs(P) * (abs(delta) ** 2 * (1.0 + np.log(a + 1.0) ** 2) + 2 * k * EPS * (1.0 + np.abs(delta * dg)))
    return vals.astype(complex), errs


def psi_derivative(sp: SpectralPoint, x: float, k: int,
                   cfg: EulerMaclaurinConfig = DEFAULT_EM) -> ValueWithError:
    """k-th x-derivative of psi_z: -(-1)^k (z)_k zeta(z+k, x+1)."""
    if k < 0:
        raise DomainError("derivative order must be nonnegative")
    if not x > -1.0:
        raise DomainError("psi_z(x) is defined for x > -1")
    z = sp.z
    poly = _polynomial_derivative(z, k)
    if poly is not None:
        return ValueWithError(poly, 0.0, 0, {"polynomial": True})
    near = _near_pole_derivative(z, np.array([float(x)]), k)
    if near is not None:
        return ValueWithError(complex(near[0][0]), float(near[1][0]), 0, {"laurent": True})
    coef = -((-1) ** k) * pochhammer(z, k)
    h = hurwitz_zeta(z + k, x + 1.0, cfg)
    # (z)_k carries ~k roundings; forming z + k near the pole at 1 loses |z|/|z+k-1| more
    return h.scaled(coef, rel_err=2 * (k + 1) * EPS + _pole_rounding(z, k))


def psi_derivative_values(z: complex, x, k: int, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised psi_z^{(k)}(x); returns (values, errors)."""
    x = np.asarray(x, dtype=float)
    poly = _polynomial_derivative(complex(z), k)
    if poly is not None:
        return np.full(x.shape, complex(poly)), np.zeros(x.shape)
    near = _near_pole_derivative(complex(z), x, k)
    if near is not None:
        return near
    coef = -((-1) ** k) * pochhammer(z, k)
    v, e = hurwitz_zeta_array(complex(z) + k, x + 1.0, cfg)
    out = coef * v
    return out, abs(coef) * e + (2 * (k + 1) * EPS + _pole_rounding(complex(z), k)) * np.abs(out)


# ------------------------------------------------------------ Hankel route

@dataclass(frozen=True)
class HankelContourSpec:
    """Geometry and resolution of the Hankel path.

    The path is a circle of radius r about t = 0 (``circle_radius`` is an
    upper bound; r shrinks like 1/(x+1) for large x) joined to two rays that leave
    it at angles pi - beta (above) and -(pi - beta) (below) and run outward a
    distance ``ray_length`` (None: chosen from the decay rate).  ``min_ray_angle``
    is the smallest beta; on the side where |t^{z-1}| is amplified by
    e^{|Im z| |arg t|} the ray is swung further towards the imaginary axis.
    """

    circle_radius: float = 1.0
    ray_length: float | None = None
    nodes_per_segment: int = 16
    min_ray_angle: float = math.pi / 6
    tol: float = 1e-10
    max_refinements: int = 3

    def __post_init__(self):
        if not 0 < self.circle_radius < 2 * math.pi:
            raise DomainError("Hankel circle radius must lie in (0, 2 pi) to avoid t = +-2 pi i")
        if self.ray_length is not None and not self.ray_length > 0:
            raise DomainError("ray_length must be positive")
        if not 0 < self.min_ray_angle < math.pi / 2:
            raise DomainError("min_ray_angle must lie in (0, pi/2)")


DEFAULT_HANKEL = HankelContourSpec()


def _hankel_open(z: complex, x: float, spec: HankelContourSpec, n: int):
    c = x + 1.0
    # |t^{z-1} e^{ct}| peaks near |t| ~ |z-1|/c; a unit circle at large x would
    # carry e^{c} against a result of size c^{1-z}
    r = min(spec.circle_radius, (abs(z - 1.0) + 1.0) / c)
    lg = log_gamma(1.0 - z)
    amp = abs(z.imag)
    beta_big = max(spec.min_ray_angle, math.pi / 2 - 1.5 / max(amp, 1e-300)) if amp > 0 else spec.min_ray_angle
    # Im z > 0 amplifies the lower ray (arg t < 0), Im z < 0 the upper one
    beta_lo = beta_big if z.imag > 0 else spec.min_ray_angle
    beta_hi = beta_big if z.imag < 0 else spec.min_ray_angle

    def kernel(t):
        return np.exp(lg + (z - 1.0) * np.log(t) + c * t) / np.expm1(t)

    total = 0j
    err = 0.0
    evals = 0
    # circle, counterclockwise from -(pi - beta_lo) to (pi - beta_hi)
    th0, th1 = -(math.pi - beta_lo), math.pi - beta_hi
    rate = abs(z - 1.0) + c * r + 4.0
    npan = max(4, math.ceil((th1 - th0) * rate / 6.0))
    v, e, m = integrate_panels(lambda th: kernel(r * np.exp(1j * th)) * 1j * r * np.exp(1j * th),
                               np.linspace(th0, th1, npan + 1), n)
    total += v
    err += e
    evals += m
    for beta, sign in ((beta_lo, -1.0), (beta_hi, 1.0)):
        direction = cmath.exp(1j * sign * (math.pi - beta))
        decay = c * math.cos(beta)
        # integrand magnitude at the circle, to size the ray
        mag0 = abs(kernel(np.array([r * direction]))[0]) + 1e-300
        L = spec.ray_length
        if L is None:
            L = (max(0.0, math.log(mag0)) + 40.0 + abs(z.real - 1) * 5) / decay
        phase_rate = c * math.sin(beta) + amp / r + abs(z.real - 1) / r
        h = min(1.0 / max(c * math.cos(beta), 1e-3), 6.0 / phase_rate)
        edges = np.arange(0.0, L + h, h) + r
        edges[-1] = r + L
        f = (lambda s, d=direction: kernel(s * d) * d)
        v, e, m = integrate_panels(f, edges, n)
        tail = abs(kernel(np.array([(r + L) * direction]))[0]) / decay
        # inward ray (below) runs from infinity to the circle
        total += -v if sign < 0 else v
        err += e + tail
        evals += m
    val = total / (2j * math.pi)
    return val, err / (2 * math.pi), evals


_COLLAPSE_RADIUS = 0.25


def _near_positive_integer(z: complex) -> bool:
    n = round(z.real)
    return n >= 2 and abs(z - n) <= _COLLAPSE_RADIUS


def _hankel_collapsed(z: complex, x: float, spec: HankelContourSpec, n: int):
    # For Re z > 1 the rays may be pushed onto the cut and the circle shrunk to
    # zero: the Hankel integral becomes -1/Gamma(z) int_0^inf t^{z-1} e^{-xt}/(e^t-1) dt.
    # Near a positive integer the open contour loses everything to the
    # Gamma(1-z) pole, so this form is used there.  (0, 1] is integrated in
    # u = ln t, where the integrand decays like e^{(Re z - 1) u}.
    c = x + 1.0
    # the result scales like c^{1-z}; below u_min the integrand is under
    # e^{(Re z - 1) u} (t/(e^t-1) <= 1, e^{-xt} <= e^{t} for x > -1)
    u_min = -40.0 / (z.real - 1.0) - math.log(c)
    cut = math.exp((z.real - 1.0) * u_min + math.exp(u_min)) / (z.real - 1.0)
    lo = integrate_panels(lambda u: np.exp(z * u - x * np.exp(u)) / np.expm1(np.exp(u)),
                          np.linspace(u_min, 0.0, max(8, math.ceil(-u_min)) + 1), n)
    L = 1.0 + (40.0 + 2 * z.real) / c
    hi = integrate_panels(lambda t: np.exp((z - 1.0) * np.log(t) - x * t) / np.expm1(t),
                          np.linspace(1.0, L, max(8, math.ceil((L - 1.0) * c)) + 1), n)
    g = gamma(z)
    return -(lo[0] + hi[0]) / g, (lo[1] + hi[1] + cut) / abs(g), lo[2] + hi[2]


def hurwitz_zeta_hankel(z: complex, x: float, spec: HankelContourSpec = DEFAULT_HANKEL) -> ValueWithError:
    """-zeta(z, x+1) (that is, psi_z(x)) from the Hankel-contour integral."""
    z = complex(z)
    if not x > -1.0:
        raise DomainError("Hankel route requires x > -1")
    if z == 1.0:
        raise PoleError("zeta(z, a) has a pole at z = 1")
    integer = _near_positive_integer(z)
    n = spec.nodes_per_segment
    for _ in range(spec.max_refinements + 1):
        if integer:
            val, err, evals = _hankel_collapsed(z, x, spec, n)
        else:
            val, err, evals = _hankel_open(z, x, spec, n)
        if err <= spec.tol * max(1.0, abs(val)):
            return ValueWithError(val, err, evals, {"nodes_per_segment": n, "collapsed": integer})
        n *= 2
    raise ConvergenceError(f"Hankel quadrature estimate {err:.2e} above tol {spec.tol:g} (z={z}, x={x})")
