"""WKB terms of the Bernoulli-series eigenvalue equation.

With u = iE/(2x) the closed forms are

    S0 = (iE/2) ln x
    S1 = -(1/2) ln x - ln(1 - e^{-u})
    S2 = 1/(2x(e^u - 1)) - iE (1 + e^u) / (4x^2 (1 - e^u)^2)

For large x (small u) both S1 and S2 cancel catastrophically if evaluated as
written.  S1 uses expm1.  S2 is rewritten as

    S2 = i/E + R(u)/(2x),   R(u) = 1/(e^u - 1) - u(2 + (e^u - 1))/(e^u - 1)^2 + 1/u
                                 = sum_m r_m u^m,
    r_m = (2m+1) B_{m+1}/(m+1)! + B_m/m!,

and R is summed from its Taylor series for |u| < 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .scalar_core import bernoulli_over_factorial
from .values import SpectralPoint

SERIES_RADIUS = 0.5
_R_TERMS = 40
_GUARD_RTOL = 1e-6
_GUARD_MMAX = 10 ** 6


def _r_coeffs() -> np.ndarray:
    bf = bernoulli_over_factorial(_R_TERMS + 1)
    m = np.arange(_R_TERMS)
    return (2 * m + 1) * bf[1:_R_TERMS + 1] + bf[:_R_TERMS]


_R = _r_coeffs()


@dataclass(frozen=True)
class WkbTerms:
    s0: complex
    s1: complex
    s2: complex
    at_x: float
    for_E: complex

    @property
    def total(self) -> complex:
        return self.s0 + self.s1 + self.s2


def singular_points(E: complex, m_max: int = 10) -> list[float]:
    """x > 0 where e^{iE/2x} = 1 (only for real E): |E|/(4 pi m)."""
    E = complex(E)
    if E.imag != 0.0 or E.real == 0.0:
        return []
    return [abs(E.real) / (4 * math.pi * m) for m in range(1, m_max + 1)]


def _guard(E: complex, x: float) -> complex:
    if not x > 0:
        raise DomainError("WKB terms are defined for x > 0")
    E = complex(E)
    u = 1j * E / (2.0 * x)
    if E.imag == 0.0 and E.real != 0.0:
        m = round(abs(E.real) / (4 * math.pi * x))
        if 1 <= m <= _GUARD_MMAX:
            xm = abs(E.real) / (4 * math.pi * m)
            if abs(x - xm) <= _GUARD_RTOL * xm:
                raise SingularityError(f"x={x} within 1e-6 of the singular point E/(4 pi m), m={m}")
    if u != 0 and cmath.exp(u) == 1:
        raise SingularityError("e^{iE/2x} = 1")
    return u


def _r_of_u(u: complex) -> complex:
    if abs(u) < SERIES_RADIUS:
        # Horner
        acc = 0j
        for c in _R[::-1]:
            acc = acc * u + c
        return acc
    em = cmath.exp(u) - 1.0 if abs(u) > 1.0 else complex(np.expm1(u))
    return 1.0 / em - u * (2.0 + em) / (em * em) + 1.0 / u


def s0(E: complex, x: float) -> complex:
    if not x > 0:
        raise DomainError("S0 is defined for x > 0")
    return 0.5j * complex(E) * math.log(x)


def s1(E: complex, x: float) -> complex:
    u = _guard(E, x)
    if u == 0:
        raise SingularityError("S1 diverges at E = 0 (1 - e^{-u} = 0)")
    return -0.5 * math.log(x) - cmath.log(-complex(np.expm1(-u)))


def s2(E: complex, x: float) -> complex:
    u = _guard(E, x)
    E = complex(E)
    if E == 0:
        # R(0)/(2x) with the i/E pole: S2 itself is singular at E = 0
        raise SingularityError("S2 has an i/E term, singular at E = 0")
    return 1j / E + _r_of_u(u) / (2.0 * x)


def s2_printed(E: complex, x: float) -> complex:
    """S2 evaluated literally as displayed (cancels badly for large x)."""
    u = _guard(E, x)
    eu = cmath.exp(u)
    return 1.0 / (2 * x * (eu - 1.0)) - 1j * E * (1.0 + eu) / (4 * x * x * (1.0 - eu) ** 2)


def wkb_terms(E: complex, x: float) -> WkbTerms:
    return WkbTerms(s0(E, x), s1(E, x), s2(E, x), float(x), complex(E))


def wkb_psi(sp: SpectralPoint, x: float) -> complex:
    """exp(S0 + S1 + S2) with hbar = 1."""
    E = sp.E
    if E.imag == 0.0 and not x > abs(E.real) / (4 * math.pi):
        raise SingularityError("wkb_psi needs x beyond the largest singular point |E|/(4 pi)")
    return cmath.exp(wkb_terms(E, x).total)


# ---------------------------------------------------------------- derivatives

def _em1(u: complex) -> complex:
    return complex(np.expm1(u))


def s1_prime(E: complex, x: float) -> complex:
    """S1'(x) = -1/(2x) + iE / (2x^2 (e^{iE/2x} - 1))."""
    u = _guard(E, x)
    return -0.5 / x + 1j * E / (2 * x * x * _em1(u))


def s2_prime(E: complex, x: float) -> complex:
    """S2'(x) in the factored closed form obtained from the Bernoulli relations."""
    u = _guard(E, x)
    iE = 1j * complex(E)
    em = _em1(u)
    eu = em + 1.0
    first = (1 / (2 * x)) * (-1 / x + iE / (x * x * em)) * (1 / em - iE * eu / (2 * x * em * em))
    second = iE / (4 * x ** 3) * (2 * eu / em ** 2 + iE * eu / (2 * x * em ** 2)
                                 - iE * eu * eu / (x * em ** 3))
    return first + second


def s2_prime_series(E: complex, x: float, n_terms: int = 200) -> complex:
    """S2'(x) = (1/x) sum_n B_n/n! [n S0'^{n-1} S1' + n(n-1)/2 S0'^{n-2} S0''],
    summed term by term (convergent for |S0'| = |E|/2x < 2 pi)."""
    u = _guard(E, x)
    if abs(u) >= 2 * math.pi:
        raise DomainError("Bernoulli sum diverges for |E|/(2x) >= 2 pi")
    bf = bernoulli_over_factorial(n_terms)
    sp1 = s1_prime(E, x)
    s0pp = -u / x
    acc = 0j
    for n in range(1, n_terms + 1):
        if bf[n] == 0.0:
            continue
        t = n * u ** (n - 1) * sp1
        if n >= 2:
            t += 0.5 * n * (n - 1) * u ** (n - 2) * s0pp
        acc += bf[n] * t
    return acc / x


def s2_prime_relations(E: complex, x: float) -> complex:
    """S2' from the Bernoulli-sum form using the two closed-form generating sums

        sum_{k>=1} B_k t^{k-1}/(k-1)! = 1/(e^t-1) - t e^t/(e^t-1)^2
        sum_{k>=2} B_k t^{k-2}/(k-2)! = -(t+2)e^t/(e^t-1)^2 + 2t e^{2t}/(e^t-1)^3
    """
    u = _guard(E, x)
    em = _em1(u)
    eu = em + 1.0
    g1 = 1 / em - u * eu / em ** 2
    g2 = -(u + 2) * eu / em ** 2 + 2 * u * eu * eu / em ** 3
    return (g1 * s1_prime(E, x) + 0.5 * g2 * (-u / x)) / x


# ---------------------------------------------------------------- balances

def _central(f, x: float, h: float) -> complex:
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def balance_residuals(E: complex, x: float, n_terms: int = 200) -> dict:
    """Residuals of the order hbar^-1, hbar^0 and hbar^1 equations at x.

    hbar^-1:  -2i x S0' - E      (S0' by central differences of s0)
    hbar^0:   -1 - 2x S1' + 2 sum_k B_k/k! S0'^k   (sum truncated at n_terms)
    hbar^1:   Bernoulli-sum S2' minus the closed factored S2'
    """
    E = complex(E)
    h = 1e-3 * x
    d0 = _central(lambda t: s0(E, t), x, h)
    u = _guard(E, x)
    bf = bernoulli_over_factorial(n_terms)
    ssum = sum(bf[k] * u ** k for k in range(n_terms + 1))
    r1 = s2_prime_series(E, x, n_terms)
    r2 = s2_prime(E, x)
    return {
        "order_-1": abs(-2j * x * d0 - E),
        "order_0": abs(-1 - 2 * x * s1_prime(E, x) + 2 * ssum),
        "order_1": abs(r1 - r2),
        "order_1_relations": abs(s2_prime_relations(E, x) - r2),
    }


# ------------------------------------------------------- asymptotic triple

@dataclass(frozen=True)
class WkbCoefficients:
    """e^{S2} ~ c0 [1 + c1/x + c2/x^2]; ``cond`` is the condition number of the
    scaled least-squares design matrix and ``residual`` its relative rms misfit."""

    c0: complex
    c1: complex
    c2: complex
    cond: float
    residual: float
    x_grid: tuple[float, ...]


def printed_coefficients(E: complex) -> tuple[complex, complex, complex]:
    """The triple (e^{7i/E}, 7/4, (49 - 10iE)/32) as displayed in the source."""
    E = complex(E)
    return cmath.exp(7j / E), 7 / 4 + 0j, (49 - 10j * E) / 32


def series_coefficients(E: complex) -> tuple[complex, complex, complex]:
    """Exact triple from the Taylor series of S2 in 1/x.

    S2 = i/E + sum_m A_m x^{-m-1} with A_m = r_m (iE/2)^m / 2, hence
    c0 = e^{i/E}, c1 = A_0, c2 = A_1 + A_0^2/2.
    """
    E = complex(E)
    a0 = _R[0] / 2
    a1 = _R[1] * (0.5j * E) / 2
    return cmath.exp(1j / E), complex(a0), a1 + a0 * a0 / 2


def wkb_asymptotic_coeffs(E: complex, n_points: int = 16, degree: int = 7,
                          x_min: float | None = None, x_max: float | None = None) -> WkbCoefficients:
    """Least-squares fit of e^{s2(E, x)} by a polynomial in 1/x on a geometric grid."""
    E = complex(E)
    if E == 0:
        raise DomainError("E must be nonzero")
    if n_points < 8 or n_points <= degree:
        raise DomainError("need at least 8 grid points and more points than coefficients")
    scale = max(abs(E), 1.0)
    x_min = 8.0 * scale if x_min is None else x_min
    x_max = 400.0 * scale if x_max is None else x_max
    xs = np.geomspace(x_min, x_max, n_points)
    ys = np.array([cmath.exp(s2(E, x)) for x in xs])
    t = x_min / xs  # in (0, 1]
    V = np.vander(t, degree + 1, increasing=True)
    coef, *_ = np.linalg.lstsq(V, ys, rcond=None)
    cond = float(np.linalg.cond(V))
    resid = float(np.linalg.norm(V @ coef - ys) / np.linalg.norm(ys))
    c0 = coef[0]
    c1 = coef[1] * x_min / c0
    c2 = coef[2] * x_min ** 2 / c0
    return WkbCoefficients(complex(c0), complex(c1), complex(c2), cond, resid, tuple(float(v) for v in xs))
