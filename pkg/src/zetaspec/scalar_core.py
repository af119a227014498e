"""Complex scalar building blocks: Γ, log Γ, Bernoulli numbers, Pochhammer
symbols and complex powers with an explicit branch cut.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError

# Godfrey's Lanczos coefficients, g = 607/128, 15 terms.
LANCZOS_G = 607.0 / 128.0
LANCZOS_COEFFS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

BERNOULLI_MAX = 512


def _check_pole(z: complex) -> None:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"Gamma has a pole at z = {z.real:g}")


def _lanczos_log(z: complex) -> complex:
    # log Γ(z) for Re z >= 1/2
    zm = z - 1.0
    a = LANCZOS_COEFFS[0]
    for k in range(1, len(LANCZOS_COEFFS)):
        a += LANCZOS_COEFFS[k] / (zm + k)
    t = zm + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(a)


def log_gamma(z: complex) -> complex:
    """Principal branch of log Γ(z), continuous on C minus (-inf, 0].

    For Re z < 1/2 the argument is shifted upward with the recurrence
    log Γ(z) = log Γ(z + n) - sum log(z + k), which preserves the principal
    branch (a log-form reflection formula would need branch bookkeeping).
    """
    z = complex(z)
    _check_pole(z)
    if z.real >= 0.5:
        return _lanczos_log(z)
    n = math.ceil(0.5 - z.real)
    acc = 0j
    for k in range(n):
        acc += cmath.log(z + k)
    return _lanczos_log(z + n) - acc


def gamma(z: complex) -> complex:
    """Γ(z), by Lanczos for Re z >= 1/2 and reflection otherwise."""
    z = complex(z)
    _check_pole(z)
    if z.real >= 0.5:
        return cmath.exp(_lanczos_log(z))
    return math.pi / (cmath.sin(math.pi * z) * cmath.exp(_lanczos_log(1.0 - z)))


def pochhammer(z: complex, k: int) -> complex:
    """Rising factorial (z)_k = z (z+1) ... (z+k-1), with (z)_0 = 1."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    out = 1.0 + 0j
    z = complex(z)
    for j in range(k):
        out *= z + j
    return out


# ---------------------------------------------------------------- Bernoulli

_bern_lock = threading.Lock()
_bern_exact: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(n: int) -> None:
    # B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k, with B_1 = -1/2
    with _bern_lock:
        for m in range(len(_bern_exact), n + 1):
            if m > 1 and m % 2 == 1:
                _bern_exact.append(Fraction(0))
                continue
            s = Fraction(0)
            c = 1  # C(m+1, 0)
            for k in range(m):
                if _bern_exact[k]:
                    s += c * _bern_exact[k]
                c = c * (m + 1 - k) // (k + 1)
            _bern_exact.append(-s / (m + 1))


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact rational (B_1 = -1/2)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > BERNOULLI_MAX:
        raise OverflowError(f"Bernoulli index {n} exceeds the cache maximum {BERNOULLI_MAX}")
    if n >= len(_bern_exact):
        _extend_bernoulli(n)
    return _bern_exact[n]


def bernoulli(n: int) -> float:
    """B_n rounded to binary64.

    Raises OverflowError if the index exceeds the cache or B_n is too large
    for a double (n >~ 260).
    """
    return float(bernoulli_exact(n))


_bf_cache: np.ndarray = np.zeros(0)


def bernoulli_over_factorial(n_max: int) -> np.ndarray:
    """Array of B_k / k! for k = 0..n_max, each rounded once from the exact ratio."""
    global _bf_cache
    if len(_bf_cache) <= n_max:
        bernoulli_exact(n_max)
        vals = []
        f = 1
        for k in range(n_max + 1):
            if k:
                f *= k
            vals.append(float(_bern_exact[k] / f))
        _bf_cache = np.array(vals)
    return _bf_cache[: n_max + 1]


# ------------------------------------------------------------------ branches

@dataclass(frozen=True)
class BranchConvention:
    """Where the cut of Log sits, and how (-1)^z is read.

    ``cut_direction`` is the angle of the ray carrying the cut.  Log is
    normalised so that Log(1) = 0: for a cut at angle phi in (0, pi] the
    argument lies in (phi - 2 pi, phi]; for phi in (-pi, 0) it lies in
    (phi, phi + 2 pi].  (-1)^z is always e^{i pi z}.
    """

    cut_direction: float = math.pi

    def __post_init__(self):
        if not (-math.pi < self.cut_direction <= math.pi) or self.cut_direction == 0.0:
            raise DomainError("cut_direction must lie in (-pi, pi] and be nonzero")


PRINCIPAL = BranchConvention(math.pi)
NEG_IMAG_CUT = BranchConvention(-math.pi / 2)


def branch_arg(w: complex, conv: BranchConvention = PRINCIPAL) -> float:
    phi = conv.cut_direction
    a = cmath.phase(w)
    if phi > 0:
        if a > phi:
            a -= 2.0 * math.pi
        elif a <= phi - 2.0 * math.pi:
            a += 2.0 * math.pi
    else:
        if a <= phi:
            a += 2.0 * math.pi
    return a


def branch_log(w: complex, conv: BranchConvention = PRINCIPAL) -> complex:
    w = complex(w)
    if w == 0:
        raise DomainError("log of zero")
    return complex(math.log(abs(w)), branch_arg(w, conv))


def on_cut(w: complex, conv: BranchConvention, rtol: float = 1e-14) -> bool:
    """True if w lies on the cut ray (within a relative angular tolerance)."""
    if w == 0:
        return True
    d = cmath.phase(w * cmath.exp(-1j * conv.cut_direction))
    return abs(d) <= rtol


def branch_power(base: complex, exponent: complex, conv: BranchConvention = PRINCIPAL) -> complex:
    """base**exponent = exp(exponent * Log(base)) with Log cut along ``conv``."""
    base = complex(base)
    if base == 0:
        raise DomainError("branch_power: zero base")
    if base == -1.0:
        return cmath.exp(1j * math.pi * complex(exponent))
    return cmath.exp(complex(exponent) * branch_log(base, conv))


_lbf_cache: tuple[np.ndarray, np.ndarray] | None = None


def log_abs_bernoulli_over_factorial(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """(log|B_k/k!|, sign(B_k)) for k = 0..n_max, without underflow.

    Vanishing entries get log = -inf and sign 0.
    """
    global _lbf_cache
    if _lbf_cache is None or len(_lbf_cache[0]) <= n_max:
        bernoulli_exact(n_max)
        logs = np.full(n_max + 1, -np.inf)
        signs = np.zeros(n_max + 1)
        for k in range(n_max + 1):
            b = _bern_exact[k]
            if b:
                logs[k] = math.log(abs(b.numerator)) - math.log(b.denominator) - math.lgamma(k + 1)
                signs[k] = 1.0 if b > 0 else -1.0
        _lbf_cache = (logs, signs)
    return _lbf_cache[0][: n_max + 1], _lbf_cache[1][: n_max + 1]


def digamma(a: float) -> float:
    """psi(a) = Gamma'(a)/Gamma(a) for real a > 0 (recurrence up to a >= 10, then
    the asymptotic series ln a - 1/(2a) - sum B_2k / (2k a^2k))."""
    if not a > 0:
        raise DomainError("digamma is implemented for real a > 0")
    acc = 0.0
    while a < 10.0:
        acc -= 1.0 / a
        a += 1.0
    inv2 = 1.0 / (a * a)
    s = 0.0
    p = inv2
    for k in range(1, 8):
        s += float(bernoulli_exact(2 * k)) / (2 * k) * p
        p *= inv2
    return acc + math.log(a) - 0.5 / a - s
