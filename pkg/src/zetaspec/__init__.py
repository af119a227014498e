"""Hurwitz-zeta eigenfunctions of a Berry-Keating type Hamiltonian, with
numerical verification of the operator, Fourier, WKB and spectral identities."""

__version__ = "0.1.0"

from .errors import (BranchError, ConvergenceError, DivergenceError, DomainError, PoleError,
                     PreconditionError, SingularityError, ZetaSpecError)
from .hurwitz import (EulerMaclaurinConfig, HankelContourSpec, hurwitz_zeta, hurwitz_zeta_hankel, psi,
                      riemann_zeta)
from .operators import (HalfLineFunction, hamiltonian_conjugated, hamiltonian_series, kubert_apply,
                        psi_function)
from .report import CheckRecord, VerificationReport, emit_report
from .spectral import ZeroRecord, find_zeros, refine_zero, scan_critical_line
from .values import SpectralPoint, TruncationMode, TruncationPolicy, ValueWithError

__all__ = [
    "BranchError", "CheckRecord", "ConvergenceError", "DivergenceError", "DomainError",
    "EulerMaclaurinConfig", "HalfLineFunction", "HankelContourSpec", "PoleError", "PreconditionError",
    "SingularityError", "SpectralPoint", "TruncationMode", "TruncationPolicy", "ValueWithError",
    "VerificationReport", "ZeroRecord", "ZetaSpecError", "emit_report", "find_zeros",
    "hamiltonian_conjugated", "hamiltonian_series", "hurwitz_zeta", "hurwitz_zeta_hankel",
    "kubert_apply", "psi", "psi_function", "refine_zero", "riemann_zeta", "scan_critical_line",
]
