import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ZERO_ORDINATES
from zetaspec.errors import DivergenceError, DomainError, PreconditionError
from zetaspec.hurwitz import hurwitz_zeta, psi
from zetaspec.operators import (HalfLineFunction, delta_apply, delta_inv_apply, dilation_partial,
                                h_bk_apply, hamiltonian_conjugated, hamiltonian_series, isometry_check,
                                kubert_apply, power_function, psi_function)
from zetaspec.values import SpectralPoint, TruncationMode, TruncationPolicy

ZETA3 = 1.2020569031595942
PSI3_AT_2 = -0.07705690315959429  # -(zeta(3) - 1 - 1/8)
PSI2_AT_HALF = -0.9348022005446793


def gaussian():
    return HalfLineFunction(lambda x: np.exp(-np.asarray(x) ** 2) + 0j, (-math.inf, math.inf),
                            decay=-math.inf)


class TestDelta:
    @given(st.floats(0.5, 5), st.floats(-20, 20), st.floats(0.05, 40))
    def test_psi_difference_is_power(self, a, b, x):
        z = complex(a, b)
        if abs(z - 1) < 1e-6:
            return
        f = psi_function(z)
        d = delta_apply(f, x)
        ref = complex(mpmath.power(x, -z))
        # near z = 1 both values are ~1/(z-1), so the difference cancels
        cancel = 8 * 2.0 ** -52 * abs(f.value(x - 1))
        assert abs(d - ref) <= 1e-12 * abs(ref) + 1e-13 + cancel

    def test_constant_and_square(self):
        const = HalfLineFunction(lambda x: np.full(np.shape(x), 2.5 + 0j), (-math.inf, math.inf))
        sq = HalfLineFunction(lambda x: np.asarray(x, dtype=complex) ** 2, (-math.inf, math.inf))
        assert delta_apply(const, 4.0) == 0
        assert delta_apply(sq, 3.0) == 5

    def test_inverse_power(self):
        z = 2.5 + 1j
        r = delta_inv_apply(power_function(z), 1.5)
        assert abs(r.value - psi(SpectralPoint.from_z(z), 1.5).value) < 1e-13

    def test_inverse_geometric(self):
        f = HalfLineFunction(lambda x: 2.0 ** (-np.asarray(x)) + 0j, (-math.inf, math.inf), decay=-math.inf)
        r = delta_inv_apply(f, 0.0, TruncationPolicy(TruncationMode.TOLERANCE, tol=1e-15))
        assert r.value == pytest.approx(-1.0, abs=1e-14)

    def test_inverse_shifted_cube(self):
        f = HalfLineFunction(lambda x: (np.asarray(x) + 1.0) ** -3 + 0j, (-1.0, math.inf), decay=-3.0)
        r = delta_inv_apply(f, 1.0, TruncationPolicy(TruncationMode.TOLERANCE, K=64, tol=1e-6))
        ref = -(ZETA3 - 1 - 1 / 8)
        assert abs(r.value - ref) <= r.error
        assert r.error < 1e-6 * abs(ref)

    def test_inverse_needs_decay(self):
        f = HalfLineFunction(lambda x: np.asarray(x, dtype=complex) ** -0.5, (0.0, math.inf), decay=-0.5)
        with pytest.raises(PreconditionError):
            delta_inv_apply(f, 1.0)


class TestBerryKeating:
    def test_power_is_eigenfunction(self):
        z = 0.5 + 4j
        x = 2.0
        r = h_bk_apply(power_function(z), x)
        ref = 1j * (2 * z - 1) * x ** (-z)
        assert abs(r.value - ref) < 1e-14

    def test_constant(self):
        one = HalfLineFunction(lambda x: np.ones(np.shape(x), dtype=complex), (-math.inf, math.inf))
        r = h_bk_apply(one, 1.0)
        assert r.value == pytest.approx(-1j, abs=1e-9)
        assert r.diagnostics.get("finite_difference")

    def test_identity_function(self):
        f = HalfLineFunction(lambda x: np.asarray(x, dtype=complex), (-math.inf, math.inf),
                             derivative=lambda x, k: 1.0 if k == 1 else 0.0)
        assert h_bk_apply(f, 2.0).value == pytest.approx(-6j, abs=1e-15)


class TestHamiltonian:
    def test_integer_order(self):
        sp = SpectralPoint.from_z(3)
        r = hamiltonian_conjugated(sp, 2.0)
        assert abs(r.value - 5j * PSI3_AT_2) <= max(r.error, 1e-13)

    def test_first_zero(self):
        sp = SpectralPoint.on_critical_line(ZERO_ORDINATES[0])
        r = hamiltonian_conjugated(sp, 1.0)
        ref = sp.E * psi(sp, 1.0).value
        assert abs(r.value - ref) <= max(r.error, 1e-8 * abs(ref))
        assert sp.E.imag == 0

    def test_small_x(self):
        r = hamiltonian_conjugated(SpectralPoint.from_z(2), 0.5)
        assert abs(r.value - 3j * PSI2_AT_HALF) <= max(r.error, 1e-13)

    @given(st.floats(0, 6), st.floats(-20, 20), st.sampled_from([0.5, 1.0, 2.0, 5.0, 10.0]))
    def test_conjugated_eigen_relation(self, a, b, x):
        z = complex(a, b)
        if abs(z - 1) < 1e-3:
            return
        sp = SpectralPoint.from_z(z)
        r = hamiltonian_conjugated(sp, x)
        p = psi(sp, x).value
        assert abs(r.value - sp.E * p) <= max(1e-8 * abs(p), r.error)

    def test_series_real_order(self):
        sp = SpectralPoint.from_z(2)
        r = hamiltonian_series(sp, 10.0)
        c = hamiltonian_conjugated(sp, 10.0)
        assert abs(r.value - c.value) <= r.error + c.error

    def test_series_first_zero(self):
        sp = SpectralPoint.on_critical_line(ZERO_ORDINATES[0])
        r = hamiltonian_series(sp, 10.0)
        ref = sp.E * psi(sp, 10.0).value
        assert r.error < 1e-10
        assert abs(r.value - ref) <= r.error
        # smallest term near k ~ 2 pi (x + 1)
        assert abs(r.diagnostics["k_star"] - 2 * math.pi * 11) < 12
        assert r.diagnostics["turnover_reached"]

    def test_series_terms_decrease_then_increase(self):
        sp = SpectralPoint.on_critical_line(ZERO_ORDINATES[1])
        r = hamiltonian_series(sp, 5.0)
        pairs = dict(r.diagnostics["log10_terms"])
        k = r.diagnostics["k_star"]
        ks = sorted(q for q in pairs if q >= 2)
        assert pairs[ks[0]] > pairs[k] < pairs[ks[-1]]
        assert pairs[k] == min(pairs[q] for q in ks)

    def test_series_fixed_k(self):
        sp = SpectralPoint.from_z(2)
        full = hamiltonian_series(sp, 10.0)
        few = hamiltonian_series(sp, 10.0, TruncationPolicy(TruncationMode.FIXED_K, K=4))
        assert abs(few.value - full.value) > abs(full.value) * 1e-6

    def test_series_divergent_for_tiny_x(self):
        with pytest.raises((DivergenceError, DomainError)):
            hamiltonian_series(SpectralPoint.from_z(0.5 + 40j), -0.9)


class TestKubert:
    def test_identity(self):
        f = psi_function(0.5 + 3j)
        assert kubert_apply(1, f, 0.7) == f.value(0.7)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_scaling(self, n):
        z = 0.5 + 3j
        f = psi_function(z)
        v = kubert_apply(n, f, 0.7)
        ref = n ** z * f.value(0.7)
        assert abs(v - ref) < 1e-10 * abs(ref)

    def test_exponential(self):
        f = HalfLineFunction(lambda x: np.exp(np.asarray(x)) + 0j, (-math.inf, math.inf))
        ref = (1 - math.exp(-1)) / (1 - math.exp(-0.5)) * math.exp(0.5)
        assert kubert_apply(2, f, 1.0) == pytest.approx(ref, rel=1e-15)

    def test_bad_n(self):
        with pytest.raises(DomainError):
            kubert_apply(0, psi_function(2), 1.0)


class TestDilation:
    def test_zeta3(self):
        r = dilation_partial(power_function(3), 1.0, 32)
        assert abs(r.value - ZETA3) <= r.error
        assert r.error < 1e-8

    def test_basel_quarter(self):
        r = dilation_partial(power_function(2), 2.0, 64)
        assert abs(r.value - math.pi ** 2 / 24) <= r.error

    def test_single_term_partial_sum(self):
        f = power_function(2 + 1j)
        r = dilation_partial(f, 0.5, 1)
        assert r.diagnostics["partial_sum"] == f.value(0.5)

    @pytest.mark.parametrize("z", [2 + 0j, 2 + 5j, 3 - 2j])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_eigen_relation(self, z, x):
        r = dilation_partial(power_function(z), x, 64)
        ref = hurwitz_zeta(z, 1.0).value * x ** (-z)
        assert abs(r.value - ref) <= r.error


class TestIsometry:
    @pytest.mark.parametrize("lam", [-1.0, 0.3, 2.0])
    def test_gaussian(self, lam):
        a, b = isometry_check(gaussian(), lam, 8.0, 0.5)
        assert abs(a.value - b.value) < 1e-8
        assert a.value == pytest.approx(math.sqrt(math.sqrt(math.pi / 2) / 2), rel=1e-12)
