import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetaspec.values import SpectralPoint, TruncationMode, TruncationPolicy, ValueWithError


@given(st.floats(0.25, 1.0), st.floats(-1e3, 1e3))
def test_round_trip_exact_in_strip(a, b):
    sp = SpectralPoint.from_z(complex(a, b))
    assert SpectralPoint.from_E(sp.E).z == sp.z


@given(st.floats(-1e3, 1e3))
def test_critical_line_is_real(t):
    sp = SpectralPoint.from_z(complex(0.5, t))
    assert sp.E.imag == 0.0
    assert sp == SpectralPoint.on_critical_line(t)


def test_spectral_map():
    sp = SpectralPoint.from_z(3 + 2j)
    assert sp.E == 1j * (2 * (3 + 2j) - 1)


def test_value_with_error():
    v = ValueWithError(1 + 1j, 0.5, 3)
    assert (-v).value == -1 - 1j and (-v).error == 0.5
    s = v.scaled(2j, rel_err=1e-16)
    assert s.value == -2 + 2j
    assert s.error == pytest.approx(1.0 + 1e-16 * abs(s.value))
    with pytest.raises(ValueError):
        ValueWithError(0, -1.0)
    with pytest.raises(ValueError):
        ValueWithError(0, float("nan"))


def test_policy():
    assert TruncationPolicy("fixed_K").mode is TruncationMode.FIXED_K
    with pytest.raises(ValueError):
        TruncationPolicy(K=0)
    with pytest.raises(ValueError):
        TruncationPolicy(tol=0.0)
