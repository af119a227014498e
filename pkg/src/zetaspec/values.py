"""Small value types passed between modules."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class ValueWithError:
    """A complex value together with an a-posteriori error estimate.

    ``terms`` records the number of series terms or quadrature nodes used;
    ``diagnostics`` carries anything else worth reporting (truncation index,
    term magnitudes, convergence flags).
    """

    value: complex
    error: float
    terms: int | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.error >= 0.0:
            raise ValueError(f"error estimate must be >= 0, got {self.error}")
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "error", float(self.error))

    def __neg__(self) -> ValueWithError:
        return ValueWithError(-self.value, self.error, self.terms, self.diagnostics)

    def scaled(self, factor: complex, rel_err: float = 0.0) -> ValueWithError:
        """Multiply by an exactly known factor (plus its own relative error)."""
        v = self.value * factor
        return ValueWithError(v, abs(factor) * self.error + rel_err * abs(v), self.terms, self.diagnostics)


class TruncationMode(str, enum.Enum):
    FIXED_K = "fixed_K"
    TOLERANCE = "tolerance_driven"
    OPTIMAL = "optimal_term"


@dataclass(frozen=True)
class TruncationPolicy:
    """How an infinite sum is cut.

    In ``optimal_term`` mode the series is stopped at its smallest term and
    that term's magnitude is the error estimate.
    """

    mode: TruncationMode = TruncationMode.OPTIMAL
    K: int = 16
    tol: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "mode", TruncationMode(self.mode))
        if self.K < 1:
            raise ValueError("K must be a positive integer")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class SpectralPoint:
    """The linked pair (z, E) with E = i(2z - 1), equivalently z = (1 - iE)/2.

    Whichever side was used to construct the point is stored verbatim and the
    other side is derived from it.  The round trip z -> E -> z is bit-exact for
    1/4 <= Re z <= 1, which covers the critical line.
    """

    z: complex
    E: complex

    @classmethod
    def from_z(cls, z: complex) -> SpectralPoint:
        z = complex(z)
        return cls(z, complex(-2.0 * z.imag, 2.0 * z.real - 1.0))

    @classmethod
    def from_E(cls, E: complex) -> SpectralPoint:
        E = complex(E)
        return cls(complex((1.0 + E.imag) / 2.0, -E.real / 2.0), E)

    @classmethod
    def on_critical_line(cls, t: float) -> SpectralPoint:
        return cls(complex(0.5, t), complex(-2.0 * t, 0.0))
