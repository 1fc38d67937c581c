"""Dimensional constants and Hausdorff-measure normalizers.

Every value is produced by exact factorial / half-integer gamma recursions,
so no downstream tolerance has to absorb a gamma approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "DimensionContext",
    "NormConstants",
    "ball_volume",
    "ball_volume_parity_form",
    "sphere_area",
    "riesz_normalizer",
    "riesz_normalizer_complex_form",
    "hausdorff_weight",
    "norm_constants",
]


def _gamma_half_integer(twice: int) -> float:
    """Gamma(twice/2) for integer twice >= 1, by exact recursion."""
    if twice < 1:
        raise DomainError(f"gamma argument {twice}/2 must be positive")
    if twice % 2 == 0:
        return float(math.factorial(twice // 2 - 1))
    value = math.sqrt(math.pi)  # Gamma(1/2)
    k = 1
    while k + 2 <= twice:
        value *= k / 2.0
        k += 2
    return value


def _check_integer(value, name: str) -> int:
    if value != int(value):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


def ball_volume(m: int) -> float:
    """Volume of the unit ball in R^m: pi^(m/2) / Gamma(m/2 + 1)."""
    m = _check_integer(m, "m")
    if m < 1:
        raise DomainError(f"ball volume needs m >= 1, got {m}")
    return math.pi ** (m / 2.0) / _gamma_half_integer(m + 2)


def ball_volume_parity_form(m: int) -> float:
    """Same constant via the separate even/odd closed forms.

    Even m = 2n: pi^n / n!.  Odd m = 2n+1: n! 2^(2n+1) pi^n / (2n+1)!.
    Kept distinct from :func:`ball_volume` so the two can be cross-checked.
    """
    m = _check_integer(m, "m")
    if m < 1:
        raise DomainError(f"ball volume needs m >= 1, got {m}")
    if m % 2 == 0:
        n = m // 2
        return math.pi**n / math.factorial(n)
    n = (m - 1) // 2
    return math.factorial(n) * 2 ** (2 * n + 1) * math.pi**n / math.factorial(2 * n + 1)


def sphere_area(m: int) -> float:
    """Surface area of the unit sphere in R^m, i.e. m times the ball volume."""
    m = _check_integer(m, "m")
    if m < 2:
        raise DomainError(f"sphere area needs m >= 2, got {m}")
    return m * ball_volume(m)


def riesz_normalizer(m: int) -> float:
    """Normalizer turning the Laplacian of a subharmonic function into its measure.

    Equals (1 + (m-3)^+) times the sphere area.
    """
    m = _check_integer(m, "m")
    if m < 2:
        raise DomainError(f"Riesz normalizer needs m >= 2, got {m}")
    return (1 + max(0, m - 3)) * sphere_area(m)


def riesz_normalizer_complex_form(n: int) -> float:
    """Closed form of the Riesz normalizer for m = 2n: 2 pi^n max{1, 2n-2} / (n-1)!."""
    n = _check_integer(n, "n")
    if n < 1:
        raise DomainError(f"complex dimension n must be >= 1, got {n}")
    return 2.0 * math.pi**n * max(1, 2 * n - 2) / math.factorial(n - 1)


def hausdorff_weight(p: int) -> float:
    """Normalizer b_p of the p-dimensional Hausdorff measure.

    b_0 = 1 so the 0-dimensional measure is the counting measure; for p = m
    the measure coincides with Lebesgue measure on R^m.
    """
    p = _check_integer(p, "p")
    if p < 0:
        raise DomainError(f"Hausdorff dimension p must be >= 0, got {p}")
    if p == 0:
        return 1.0
    return ball_volume(p)


@dataclass(frozen=True)
class DimensionContext:
    """Real dimension m, optionally paired with a complex dimension n = m/2."""

    m: int
    n: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"dimension m must be >= 1, got {self.m}")
        if self.n is not None and self.m != 2 * self.n:
            raise DomainError(f"complex dimension n={self.n} requires m = 2n, got m={self.m}")

    @classmethod
    def real(cls, m: int) -> "DimensionContext":
        return cls(m=m)

    @classmethod
    def of_complex(cls, n: int) -> "DimensionContext":
        if n < 1:
            raise DomainError(f"complex dimension n must be >= 1, got {n}")
        return cls(m=2 * n, n=n)

    @property
    def is_complex(self) -> bool:
        return self.n is not None


@dataclass(frozen=True)
class NormConstants:
    """The three dimension constants used throughout: b_m, s_{m-1}, d_{m-1}."""

    ball_volume: float
    sphere_area: float
    riesz_normalizer: float

    def as_dict(self) -> dict:
        return {
            "ball_volume": self.ball_volume,
            "sphere_area": self.sphere_area,
            "riesz_normalizer": self.riesz_normalizer,
        }


def norm_constants(m: int) -> NormConstants:
    """Bundle of the dimension constants for R^m (m >= 2)."""
    return NormConstants(
        ball_volume=ball_volume(m),
        sphere_area=sphere_area(m),
        riesz_normalizer=riesz_normalizer(m),
    )
