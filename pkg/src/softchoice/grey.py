"""Closed-interval grey numbers: reals known only up to an enclosing interval."""

from __future__ import annotations

import math
from dataclasses import dataclass


def _checked_real(value: float, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{name} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class GreyNumber:
    """A real number known only to lie in the closed interval [lower, upper].

    Supports exactly what the decision methods need: interval addition,
    scaling by a positive real, and the midpoint as the representative
    crisp value. Degenerate intervals (lower == upper) stand for crisp
    numbers.
    """

    lower: float
    upper: float

    def __post_init__(self) -> None:
        lower = _checked_real(self.lower, "lower endpoint")
        upper = _checked_real(self.upper, "upper endpoint")
        if lower > upper:
            raise ValueError(f"invalid interval: lower {lower!r} > upper {upper!r}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __add__(self, other: "GreyNumber") -> "GreyNumber":
        if not isinstance(other, GreyNumber):
            return NotImplemented
        return GreyNumber(self.lower + other.lower, self.upper + other.upper)

    def scale(self, k: float) -> "GreyNumber":
        """Scale both endpoints by a positive real."""
        k = _checked_real(k, "scalar")
        if k <= 0.0:
            raise ValueError(f"scalar must be positive, got {k!r}")
        return GreyNumber(k * self.lower, k * self.upper)

    def __mul__(self, k: float) -> "GreyNumber":
        if isinstance(k, GreyNumber):
            raise TypeError(
                "interval-by-interval multiplication is not supported; "
                "scale by a positive real instead"
            )
        return self.scale(k)

    __rmul__ = __mul__

    def midpoint(self) -> float:
        """Representative crisp value of the interval."""
        return (self.lower + self.upper) / 2.0

    def width(self) -> float:
        return self.upper - self.lower
