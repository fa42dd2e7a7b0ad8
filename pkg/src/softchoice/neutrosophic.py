"""Truth / indeterminacy / falsity triplets and the aggregation defined on them.

Two value types keep the algebra honest: ``Triplet`` enforces the unit-box
constraint on every component, while ``TripletAccumulator`` carries the
intermediate sums and scalings, which routinely leave the box. Adding or
scaling either kind yields an accumulator; ``mean`` brings the result back
into the box, where it provably belongs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union


def _checked_component(value: float, name: str, boxed: bool) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{name} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    if value < 0.0:
        raise ValueError(f"{name} must be nonnegative, got {value!r}")
    if boxed and value > 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class Triplet:
    """Degrees of truth, indeterminacy and falsity, each constrained to [0, 1]."""

    truth: float
    indeterminacy: float
    falsity: float

    def __post_init__(self) -> None:
        t = _checked_component(self.truth, "truth degree", boxed=True)
        i = _checked_component(self.indeterminacy, "indeterminacy degree", boxed=True)
        f = _checked_component(self.falsity, "falsity degree", boxed=True)
        # Implied by the component bounds; kept as a guard against future edits.
        if not 0.0 <= t + i + f <= 3.0:
            raise ValueError(f"component sum {t + i + f!r} outside [0, 3]")
        object.__setattr__(self, "truth", t)
        object.__setattr__(self, "indeterminacy", i)
        object.__setattr__(self, "falsity", f)

    def accumulator(self) -> "TripletAccumulator":
        return TripletAccumulator(self.truth, self.indeterminacy, self.falsity)

    def __add__(self, other: "TripletLike") -> "TripletAccumulator":
        if not isinstance(other, (Triplet, TripletAccumulator)):
            return NotImplemented
        return add(self, other)

    def __mul__(self, k: float) -> "TripletAccumulator":
        return scale(k, self)

    __rmul__ = __mul__


@dataclass(frozen=True)
class TripletAccumulator:
    """Componentwise sums and scalings of triplets; nonnegative, no upper bound."""

    truth: float
    indeterminacy: float
    falsity: float

    def __post_init__(self) -> None:
        for name in ("truth", "indeterminacy", "falsity"):
            value = _checked_component(getattr(self, name), f"{name} component", boxed=False)
            object.__setattr__(self, name, value)

    def __add__(self, other: "TripletLike") -> "TripletAccumulator":
        if not isinstance(other, (Triplet, TripletAccumulator)):
            return NotImplemented
        return add(self, other)

    def __mul__(self, k: float) -> "TripletAccumulator":
        return scale(k, self)

    __rmul__ = __mul__

    def as_triplet(self) -> Triplet:
        """Reinterpret as a boxed triplet; fails if any component exceeds 1."""
        return Triplet(self.truth, self.indeterminacy, self.falsity)


TripletLike = Union[Triplet, TripletAccumulator]


def _components(value: TripletLike) -> Tuple[float, float, float]:
    if not isinstance(value, (Triplet, TripletAccumulator)):
        raise TypeError(
            f"expected a Triplet or TripletAccumulator, got {type(value).__name__}"
        )
    return value.truth, value.indeterminacy, value.falsity


def add(a: TripletLike, b: TripletLike) -> TripletAccumulator:
    """Componentwise sum; the result is an unconstrained accumulator."""
    at, ai, af = _components(a)
    bt, bi, bf = _components(b)
    return TripletAccumulator(at + bt, ai + bi, af + bf)


def scale(k: float, a: TripletLike) -> TripletAccumulator:
    """Componentwise product with a positive real."""
    if isinstance(k, bool) or not isinstance(k, (int, float)):
        raise TypeError(f"scalar must be a real number, got {type(k).__name__}")
    k = float(k)
    if not math.isfinite(k) or k <= 0.0:
        raise ValueError(f"scalar must be a positive real, got {k!r}")
    t, i, f = _components(a)
    return TripletAccumulator(k * t, k * i, k * f)


def mean(items: Iterable[Tuple[Triplet, int]]) -> Triplet:
    """Multiplicity-weighted mean of triplets.

    Accumulates in exact rational arithmetic and divides by the total count
    once, so a single repeated item comes back unchanged and splitting a
    multiplicity across several entries cannot change the result. The mean
    is a convex combination, hence always a valid boxed triplet.
    """
    entries = list(items)
    if not entries:
        raise ValueError("mean requires at least one (triplet, multiplicity) entry")
    total = 0
    sum_t = sum_i = sum_f = Fraction(0)
    for entry in entries:
        try:
            triplet, count = entry
        except (TypeError, ValueError):
            raise TypeError("mean expects (triplet, multiplicity) pairs") from None
        if not isinstance(triplet, Triplet):
            raise TypeError(f"mean expects Triplet values, got {type(triplet).__name__}")
        if isinstance(count, bool) or not isinstance(count, int):
            raise TypeError(f"multiplicity must be an integer, got {count!r}")
        if count < 1:
            raise ValueError(f"multiplicity must be >= 1, got {count}")
        total += count
        sum_t += count * Fraction(triplet.truth)
        sum_i += count * Fraction(triplet.indeterminacy)
        sum_f += count * Fraction(triplet.falsity)
    return Triplet(float(sum_t / total), float(sum_i / total), float(sum_f / total))


class InformationClass(enum.Enum):
    """What the component sum says about the information carried by a triplet."""

    INCOMPLETE = "incomplete"
    COMPLETE = "complete"
    INCONSISTENT = "inconsistent"


def classify_information(triplet: Triplet, epsilon: float = 1e-9) -> InformationClass:
    """Sum below 1 leaves information missing, near 1 is complete, above 1 is contradictory."""
    if not isinstance(triplet, Triplet):
        raise TypeError(f"expected a Triplet, got {type(triplet).__name__}")
    if isinstance(epsilon, bool) or not isinstance(epsilon, (int, float)):
        raise TypeError(f"epsilon must be a real number, got {type(epsilon).__name__}")
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise ValueError(f"epsilon must be a positive real, got {epsilon!r}")
    total = triplet.truth + triplet.indeterminacy + triplet.falsity
    if abs(total - 1.0) <= epsilon:
        return InformationClass.COMPLETE
    if total < 1.0:
        return InformationClass.INCOMPLETE
    return InformationClass.INCONSISTENT
