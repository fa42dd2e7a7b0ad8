"""The three row-aggregation methods over decision tables, plus ranking criteria.

A decision table holds one row per candidate and one cell per parameter.
The binary method counts a row's 1-cells. The grey method adds the midpoint
of the row's accumulated intervals (grades are first mapped through a
scale) to the count of its 1-cells. The neutrosophic method averages the
row's triplets after embedding 0 as certainly-absent (0, 0, 1) and 1 as
certainly-present (1, 0, 0). Grade cells are deliberately rejected by the
neutrosophic method: there is no principled label-to-triplet conversion,
so callers must supply triplets themselves or run the grey method.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .grades import GradeScale, ScaleValidationError, default_scale
from .grey import GreyNumber
from .neutrosophic import Triplet, mean
from .softset import _checked_ids


@dataclass(frozen=True)
class BinCell:
    value: int

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or self.value not in (0, 1):
            raise ValueError(f"binary cells hold 0 or 1, got {self.value!r}")


@dataclass(frozen=True)
class GradeCell:
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise ValueError(f"grade cells hold a non-empty label, got {self.label!r}")


@dataclass(frozen=True)
class GreyCell:
    interval: GreyNumber

    def __post_init__(self) -> None:
        if not isinstance(self.interval, GreyNumber):
            raise TypeError(f"grey cells hold a GreyNumber, got {type(self.interval).__name__}")


@dataclass(frozen=True)
class NeutroCell:
    triplet: Triplet

    def __post_init__(self) -> None:
        if not isinstance(self.triplet, Triplet):
            raise TypeError(f"neutrosophic cells hold a Triplet, got {type(self.triplet).__name__}")


Cell = Union[BinCell, GradeCell, GreyCell, NeutroCell]
Score = Union[int, float, Triplet]

_CELL_TYPES = (BinCell, GradeCell, GreyCell, NeutroCell)


def _describe(cell: Cell) -> str:
    if isinstance(cell, BinCell):
        return f"binary {cell.value}"
    if isinstance(cell, GradeCell):
        return f"grade {cell.label!r}"
    if isinstance(cell, GreyCell):
        return f"interval [{cell.interval.lower!r};{cell.interval.upper!r}]"
    triplet = cell.triplet
    return f"triplet ({triplet.truth!r};{triplet.indeterminacy!r};{triplet.falsity!r})"


class CellMismatchError(ValueError):
    """A method met a cell variant it does not accept."""

    def __init__(self, method: str, candidate: str, parameter: str, found: str, hint: str):
        self.method = method
        self.candidate = candidate
        self.parameter = parameter
        self.found = found
        self.hint = hint
        super().__init__(
            f"method '{method}' cannot use cell ({candidate}, {parameter}): "
            f"found {found}; {hint}"
        )


class Method(enum.Enum):
    BINARY = "binary"
    GREY = "grey"
    NEUTROSOPHIC = "neutrosophic"


class Criterion(enum.Enum):
    OPTIMISTIC = "optimistic"
    CONSERVATIVE = "conservative"
    COMBINED = "combined"


@dataclass(frozen=True)
class DecisionTable:
    """Candidates by parameters cell matrix; at least one of each, all unique."""

    candidates: tuple
    parameters: tuple
    cells: tuple

    def __post_init__(self) -> None:
        candidates = _checked_ids(self.candidates, "candidate")
        parameters = _checked_ids(self.parameters, "parameter")
        if not candidates:
            raise ValueError("a decision table needs at least one candidate")
        if not parameters:
            raise ValueError("a decision table needs at least one parameter")
        cells = tuple(tuple(row) for row in self.cells)
        if len(cells) != len(candidates):
            raise ValueError(f"expected {len(candidates)} cell rows, got {len(cells)}")
        for candidate, row in zip(candidates, cells):
            if len(row) != len(parameters):
                raise ValueError(
                    f"row {candidate!r} has {len(row)} cells, expected {len(parameters)}"
                )
            for cell in row:
                if not isinstance(cell, _CELL_TYPES):
                    raise TypeError(f"row {candidate!r} holds a non-cell value {cell!r}")
        object.__setattr__(self, "candidates", candidates)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "cells", cells)

    def cell(self, candidate: str, parameter: str) -> Cell:
        return self.cells[self.candidates.index(candidate)][self.parameters.index(parameter)]


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of one method run: scores, winners and any commentary."""

    method: Method
    scores: Mapping[str, Score]
    winners: tuple
    criterion: Optional[Criterion] = None
    risk_notes: Mapping[str, str] = field(default_factory=dict)
    notes: tuple = ()


def choice_values_binary(table: DecisionTable) -> Dict[str, int]:
    """Row sums of an all-binary table."""
    scores: Dict[str, int] = {}
    for row_index, candidate in enumerate(table.candidates):
        total = 0
        for col_index, parameter in enumerate(table.parameters):
            cell = table.cells[row_index][col_index]
            if not isinstance(cell, BinCell):
                raise CellMismatchError(
                    Method.BINARY.value, candidate, parameter, _describe(cell),
                    "only 0/1 cells are allowed",
                )
            total += cell.value
        scores[candidate] = total
    return scores


def choice_values_grey(table: DecisionTable, scale: GradeScale) -> Dict[str, float]:
    """Row sums of binary cells plus the midpoint of the row's accumulated intervals.

    Grade cells go through the scale first; interval cells are used as
    given. Intervals are accumulated left to right, and the midpoint is
    taken once at the end.
    """
    scores: Dict[str, float] = {}
    for row_index, candidate in enumerate(table.candidates):
        ones = 0
        accumulated: Optional[GreyNumber] = None
        for col_index, parameter in enumerate(table.parameters):
            cell = table.cells[row_index][col_index]
            if isinstance(cell, BinCell):
                ones += cell.value
                continue
            if isinstance(cell, GradeCell):
                interval = scale[cell.label]
            elif isinstance(cell, GreyCell):
                interval = cell.interval
            else:
                raise CellMismatchError(
                    Method.GREY.value, candidate, parameter, _describe(cell),
                    "only 0/1, grade and interval cells are allowed",
                )
            accumulated = interval if accumulated is None else accumulated + interval
        scores[candidate] = float(ones) if accumulated is None else ones + accumulated.midpoint()
    return scores


_PRESENT = Triplet(1.0, 0.0, 0.0)
_ABSENT = Triplet(0.0, 0.0, 1.0)


def choice_values_neutrosophic(table: DecisionTable) -> Dict[str, Triplet]:
    """Mean triplet of each row, with 0 read as (0, 0, 1) and 1 as (1, 0, 0)."""
    scores: Dict[str, Triplet] = {}
    for row_index, candidate in enumerate(table.candidates):
        row: List[Tuple[Triplet, int]] = []
        for col_index, parameter in enumerate(table.parameters):
            cell = table.cells[row_index][col_index]
            if isinstance(cell, BinCell):
                row.append((_PRESENT if cell.value else _ABSENT, 1))
            elif isinstance(cell, NeutroCell):
                row.append((cell.triplet, 1))
            else:
                raise CellMismatchError(
                    Method.NEUTROSOPHIC.value, candidate, parameter, _describe(cell),
                    "supply triplets for this cell (grades and intervals have no "
                    "automatic triplet translation) or run the grey method",
                )
        scores[candidate] = mean(row)
    return scores


def _checked_epsilon(epsilon: float) -> float:
    if isinstance(epsilon, bool) or not isinstance(epsilon, (int, float)):
        raise TypeError(f"epsilon must be a real number, got {type(epsilon).__name__}")
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or epsilon <= 0.0:
        raise ValueError(f"epsilon must be a positive real, got {epsilon!r}")
    return epsilon


def _require_scores(scores: Mapping[str, Triplet]) -> None:
    if not scores:
        raise ValueError("ranking requires at least one scored candidate")


def rank_optimistic(scores: Mapping[str, Triplet], epsilon: float = 1e-9) -> List[str]:
    """Candidates tied (within epsilon) for the greatest truth degree."""
    _require_scores(scores)
    epsilon = _checked_epsilon(epsilon)
    best = max(score.truth for score in scores.values())
    return [candidate for candidate, score in scores.items() if score.truth >= best - epsilon]


def rank_conservative(scores: Mapping[str, Triplet], epsilon: float = 1e-9) -> List[str]:
    """Candidates tied (within epsilon) for the least falsity degree."""
    _require_scores(scores)
    epsilon = _checked_epsilon(epsilon)
    best = min(score.falsity for score in scores.values())
    return [candidate for candidate, score in scores.items() if score.falsity <= best + epsilon]


def rank_combined(scores: Mapping[str, Triplet], epsilon: float = 1e-9) -> List[str]:
    """Candidates winning both the optimistic and the conservative reading.

    When no candidate wins both, fall back to the greatest truth minus
    falsity, break remaining ties toward the lowest indeterminacy, and
    finally toward the earliest candidate. The fallback is a convention of
    this tool, not part of the underlying criteria.
    """
    _require_scores(scores)
    epsilon = _checked_epsilon(epsilon)
    conservative = set(rank_conservative(scores, epsilon))
    both = [candidate for candidate in rank_optimistic(scores, epsilon) if candidate in conservative]
    if both:
        return both
    net = {candidate: score.truth - score.falsity for candidate, score in scores.items()}
    best = max(net.values())
    leaders = [candidate for candidate in scores if net[candidate] >= best - epsilon]
    least_doubt = min(scores[candidate].indeterminacy for candidate in leaders)
    leaders = [
        candidate for candidate in leaders
        if scores[candidate].indeterminacy <= least_doubt + epsilon
    ]
    return leaders[:1]


_COMBINED_NOTE = (
    "combined criterion: candidates winning both the greatest-truth and the "
    "least-falsity readings; when the two winner sets share no candidate, the "
    "tool falls back to the greatest truth minus falsity (ties broken toward "
    "lower indeterminacy, then table order)"
)
_FALLBACK_NOTE = (
    "combined fallback applied: the greatest-truth and least-falsity winner "
    "sets share no candidate"
)


def _short(value: float) -> str:
    return format(value, ".12g")


def _risk_notes(
    scores: Mapping[str, Triplet],
    winners: List[str],
    contenders: List[str],
    epsilon: float,
) -> Dict[str, str]:
    notes: Dict[str, str] = {}
    for winner in winners:
        doubt = scores[winner].indeterminacy
        clauses = []
        for other in contenders:
            if other == winner:
                continue
            other_doubt = scores[other].indeterminacy
            if doubt > other_doubt + epsilon:
                clauses.append(f"exceeds {other}'s {_short(other_doubt)}")
            elif doubt < other_doubt - epsilon:
                clauses.append(f"is below {other}'s {_short(other_doubt)}")
            else:
                clauses.append(f"matches {other}'s {_short(other_doubt)}")
        note = f"indeterminacy {_short(doubt)}"
        if clauses:
            note += " " + "; ".join(clauses)
        notes[winner] = note
    return notes


def _argmax_within(scores: Mapping[str, float], epsilon: float) -> List[str]:
    best = max(scores.values())
    return [candidate for candidate, value in scores.items() if value >= best - epsilon]


def decide(
    table: DecisionTable,
    method: Union[Method, str],
    *,
    scale: Optional[GradeScale] = None,
    criterion: Optional[Union[Criterion, str]] = None,
    epsilon: float = 1e-9,
) -> DecisionReport:
    """Run one method over a table and package scores, winners and commentary.

    ``scale`` applies only to the grey method (the built-in scale is used
    when omitted) and ``criterion`` only to the neutrosophic one (combined
    when omitted); supplying either anywhere else is rejected. ``epsilon``
    is the tie tolerance for winner detection.
    """
    method = Method(method)
    epsilon = _checked_epsilon(epsilon)
    if scale is not None and method is not Method.GREY:
        raise ValueError(f"a grade scale does not apply to the {method.value} method")
    if criterion is not None and method is not Method.NEUTROSOPHIC:
        raise ValueError(f"a ranking criterion does not apply to the {method.value} method")

    if method is Method.BINARY:
        binary_scores = choice_values_binary(table)
        return DecisionReport(
            method=method,
            scores=binary_scores,
            winners=tuple(_argmax_within(binary_scores, epsilon)),
        )

    if method is Method.GREY:
        scale = default_scale() if scale is None else scale
        violations = scale.validate()
        if violations:
            raise ScaleValidationError(violations)
        grey_scores = choice_values_grey(table, scale)
        return DecisionReport(
            method=method,
            scores=grey_scores,
            winners=tuple(_argmax_within(grey_scores, epsilon)),
        )

    criterion = Criterion.COMBINED if criterion is None else Criterion(criterion)
    triplet_scores = choice_values_neutrosophic(table)
    optimistic = rank_optimistic(triplet_scores, epsilon)
    conservative = rank_conservative(triplet_scores, epsilon)
    notes: List[str] = []
    if criterion is Criterion.OPTIMISTIC:
        winners = optimistic
    elif criterion is Criterion.CONSERVATIVE:
        winners = conservative
    else:
        winners = rank_combined(triplet_scores, epsilon)
        notes.append(_COMBINED_NOTE)
        if not set(optimistic) & set(conservative):
            notes.append(_FALLBACK_NOTE)
    contender_set = set(optimistic) | set(conservative)
    contenders = [candidate for candidate in triplet_scores if candidate in contender_set]
    return DecisionReport(
        method=method,
        scores=triplet_scores,
        winners=tuple(winners),
        criterion=criterion,
        risk_notes=_risk_notes(triplet_scores, winners, contenders, epsilon),
        notes=tuple(notes),
    )
