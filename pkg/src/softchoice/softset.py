"""Soft sets: parameter-indexed families of subsets of a finite universe."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


def _checked_ids(ids: Iterable[str], kind: str) -> tuple:
    out = tuple(ids)
    for value in out:
        if not isinstance(value, str) or not value:
            raise ValueError(f"{kind} identifiers must be non-empty strings, got {value!r}")
    if len(set(out)) != len(out):
        seen, dupes = set(), []
        for value in out:
            if value in seen and value not in dupes:
                dupes.append(value)
            seen.add(value)
        raise ValueError(f"duplicate {kind} identifiers: {', '.join(dupes)}")
    return out


@dataclass(frozen=True)
class BinaryTable:
    """0/1 matrix whose rows are universe elements and columns are parameters."""

    row_ids: tuple
    col_ids: tuple
    cells: tuple

    def __post_init__(self) -> None:
        rows = _checked_ids(self.row_ids, "row")
        cols = _checked_ids(self.col_ids, "column")
        cells = tuple(tuple(row) for row in self.cells)
        if len(cells) != len(rows):
            raise ValueError(f"expected {len(rows)} cell rows, got {len(cells)}")
        for row_id, row in zip(rows, cells):
            if len(row) != len(cols):
                raise ValueError(f"row {row_id!r} has {len(row)} cells, expected {len(cols)}")
            for value in row:
                if isinstance(value, bool) or value not in (0, 1):
                    raise ValueError(f"row {row_id!r} holds non-binary cell {value!r}")
        object.__setattr__(self, "row_ids", rows)
        object.__setattr__(self, "col_ids", cols)
        object.__setattr__(self, "cells", cells)


@dataclass(frozen=True)
class SoftSet:
    """Maps each parameter to the subset of the universe that satisfies it.

    Universe and parameter lists are ordered so the tabular form is
    deterministic. A parameter missing from ``value_sets`` gets the empty
    set; a key naming no known parameter is rejected.
    """

    universe: tuple
    parameters: tuple
    value_sets: Mapping[str, frozenset]

    def __post_init__(self) -> None:
        universe = _checked_ids(self.universe, "universe")
        parameters = _checked_ids(self.parameters, "parameter")
        members = set(universe)
        raw = dict(self.value_sets)
        unknown = [key for key in raw if key not in parameters]
        if unknown:
            raise ValueError(f"value sets given for unknown parameters: {', '.join(sorted(unknown))}")
        value_sets = {}
        for parameter in parameters:
            subset = frozenset(raw.get(parameter, ()))
            for element in subset:
                if element not in members:
                    raise ValueError(
                        f"value set of {parameter!r} contains {element!r}, "
                        f"which is not in the universe"
                    )
            value_sets[parameter] = subset
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "value_sets", value_sets)

    def tabulate(self) -> BinaryTable:
        """Binary matrix form: cell (x, e) is 1 exactly when x satisfies e."""
        rows = tuple(
            tuple(1 if element in self.value_sets[parameter] else 0 for parameter in self.parameters)
            for element in self.universe
        )
        return BinaryTable(self.universe, self.parameters, rows)

    @classmethod
    def from_table(cls, table: BinaryTable) -> "SoftSet":
        """Inverse of :meth:`tabulate`."""
        value_sets = {
            parameter: frozenset(
                row_id for row_id, row in zip(table.row_ids, table.cells) if row[index]
            )
            for index, parameter in enumerate(table.col_ids)
        }
        return cls(table.row_ids, table.col_ids, value_sets)

    @classmethod
    def from_fuzzy(cls, membership: Mapping[str, float], alphas: Sequence[float]) -> "SoftSet":
        """Build a soft set from a membership map via closed level cuts.

        Each alpha becomes a parameter (named by its repr) whose value set
        keeps the elements with membership >= alpha. Lower alphas therefore
        yield supersets of higher ones.
        """
        universe = tuple(membership)
        for element, degree in membership.items():
            if isinstance(degree, bool) or not isinstance(degree, (int, float)):
                raise TypeError(f"membership of {element!r} must be a real number, got {degree!r}")
            if not 0.0 <= float(degree) <= 1.0:
                raise ValueError(f"membership of {element!r} must lie in [0, 1], got {degree!r}")
        levels = []
        for alpha in alphas:
            if isinstance(alpha, bool) or not isinstance(alpha, (int, float)):
                raise TypeError(f"cut levels must be real numbers, got {alpha!r}")
            alpha = float(alpha)
            if not 0.0 <= alpha <= 1.0:
                raise ValueError(f"cut levels must lie in [0, 1], got {alpha!r}")
            levels.append(alpha)
        if len(set(levels)) != len(levels):
            raise ValueError("cut levels must be distinct")
        value_sets = {
            repr(alpha): frozenset(
                element for element in universe if float(membership[element]) >= alpha
            )
            for alpha in levels
        }
        return cls(universe, tuple(repr(alpha) for alpha in levels), value_sets)
