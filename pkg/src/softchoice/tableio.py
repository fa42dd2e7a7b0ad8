"""Text formats for decision tables, grade scales and reports.

Table documents are comma-separated UTF-8 text. The header row starts with
a corner field (written empty, ignored on input) followed by the parameter
identifiers; every following row is a candidate identifier followed by one
cell token per parameter, so each row carries exactly 1 + parameter-count
fields. Identifiers are non-empty and contain no commas or whitespace.

Cell tokens:

    0 or 1                    binary cell
    C, good_2, ...            grade label  ([A-Za-z][A-Za-z0-9_]*)
    [0.6;0.74]                interval cell
    (0.5;0.4;0.1)             triplet cell

Numbers are nonnegative decimals with an optional exponent part; a leading
minus sign is rejected, and tokens carry no internal whitespace. Scale
documents are whitespace-separated entries of the form LABEL=[lower;upper],
order-significant. Blank lines are ignored everywhere. Input accepts LF or
CRLF line ends; output always uses LF.
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .engine import (
    BinCell,
    Cell,
    DecisionReport,
    DecisionTable,
    GradeCell,
    GreyCell,
    Method,
    NeutroCell,
)
from .grades import GradeScale, ScaleValidationError
from .grey import GreyNumber
from .neutrosophic import Triplet
from .softset import BinaryTable

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?\Z")
_LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_IDENT_RE = re.compile(r"[^\s,]+\Z")
_SCALE_ENTRY_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)=(\[.*\])\Z")


class ParseError(ValueError):
    """Malformed or out-of-range input, with the offending location."""

    def __init__(
        self,
        message: str,
        *,
        source: str = "<input>",
        line: Optional[int] = None,
        field: Optional[int] = None,
    ):
        self.message = message
        self.source = source
        self.line = line
        self.field = field
        location = source
        if line is not None:
            location += f":{line}"
        if field is not None:
            location += f" field {field}"
        super().__init__(f"{location}: {message}")


def _parse_number(text: str) -> float:
    if not _NUMBER_RE.match(text):
        raise ValueError(f"malformed number {text!r} (nonnegative decimal expected)")
    return float(text)


def _parse_cell(token: str) -> Cell:
    if token in ("0", "1"):
        return BinCell(int(token))
    if token.startswith("["):
        if not token.endswith("]"):
            raise ValueError(f"malformed interval token {token!r}")
        parts = token[1:-1].split(";")
        if len(parts) != 2:
            raise ValueError(f"interval token {token!r} needs 2 components, got {len(parts)}")
        lower, upper = (_parse_number(part) for part in parts)
        return GreyCell(GreyNumber(lower, upper))
    if token.startswith("("):
        if not token.endswith(")"):
            raise ValueError(f"malformed triplet token {token!r}")
        parts = token[1:-1].split(";")
        if len(parts) != 3:
            raise ValueError(f"triplet token {token!r} needs 3 components, got {len(parts)}")
        truth, indeterminacy, falsity = (_parse_number(part) for part in parts)
        return NeutroCell(Triplet(truth, indeterminacy, falsity))
    if _LABEL_RE.match(token):
        return GradeCell(token)
    raise ValueError(f"malformed cell token {token!r}")


def parse_cell(token: str) -> Cell:
    """Parse a single cell token."""
    try:
        return _parse_cell(token)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _num(value: float) -> str:
    return repr(value)


def format_cell(cell: Cell) -> str:
    """Canonical token for a cell; floats keep full round-trip precision."""
    if isinstance(cell, BinCell):
        return str(cell.value)
    if isinstance(cell, GradeCell):
        return cell.label
    if isinstance(cell, GreyCell):
        interval = cell.interval
        return f"[{_num(interval.lower)};{_num(interval.upper)}]"
    triplet = cell.triplet
    return f"({_num(triplet.truth)};{_num(triplet.indeterminacy)};{_num(triplet.falsity)})"


def _checked_ident(text: str, kind: str) -> str:
    if not _IDENT_RE.match(text):
        raise ValueError(
            f"{kind} identifier {text!r} must be non-empty and contain no commas or whitespace"
        )
    return text


def _content_lines(text: str):
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.strip():
            yield line_number, line


def parse_table(text: str, source: str = "<table>") -> DecisionTable:
    """Parse a table document into a decision table."""
    rows = [
        (line_number, [part.strip() for part in line.split(",")])
        for line_number, line in _content_lines(text)
    ]
    if not rows:
        raise ParseError("empty document: a header row is required", source=source)
    header_line, header = rows[0]
    if len(header) < 2:
        raise ParseError(
            "header must hold a corner field followed by at least one parameter",
            source=source, line=header_line,
        )
    parameters = []
    for index, name in enumerate(header[1:], start=2):
        try:
            name = _checked_ident(name, "parameter")
        except ValueError as exc:
            raise ParseError(str(exc), source=source, line=header_line, field=index) from None
        if name in parameters:
            raise ParseError(
                f"duplicate parameter identifier {name!r}",
                source=source, line=header_line, field=index,
            )
        parameters.append(name)
    body = rows[1:]
    if not body:
        raise ParseError("at least one candidate row is required", source=source, line=header_line)
    width = len(header)
    candidates = []
    cell_rows = []
    for line_number, fields in body:
        if len(fields) != width:
            raise ParseError(
                f"expected {width} fields, got {len(fields)}",
                source=source, line=line_number,
            )
        try:
            candidate = _checked_ident(fields[0], "candidate")
        except ValueError as exc:
            raise ParseError(str(exc), source=source, line=line_number, field=1) from None
        if candidate in candidates:
            raise ParseError(
                f"duplicate candidate identifier {candidate!r}",
                source=source, line=line_number, field=1,
            )
        row = []
        for index, token in enumerate(fields[1:], start=2):
            try:
                row.append(_parse_cell(token))
            except ValueError as exc:
                raise ParseError(str(exc), source=source, line=line_number, field=index) from None
        candidates.append(candidate)
        cell_rows.append(tuple(row))
    return DecisionTable(tuple(candidates), tuple(parameters), tuple(cell_rows))


def write_table(table: DecisionTable) -> str:
    """Canonical table document; parse_table gives the table back exactly."""
    lines = ["," + ",".join(table.parameters)]
    for candidate, row in zip(table.candidates, table.cells):
        lines.append(candidate + "," + ",".join(format_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def write_binary_table(table: BinaryTable) -> str:
    """Serialize a 0/1 matrix in the same dialect; it re-parses as an all-binary table."""
    lines = ["," + ",".join(table.col_ids)]
    for row_id, row in zip(table.row_ids, table.cells):
        lines.append(row_id + "," + ",".join(str(value) for value in row))
    return "\n".join(lines) + "\n"


def parse_scale(text: str, source: str = "<scale>") -> GradeScale:
    """Parse and validate a grade-scale document."""
    entries = []
    for line_number, line in _content_lines(text):
        for index, token in enumerate(line.split(), start=1):
            match = _SCALE_ENTRY_RE.match(token)
            if not match:
                raise ParseError(
                    f"malformed scale entry {token!r} (expected LABEL=[lower;upper])",
                    source=source, line=line_number, field=index,
                )
            label, interval_token = match.groups()
            try:
                cell = _parse_cell(interval_token)
            except ValueError as exc:
                raise ParseError(str(exc), source=source, line=line_number, field=index) from None
            entries.append((label, cell.interval))
    if not entries:
        raise ParseError("empty scale document", source=source)
    scale = GradeScale(tuple(entries))
    violations = scale.validate()
    if violations:
        raise ScaleValidationError(violations)
    return scale


def write_scale(scale: GradeScale) -> str:
    """Canonical scale document, one entry per line."""
    lines = [
        f"{label}=[{_num(interval.lower)};{_num(interval.upper)}]"
        for label, interval in scale.entries
    ]
    return "\n".join(lines) + "\n"


def _score_token(method: Method, score) -> str:
    if method is Method.BINARY:
        return str(score)
    if method is Method.GREY:
        return _num(score)
    return f"({_num(score.truth)};{_num(score.indeterminacy)};{_num(score.falsity)})"


def render_report_text(report: DecisionReport) -> str:
    """Plain-text report; scores keep full precision and re-parse exactly."""
    lines = [f"method: {report.method.value}"]
    if report.criterion is not None:
        lines.append(f"criterion: {report.criterion.value}")
    lines.append("scores:")
    for candidate, score in report.scores.items():
        lines.append(f"  {candidate} {_score_token(report.method, score)}")
    lines.append("winners: " + " ".join(report.winners))
    if report.risk_notes:
        lines.append("risk notes:")
        for candidate, note in report.risk_notes.items():
            lines.append(f"  {candidate} {note}")
    if report.notes:
        lines.append("notes:")
        for note in report.notes:
            lines.append(f"  {note}")
    return "\n".join(lines) + "\n"


def render_report_json(report: DecisionReport) -> str:
    """JSON report mirroring the text rendering field for field."""
    document = {"method": report.method.value}
    if report.criterion is not None:
        document["criterion"] = report.criterion.value
    if report.method is Method.NEUTROSOPHIC:
        scores = {
            candidate: _score_token(report.method, score)
            for candidate, score in report.scores.items()
        }
    else:
        scores = dict(report.scores)
    document["scores"] = scores
    document["winners"] = list(report.winners)
    if report.risk_notes:
        document["risk_notes"] = dict(report.risk_notes)
    if report.notes:
        document["notes"] = list(report.notes)
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
