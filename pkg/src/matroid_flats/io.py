"""Input parsing and output serialization for the CLI layer.

Matrix files: first line "d N", then d rows of N whitespace-separated
rational literals; columns are the ground-set elements in order.  The
JSON equivalent is an object with a "rows" key.  Graph files: one "u v"
edge per line with 1-based vertices.  Lines starting with '#' and blank
lines are skipped in both text formats.

All emitters are deterministic: the same report serializes to the same
bytes on every run.
"""

from __future__ import annotations

import json
from pathlib import Path

from .engine import EnumerationReport, FlatRecord
from .labels import format_label, format_members, label_of, members_of, parse_label
from .linalg import RationalMatrix, coerce_entry
from .zonotope import HRepresentation

__all__ = [
    "InputFormatError",
    "flats_from_json",
    "flats_to_json",
    "flats_to_text",
    "hrep_to_json",
    "hrep_to_text",
    "load_edges",
    "load_matrix",
    "parse_edges_text",
    "parse_matrix_json",
    "parse_matrix_text",
    "parse_uniform_spec",
]


class InputFormatError(ValueError):
    """An input file or literal could not be parsed."""


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_matrix_text(text: str) -> RationalMatrix:
    lines = _content_lines(text)
    if not lines:
        raise InputFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise InputFormatError(f"matrix header must be 'd N', got {lines[0]!r}")
    try:
        dim, num_columns = int(header[0]), int(header[1])
    except ValueError as exc:
        raise InputFormatError(f"matrix header must be 'd N', got {lines[0]!r}") from exc
    if dim < 1 or num_columns < 0:
        raise InputFormatError(f"bad matrix shape {dim}x{num_columns}")
    if len(lines) - 1 != dim:
        raise InputFormatError(f"expected {dim} matrix rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        entries = line.split()
        if len(entries) != num_columns:
            raise InputFormatError(
                f"expected {num_columns} entries per row, got {len(entries)}: {line!r}")
        try:
            rows.append([coerce_entry(e) for e in entries])
        except ValueError as exc:
            raise InputFormatError(str(exc)) from exc
    if num_columns == 0:
        return RationalMatrix(dim, ())
    return RationalMatrix.from_rows(rows)


def parse_matrix_json(text: str, allow_floats: bool = False) -> RationalMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise InputFormatError('matrix JSON must be an object with a "rows" key')
    rows = obj["rows"]
    if (not isinstance(rows, list) or not rows
            or not all(isinstance(r, list) for r in rows)):
        raise InputFormatError('"rows" must be a non-empty list of lists')
    try:
        return RationalMatrix.from_rows(
            [[coerce_entry(v, allow_floats) for v in row] for row in rows])
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def load_matrix(path: str | Path, allow_floats: bool = False) -> RationalMatrix:
    """Load a matrix from a text or JSON file (sniffed by suffix/content)."""
    text = Path(path).read_text()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return parse_matrix_json(text, allow_floats)
    return parse_matrix_text(text)


def parse_edges_text(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Edge list "u v" per line; vertex count is the largest index seen."""
    edges = []
    num_vertices = 0
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputFormatError(f"edge line must be 'u v', got {line!r}") from exc
        if u < 1 or v < 1:
            raise InputFormatError(f"vertices are 1-based, got {line!r}")
        edges.append((u, v))
        num_vertices = max(num_vertices, u, v)
    return num_vertices, edges


def load_edges(path: str | Path) -> tuple[int, list[tuple[int, int]]]:
    return parse_edges_text(Path(path).read_text())


def parse_uniform_spec(text: str) -> tuple[int, int]:
    """Parse "k,n" (rank cap, ground size) for a uniform matroid."""
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise InputFormatError(f"uniform spec must be 'k,n', got {text!r}")
    try:
        k, n = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputFormatError(f"uniform spec must be 'k,n', got {text!r}") from exc
    if k < 0 or n < 0:
        raise InputFormatError(f"uniform spec values must be non-negative, got {text!r}")
    return k, n


def _record_line(record: FlatRecord, ground_size: int, include_members: bool) -> str:
    line = (f"rank {record.rank} "
            f"pointer {format_label(record.pointer, ground_size)} "
            f"indices {format_members(record.pointer)}")
    if include_members and record.members is not None:
        line += f" members {format_members(record.members)}"
    return line


def flats_to_text(report: EnumerationReport, include_members: bool = True) -> str:
    what = "flats" if include_members else "pointers"
    out = [f"# matroid {what}: ground size {report.ground_size}, "
           f"rank {report.matroid_rank}, total {report.total}"]
    for record in report.flats:
        out.append(_record_line(record, report.ground_size, include_members))
    counts = " ".join(f"M_{rank}={count}"
                      for rank, count in sorted(report.counts_by_rank.items()))
    out.append(f"# per-rank counts: {counts}")
    out.append(f"# total M={report.total}")
    return "\n".join(out) + "\n"


def flats_to_json(report: EnumerationReport, include_members: bool = True) -> str:
    flats = []
    for record in report.flats:
        entry = {
            "rank": record.rank,
            "pointer": format_label(record.pointer, report.ground_size),
            "pointer_indices": members_of(record.pointer),
        }
        if include_members and record.members is not None:
            entry["members"] = members_of(record.members)
        flats.append(entry)
    obj = {
        "ground_size": report.ground_size,
        "matroid_rank": report.matroid_rank,
        "flats": flats,
        "counts_by_rank": [[rank, count]
                           for rank, count in sorted(report.counts_by_rank.items())],
        "total": report.total,
    }
    return json.dumps(obj, indent=1) + "\n"


def flats_from_json(text: str) -> EnumerationReport:
    """Re-parse emitted flats JSON into an equivalent report."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"bad JSON: {exc}") from exc
    try:
        n = obj["ground_size"]
        records = []
        for entry in obj["flats"]:
            pointer = parse_label(entry["pointer"], n)
            if pointer != label_of(entry["pointer_indices"], n):
                raise InputFormatError(
                    f"pointer forms disagree in {entry!r}")
            members = (label_of(entry["members"], n)
                       if "members" in entry else None)
            records.append(FlatRecord(entry["rank"], pointer, members))
        return EnumerationReport(
            ground_size=n,
            matroid_rank=obj["matroid_rank"],
            flats=tuple(records),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputFormatError):
            raise
        raise InputFormatError(f"bad flats JSON: {exc}") from exc


def hrep_to_text(representation: HRepresentation) -> str:
    out = [
        f"# zonotope H-representation: dimension {representation.dim}, "
        f"inequalities {len(representation.halfspaces)}",
        "# convention: row \"b -a1 ... -ad\" encodes b - a.x >= 0, i.e. a.x <= b",
    ]
    for h in representation.halfspaces:
        out.append(" ".join([str(h.offset)] + [str(-v) for v in h.normal]))
    return "\n".join(out) + "\n"


def hrep_to_json(representation: HRepresentation) -> str:
    entries = [
        {"normal": list(h.normal), "offset": str(h.offset)}
        for h in representation.halfspaces
    ]
    return json.dumps(entries, indent=1) + "\n"
