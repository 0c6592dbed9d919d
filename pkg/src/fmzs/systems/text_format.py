"""Text wire format of binary linear systems.

Lines starting with ``#`` are comments and may appear anywhere. The writer
puts ``# key=value`` header lines for format, weight, family, columns and rows
first. Every other line is one relation: ascending 1-based column ids
separated by spaces and terminated by ``0``; the terminator is optional on
read. For example the line ``1 2 0`` at weight 3 reads bzt(2,1) + bzt(3) = 0.
"""

import logging
from pathlib import Path
from typing import Dict, List, Union

from ..errors import ParseError
from ..indices import ColumnTable, build_column_table
from .combination import Gf2Combination
from .linear_system import LinearSystem, Row

logger = logging.getLogger(__name__)

FORMAT_TAG = "fmzs-text-1"

PathLike = Union[str, Path]


def format_text(system: LinearSystem) -> str:
    """Render a system in the text format."""
    stats = system.statistics()
    lines = [
        f"# format={FORMAT_TAG}",
        f"# weight={system.weight}",
        f"# family={system.family}",
        f"# columns={system.column_count}",
        f"# rows={stats.rows}",
    ]
    for row in system.rows:
        if row.combination.is_zero:
            continue
        lines.append(" ".join(str(column) for column in row.combination.support) + " 0")
    return "\n".join(lines) + "\n"


def write_text(system: LinearSystem, path: PathLike) -> Path:
    """Write a system in the text format.

    Args:
        system: System to write
        path: Destination file; parent directories are created

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_text(system))
    logger.info("Wrote %d rows of weight %d to %s", system.statistics().rows, system.weight, path)
    return path


def _parse_header(line: str, header: Dict[str, str]) -> None:
    body = line[1:].strip()
    if "=" not in body or " " in body.split("=", 1)[0]:
        return
    key, value = body.split("=", 1)
    header.setdefault(key.strip(), value.strip())


def parse_lines(lines: List[str]) -> LinearSystem:
    """Parse text-format lines into a provenance-free system.

    Raises:
        ParseError: On a non-integer token, an out-of-range or repeated id,
            a misplaced terminator, or a missing ``weight`` header
    """
    header: Dict[str, str] = {}
    raw_rows = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            _parse_header(stripped, header)
            continue
        try:
            ids = [int(token) for token in stripped.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {stripped!r}", line=number) from None
        if ids and ids[-1] == 0:
            ids.pop()
        if any(column <= 0 for column in ids):
            raise ParseError(f"column ids must be positive before the terminator: {stripped!r}", line=number)
        raw_rows.append((number, ids))

    if "weight" not in header:
        raise ParseError("missing '# weight=<k>' header")
    try:
        weight = int(header["weight"])
    except ValueError:
        raise ParseError(f"bad weight header {header['weight']!r}") from None
    if weight < 2:
        raise ParseError(f"weight must be at least 2, got {weight}")

    columns: ColumnTable = build_column_table(weight)
    n = len(columns)
    if "columns" in header and header["columns"] != str(n):
        raise ParseError(f"header declares {header['columns']} columns, weight {weight} has {n}")

    rows = []
    for number, ids in raw_rows:
        if len(set(ids)) != len(ids):
            raise ParseError("repeated column id", line=number)
        out_of_range = [column for column in ids if column > n]
        if out_of_range:
            raise ParseError(f"column id {out_of_range[0]} outside [1, {n}]", line=number)
        rows.append(Row(Gf2Combination.from_ids(ids)))

    family = header.get("family", "unknown")
    logger.debug("Parsed %d rows of weight %d (family %s)", len(rows), weight, family)
    return LinearSystem(weight, columns, tuple(rows), family)


def parse_text(path: PathLike) -> LinearSystem:
    """Read a text-format system file.

    Args:
        path: File to read

    Returns:
        LinearSystem without provenance

    Raises:
        ParseError: If the file is malformed
    """
    with open(path) as f:
        return parse_lines(f.read().splitlines())


def write_column_table(columns: ColumnTable, path: PathLike) -> Path:
    """Write the column-table audit dump."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(columns.dumps())
    return path


__all__ = ["FORMAT_TAG", "format_text", "write_text", "parse_lines", "parse_text", "write_column_table"]
