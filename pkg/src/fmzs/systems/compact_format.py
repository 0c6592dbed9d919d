"""Compact binary layout of linear systems.

    magic  b"MZF2"
    u8     version
    u16    weight
    u64    row count
    rows   varint term count, then varint gaps between successive ids

All fixed-width fields are little-endian; varints are LEB128. The layout has
no family field, so the reader takes the family as an argument.
"""

import logging
import struct
from pathlib import Path
from typing import List, Tuple, Union

from ..errors import ParseError
from ..indices import build_column_table
from .combination import Gf2Combination
from .linear_system import LinearSystem, Row

logger = logging.getLogger(__name__)

MAGIC = b"MZF2"
VERSION = 1
_HEADER = struct.Struct("<4sBHQ")

PathLike = Union[str, Path]


def _put_varint(out: bytearray, value: int) -> None:
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return


def _get_varint(data: bytes, pos: int) -> Tuple[int, int]:
    value = 0
    shift = 0
    while True:
        if pos >= len(data):
            raise ParseError("truncated varint")
        byte = data[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, pos
        shift += 7


def compact_dumps(system: LinearSystem) -> bytes:
    rows = [row.combination.support for row in system.rows if not row.combination.is_zero]
    out = bytearray(_HEADER.pack(MAGIC, VERSION, system.weight, len(rows)))
    for support in rows:
        _put_varint(out, len(support))
        previous = 0
        for column in support:
            _put_varint(out, column - previous)
            previous = column
    return bytes(out)


def compact_loads(data: bytes, family: str = "unknown") -> LinearSystem:
    """Decode the compact layout.

    Raises:
        ParseError: On a bad magic or version, truncation, trailing bytes or
            ids outside the column range
    """
    if len(data) < _HEADER.size:
        raise ParseError("truncated header")
    magic, version, weight, count = _HEADER.unpack_from(data, 0)
    if magic != MAGIC:
        raise ParseError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ParseError(f"unsupported version {version}")
    if weight < 2:
        raise ParseError(f"weight must be at least 2, got {weight}")
    columns = build_column_table(weight)
    n = len(columns)

    pos = _HEADER.size
    rows: List[Row] = []
    for _ in range(count):
        length, pos = _get_varint(data, pos)
        support = []
        column = 0
        for _ in range(length):
            gap, pos = _get_varint(data, pos)
            if gap == 0:
                raise ParseError("zero gap between column ids")
            column += gap
            support.append(column)
        if support and support[-1] > n:
            raise ParseError(f"column id {support[-1]} outside [1, {n}]")
        rows.append(Row(Gf2Combination(tuple(support))))
    if pos != len(data):
        raise ParseError(f"{len(data) - pos} trailing bytes after {count} rows")
    return LinearSystem(weight, columns, tuple(rows), family)


def compact_write(system: LinearSystem, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = compact_dumps(system)
    path.write_bytes(payload)
    logger.info("Wrote compact system (%d bytes) to %s", len(payload), path)
    return path


def compact_read(path: PathLike, family: str = "unknown") -> LinearSystem:
    return compact_loads(Path(path).read_bytes(), family)


__all__ = ["MAGIC", "VERSION", "compact_dumps", "compact_loads", "compact_write", "compact_read"]
