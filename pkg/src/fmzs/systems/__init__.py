"""GF(2) linear systems and their file formats."""

from .combination import Gf2Combination
from .compact_format import MAGIC, VERSION, compact_dumps, compact_loads, compact_read, compact_write
from .linear_system import LinearSystem, Pair, Row, SystemStatistics
from .text_format import format_text, parse_lines, parse_text, write_column_table, write_text

__all__ = [
    "Gf2Combination",
    "Pair",
    "Row",
    "SystemStatistics",
    "LinearSystem",
    "format_text",
    "write_text",
    "parse_lines",
    "parse_text",
    "write_column_table",
    "MAGIC",
    "VERSION",
    "compact_dumps",
    "compact_loads",
    "compact_write",
    "compact_read",
]
