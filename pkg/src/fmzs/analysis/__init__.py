"""Dimension reports, expected values, reduced forms and end-to-end runs."""

from .dimensions import DimensionReport, HoffmanCheck, dimensions, verify_hoffman_basis
from .laws import LawReport, fibonacci_law_check
from .pipeline import (
    PipelineResult,
    estimate_run_memory,
    format_bytes,
    guard_large_run,
    is_large_run,
    run_pipeline,
)
from .reduction import extract_relation_basis, extract_relation_rows, graded_reduced_form, reduced_form
from .reference import (
    D_K,
    KNT_DIMS,
    MJPO_DIMS,
    MJPO_EXCEPTIONS,
    PUBLISHED_BASES,
    PUBLISHED_REDUCED_FORMS,
    published_dimension,
)
from .report import EXPECTED_KINDS, TABLE_KINDS, Table, depth_table, expected_table, total_table
from .series import MAX_WEIGHT, Series, SeriesTable, expected_tables, pascal_c

__all__ = [
    "DimensionReport",
    "dimensions",
    "HoffmanCheck",
    "verify_hoffman_basis",
    "LawReport",
    "fibonacci_law_check",
    "reduced_form",
    "graded_reduced_form",
    "extract_relation_rows",
    "extract_relation_basis",
    "D_K",
    "KNT_DIMS",
    "MJPO_DIMS",
    "MJPO_EXCEPTIONS",
    "PUBLISHED_BASES",
    "PUBLISHED_REDUCED_FORMS",
    "published_dimension",
    "Series",
    "SeriesTable",
    "expected_tables",
    "pascal_c",
    "MAX_WEIGHT",
    "Table",
    "TABLE_KINDS",
    "EXPECTED_KINDS",
    "depth_table",
    "total_table",
    "expected_table",
    "PipelineResult",
    "estimate_run_memory",
    "format_bytes",
    "is_large_run",
    "guard_large_run",
    "run_pipeline",
]
