"""Formal multiple zeta spaces over GF(2): binary EDS systems and their elimination."""

__version__ = "0.1.0"

from .config import RunConfig, get_run_config
from .errors import (
    FmzsError,
    IndexDomainError,
    InvariantError,
    NotZFormError,
    ParseError,
    SizeGuardError,
)
from .indices import MultIndex, Word, build_column_table, hoffman_indices
from .relations import PairFamily, eds_relation, enumerate_pairs, generate_system
from .systems import Gf2Combination, LinearSystem, parse_text, write_text
from .elimination import GF2Field, PivotSequence, dense_eliminate_oracle, forward_eliminate
from .analysis import (
    DimensionReport,
    dimensions,
    expected_tables,
    extract_relation_basis,
    fibonacci_law_check,
    reduced_form,
    run_pipeline,
    verify_hoffman_basis,
)

__all__ = [
    # Version
    "__version__",
    # Configuration and errors
    "RunConfig",
    "get_run_config",
    "FmzsError",
    "NotZFormError",
    "IndexDomainError",
    "ParseError",
    "SizeGuardError",
    "InvariantError",
    # Indices
    "MultIndex",
    "Word",
    "build_column_table",
    "hoffman_indices",
    # Relations and systems
    "PairFamily",
    "enumerate_pairs",
    "eds_relation",
    "generate_system",
    "Gf2Combination",
    "LinearSystem",
    "write_text",
    "parse_text",
    # Elimination
    "GF2Field",
    "PivotSequence",
    "forward_eliminate",
    "dense_eliminate_oracle",
    # Analysis
    "DimensionReport",
    "dimensions",
    "verify_hoffman_basis",
    "expected_tables",
    "reduced_form",
    "extract_relation_basis",
    "fibonacci_law_check",
    "run_pipeline",
]
