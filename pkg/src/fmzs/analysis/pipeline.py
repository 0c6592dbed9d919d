"""End-to-end runs: generate, eliminate, report, and write the artifacts."""

import logging
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from ..algebra import ShuffleMemo
from ..config import RunConfig, get_run_config
from ..elimination import PivotSequence, dense_eliminate_oracle, forward_eliminate
from ..errors import SizeGuardError
from ..indices import MultIndex, iter_indices
from ..relations import PairFamily, count_pairs, eds_relation, generate_system
from ..systems import LinearSystem, SystemStatistics, write_column_table, write_text
from .dimensions import DimensionReport, HoffmanCheck, dimensions, verify_hoffman_basis
from .laws import LawReport, fibonacci_law_check
from .report import TABLE_KINDS, Table, depth_table, expected_table, total_table

logger = logging.getLogger(__name__)

# KNT runs are guarded from this weight on, whatever large_weight says
KNT_LARGE_WEIGHT = 21

_SAMPLE_LEFT = (MultIndex.of(1), MultIndex.of(2))


def format_bytes(size: float) -> str:
    for unit in ("B", "KiB", "MiB", "GiB"):
        if size < 1024:
            return f"{size:.1f} {unit}"
        size /= 1024
    return f"{size:.1f} TiB"


def estimate_run_memory(
    k: int,
    family: Union[PairFamily, str] = PairFamily.EDS,
    sample: int = 32,
    memo: Optional[ShuffleMemo] = None,
) -> SystemStatistics:
    """Predict the size of a system without generating it.

    The row count is exact (every pair counted, trivial ones included). The
    mean row length is sampled from relations with K = (1) and K = (2).

    Args:
        k: Weight, k >= 2
        family: Pair family
        sample: Right-hand indices sampled per left index
        memo: Shuffle cache for the sampled relations

    Returns:
        SystemStatistics whose ``estimated_bytes`` is the memory estimate
    """
    family = PairFamily.parse(family)
    sizes = []
    for left in _SAMPLE_LEFT:
        if k - left.weight < 2:
            continue
        for right in islice(iter_indices(k - left.weight, admissible_only=True), sample):
            sizes.append(len(eds_relation(left, right, memo).support))
    mean = sum(sizes) / len(sizes) if sizes else 0.0
    return SystemStatistics(rows=count_pairs(family, k), mean_terms=mean, columns=1 << (k - 2))


def is_large_run(k: int, family: Union[PairFamily, str], config: RunConfig) -> bool:
    family = PairFamily.parse(family)
    return k >= config.large_weight or (family is PairFamily.KNT and k >= KNT_LARGE_WEIGHT)


def guard_large_run(k: int, family: Union[PairFamily, str], allow_large: bool, config: RunConfig) -> None:
    """Refuse a large run unless it was asked for; log the memory estimate either way.

    Raises:
        SizeGuardError: If the run is large and ``allow_large`` is not set
    """
    family = PairFamily.parse(family)
    if not is_large_run(k, family, config):
        return
    stats = estimate_run_memory(k, family, memo=ShuffleMemo(config.memo_max_degree(k)))
    message = (
        f"{family.value} weight {k}: about {stats.rows} rows of {stats.mean_terms:.1f} terms "
        f"over {stats.columns} columns, roughly {format_bytes(stats.estimated_bytes)}"
    )
    if not allow_large:
        raise SizeGuardError(f"{message}; pass --allow-large to run it")
    logger.warning("Large run: %s", message)


@dataclass
class PipelineResult:
    """Everything a run produced.

    Attributes:
        reports: Dimension reports by family tag, in weight order
        tables: Rendered tables
        laws: Recurrence checks per family
        hoffman: Hoffman-basis checks of the EDS runs by weight
        oracle_failures: Engine-versus-oracle disagreements
        artifacts: Files written
    """

    reports: Dict[str, List[DimensionReport]] = field(default_factory=dict)
    tables: List[Table] = field(default_factory=list)
    laws: List[LawReport] = field(default_factory=list)
    hoffman: Dict[int, HoffmanCheck] = field(default_factory=dict)
    oracle_failures: List[str] = field(default_factory=list)
    artifacts: List[Path] = field(default_factory=list)

    @property
    def mismatches(self) -> List[str]:
        found = [m for table in self.tables for m in table.mismatches]
        for law in self.laws:
            if law.holds is False:
                found.append(
                    f"{law.family} recurrence exceptions {sorted(law.exceptions)}, "
                    f"expected {sorted(law.expected_exceptions or ())}"
                )
        for k, check in sorted(self.hoffman.items()):
            if not check.passed:
                found.append(f"k={k} Hoffman basis: {check.witness()}")
        return found

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.oracle_failures


def _check_oracle(system: LinearSystem, pivots: PivotSequence, config: RunConfig) -> Optional[str]:
    rank, columns = dense_eliminate_oracle(system, config=config)
    if rank == pivots.rank and columns == frozenset(pivots.pivot_columns):
        return None
    return (
        f"{system.family} weight {system.weight}: engine rank {pivots.rank}, oracle rank {rank}; "
        f"pivot columns differ at {sorted(columns ^ frozenset(pivots.pivot_columns))}"
    )


def _write_table(table: Table, stem: Path, markdown: bool) -> List[Path]:
    paths = [stem.with_suffix(".tsv"), stem.with_suffix(".txt")]
    paths[0].write_text(table.to_tsv())
    paths[1].write_text(table.to_text())
    if markdown:
        paths.append(stem.with_suffix(".md"))
        paths[-1].write_text(table.to_markdown())
    return paths


def _contiguous_tail(dims: Dict[int, int]) -> Dict[int, int]:
    """The longest run of consecutive weights ending at the largest one."""
    weights = sorted(dims)
    start = len(weights) - 1
    while start > 0 and weights[start - 1] == weights[start] - 1:
        start -= 1
    return {k: dims[k] for k in weights[start:]}


def run_pipeline(
    weights: Sequence[int],
    families: Sequence[Union[PairFamily, str]] = (PairFamily.EDS,),
    out_dir: Optional[Path] = None,
    table: str = "depth",
    expected: Optional[str] = None,
    oracle: bool = False,
    allow_large: bool = False,
    markdown: bool = False,
    config: Optional[RunConfig] = None,
) -> PipelineResult:
    """Generate, eliminate and report every (family, weight) combination.

    For each run the system, its column table and its pivot dump are written
    to ``out_dir`` as ``<family>_w<k>.txt``, ``.columns`` and ``.pivots``.
    Report tables are written as TSV and aligned text, plus markdown on
    request.

    Args:
        weights: Weights to run; weights below 2 only feed expected tables
        families: Pair families
        out_dir: Artifact directory; config ``output_dir`` by default
        table: ``"depth"`` or ``"total"``
        expected: Also emit the ``"dk"``, ``"ckr"`` or ``"bk"`` expected table
        oracle: Cross-check every elimination with the dense oracle
        allow_large: Permit runs past the large-weight guard
        markdown: Also write markdown tables
        config: Run configuration; the global one when omitted

    Returns:
        PipelineResult

    Raises:
        SizeGuardError: On a guarded run without ``allow_large``
        ValueError: On an unknown table kind
    """
    if table not in TABLE_KINDS:
        raise ValueError(f"unknown table {table!r}; expected one of {', '.join(TABLE_KINDS)}")
    config = config or get_run_config()
    out_dir = Path(out_dir) if out_dir is not None else config.output_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    parsed = [PairFamily.parse(family) for family in families]
    run_weights = sorted({k for k in weights if k >= 2})
    for family in parsed:
        for k in run_weights:
            guard_large_run(k, family, allow_large, config)

    result = PipelineResult()
    for family in parsed:
        family_reports = result.reports.setdefault(family.value, [])
        for k in run_weights:
            system = generate_system(k, family, config=config)
            stem = out_dir / f"{family.value}_w{k}"
            result.artifacts.append(write_text(system, stem.with_suffix(".txt")))
            result.artifacts.append(write_column_table(system.columns, stem.with_suffix(".columns")))

            pivots = forward_eliminate(system, config=config)
            pivot_path = stem.with_suffix(".pivots")
            pivot_path.write_text(pivots.dumps())
            result.artifacts.append(pivot_path)

            report = dimensions(system, pivots)
            family_reports.append(report)
            if family is PairFamily.EDS:
                result.hoffman[k] = verify_hoffman_basis(report)
            if oracle:
                failure = _check_oracle(system, pivots, config)
                if failure:
                    logger.error("Oracle mismatch: %s", failure)
                    result.oracle_failures.append(failure)

        dims = _contiguous_tail({report.weight: report.corank for report in family_reports})
        if len(dims) >= 4:
            result.laws.append(fibonacci_law_check(family.value, dims))

    if parsed:
        if table == "depth":
            for tag, family_reports in result.reports.items():
                result.tables.append(depth_table(family_reports))
                result.artifacts.extend(_write_table(result.tables[-1], out_dir / f"depth_{tag}", markdown))
        else:
            result.tables.append(total_table(result.reports))
            tags = "_".join(result.reports)
            result.artifacts.extend(_write_table(result.tables[-1], out_dir / f"total_{tags}", markdown))
    if expected:
        result.tables.append(expected_table(expected, sorted(set(weights))))
        result.artifacts.extend(_write_table(result.tables[-1], out_dir / f"expected_{expected}", markdown))

    for mismatch in result.mismatches:
        logger.warning("Mismatch: %s", mismatch)
    logger.info("Pipeline wrote %d artifacts to %s", len(result.artifacts), out_dir)
    return result


__all__ = [
    "KNT_LARGE_WEIGHT",
    "format_bytes",
    "estimate_run_memory",
    "is_large_run",
    "guard_large_run",
    "PipelineResult",
    "run_pipeline",
]
