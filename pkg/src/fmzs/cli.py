"""Command-line interface: ``fmzs gen | solve | report | verify | reduce``.

Exit codes: 0 on success, 1 when computed values disagree with expected
values or with the dense oracle, 2 on bad input or an exceeded size guard.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .analysis import (
    EXPECTED_KINDS,
    TABLE_KINDS,
    dimensions,
    extract_relation_basis,
    extract_relation_rows,
    graded_reduced_form,
    guard_large_run,
    reduced_form,
    run_pipeline,
    verify_hoffman_basis,
)
from .config import RunConfig, get_run_config
from .elimination import PivotSequence, dense_eliminate_oracle, forward_eliminate
from .errors import FmzsError, IndexDomainError
from .indices import MultIndex
from .relations import PairFamily, generate_system
from .systems import MAGIC, LinearSystem, compact_read, compact_write, parse_text, write_column_table, write_text

logger = logging.getLogger("fmzs")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2


def parse_weights(text: str) -> List[int]:
    """Parse ``"2..12"``, ``"7,8,10"`` or a mix such as ``"2..5,9"``."""
    weights = set()
    try:
        for token in text.split(","):
            token = token.strip()
            if ".." in token:
                low, high = (int(part) for part in token.split("..", 1))
                if low > high:
                    raise ValueError
                weights.update(range(low, high + 1))
            elif token:
                weights.add(int(token))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid weight range {text!r}") from None
    if not weights or min(weights) < 0:
        raise argparse.ArgumentTypeError(f"invalid weight range {text!r}")
    return sorted(weights)


def parse_families(text: str) -> List[PairFamily]:
    try:
        return [PairFamily.parse(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def read_system(path: Path, family: str = "unknown") -> LinearSystem:
    """Read a text or compact system file, telling them apart by the compact magic."""
    with open(path, "rb") as f:
        head = f.read(len(MAGIC))
    if head == MAGIC:
        return compact_read(path, family)
    return parse_text(path)


def _format_indices(indices: Sequence[MultIndex]) -> str:
    return " + ".join(f"({index})" for index in indices) if indices else "0"


def cmd_gen(args: argparse.Namespace, config: RunConfig) -> int:
    guard_large_run(args.weight, args.family, args.allow_large, config)
    system = generate_system(args.weight, args.family, threads=args.threads, config=config)
    if args.compact:
        compact_write(system, args.out)
    else:
        write_text(system, args.out)
    write_column_table(system.columns, Path(args.out).with_suffix(".columns"))
    stats = system.statistics()
    print(f"weight {system.weight} {system.family}: Rels {stats.rows}, MeanNum {stats.mean_terms:.2f}")
    return EXIT_OK


def _write_basis(path: Path, system: LinearSystem, pivots: PivotSequence) -> None:
    if all(row.provenance is not None for row in system.rows):
        lines = [f"({left}) ({right})" for left, right in extract_relation_basis(system, pivots)]
        header = "# relation basis: generating pairs"
    else:
        lines = [str(row_id) for row_id in extract_relation_rows(pivots)]
        header = "# relation basis: input row numbers"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join([header] + lines) + "\n")


def cmd_solve(args: argparse.Namespace, config: RunConfig) -> int:
    system = read_system(args.input, args.family)
    stats = system.statistics()
    print(f"weight {system.weight}: Rels {stats.rows}, MeanNum {stats.mean_terms:.2f}, columns {stats.columns}")
    pivots = forward_eliminate(system, algebra=args.algebra, config=config)
    print(f"rank {pivots.rank}, corank {pivots.corank}")
    if args.dump_pivots:
        args.dump_pivots.parent.mkdir(parents=True, exist_ok=True)
        args.dump_pivots.write_text(pivots.dumps())
    if args.dump_basis:
        _write_basis(args.dump_basis, system, pivots)
    if args.oracle:
        rank, columns = dense_eliminate_oracle(system, config=config)
        if rank != pivots.rank or columns != frozenset(pivots.pivot_columns):
            logger.error("Oracle disagrees: engine rank %d, oracle rank %d", pivots.rank, rank)
            return EXIT_MISMATCH
        print("oracle: agrees")
    return EXIT_OK


def cmd_report(args: argparse.Namespace, config: RunConfig) -> int:
    families = args.family if args.family is not None else ([] if args.expected else [PairFamily.EDS])
    result = run_pipeline(
        args.weights,
        families,
        out_dir=args.out_dir,
        table=args.table,
        expected=args.expected,
        oracle=args.oracle,
        allow_large=args.allow_large,
        markdown=args.markdown,
        config=config,
    )
    for table in result.tables:
        print(table.to_markdown() if args.markdown else table.to_text())
    for law in result.laws:
        exceptions = ", ".join(str(k) for k in sorted(law.exceptions)) or "none"
        print(f"{law.family} recurrence exceptions: {exceptions}")
    for mismatch in result.mismatches + result.oracle_failures:
        print(f"MISMATCH {mismatch}")
    return EXIT_OK if result.ok else EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    status = EXIT_OK
    for k in args.weights:
        if k < 2:
            continue
        guard_large_run(k, args.family, args.allow_large, config)
        report = dimensions(generate_system(k, args.family, config=config), config=config)
        check = verify_hoffman_basis(report)
        print(f"k={k} {report.family}: {'PASS' if check.passed else 'FAIL'} ({check.witness()})")
        if not check.passed:
            status = EXIT_MISMATCH
    return status


def cmd_reduce(args: argparse.Namespace, config: RunConfig) -> int:
    index = MultIndex.parse(args.index)
    if not index.is_admissible:
        raise IndexDomainError(f"({index}) is not admissible")
    guard_large_run(index.weight, PairFamily.EDS, args.allow_large, config)
    system = generate_system(index.weight, PairFamily.EDS, config=config)
    pivots = forward_eliminate(system, config=config)
    if args.graded:
        print(f"({index}) = {_format_indices(graded_reduced_form(index, pivots, system.columns))} (depth-graded)")
    else:
        combination = reduced_form(index, pivots, system.columns)
        terms = [system.columns.index(column) for column in combination]
        print(f"({index}) = {_format_indices(terms)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmzs",
        description="Binary extended double shuffle systems and formal multiple zeta spaces over GF(2)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="YAML run configuration")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--allow-large", action="store_true", help="Permit runs past the large-weight guard")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value
    guarded = argparse.ArgumentParser(add_help=False)
    guarded.add_argument(
        "--allow-large", action="store_true", default=argparse.SUPPRESS, help="Permit runs past the large-weight guard"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[guarded], help="Generate a relation system")
    gen.add_argument("--weight", type=int, required=True, help="Weight k >= 2")
    gen.add_argument("--family", type=PairFamily.parse, default=PairFamily.EDS, help="eds, fds, mjpo or knt")
    gen.add_argument("--out", type=Path, required=True, help="Output system file")
    gen.add_argument("--threads", type=int, help="Worker pool size")
    gen.add_argument("--compact", action="store_true", help="Write the compact binary format")
    gen.set_defaults(handler=cmd_gen)

    solve = sub.add_parser("solve", help="Eliminate a system file")
    solve.add_argument("--in", dest="input", type=Path, required=True, help="Text or compact system file")
    solve.add_argument("--family", default="unknown", help="Family tag for compact files")
    solve.add_argument("--algebra", choices=("auto", "bitset", "field"), default="auto", help="Row representation")
    solve.add_argument("--oracle", action="store_true", help="Cross-check with dense elimination")
    solve.add_argument("--dump-pivots", type=Path, help="Write the pivot sequence")
    solve.add_argument("--dump-basis", type=Path, help="Write the consumed relation rows")
    solve.set_defaults(handler=cmd_solve)

    report = sub.add_parser("report", parents=[guarded], help="Dimension tables over a weight range")
    report.add_argument("--weights", type=parse_weights, required=True, help="e.g. 2..12 or 7,8,9")
    report.add_argument("--family", type=parse_families, help="Comma-separated families (default eds)")
    report.add_argument("--table", choices=TABLE_KINDS, default="depth")
    report.add_argument("--expected", choices=EXPECTED_KINDS, help="Also print an expected-value table")
    report.add_argument("--oracle", action="store_true", help="Cross-check every elimination")
    report.add_argument("--markdown", action="store_true", help="Print and write markdown tables")
    report.add_argument("--out-dir", type=Path, help="Artifact directory")
    report.set_defaults(handler=cmd_report)

    verify = sub.add_parser("verify", parents=[guarded], help="Check that the pivotless columns are the Hoffman indices")
    verify.add_argument("--weights", type=parse_weights, required=True)
    verify.add_argument("--family", type=PairFamily.parse, default=PairFamily.EDS)
    verify.set_defaults(handler=cmd_verify)

    reduce = sub.add_parser("reduce", parents=[guarded], help="Reduced form of an index over the Hoffman indices")
    reduce.add_argument("--index", required=True, help="Admissible index such as 3,1")
    reduce.add_argument("--graded", action="store_true", help="Keep only the same-depth part")
    reduce.set_defaults(handler=cmd_reduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    config = get_run_config(args.config) if args.config else get_run_config()
    try:
        return args.handler(args, config)
    except FmzsError as e:
        logger.error("%s", e)
        return EXIT_ERROR
    except (OSError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
