"""Dimension tables: assembly, comparison with expected values, rendering."""

from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence

from .dimensions import DimensionReport
from .reference import published_dimension
from .series import expected_tables, pascal_c

TABLE_KINDS = ("depth", "total")
EXPECTED_KINDS = ("dk", "ckr", "bk")


@dataclass
class Table:
    """A table that renders as TSV, aligned text or markdown.

    Attributes:
        title: One-line caption
        header: Column titles
        rows: Cell strings, one list per row
        mismatches: Human-readable computed-vs-expected differences
    """

    title: str
    header: List[str]
    rows: List[List[str]] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)

    def to_tsv(self) -> str:
        lines = ["\t".join(self.header)]
        lines.extend("\t".join(row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        """Aligned text: right-justified cells under a rule."""
        widths = [len(title) for title in self.header]
        for row in self.rows:
            widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

        def line(cells: Sequence[str]) -> str:
            return "  ".join(cell.rjust(w) for cell, w in zip(cells, widths))

        out = [self.title, line(self.header), "  ".join("-" * w for w in widths)]
        out.extend(line(row) for row in self.rows)
        return "\n".join(out) + "\n"

    def to_markdown(self) -> str:
        out = [f"**{self.title}**", "", "| " + " | ".join(self.header) + " |"]
        out.append("|" + "|".join("---:" for _ in self.header) + "|")
        out.extend("| " + " | ".join(row) + " |" for row in self.rows)
        return "\n".join(out) + "\n"


def depth_table(reports: Sequence[DimensionReport], check_expected: bool = True) -> Table:
    """Weight-by-depth dimensions, one row per report.

    EDS rows are compared with c(k, r) and every family with a published
    total is compared with it when ``check_expected`` is set.
    """
    r_max = max((max(report.depth_dims, default=0) for report in reports), default=0)
    families = sorted({report.family for report in reports})
    table = Table(
        title=f"Depth-graded dimensions ({', '.join(families)})",
        header=["k"] + [str(r) for r in range(1, r_max + 1)] + ["Total"],
    )
    for report in sorted(reports, key=lambda rep: (rep.family, rep.weight)):
        k = report.weight
        cells = [str(k)]
        for r in range(1, r_max + 1):
            cells.append(str(report.depth_dim(r)) if r in report.depth_dims else "")
            if check_expected and report.family == "eds" and r in report.depth_dims:
                expected = pascal_c(k, r)
                if report.depth_dim(r) != expected:
                    table.mismatches.append(f"k={k} r={r}: computed {report.depth_dim(r)}, expected {expected}")
        cells.append(str(report.corank))
        if check_expected:
            _check_total(table, report)
        table.rows.append(cells)
    return table


def _check_total(table: Table, report: DimensionReport) -> None:
    try:
        expected = published_dimension(report.family, report.weight)
    except KeyError:
        return
    if report.corank != expected:
        label = "total" if report.family == "eds" else f"{report.family} total"
        table.mismatches.append(f"k={report.weight} {label}: computed {report.corank}, expected {expected}")


def total_table(reports: Mapping[str, Sequence[DimensionReport]], check_expected: bool = True) -> Table:
    """Weight-by-family dimensions, compared with published values where they exist."""
    families = list(reports)
    by_weight: dict = {}
    for family, family_reports in reports.items():
        for report in family_reports:
            by_weight.setdefault(report.weight, {})[family] = report
    table = Table(title="Dimensions by family", header=["k"] + families)
    for k in sorted(by_weight):
        cells = [str(k)]
        for family in families:
            report = by_weight[k].get(family)
            if report is None:
                cells.append("")
                continue
            cells.append(str(report.corank))
            if not check_expected:
                continue
            try:
                expected = published_dimension(family, k)
            except KeyError:
                continue
            if report.corank != expected:
                table.mismatches.append(f"k={k} {family}: computed {report.corank}, expected {expected}")
        table.rows.append(cells)
    return table


def expected_table(kind: str, weights: Sequence[int], r_max: Optional[int] = None) -> Table:
    """Expected values from the generating series.

    Args:
        kind: ``"dk"``, ``"ckr"`` or ``"bk"``
        weights: Weights to list
        r_max: Largest depth column (defaults to half the largest weight)

    Raises:
        ValueError: On an unknown kind
    """
    if kind not in EXPECTED_KINDS:
        raise ValueError(f"unknown expected table {kind!r}; expected one of {', '.join(EXPECTED_KINDS)}")
    k_max = max(weights, default=0)
    if r_max is None:
        r_max = max(1, k_max // 2)
    series = expected_tables(k_max, r_max)
    if kind == "dk":
        table = Table(title="d_k", header=["k", "d_k"])
        table.rows = [[str(k), str(series.d[k])] for k in weights]
        return table
    first = 1 if kind == "ckr" else 0
    source = series.c if kind == "ckr" else series.bk
    title = "c(k, r)" if kind == "ckr" else "Broadhurst-Kreimer dimensions"
    table = Table(title=title, header=["k"] + [str(r) for r in range(first, r_max + 1)] + ["Total"])
    for k in weights:
        row = source[k]
        table.rows.append([str(k)] + [str(row[r]) for r in range(first, r_max + 1)] + [str(sum(row))])
    return table


__all__ = ["Table", "TABLE_KINDS", "EXPECTED_KINDS", "depth_table", "total_table", "expected_table"]
