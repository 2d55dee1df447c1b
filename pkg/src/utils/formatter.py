"""
Text formatter for CLI output.
Everything here is deterministic: same input, byte-identical text.
"""

import logging
from typing import Iterable, List, Optional, Sequence

from src.models.congruence import CensusReport, DivisibilityReport, GroupingTable, ResidueVector, TriangleRow
from src.models.polynomial import DensePolynomial

logger = logging.getLogger(__name__)

TRIANGLE_STYLES = ("paper", "csv")


class ReportFormatter:
    """Formats polynomials, triangle rows and census tables."""

    @staticmethod
    def flag(value: Optional[bool]) -> str:
        if value is None:
            return "-"
        return "true" if value else "false"

    def format_polynomial(self, n: int, poly: DensePolynomial) -> str:
        """
        Format p_n(b) with every coefficient, ascending degree:
        `p_2(b) = 4 - 5 b + 1 b^2`.
        """
        terms: List[str] = []
        for t, c in enumerate(poly.coeffs):
            if t == 0:
                terms.append(str(c))
                continue
            power = "b" if t == 1 else f"b^{t}"
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {abs(c)} {power}")
        return f"p_{n}(b) = " + " ".join(terms)

    def format_triangle_row(self, row: TriangleRow, style: str = "paper") -> str:
        """`n=29: {2,,,,,3}` with blanks for zeros, `n=29: {2,0,0,0,0,3}` in csv style."""
        if style not in TRIANGLE_STYLES:
            raise ValueError(f"unknown style {style!r}")
        if style == "paper":
            fields = ["" if e == 0 else str(e) for e in row.entries]
        else:
            fields = [str(e) for e in row.entries]
        return f"n={row.n}: {{{','.join(fields)}}}"

    def format_residues(self, v: ResidueVector) -> str:
        return ",".join(str(r) for r in v.residues)

    def census_header(self, p: int) -> str:
        columns = ["n"] + [f"count_{c}" for c in range(p)] + ["equidistributed", "zero_prefix"]
        if p == 5:
            columns.append("rotation")
        return "\t".join(columns)

    def census_row(self, report: CensusReport) -> str:
        columns = [str(report.n)] + [str(c) for c in report.counts]
        columns += [self.flag(report.equidistributed), self.flag(report.zero_prefix)]
        if report.p == 5:
            columns.append(self.flag(report.rotation))
        return "\t".join(columns)

    def format_grouping(self, table: GroupingTable, checks: dict) -> List[str]:
        lines = [f"p={table.p} r={table.r}: a=({','.join(str(x) for x in table.a)})"]
        lines += [f"{name}: {self.flag(ok)}" for name, ok in checks.items()]
        return lines

    def format_divisibility(self, report: DivisibilityReport) -> str:
        counts = " ".join(str(c) for c in report.counts[1:])
        return "\t".join(
            [
                f"p={report.p}",
                f"q={report.q}",
                f"n={report.n}",
                f"nonzero_counts={counts}",
                f"divisor={report.divisor}",
                f"exceptional={self.flag(report.exceptional)}",
                f"divisible={self.flag(report.divisible)}",
                f"source={report.source}",
            ]
        )

    @staticmethod
    def tsv(rows: Iterable[Sequence[object]]) -> List[str]:
        return ["\t".join(str(x) for x in row) for row in rows]


formatter = ReportFormatter()
