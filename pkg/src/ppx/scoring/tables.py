"""Stable text and CSV rendering for score artifacts.

Formatting is deliberately rigid (fixed float precision, sorted rows)
so that identical inputs always produce identical bytes.
"""

from __future__ import annotations

import csv
import io
from typing import Mapping, Sequence

from ..core.types import TerminationStatus
from .elo import RatingRow


def format_number(x: float) -> str:
    return f"{x:.3f}"


def render_text_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells)).rstrip()
    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(headers), rule] + [line(r) for r in rows]) + "\n"


def csv_bytes(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def rating_rows(ratings: Sequence[RatingRow]) -> tuple[list[str], list[list[str]]]:
    headers = ["participant", "rating", "ci_low", "ci_high", "matches"]
    rows = [
        [
            r.participant,
            format_number(r.rating),
            format_number(r.ci_low),
            format_number(r.ci_high),
            str(r.matches),
        ]
        for r in ratings
    ]
    return headers, rows


def win_matrix_rows(
    matrix: Mapping[str, Mapping[str, float]]
) -> tuple[list[str], list[list[str]]]:
    names = sorted(matrix)
    headers = ["participant"] + names
    rows = []
    for a in names:
        row = [a]
        for b in names:
            if a == b:
                row.append("-")
            elif b in matrix[a]:
                row.append(format_number(matrix[a][b]))
            else:
                row.append("")
        rows.append(row)
    return headers, rows


def status_rows(
    dist: Mapping[str, Mapping[TerminationStatus, float]]
) -> tuple[list[str], list[list[str]]]:
    statuses = list(TerminationStatus)
    headers = ["participant"] + [s.value for s in statuses]
    rows = [
        [name] + [format_number(dist[name][s]) for s in statuses]
        for name in sorted(dist)
    ]
    return headers, rows
