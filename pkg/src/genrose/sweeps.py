"""Parameter sweeps behind the fixed-H tables and the contour grid, plus CSV I/O."""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .moments import standardized_m3
from .parameters import GammaPair, make_gamma_pair, pair_from_alpha

__all__ = [
    "TableRow",
    "GridCell",
    "CsvFormatError",
    "TABLE_END_GAMMA1",
    "resolve_alpha",
    "table_gamma1_values",
    "table_rows",
    "grid_cells",
    "write_table_csv",
    "write_grid_csv",
    "render_table_text",
    "read_table_csv",
    "read_grid_csv",
    "fmt_float",
    "detect_kind",
]

TABLE_END_GAMMA1 = -0.505


@dataclass(frozen=True)
class TableRow:
    gamma1: float
    gamma2: float
    m3: float


@dataclass(frozen=True)
class GridCell:
    gamma1: float
    gamma2: float
    mu3: float | None
    inside_domain: bool


class CsvFormatError(ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def _threads() -> int:
    raw = os.environ.get("GENROSE_THREADS", "1").strip() or "1"
    try:
        n = int(raw)
    except ValueError:
        return 1
    if n <= 0:
        return os.cpu_count() or 1
    return n


def _ordered_map(fn, items):
    items = list(items)
    n = _threads()
    if n <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def resolve_alpha(hurst=None, alpha=None) -> float:
    """Alpha from exactly one of (hurst, alpha); must lie in (-3/2, -1)."""
    if (hurst is None) == (alpha is None):
        raise DomainError("give exactly one of hurst or alpha")
    a = round(float(hurst) - 2.0, 12) if alpha is None else float(alpha)
    if not (-1.5 < a < -1.0):
        raise DomainError(f"alpha must lie in the open interval (-3/2, -1), got {a!r}")
    return a


def table_gamma1_values(alpha: float, points: int = 10) -> np.ndarray:
    """Equally spaced gamma1 from alpha/2 to -0.505, both ends included."""
    if points < 2:
        raise DomainError("points must be >= 2")
    if not alpha / 2 < TABLE_END_GAMMA1:
        raise DomainError(f"alpha/2 = {alpha / 2} leaves no room before gamma1 = -0.505")
    return np.linspace(alpha / 2.0, TABLE_END_GAMMA1, points)


def table_rows(alpha: float, points: int = 10) -> list[TableRow]:
    def row(g1):
        p = pair_from_alpha(alpha, float(g1))
        return TableRow(p.gamma1, p.gamma2, standardized_m3(p))

    return _ordered_map(row, table_gamma1_values(alpha, points))


def _lattice(step: float) -> list[float]:
    n = math.floor(0.5 / step + 1e-9)
    vals = [round(-1.0 + k * step, 12) for k in range(1, n + 1)]
    return [v for v in vals if -1.0 < v < -0.5]


def grid_cells(step: float = 0.005) -> list[GridCell]:
    """Rectangular lattice over (-1, -1/2)^2; cells outside the domain carry no value."""
    if not 0.0 < step < 0.25:
        raise DomainError(f"step must lie in (0, 0.25), got {step!r}")
    axis = _lattice(step)

    def cell(point):
        g1, g2 = point
        try:
            p = make_gamma_pair(g1, g2)
        except DomainError:
            return GridCell(g1, g2, None, False)
        return GridCell(g1, g2, standardized_m3(p), True)

    return _ordered_map(cell, [(g1, g2) for g1 in axis for g2 in axis])


def write_table_csv(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["gamma1", "gamma2", "M3"])
    for r in rows:
        w.writerow([fmt_float(r.gamma1), fmt_float(r.gamma2), fmt_float(r.m3)])


def write_grid_csv(cells, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["gamma1", "gamma2", "M3", "inside"])
    for c in cells:
        value = "" if c.mu3 is None else fmt_float(c.mu3)
        w.writerow([fmt_float(c.gamma1), fmt_float(c.gamma2), value, "true" if c.inside_domain else "false"])


def render_table_text(rows, alpha: float) -> str:
    """Two-line layout: gamma1 values over M3 values, three decimals."""
    head = "gamma1".ljust(10) + "".join(f"{r.gamma1:9.3f}" for r in rows)
    body = "M3".ljust(10) + "".join(f"{r.m3:9.3f}" for r in rows)
    title = f"M3(gamma1, alpha - gamma1), alpha = {alpha:g} (H = {alpha + 2:g})"
    return "\n".join([title, head, body]) + "\n"


def _parse_float(text, line, column):
    try:
        value = float(text)
    except ValueError:
        raise CsvFormatError(line, f"column {column!r}: not a number: {text!r}") from None
    if not math.isfinite(value):
        raise CsvFormatError(line, f"column {column!r}: non-finite value {text!r}")
    return value


def _rows(fh, expected):
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise CsvFormatError(1, "empty file") from None
    except csv.Error as exc:
        raise CsvFormatError(1, str(exc)) from None
    if [h.strip() for h in header] != expected:
        raise CsvFormatError(1, f"expected header {','.join(expected)}, got {','.join(header)}")
    try:
        for rec in reader:
            if not rec:
                continue
            if len(rec) != len(expected):
                raise CsvFormatError(reader.line_num, f"expected {len(expected)} fields, got {len(rec)}")
            yield reader.line_num, rec
    except csv.Error as exc:
        raise CsvFormatError(reader.line_num, str(exc)) from None


def read_table_csv(fh) -> list[TableRow]:
    out = []
    for line, rec in _rows(fh, ["gamma1", "gamma2", "M3"]):
        g1, g2, m3 = (_parse_float(v, line, c) for v, c in zip(rec, ("gamma1", "gamma2", "M3")))
        out.append(TableRow(g1, g2, m3))
    return out


def read_grid_csv(fh) -> list[GridCell]:
    out = []
    for line, rec in _rows(fh, ["gamma1", "gamma2", "M3", "inside"]):
        g1 = _parse_float(rec[0], line, "gamma1")
        g2 = _parse_float(rec[1], line, "gamma2")
        flag = rec[3].strip().lower()
        if flag not in ("true", "false"):
            raise CsvFormatError(line, f"column 'inside': expected true/false, got {rec[3]!r}")
        inside = flag == "true"
        if inside:
            value = _parse_float(rec[2], line, "M3")
        elif rec[2].strip():
            raise CsvFormatError(line, "column 'M3' must be empty outside the domain")
        else:
            value = None
        out.append(GridCell(g1, g2, value, inside))
    return out


def detect_kind(text: str) -> str:
    """'grid' or 'table' from the CSV header line."""
    first = io.StringIO(text).readline().strip()
    return "grid" if first.endswith(",inside") else "table"
