"""Reader and writer for PALP-style vertex matrices.

A record is a header line ``r c [anything]`` followed by ``r`` rows of ``c``
integers. When r < c the columns are the points, otherwise the rows are.
"""

from __future__ import annotations

import io
import logging
from dataclasses import dataclass
from typing import Iterable, TextIO

from .linalg import IntMatrix, IntVector

log = logging.getLogger(__name__)


class PalpError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class PalpRecord:
    rows: int
    cols: int
    matrix: IntMatrix
    comment: str = ""
    line: int = 0

    def points(self, transpose: bool = False) -> tuple[IntVector, ...]:
        columns = self.rows < self.cols
        if transpose:
            columns = not columns
        if columns:
            return tuple(zip(*self.matrix))
        return self.matrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, PalpRecord):
            return NotImplemented
        return (self.rows, self.cols, self.matrix, self.comment) == (
            other.rows, other.cols, other.matrix, other.comment,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.matrix, self.comment))


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
        raise PalpError(lineno, f"non-integer token {bad!r}") from None


def parse_palp(
    source: str | TextIO, strict: bool = True, errors: list[PalpError] | None = None
) -> list[PalpRecord]:
    """Parse every record in ``source``.

    In lenient mode a malformed record is logged, appended to ``errors`` and
    skipped; in strict mode the first problem raises :class:`PalpError`.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = [(i + 1, ln.split()) for i, ln in enumerate(source)]
    lines = [(i, toks) for i, toks in lines if toks]
    records = []
    pos = 0
    while pos < len(lines):
        lineno, toks = lines[pos]
        pos += 1
        try:
            if len(toks) < 2:
                raise PalpError(lineno, "header needs row and column counts")
            r, c = _ints(toks[:2], lineno)
            if r <= 0 or c <= 0:
                raise PalpError(lineno, f"dimension 0 in header {r} {c}")
            body, pos = lines[pos:pos + r], pos + r
            if len(body) < r:
                raise PalpError(lineno, f"expected {r} rows, found {len(body)}")
            rows = []
            for rl, rt in body:
                vals = _ints(rt, rl)
                if len(vals) != c:
                    raise PalpError(rl, f"expected {c} entries, found {len(vals)}")
                rows.append(tuple(vals))
        except PalpError as exc:
            if strict:
                raise
            log.warning("skipping malformed record: %s", exc)
            if errors is not None:
                errors.append(exc)
            continue
        records.append(PalpRecord(r, c, tuple(rows), " ".join(toks[2:]), lineno))
    return records


def record_from_points(points: Iterable[IntVector], comment: str = "") -> PalpRecord:
    """Columns-as-points record, the usual orientation of database files."""
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    if len(pts) <= n:
        return PalpRecord(len(pts), n, tuple(pts), comment)
    matrix = tuple(tuple(p[i] for p in pts) for i in range(n))
    return PalpRecord(n, len(pts), matrix, comment)


def write_palp(records: Iterable[PalpRecord]) -> str:
    out = []
    for rec in records:
        out.append(f"{rec.rows} {rec.cols}" + (f" {rec.comment}" if rec.comment else ""))
        out.extend(" ".join(str(a) for a in row) for row in rec.matrix)
    return "".join(line + "\n" for line in out)
