"""Data model, validation, parsing and lifting for QC-LDPC matrices.

Three objects live here:

- ``BaseMatrix``: the protograph adjacency matrix (cell = edge multiplicity).
- ``ExponentMatrix``: per-cell circulant shift vectors plus a lifting degree.
- ``ParityCheckMatrix``: the lifted binary matrix, bit-packed row-wise.

All three are immutable after construction; every operation is a pure
function, so concurrent use needs no coordination.

Text format for exponent matrices: first line ``c d N``, then ``c`` lines of
``d`` whitespace-separated entries, each entry ``inf`` or comma-separated
decimal shifts (``0,27``).  Canonical serialization stores shifts sorted
ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, MatrixFormatError

Cell = tuple[int, ...] | None


@dataclass(frozen=True)
class BaseMatrix:
    """Protograph base matrix: nonnegative edge multiplicities."""

    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.weights or not self.weights[0]:
            raise ValueError("base matrix must be nonempty")
        d = len(self.weights[0])
        for row in self.weights:
            if len(row) != d:
                raise ValueError("ragged base matrix")
            for w in row:
                if w < 0:
                    raise ValueError("negative edge multiplicity")

    @property
    def rows(self) -> int:
        return len(self.weights)

    @property
    def cols(self) -> int:
        return len(self.weights[0])

    @property
    def single_edge(self) -> bool:
        return all(w <= 1 for row in self.weights for w in row)

    def column_weight(self, j: int) -> int:
        return sum(row[j] for row in self.weights)

    def row_weight(self, i: int) -> int:
        return sum(self.weights[i])


@dataclass(frozen=True)
class ExponentMatrix:
    """Grid of shift vectors (``None`` = absent cell) with lifting degree N.

    Shifts inside a cell are kept sorted ascending; the cycle conditions only
    ever use them as sets, and sorting fixes one canonical serialization.
    """

    cells: tuple[tuple[Cell, ...], ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("lifting degree must be at least 2")
        if not self.cells or not self.cells[0]:
            raise ValueError("exponent matrix must be nonempty")
        d = len(self.cells[0])
        norm: list[tuple[Cell, ...]] = []
        for row in self.cells:
            if len(row) != d:
                raise ValueError("ragged exponent matrix")
            norm.append(tuple(tuple(sorted(c)) if c is not None else None for c in row))
        object.__setattr__(self, "cells", tuple(norm))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def cell(self, i: int, j: int) -> Cell:
        return self.cells[i][j]

    def weight(self, i: int, j: int) -> int:
        c = self.cells[i][j]
        return 0 if c is None else len(c)

    def column_weight(self, j: int) -> int:
        return sum(self.weight(i, j) for i in range(self.rows))

    def row_weight(self, i: int) -> int:
        return sum(self.weight(i, j) for j in range(self.cols))

    def base_matrix(self) -> BaseMatrix:
        """Base matrix inferred from the cell vector lengths."""
        return BaseMatrix(
            tuple(tuple(self.weight(i, j) for j in range(self.cols)) for i in range(self.rows))
        )

    def max_cell_weight(self) -> int:
        return max(self.weight(i, j) for i in range(self.rows) for j in range(self.cols))

    @property
    def single_edge(self) -> bool:
        return self.max_cell_weight() <= 1


@dataclass(frozen=True)
class Violation:
    """One violated invariant, located at a cell."""

    row: int
    col: int
    message: str

    def __str__(self) -> str:
        return f"cell ({self.row},{self.col}): {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(matrix: ExponentMatrix, base: BaseMatrix | None = None) -> ValidationReport:
    """Check shift-vector invariants of ``matrix`` against ``base``.

    A dimension mismatch between the two matrices raises
    :class:`DimensionMismatchError`; everything else is reported as a list of
    violations.  When ``base`` is omitted it is inferred, which makes the
    weight checks tautological but keeps range and distinctness checks.
    """
    if base is None:
        base = matrix.base_matrix()
    if (base.rows, base.cols) != (matrix.rows, matrix.cols):
        raise DimensionMismatchError(
            f"base is {base.rows}x{base.cols}, exponent matrix is {matrix.rows}x{matrix.cols}"
        )
    found: list[Violation] = []
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            cell = matrix.cell(i, j)
            w = base.weights[i][j]
            if cell is None:
                if w != 0:
                    found.append(Violation(i, j, f"empty cell but base weight {w}"))
                continue
            if w != len(cell):
                found.append(Violation(i, j, f"vector length {len(cell)} != base weight {w}"))
            if len(set(cell)) != len(cell):
                found.append(Violation(i, j, "duplicate shift in cell"))
            for b in cell:
                if not 0 <= b < matrix.n:
                    found.append(Violation(i, j, f"shift {b} outside [0, {matrix.n})"))
    return ValidationReport(tuple(found))


# ---------------------------------------------------------------------------
# text format


def parse_text(source: str) -> tuple[BaseMatrix, ExponentMatrix]:
    """Parse the exponent-matrix text format; the base matrix is inferred."""
    lines = source.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx >= len(lines):
        raise MatrixFormatError("empty input")
    header = lines[idx].split()
    if len(header) != 3:
        raise MatrixFormatError("header must be 'c d N'", line=idx + 1)
    try:
        c, d, n = (int(tok) for tok in header)
    except ValueError as exc:
        raise MatrixFormatError(f"bad header: {exc}", line=idx + 1) from None
    if c < 1 or d < 1:
        raise MatrixFormatError("matrix dimensions must be positive", line=idx + 1)
    if n < 2:
        raise MatrixFormatError("lifting degree must be at least 2", line=idx + 1)

    rows: list[tuple[Cell, ...]] = []
    lineno = idx + 1
    for _ in range(c):
        lineno += 1
        while lineno <= len(lines) and not lines[lineno - 1].strip():
            lineno += 1
        if lineno > len(lines):
            raise MatrixFormatError(f"expected {c} rows, found {len(rows)}", line=lineno)
        tokens = lines[lineno - 1].split()
        if len(tokens) != d:
            raise MatrixFormatError(f"expected {d} entries, found {len(tokens)}", line=lineno)
        row: list[Cell] = []
        for tok in tokens:
            if tok.lower() in ("inf", "-"):
                row.append(None)
                continue
            try:
                shifts = tuple(int(s) for s in tok.split(","))
            except ValueError:
                raise MatrixFormatError(f"bad entry {tok!r}", line=lineno) from None
            if len(set(shifts)) != len(shifts):
                raise MatrixFormatError(f"duplicate shift in entry {tok!r}", line=lineno)
            for s in shifts:
                if not 0 <= s < n:
                    raise MatrixFormatError(f"shift {s} not in [0, {n})", line=lineno)
            row.append(shifts)
        rows.append(tuple(row))
    matrix = ExponentMatrix(tuple(rows), n)
    return matrix.base_matrix(), matrix


def serialize_text(matrix: ExponentMatrix) -> str:
    """Canonical text form (shifts ascending, single spaces, newline-terminated)."""
    out = [f"{matrix.rows} {matrix.cols} {matrix.n}"]
    for i in range(matrix.rows):
        entries = []
        for j in range(matrix.cols):
            cell = matrix.cell(i, j)
            entries.append("inf" if cell is None else ",".join(str(s) for s in cell))
        out.append(" ".join(entries))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# lifting


@dataclass(frozen=True)
class ParityCheckMatrix:
    """Binary matrix with bit-packed rows and circulant block metadata.

    Row ``r`` is stored across ``words[r]`` with column ``j`` at bit
    ``j % 64`` of word ``j // 64``.
    """

    words: np.ndarray  # uint64, shape (n_rows, n_words)
    n_rows: int
    n_cols: int
    block_rows: int
    block_cols: int
    n: int

    def bit(self, r: int, j: int) -> int:
        return int(self.words[r, j >> 6] >> np.uint64(j & 63)) & 1

    def row_support(self, r: int) -> list[int]:
        out = []
        for w in range(self.words.shape[1]):
            word = int(self.words[r, w])
            base = w << 6
            while word:
                low = word & -word
                out.append(base + low.bit_length() - 1)
                word ^= low
        return out

    def row_weight(self, r: int) -> int:
        return sum(int(w).bit_count() for w in self.words[r])

    def column_weights(self) -> np.ndarray:
        weights = np.zeros(self.n_cols, dtype=np.int64)
        for r in range(self.n_rows):
            for j in self.row_support(r):
                weights[j] += 1
        return weights

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for r in range(self.n_rows):
            for j in self.row_support(r):
                dense[r, j] = 1
        return dense

    def rows_as_ints(self) -> list[int]:
        """Rows as arbitrary-precision bitmasks (bit j = column j)."""
        out = []
        for r in range(self.n_rows):
            acc = 0
            for w in range(self.words.shape[1]):
                acc |= int(self.words[r, w]) << (w << 6)
            out.append(acc)
        return out


def lift(matrix: ExponentMatrix) -> ParityCheckMatrix:
    """Expand each cell into a sum of circulant permutation blocks.

    A shift ``b`` contributes, inside block (i, j), a 1 at block-row ``s`` and
    block-column ``(s + b) mod N``; empty cells become zero blocks.
    """
    c, d, n = matrix.rows, matrix.cols, matrix.n
    n_rows, n_cols = c * n, d * n
    n_words = (n_cols + 63) >> 6
    words = np.zeros((n_rows, n_words), dtype=np.uint64)
    for i in range(c):
        for j in range(d):
            cell = matrix.cell(i, j)
            if cell is None:
                continue
            for b in cell:
                for s in range(n):
                    col = j * n + (s + b) % n
                    words[i * n + s, col >> 6] |= np.uint64(1) << np.uint64(col & 63)
    return ParityCheckMatrix(words, n_rows, n_cols, c, d, n)


# ---------------------------------------------------------------------------
# alist serialization


def export_alist(h: ParityCheckMatrix) -> str:
    """Standard alist text: dims, max degrees, per-node degrees, 1-based lists.

    Per-node index lists are zero-padded to the maximum degree, the common
    convention for fixed-width alist writers.
    """
    cols: list[list[int]] = [[] for _ in range(h.n_cols)]
    rows: list[list[int]] = []
    for r in range(h.n_rows):
        support = h.row_support(r)
        rows.append([j + 1 for j in support])
        for j in support:
            cols[j].append(r + 1)
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)
    lines = [f"{h.n_cols} {h.n_rows}", f"{max_col} {max_row}"]
    lines.append(" ".join(str(len(c)) for c in cols))
    lines.append(" ".join(str(len(r)) for r in rows))
    for c in cols:
        lines.append(" ".join(str(x) for x in c + [0] * (max_col - len(c))))
    for r in rows:
        lines.append(" ".join(str(x) for x in r + [0] * (max_row - len(r))))
    return "\n".join(lines) + "\n"


def import_alist(text: str) -> ParityCheckMatrix:
    """Read an alist produced by :func:`export_alist` (padding tolerated)."""
    tokens = text.split()
    if len(tokens) < 4:
        raise MatrixFormatError("alist too short")
    it = iter(tokens)

    def take() -> int:
        try:
            return int(next(it))
        except StopIteration:
            raise MatrixFormatError("truncated alist") from None
        except ValueError as exc:
            raise MatrixFormatError(f"bad alist token: {exc}") from None

    n_cols, n_rows = take(), take()
    max_col, max_row = take(), take()
    col_deg = [take() for _ in range(n_cols)]
    row_deg = [take() for _ in range(n_rows)]
    n_words = (n_cols + 63) >> 6
    words = np.zeros((n_rows, n_words), dtype=np.uint64)
    for j in range(n_cols):
        entries = [take() for _ in range(max_col)]
        live = [e for e in entries if e != 0]
        if len(live) != col_deg[j]:
            raise MatrixFormatError(f"column {j}: degree {col_deg[j]} but {len(live)} entries")
        for r in live:
            words[r - 1, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
    check = np.zeros((n_rows, n_words), dtype=np.uint64)
    for r in range(n_rows):
        entries = [take() for _ in range(max_row)]
        live = [e for e in entries if e != 0]
        if len(live) != row_deg[r]:
            raise MatrixFormatError(f"row {r}: degree {row_deg[r]} but {len(live)} entries")
        for j in live:
            check[r, (j - 1) >> 6] |= np.uint64(1) << np.uint64((j - 1) & 63)
    if not np.array_equal(words, check):
        raise MatrixFormatError("alist row and column lists disagree")
    return ParityCheckMatrix(words, n_rows, n_cols, 0, 0, 0)
