"""Bundled reference matrices used by the reproduction harness and tests.

Compact girth-6 constructions free of chorded 8-cycles for column weights 3
and 4 (two tables: row weights 5..9 with known minimum distances, and row
weights 10+), a multi-edge raptor-like matrix, and a multi-edge matrix built
from a Sidon sequence.  Every matrix also ships as a text-format fixture
under ``qclc/data/``; the registry here is the single source of truth and a
test pins the files against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .matrices import ExponentMatrix, parse_text, serialize_text
from .search import CompactSpec, build_compact


@dataclass(frozen=True)
class CompactRow:
    gamma: int
    n_cols: int
    coefficients: tuple[int, ...]  # the matrix's second row
    seed: tuple[int, ...]
    n: int
    d_min: int | None = None  # known exact minimum distance, when desk-scale

    @property
    def name(self) -> str:
        return f"{self.gamma}-{self.n_cols}"

    def spec(self) -> CompactSpec:
        return CompactSpec(self.seed, self.coefficients, self.n)

    def matrix(self) -> ExponentMatrix:
        return build_compact(self.spec())


TABLE2_ROWS: tuple[CompactRow, ...] = (
    CompactRow(3, 5, (0, 1, 2, 4, 7), (0, 1, 3), 11, 10),
    CompactRow(3, 6, (0, 1, 2, 3, 5, 8), (0, 1, 4), 13, 8),
    CompactRow(3, 7, (0, 1, 2, 4, 7, 15, 16), (0, 1, 8), 19, 10),
    CompactRow(3, 8, (0, 1, 2, 3, 5, 7, 12, 13), (0, 1, 4), 19, 8),
    CompactRow(3, 9, (0, 1, 2, 3, 5, 7, 12, 13, 16), (0, 1, 4), 19, 8),
    CompactRow(4, 5, (0, 1, 2, 4, 7), (0, 1, 3, 9), 13, 14),
    CompactRow(4, 6, (0, 1, 2, 3, 6, 11), (0, 1, 4, 5), 17, 18),
    CompactRow(4, 7, (0, 1, 2, 3, 5, 7, 14), (0, 1, 4, 5), 19, 16),
    CompactRow(4, 8, (0, 1, 2, 3, 5, 7, 12, 13), (0, 1, 4, 5), 19, 10),
    CompactRow(4, 9, (0, 1, 2, 3, 5, 7, 12, 13, 16), (0, 1, 4, 5), 19, 10),
)

TABLE3_ROWS: tuple[CompactRow, ...] = (
    CompactRow(3, 10, (0, 1, 2, 3, 4, 6, 8, 11, 12, 16), (0, 1, 5), 21),
    CompactRow(3, 11, (0, 1, 2, 3, 4, 5, 7, 9, 12, 13, 17), (0, 1, 6), 31),
    CompactRow(3, 12, (0, 1, 2, 4, 9, 10, 12, 15, 19, 21, 31, 32), (0, 1, 3), 35),
    CompactRow(3, 13, (0, 1, 2, 4, 7, 8, 9, 11, 14, 22, 25, 31, 40), (0, 1, 3), 43),
    CompactRow(3, 14, (0, 1, 2, 4, 7, 8, 9, 11, 14, 15, 26, 31, 35, 36), (0, 1, 3), 47),
    CompactRow(3, 15, (0, 1, 2, 4, 7, 8, 9, 11, 14, 16, 18, 22, 35, 39, 41), (0, 1, 3), 53),
    CompactRow(
        3, 16, (0, 1, 2, 4, 7, 8, 9, 11, 14, 15, 16, 18, 39, 41, 43, 47), (0, 1, 3), 59
    ),
    CompactRow(
        3, 17, (0, 1, 2, 4, 7, 8, 9, 11, 14, 15, 16, 18, 35, 38, 41, 43, 47), (0, 1, 3), 61
    ),
    CompactRow(
        3, 18, (0, 1, 2, 4, 7, 8, 9, 11, 15, 18, 20, 23, 32, 41, 47, 49, 51, 62), (0, 1, 3), 67
    ),
    CompactRow(4, 10, (0, 1, 2, 4, 7, 8, 9, 13, 17, 23), (0, 1, 3, 4), 37),
    CompactRow(4, 11, (0, 1, 2, 4, 7, 8, 9, 13, 22, 25, 28), (0, 1, 3, 4), 47),
    CompactRow(4, 12, (0, 1, 2, 15, 16, 17, 21, 24, 25, 33, 36, 48), (0, 1, 3, 50), 52),
)


def raptor_like_matrix() -> ExponentMatrix:
    """A 9x13 multi-edge matrix with lifting degree 78: two highly connected
    precode rows, seven incremental rows, and a shift-0 identity extension.

    Weight-1 columns cannot sit on any cycle, so the identity extension's
    shift choice cannot affect girth or chord verdicts.
    """
    core: list[list[tuple[int, ...] | None]] = [
        [(0,), (0,), (0, 27), (0,), (0, 37), (0,)],
        [(0, 4), (21, 61), (3,), (29, 52), (76,), (18, 46)],
        [(3,), (44,), (11,), (31,), (73,), (50,)],
        [(36,), (60,), (54,), None, (18,), None],
        [None, (72,), None, None, (6,), (18,)],
        [(63,), None, None, (1,), None, (62,)],
        [None, None, (33,), None, (63,), None],
        [None, (36,), None, (75,), None, (48,)],
        [(36,), None, (28,), None, (44,), None],
    ]
    rows = []
    for i, row in enumerate(core):
        ext: list[tuple[int, ...] | None] = [None] * 7
        if i >= 2:
            ext[i - 2] = (0,)
        rows.append(tuple(row + ext))
    return ExponentMatrix(tuple(rows), 78)


SIDON_SEQUENCE: tuple[int, ...] = (0, 6, 9, 10, 21, 23, 28)
SIDON_MODULUS = 48

# Diagonal shift pairs of the three 3x3 blocks of the Sidon-built matrix.
_SIDON_DIAGONALS: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 6), (0, 9), (0, 10)),
    ((9, 10), (6, 23), (6, 21)),
    ((23, 28), (21, 28), (9, 23)),
)


def sidon_matrix() -> ExponentMatrix:
    """The 3x9 multi-edge matrix over Z_48 whose double edges come from a
    Sidon sequence; each 3x3 block is a circulant-like template with weight-2
    diagonal cells, zero-shift off-diagonal cells, and empty cells."""
    rows: list[list[tuple[int, ...] | None]] = [[None] * 9 for _ in range(3)]
    for k, diag in enumerate(_SIDON_DIAGONALS):
        for i in range(3):
            rows[i][3 * k + i] = diag[i]
            rows[i][3 * k + (i + 2) % 3] = (0,)
    return ExponentMatrix(tuple(tuple(r) for r in rows), SIDON_MODULUS)


def distinct_pairwise_sums(seq: tuple[int, ...], modulus: int) -> int:
    """Number of distinct (s_i + s_j) mod m over i <= j."""
    return len({(seq[i] + seq[j]) % modulus for i in range(len(seq)) for j in range(i, len(seq))})


def fixture_registry() -> dict[str, ExponentMatrix]:
    reg = {f"table2-{row.name}": row.matrix() for row in TABLE2_ROWS}
    reg.update({f"table3-{row.name}": row.matrix() for row in TABLE3_ROWS})
    reg["example3-pbrl"] = raptor_like_matrix()
    reg["example4-sidon"] = sidon_matrix()
    return reg


def fixture_file_text(name: str) -> str:
    """Contents of the bundled text fixture for a registry name."""
    fname = name.replace("-", "_") + ".txt"
    return resources.files("qclc.data").joinpath(fname).read_text()


def load_fixture(name: str) -> ExponentMatrix:
    _, matrix = parse_text(fixture_file_text(name))
    return matrix


def write_fixture_files(directory) -> list[str]:
    """Regenerate all fixture files from the registry (development helper)."""
    from pathlib import Path

    out = []
    base = Path(directory)
    base.mkdir(parents=True, exist_ok=True)
    for name, matrix in fixture_registry().items():
        path = base / (name.replace("-", "_") + ".txt")
        path.write_text(serialize_text(matrix))
        out.append(str(path))
    return out
