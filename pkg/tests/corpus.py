"""Seeded random matrix generators shared by the property and acceptance suites."""

from __future__ import annotations

import random

from qclc.cycles import four_cycle_free
from qclc.matrices import ExponentMatrix

Rng = random.Random


def random_single_edge(rng: Rng, c: int, d: int, n: int) -> ExponentMatrix:
    cells = tuple(tuple((rng.randrange(n),) for _ in range(d)) for _ in range(c))
    return ExponentMatrix(cells, n)


def random_multi_edge(rng: Rng, c: int, d: int, n: int, max_weight: int = 2) -> ExponentMatrix:
    """Random matrix with cell weights in {0..max_weight}; at least one
    multi-edge cell and no all-empty row or column."""
    while True:
        cells = []
        for _ in range(c):
            row = []
            for _ in range(d):
                w = rng.choice((0, 1, 1, 2)) if max_weight >= 2 else rng.choice((0, 1))
                row.append(None if w == 0 else tuple(sorted(rng.sample(range(n), w))))
            cells.append(tuple(row))
        matrix = ExponentMatrix(tuple(cells), n)
        if matrix.max_cell_weight() < 2:
            continue
        if any(matrix.row_weight(i) == 0 for i in range(c)):
            continue
        if any(matrix.column_weight(j) == 0 for j in range(d)):
            continue
        return matrix


def sample_four_cycle_free(
    rng: Rng,
    count: int,
    kind: str,
    c_max: int = 4,
    d_max: int = 6,
    n_max: int = 16,
) -> list[ExponentMatrix]:
    """Rejection-sample 4-cycle-free matrices of the given kind."""
    out: list[ExponentMatrix] = []
    while len(out) < count:
        c = rng.randint(2, c_max)
        d = rng.randint(2, d_max)
        n = rng.randint(4, n_max)
        if kind == "se":
            matrix = random_single_edge(rng, c, d, n)
        else:
            matrix = random_multi_edge(rng, c, d, n)
        if four_cycle_free(matrix):
            out.append(matrix)
    return out


def sample_girth8(rng: Rng, count: int, n_max: int = 16) -> list[ExponentMatrix]:
    """Random single-edge matrices whose lifted graph has girth exactly 8."""
    from qclc.cycles import algebraic_girth

    out: list[ExponentMatrix] = []
    shapes = ((2, 3), (3, 3), (2, 4))
    while len(out) < count:
        c, d = shapes[rng.randrange(len(shapes))]
        n = rng.randint(6, n_max)
        matrix = random_single_edge(rng, c, d, n)
        if algebraic_girth(matrix, cap=8) == 8:
            out.append(matrix)
    return out
