"""Algebraic conditions for 8-cycle-with-chord freedom on exponent matrices.

A chorded 8-cycle is the union of two 6-cycles glued along a v-c-v path.  On
the exponent matrix this shows up as two vanishing length-6 walk sums that
share one term shape: same row, same unordered (column, edge) endpoints.

Two layers are provided:

- the 3x3 / 3x4 submatrix checks for single-edge matrices (the fast path):
  per 3x3 submatrix a vector of six walk sums, failing on the nine zero
  pairs that correspond to equations sharing a term; per 3x4 submatrix the
  row-positioned column-pair comparison across its four 3x3 children;
- :func:`check_chordfree`, the production check for single- and
  multiple-edge matrices: it enumerates all vanishing 6-walks, pairs up
  shared-term occurrences, and accepts a pair only when the aligned lifted
  instances really glue into an 8-cycle (flank checks must not collapse).
  On 4-cycle-free inputs this is exactly equivalent to scanning the lifted
  graph for chorded 8-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cycles import CycleWalk, TermKey, cycle_sum, four_cycle_free, zero_sum_walks
from .errors import FourCyclePresentError
from .matrices import ExponentMatrix
from .tanner import CycleInstance

# Column visit orders of the six length-6 walk equations on a 3x3 submatrix,
# as indices into the column triple; rows are always visited in order.
EQUATION_COLSEQ: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2),
    (0, 2, 1),
    (1, 2, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 0, 2),
)

# 1-based equation index pairs that share a term and therefore must not both
# vanish; any other pair of equations has three disjoint term shapes.
ZERO_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 6),
    (1, 2),
    (1, 4),
    (2, 5),
    (2, 3),
    (3, 4),
    (3, 6),
    (4, 5),
    (5, 6),
)


@dataclass(frozen=True)
class SixEntryVector:
    """The six 6-cycle walk sums of one single-edge 3x3 submatrix."""

    rows: tuple[int, int, int]
    cols: tuple[int, int, int]
    entries: tuple[int, int, int, int, int, int]

    def zeros(self) -> tuple[int, ...]:
        """1-based positions of vanishing entries."""
        return tuple(m + 1 for m, e in enumerate(self.entries) if e == 0)


def six_entry_vector(
    matrix: ExponentMatrix,
    rows: tuple[int, int, int],
    cols: tuple[int, int, int],
) -> SixEntryVector | None:
    """Evaluate the six equations; ``None`` when a cell is empty.

    Only defined for single-edge cells: a missing edge admits no 6-cycle
    through this submatrix, and multi-edge cells are handled by the general
    walk machinery instead.
    """
    shift: list[list[int]] = []
    for i in rows:
        row = []
        for j in cols:
            cell = matrix.cell(i, j)
            if cell is None:
                return None
            if len(cell) != 1:
                raise ValueError(f"cell ({i},{j}) has weight {len(cell)}; expected single edge")
            row.append(cell[0])
        shift.append(row)
    entries = []
    for seq in EQUATION_COLSEQ:
        total = 0
        for t in range(3):
            total += shift[t][seq[t]] - shift[t][seq[(t + 1) % 3]]
        entries.append(total % matrix.n)
    return SixEntryVector(tuple(rows), tuple(cols), tuple(entries))


def check_3x3(
    matrix: ExponentMatrix,
    rows: tuple[int, int, int],
    cols: tuple[int, int, int],
) -> int | None:
    """``None`` if the submatrix cannot carry a chorded 8-cycle, else the
    1-based index of the first violated zero pair."""
    vec = six_entry_vector(matrix, rows, cols)
    if vec is None:
        return None
    for idx, (a, b) in enumerate(ZERO_PAIRS, start=1):
        if vec.entries[a - 1] == 0 and vec.entries[b - 1] == 0:
            return idx
    return None


def equation_row_pairs(eq: int) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """Per-row unordered column-index pairs of equation ``eq`` (1-based),
    as indices into the column triple."""
    seq = EQUATION_COLSEQ[eq - 1]
    return tuple(tuple(sorted((seq[t], seq[(t + 1) % 3]))) for t in range(3))  # type: ignore[return-value]


def column_index_vector(
    vec: SixEntryVector, zero_pos: int, n_rows: int
) -> tuple[tuple[int, int] | None, ...]:
    """Row-indexed column pairs of a vanishing equation, padded to ``n_rows``.

    Entry at each of the three active rows is that row's unordered column
    pair; all other entries are ``None``.
    """
    if not 1 <= zero_pos <= 6:
        raise ValueError("zero_pos must be in 1..6")
    if vec.entries[zero_pos - 1] != 0:
        raise ValueError(f"entry {zero_pos} is {vec.entries[zero_pos - 1]}, not zero")
    out: list[tuple[int, int] | None] = [None] * n_rows
    for t, local_pair in enumerate(equation_row_pairs(zero_pos)):
        pair = tuple(sorted((vec.cols[local_pair[0]], vec.cols[local_pair[1]])))
        out[vec.rows[t]] = pair  # type: ignore[assignment]
    return tuple(out)


@dataclass(frozen=True)
class SubmatrixWitness:
    """Two vanishing equations of sibling 3x3 submatrices sharing a row pair."""

    row: int
    pair: tuple[int, int]
    first: tuple[tuple[int, int, int], int]  # (column triple, equation index)
    second: tuple[tuple[int, int, int], int]


def check_3x4(
    matrix: ExponentMatrix,
    rows: tuple[int, int, int],
    cols: tuple[int, int, int, int],
) -> SubmatrixWitness | None:
    """Cross-check the four 3x3 children of a 3x4 submatrix.

    Fails when two of their vanishing equations place a common column pair at
    the same row; two zeros inside one child are :func:`check_3x3`'s job.
    """
    seen: dict[tuple[int, tuple[int, int]], tuple[tuple[int, int, int], int]] = {}
    for triple in combinations(sorted(cols), 3):
        vec = six_entry_vector(matrix, rows, triple)
        if vec is None:
            continue
        for zero_pos in vec.zeros():
            civ = column_index_vector(vec, zero_pos, matrix.rows)
            for row, pair in enumerate(civ):
                if pair is None:
                    continue
                key = (row, pair)
                prev = seen.get(key)
                if prev is not None and prev[0] != triple:
                    return SubmatrixWitness(row, pair, prev, (triple, zero_pos))
                if prev is None:
                    seen[key] = (triple, zero_pos)
    return None


# ---------------------------------------------------------------------------
# the general check: exact on 4-cycle-free matrices, single- or multiple-edge


@dataclass(frozen=True)
class ChordWitness:
    """Two vanishing 6-walks whose lifted instances glue into a chorded 8-cycle."""

    walk_a: CycleWalk
    pos_a: int
    walk_b: CycleWalk
    pos_b: int
    reflected: bool
    term: TermKey
    cycle: CycleInstance  # the chorded 8-cycle, in lifted-graph node ids
    chord_check: int
    chord_vs: tuple[int, int]


@dataclass(frozen=True)
class ChordFreeReport:
    passed: bool
    witnesses: tuple[ChordWitness, ...]
    walks_checked: int


def _instance_offsets(walk: CycleWalk, matrix: ExponentMatrix) -> tuple[list[int], list[int]]:
    """Base-instance node offsets: v-offset before each segment, check offset."""
    n = matrix.n
    alphas = [0]
    chis = []
    for m, nf, nt, rf, rt in walk.segments:
        b_in = matrix.cell(m, nf)[rf]
        b_out = matrix.cell(m, nt)[rt]
        chis.append((alphas[-1] - b_in) % n)
        alphas.append((alphas[-1] - (b_in - b_out)) % n)
    return alphas[:-1], chis


def _instance_nodes(
    walk: CycleWalk, matrix: ExponentMatrix, shift: int
) -> tuple[list[int], list[int]]:
    """Global lifted node ids of the instance displaced by ``shift``."""
    n = matrix.n
    alphas, chis = _instance_offsets(walk, matrix)
    vs = [walk.segments[t][1] * n + (alphas[t] + shift) % n for t in range(walk.k)]
    cs = [walk.segments[t][0] * n + (chis[t] + shift) % n for t in range(walk.k)]
    return vs, cs


def _ordered_ends(walk: CycleWalk, pos: int) -> tuple[tuple[int, int], tuple[int, int]]:
    m, nf, nt, rf, rt = walk.segments[pos]
    return ((nf, rf), (nt, rt))


def _try_glue(
    matrix: ExponentMatrix,
    walk_a: CycleWalk,
    pos_a: int,
    walk_b: CycleWalk,
    pos_b: int,
    reflected: bool,
) -> tuple[CycleInstance, int, tuple[int, int], int] | None:
    """Align instance of ``walk_b`` onto ``walk_a``'s term path; return the
    chorded 8-cycle if the union is genuine."""
    n = matrix.n
    wb = walk_b.reflected() if reflected else walk_b
    pb = (walk_b.k - 1 - pos_b) if reflected else pos_b
    if _ordered_ends(wb, pb) != _ordered_ends(walk_a, pos_a):
        return None
    if wb.segments[pb][0] != walk_a.segments[pos_a][0]:
        return None
    alphas_a, chis_a = _instance_offsets(walk_a, matrix)
    alphas_b, chis_b = _instance_offsets(wb, matrix)
    sigma = (alphas_a[pos_a] - alphas_b[pb]) % n
    vs_a, cs_a = _instance_nodes(walk_a, matrix, 0)
    vs_b, cs_b = _instance_nodes(wb, matrix, sigma)
    k = walk_a.k
    # both instances must be genuine 6-cycles
    if len(set(vs_a)) != k or len(set(cs_a)) != k:
        return None
    if len(set(vs_b)) != k or len(set(cs_b)) != k:
        return None
    # shared nodes must be exactly the glued path
    s0, s1 = vs_a[pos_a], vs_a[(pos_a + 1) % k]
    chord = cs_a[pos_a]
    if set(vs_a) & set(vs_b) != {s0, s1}:
        return None
    if set(cs_a) & set(cs_b) != {chord}:
        return None
    third_a = vs_a[(pos_a + 2) % k]
    third_b = vs_b[(pb + 2) % k]
    cycle = CycleInstance(
        (third_a, s0, third_b, s1),
        (
            cs_a[(pos_a + 2) % k],  # third_a -- s0
            cs_b[(pb + 2) % k],  # s0 -- third_b
            cs_b[(pb + 1) % k],  # third_b -- s1
            cs_a[(pos_a + 1) % k],  # s1 -- third_a
        ),
    )
    return cycle, chord, tuple(sorted((s0, s1))), sigma


def check_chordfree(matrix: ExponentMatrix) -> ChordFreeReport:
    """Decide 8-cycle-with-chord freedom from the exponent matrix alone.

    Raises :class:`FourCyclePresentError` unless the matrix is 4-cycle free.
    Every pair of vanishing 6-walk term occurrences with a common shape is
    tested, including two occurrences inside one walk class (multi-edge
    matrices can chord against their own shifted copies).
    """
    if not four_cycle_free(matrix):
        raise FourCyclePresentError("matrix has 4-cycles; chord analysis assumes girth >= 6")
    walks = zero_sum_walks(matrix, 3)
    occurrences: dict[TermKey, list[tuple[int, int]]] = {}
    for wi, walk in enumerate(walks):
        for pos, key in enumerate(walk.term_keys()):
            occurrences.setdefault(key, []).append((wi, pos))
    witnesses: list[ChordWitness] = []
    seen: set[tuple[tuple[int, ...], tuple[int, ...], int]] = set()
    for key, occ in sorted(occurrences.items()):
        for x in range(len(occ)):
            for y in range(x, len(occ)):
                wa, pa = occ[x]
                wb, pb = occ[y]
                for reflected in (False, True):
                    glued = _try_glue(matrix, walks[wa], pa, walks[wb], pb, reflected)
                    if glued is None:
                        continue
                    cycle, chord, chord_vs, _ = glued
                    sig = (cycle.v_nodes, cycle.c_nodes, chord)
                    if sig in seen:
                        continue
                    seen.add(sig)
                    witnesses.append(
                        ChordWitness(
                            walks[wa], pa, walks[wb], pb, reflected, key, cycle, chord, chord_vs
                        )
                    )
    witnesses.sort(key=lambda w: (w.cycle.v_nodes, w.cycle.c_nodes, w.chord_check))
    return ChordFreeReport(not witnesses, tuple(witnesses), len(walks))


def check_all_submatrices(matrix: ExponentMatrix) -> dict:
    """Run the single-edge fast path over every 3x3 and 3x4 submatrix.

    Returns a summary dict with the failing submatrices (empty lists mean the
    matrix passes both theorem-level checks).
    """
    if not matrix.single_edge:
        raise ValueError("submatrix checks apply to single-edge matrices only")
    bad_3x3 = []
    bad_3x4 = []
    rows_iter = list(combinations(range(matrix.rows), 3))
    for rows in rows_iter:
        for cols in combinations(range(matrix.cols), 3):
            pair_idx = check_3x3(matrix, rows, cols)
            if pair_idx is not None:
                bad_3x3.append({"rows": rows, "cols": cols, "pair": pair_idx})
        for cols4 in combinations(range(matrix.cols), 4):
            witness = check_3x4(matrix, rows, cols4)
            if witness is not None:
                bad_3x4.append({"rows": rows, "cols": cols4, "witness": witness})
    return {"three_by_three": bad_3x3, "three_by_four": bad_3x4}
