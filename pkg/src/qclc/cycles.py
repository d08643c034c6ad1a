"""Algebraic cycle detection on exponent matrices.

A closed walk of length 2k through the exponent matrix is a cyclic sequence
of k segments ``(m, n_from, n_to, r_from, r_to)``: enter column ``n_from`` of
row ``m`` through shift index ``r_from``, leave to column ``n_to`` through
``r_to``.  The walk yields cycles in the lifted graph exactly when its
alternating shift sum vanishes mod N.

Two structural constraints make walks non-backtracking, cyclically:
``r_from != r_to`` whenever a segment stays in one column, and consecutive
segments in one row must not reuse the connecting shift index.

The minimal 2k with a vanishing walk sum equals the lifted-graph girth: a
vanishing walk lifts to a closed non-backtracking walk, which always contains
a cycle no longer than itself, and every lifted cycle projects back to a
vanishing walk of its own length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import WalkStructureError
from .matrices import ExponentMatrix

# (row, col_from, col_to, edge_from, edge_to)
Segment = tuple[int, int, int, int, int]

# identity of a lifted v-c-v path shape: (row, sorted ((col, edge), (col, edge)))
TermKey = tuple[int, tuple[tuple[int, int], tuple[int, int]]]


def _flip(seg: Segment) -> Segment:
    m, nf, nt, rf, rt = seg
    return (m, nt, nf, rt, rf)


@dataclass(frozen=True)
class CycleWalk:
    """A closed walk; ``segments[t].col_to == segments[t+1].col_from`` cyclically."""

    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        k = len(self.segments)
        if k < 2:
            raise WalkStructureError("a closed walk needs at least two segments")
        for t, seg in enumerate(self.segments):
            nxt = self.segments[(t + 1) % k]
            if seg[2] != nxt[1]:
                raise WalkStructureError(f"segment {t} exits column {seg[2]}, next enters {nxt[1]}")
            if seg[1] == seg[2] and seg[3] == seg[4]:
                raise WalkStructureError(f"segment {t} backtracks within a cell")
            if seg[0] == nxt[0] and seg[4] == nxt[3]:
                raise WalkStructureError(f"segments {t},{(t + 1) % k} backtrack within a row")

    @property
    def k(self) -> int:
        return len(self.segments)

    @property
    def length(self) -> int:
        return 2 * len(self.segments)

    def rotated(self, s: int) -> "CycleWalk":
        k = len(self.segments)
        s %= k
        return CycleWalk(self.segments[s:] + self.segments[:s])

    def reflected(self) -> "CycleWalk":
        return CycleWalk(tuple(_flip(seg) for seg in reversed(self.segments)))

    def canonical(self) -> "CycleWalk":
        """Lexicographically smallest rotation of either orientation."""
        best = None
        for walk in (self.segments, tuple(_flip(s) for s in reversed(self.segments))):
            for s in range(len(walk)):
                cand = walk[s:] + walk[:s]
                if best is None or cand < best:
                    best = cand
        return CycleWalk(best)  # type: ignore[arg-type]

    def term_keys(self) -> tuple[TermKey, ...]:
        """Per-segment path identities: row plus unordered (column, edge) endpoints."""
        out = []
        for m, nf, nt, rf, rt in self.segments:
            ends = tuple(sorted(((nf, rf), (nt, rt))))
            out.append((m, ends))
        return tuple(out)


def _check_cells(walk: CycleWalk, matrix: ExponentMatrix) -> None:
    for t, (m, nf, nt, rf, rt) in enumerate(walk.segments):
        for n, r in ((nf, rf), (nt, rt)):
            cell = matrix.cell(m, n)
            if cell is None:
                raise WalkStructureError(f"segment {t} references empty cell ({m},{n})")
            if not 0 <= r < len(cell):
                raise WalkStructureError(f"segment {t} edge index {r} out of range at ({m},{n})")


def cycle_sum(walk: CycleWalk, matrix: ExponentMatrix) -> int:
    """Alternating shift sum of the walk, reduced mod N.

    Residue 0 means the walk closes in the lifted graph, i.e. it yields
    cycles of (at most) the walk's length there.
    """
    _check_cells(walk, matrix)
    total = 0
    for m, nf, nt, rf, rt in walk.segments:
        total += matrix.cell(m, nf)[rf] - matrix.cell(m, nt)[rt]
    return total % matrix.n


def enumerate_walks(matrix: ExponentMatrix, k: int) -> Iterator[CycleWalk]:
    """Yield one canonical representative per rotation/reflection class.

    Enumeration is a depth-first scan in column-major order over segment
    choices, so the stream is deterministic; a walk is emitted only when it
    equals its own canonical form.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    c, d = matrix.rows, matrix.cols
    weights = [[matrix.weight(i, j) for j in range(d)] for i in range(c)]
    segs: list[Segment] = []

    def extend(col: int, start_col: int, start_seg: Segment | None) -> Iterator[CycleWalk]:
        t = len(segs)
        last_m = segs[-1][0] if segs else -1
        last_rt = segs[-1][4] if segs else -1
        for m in range(c):
            w_from = weights[m][col]
            if w_from == 0:
                continue
            for rf in range(w_from):
                if m == last_m and rf == last_rt:
                    continue
                targets = (start_col,) if t == k - 1 else range(d)
                for nt in targets:
                    w_to = weights[m][nt]
                    if w_to == 0:
                        continue
                    for rt in range(w_to):
                        if nt == col and rt == rf:
                            continue
                        if t == k - 1 and start_seg is not None:
                            if m == start_seg[0] and rt == start_seg[3]:
                                continue
                        segs.append((m, col, nt, rf, rt))
                        if t == k - 1:
                            walk = CycleWalk(tuple(segs))
                            if walk.segments == walk.canonical().segments:
                                yield walk
                        else:
                            yield from extend(nt, start_col, segs[0])
                        segs.pop()

    for n0 in range(d):
        yield from extend(n0, n0, None)


def _zero_walk_exists(matrix: ExponentMatrix, k: int) -> bool:
    """Existence of a vanishing length-2k walk, by dynamic programming.

    The first segment is fixed, then residue sets are propagated per state
    (current column, previous row, previous exit edge), bit-packed as Python
    ints over Z_N.
    """
    c, d, n = matrix.rows, matrix.cols, matrix.n
    cells = matrix.cells
    full = (1 << n) - 1

    def rot(mask: int, delta: int) -> int:
        delta %= n
        return ((mask << delta) | (mask >> (n - delta))) & full if delta else mask

    for n0 in range(d):
        starts: list[tuple[int, int, int, int, int]] = []
        for m0 in range(c):
            cell0 = cells[m0][n0]
            if cell0 is None:
                continue
            for r0 in range(len(cell0)):
                for n1 in range(d):
                    cell1 = cells[m0][n1]
                    if cell1 is None:
                        continue
                    for r0p in range(len(cell1)):
                        if n1 == n0 and r0p == r0:
                            continue
                        starts.append((m0, r0, n1, r0p, cell0[r0] - cell1[r0p]))
        for m0, r0, n1, r0p, delta0 in starts:
            states: dict[tuple[int, int, int], int] = {(n1, m0, r0p): rot(1, delta0)}
            for t in range(1, k):
                nxt: dict[tuple[int, int, int], int] = {}
                last = t == k - 1
                for (col, mp, rp), mask in states.items():
                    for m in range(c):
                        cell_in = cells[m][col]
                        if cell_in is None:
                            continue
                        for r in range(len(cell_in)):
                            if m == mp and r == rp:
                                continue
                            targets = (n0,) if last else range(d)
                            for n_to in targets:
                                cell_out = cells[m][n_to]
                                if cell_out is None:
                                    continue
                                for r2 in range(len(cell_out)):
                                    if n_to == col and r2 == r:
                                        continue
                                    if last and m == m0 and r2 == r0:
                                        continue
                                    key = (n_to, m, r2)
                                    moved = rot(mask, cell_in[r] - cell_out[r2])
                                    nxt[key] = nxt.get(key, 0) | moved
                states = nxt
                if not states:
                    break
            for (col, _, _), mask in states.items():
                if col == n0 and mask & 1:
                    return True
    return False


def algebraic_girth(matrix: ExponentMatrix, cap: int = 12) -> int | None:
    """Smallest 2k <= cap with a vanishing walk; ``None`` if girth > cap."""
    if cap < 4 or cap % 2:
        raise ValueError("cap must be an even integer >= 4")
    for k in range(2, cap // 2 + 1):
        if _zero_walk_exists(matrix, k):
            return 2 * k
    return None


def four_cycle_free(matrix: ExponentMatrix) -> bool:
    return not _zero_walk_exists(matrix, 2)


def zero_sum_walks(matrix: ExponentMatrix, k: int) -> list[CycleWalk]:
    """All canonical walk classes of length 2k whose sum vanishes."""
    return [w for w in enumerate_walks(matrix, k) if cycle_sum(w, matrix) == 0]
