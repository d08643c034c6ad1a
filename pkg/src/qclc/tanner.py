"""Ground-truth structural analysis on the lifted Tanner graph.

Everything here works on the explicit bipartite graph, independently of the
exponent-matrix algebra, so it can serve as the oracle for the algebraic
checks: girth by BFS, explicit cycle enumeration, chord detection, and
detection of 8-cycles whose chord is a shared external check node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import FourCyclePresentError
from .matrices import ExponentMatrix, ParityCheckMatrix


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite variable/check graph; node ids are (block, copy) flattened."""

    n_v: int
    n_c: int
    v_adj: tuple[tuple[int, ...], ...]  # v-node -> sorted check ids
    c_adj: tuple[tuple[int, ...], ...]  # check id -> sorted v-node ids
    block_cols: int = 0
    block_rows: int = 0
    lift_degree: int = 0

    @classmethod
    def from_exponent(cls, matrix: ExponentMatrix) -> "TannerGraph":
        c, d, n = matrix.rows, matrix.cols, matrix.n
        v_adj: list[list[int]] = [[] for _ in range(d * n)]
        c_adj: list[list[int]] = [[] for _ in range(c * n)]
        for i in range(c):
            for j in range(d):
                cell = matrix.cell(i, j)
                if cell is None:
                    continue
                for b in cell:
                    for s in range(n):
                        cn = i * n + s
                        vn = j * n + (s + b) % n
                        v_adj[vn].append(cn)
                        c_adj[cn].append(vn)
        return cls(
            d * n,
            c * n,
            tuple(tuple(sorted(a)) for a in v_adj),
            tuple(tuple(sorted(a)) for a in c_adj),
            block_cols=d,
            block_rows=c,
            lift_degree=n,
        )

    @classmethod
    def from_parity_check(cls, h: ParityCheckMatrix) -> "TannerGraph":
        v_adj: list[list[int]] = [[] for _ in range(h.n_cols)]
        c_adj: list[list[int]] = [[] for _ in range(h.n_rows)]
        for r in range(h.n_rows):
            for j in h.row_support(r):
                v_adj[j].append(r)
                c_adj[r].append(j)
        return cls(
            h.n_cols,
            h.n_rows,
            tuple(tuple(sorted(a)) for a in v_adj),
            tuple(tuple(sorted(a)) for a in c_adj),
            block_cols=h.block_cols,
            block_rows=h.block_rows,
            lift_degree=h.n,
        )

    def unified_csr(self) -> tuple[np.ndarray, np.ndarray, int]:
        """CSR over v-nodes then c-nodes (check id offset by n_v)."""
        n = self.n_v + self.n_c
        degrees = [len(a) for a in self.v_adj] + [len(a) for a in self.c_adj]
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(degrees)
        indices = np.empty(indptr[-1], dtype=np.int32)
        pos = 0
        for adj in self.v_adj:
            for cn in adj:
                indices[pos] = self.n_v + cn
                pos += 1
        for adj in self.c_adj:
            for vn in adj:
                indices[pos] = vn
                pos += 1
        return indptr, indices, n


def bfs_girth(graph: TannerGraph) -> int | float:
    """Length of the shortest cycle; ``math.inf`` for forests."""
    indptr, indices, n = graph.unified_csr()
    girth = _kernels.bfs_girth_csr(indptr, indices, n)
    return math.inf if girth >= _kernels.NO_CYCLE else int(girth)


@dataclass(frozen=True)
class CycleInstance:
    """A cycle ``v0 c0 v1 c1 ... v0``; node lists are rotation-canonical."""

    v_nodes: tuple[int, ...]
    c_nodes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.v_nodes) != len(self.c_nodes):
            raise ValueError("cycle must alternate v- and c-nodes")
        vs, cs = _canonical_cycle(self.v_nodes, self.c_nodes)
        object.__setattr__(self, "v_nodes", vs)
        object.__setattr__(self, "c_nodes", cs)

    @property
    def length(self) -> int:
        return 2 * len(self.v_nodes)

    def edges(self) -> set[tuple[int, int]]:
        k = len(self.v_nodes)
        out = set()
        for t in range(k):
            out.add((self.v_nodes[t], self.c_nodes[t]))
            out.add((self.v_nodes[(t + 1) % k], self.c_nodes[t]))
        return out


def _canonical_cycle(
    v_nodes: tuple[int, ...], c_nodes: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Smallest representation over rotations and reflection, anchored at a v-node."""
    k = len(v_nodes)
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for s in range(k):
        vs = v_nodes[s:] + v_nodes[:s]
        cs = c_nodes[s:] + c_nodes[:s]
        if best is None or (vs, cs) < best:
            best = (vs, cs)
    rv = tuple(reversed(v_nodes))
    rc = tuple(reversed(c_nodes))
    rc = rc[1:] + rc[:1]  # re-align: c between v_t and v_{t+1}
    for s in range(k):
        vs = rv[s:] + rv[:s]
        cs = rc[s:] + rc[:s]
        if (vs, cs) < best:
            best = (vs, cs)
    return best


def _validate_cycle(cycle: CycleInstance, graph: TannerGraph) -> None:
    k = len(cycle.v_nodes)
    if len(set(cycle.v_nodes)) != k or len(set(cycle.c_nodes)) != k:
        raise ValueError("cycle nodes must be pairwise distinct")
    for t in range(k):
        c = cycle.c_nodes[t]
        for v in (cycle.v_nodes[t], cycle.v_nodes[(t + 1) % k]):
            if v not in graph.c_adj[c]:
                raise ValueError(f"cycle edge ({v},{c}) not present in graph")


def is_chordless(cycle: CycleInstance, graph: TannerGraph) -> bool:
    """No external check joins two cycle v-nodes, and no extra edge touches it.

    A non-cycle edge between a cycle v-node and a cycle c-node counts as a
    chord; an external c-node counts when it reaches two or more cycle
    v-nodes.  Length-4 cycles report True (sub-girth; handled separately).
    """
    _validate_cycle(cycle, graph)
    if cycle.length == 4:
        return True
    cycle_cs = set(cycle.c_nodes)
    cycle_edges = cycle.edges()
    external_hits: dict[int, int] = {}
    for v in cycle.v_nodes:
        for c in graph.v_adj[v]:
            if (v, c) in cycle_edges:
                continue
            if c in cycle_cs:
                return False
            external_hits[c] = external_hits.get(c, 0) + 1
            if external_hits[c] >= 2:
                return False
    return True


def _pair_checks(graph: TannerGraph) -> dict[tuple[int, int], list[int]]:
    """Map each v-node pair sharing a check to the list of shared checks."""
    pairs: dict[tuple[int, int], list[int]] = {}
    for c, vs in enumerate(graph.c_adj):
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                pairs.setdefault((vs[a], vs[b]), []).append(c)
    return pairs


def six_cycles(graph: TannerGraph) -> list[CycleInstance]:
    """All 6-cycles, one instance per node set and check assignment.

    Works per check over neighbor pairs (cost bounded by the sum of squared
    check degrees), then merges pair paths into triangles.
    """
    pairs = _pair_checks(graph)
    nbrs: dict[int, set[int]] = {}
    for (a, b), _ in pairs.items():
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    out: list[CycleInstance] = []
    for (v1, v2), checks_12 in sorted(pairs.items()):
        common = sorted(nbrs.get(v1, set()) & nbrs.get(v2, set()))
        for v3 in common:
            if v3 <= v2:  # emit each triangle once: v1 < v2 < v3
                continue
            for c12 in checks_12:
                for c23 in pairs[(v2, v3)]:
                    if c23 == c12:
                        continue
                    for c31 in pairs[(v1, v3)]:
                        if c31 == c12 or c31 == c23:
                            continue
                        out.append(CycleInstance((v1, v2, v3), (c12, c23, c31)))
    return sorted(out, key=lambda cyc: (cyc.v_nodes, cyc.c_nodes))


def _assert_four_cycle_free(graph: TannerGraph, pairs: dict[tuple[int, int], list[int]]) -> None:
    for (v1, v2), checks in pairs.items():
        if len(checks) > 1:
            raise FourCyclePresentError(
                f"v-nodes {v1},{v2} share checks {checks[0]},{checks[1]}"
            )


@dataclass(frozen=True)
class EightCycleWithChord:
    """An 8-cycle plus the external check joining two opposite v-nodes.

    ``external_common`` counts every external check adjacent to two or more
    of the 8-cycle's v-nodes (the chord itself included).
    """

    cycle: CycleInstance
    chord_check: int
    chord_vs: tuple[int, int]
    halves: tuple[CycleInstance, CycleInstance]
    external_common: int


def find_8wc(graph: TannerGraph) -> list[EightCycleWithChord]:
    """All 8-cycles-with-chord of a 4-cycle-free graph.

    Two distinct 6-cycles sharing exactly one v-c-v path always close into an
    8-cycle whose chord is the shared check; conversely every chorded 8-cycle
    splits along its chord into two such 6-cycles.  Pairs that share more
    than the path (a coincident flank check) do not bound an 8-cycle and are
    skipped.
    """
    pairs = _pair_checks(graph)
    _assert_four_cycle_free(graph, pairs)
    check_of = {pair: cs[0] for pair, cs in pairs.items()}
    nbrs: dict[int, set[int]] = {}
    for (a, b) in check_of:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    def pc(a: int, b: int) -> int:
        return check_of[(a, b) if a < b else (b, a)]

    out: list[EightCycleWithChord] = []
    for (va, vb), chord in sorted(check_of.items()):
        thirds = sorted(nbrs.get(va, set()) & nbrs.get(vb, set()))
        triangles = []
        for x in thirds:
            ca = pc(va, x)
            cb = pc(vb, x)
            if ca != chord and cb != chord and ca != cb:
                triangles.append((x, ca, cb))
        for i in range(len(triangles)):
            x, xa, xb = triangles[i]
            for j in range(i + 1, len(triangles)):
                y, ya, yb = triangles[j]
                if {xa, xb} & {ya, yb}:
                    continue  # flank check shared: union collapses, no 8-cycle
                cyc = CycleInstance((x, va, y, vb), (xa, ya, yb, xb))
                half1 = CycleInstance((va, vb, x), (chord, xb, xa))
                half2 = CycleInstance((va, vb, y), (chord, yb, ya))
                ext = _external_common_count(cyc, graph)
                out.append(EightCycleWithChord(cyc, chord, (va, vb), (half1, half2), ext))
    return sorted(out, key=lambda w: (w.cycle.v_nodes, w.cycle.c_nodes, w.chord_check))


def _external_common_count(cycle: CycleInstance, graph: TannerGraph) -> int:
    cycle_cs = set(cycle.c_nodes)
    hits: dict[int, int] = {}
    for v in cycle.v_nodes:
        for c in graph.v_adj[v]:
            if c not in cycle_cs:
                hits[c] = hits.get(c, 0) + 1
    return sum(1 for n in hits.values() if n >= 2)


@dataclass(frozen=True)
class ChordedCycle:
    """A cycle that failed the chordless test, with its chord inventory."""

    cycle: CycleInstance
    common_checks: tuple[tuple[int, int, int], ...]  # (check, v1, v2), check external
    direct_edges: tuple[tuple[int, int], ...]  # (v, c), both on the cycle


def _chords_of(cycle: CycleInstance, graph: TannerGraph) -> ChordedCycle | None:
    cycle_cs = set(cycle.c_nodes)
    cycle_edges = cycle.edges()
    ext: dict[int, list[int]] = {}
    direct: list[tuple[int, int]] = []
    for v in cycle.v_nodes:
        for c in graph.v_adj[v]:
            if (v, c) in cycle_edges:
                continue
            if c in cycle_cs:
                direct.append((v, c))
            else:
                ext.setdefault(c, []).append(v)
    common = tuple(
        (c, vs[0], vs[1]) for c, vs in sorted(ext.items()) if len(vs) >= 2 for vs in [sorted(vs)]
    )
    if not common and not direct:
        return None
    return ChordedCycle(cycle, common, tuple(sorted(direct)))


def enumerate_cycles(graph: TannerGraph, length: int) -> list[CycleInstance]:
    """All simple cycles of exactly the given (even) length."""
    if length % 2 or length < 4:
        raise ValueError("cycle length must be even and at least 4")
    indptr, indices, n = graph.unified_csr()
    adj = [list(indices[indptr[u]:indptr[u + 1]]) for u in range(n)]
    out: set[CycleInstance] = set()
    path = [0] * length
    on_path = [False] * n

    def dfs(u: int, depth: int, root: int) -> None:
        for w in adj[u]:
            if depth == length - 1:
                if w == root and path[1] < path[-1]:
                    vs = tuple(path[0::2])
                    cs = tuple(c - graph.n_v for c in path[1::2])
                    out.add(CycleInstance(vs, cs))
                continue
            # check ids sit above all v-node ids, so `w <= root` only ever
            # prunes v-nodes: the path anchor is the cycle's smallest v-node
            if w <= root or on_path[w]:
                continue
            path[depth + 1] = w
            on_path[w] = True
            dfs(w, depth + 1, root)
            on_path[w] = False

    for root in range(graph.n_v):
        path[0] = root
        on_path[root] = True
        dfs(root, 0, root)
        on_path[root] = False
    return sorted(out, key=lambda cyc: (cyc.v_nodes, cyc.c_nodes))


def find_cycles_wc(graph: TannerGraph, length: int) -> list[ChordedCycle]:
    """All chorded cycle instances of the given length (8, 10 or 12).

    Lengths below the girth naturally yield an empty list.  The caller is
    expected to have ruled out 4-cycles; the chord inventory on each witness
    records whether chords are external-common-check connections or direct
    edges, so the simplified characterizations can be audited per witness.
    """
    if length not in (8, 10, 12):
        raise ValueError("supported chord scan lengths: 8, 10, 12")
    out = []
    for cyc in enumerate_cycles(graph, length):
        chords = _chords_of(cyc, graph)
        if chords is not None:
            out.append(chords)
    return out
