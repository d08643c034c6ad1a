"""Trapping sets, their size bounds, and minimum distance.

An (a, b) trapping set is a set of a variable nodes inducing b odd-degree
checks; it is elementary when every induced check degree is 1 or 2.  The VN
graph of an elementary set keeps the variables as vertices and the degree-2
checks as edges.  Chord-free codes push the smallest admissible sizes up;
the tabulated bounds live in ``MIN_A_TABLE`` and the analytic edge-count
bound in :func:`edge_bound`.

Minimum distance equals the size of the smallest nonempty variable set whose
induced check degrees are all even, which gives two independent routes: full
codeword enumeration through a nullspace basis (exact, exponential in the
code dimension) and a bounded even-subgraph search (exact whenever it finds
anything under its size limit).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import QclcError
from .matrices import ParityCheckMatrix
from .tanner import TannerGraph, bfs_girth

# Lower bounds on the size a of an (a, b) ETS in a variable-regular girth-6
# code whose 8-cycles are chordless, for column weights 3..6 and b = 0..gamma.
# None marks combinations left blank in the established table.
MIN_A_TABLE: dict[int, tuple[int | None, ...]] = {
    3: (6, 7, 6, 5),
    4: (8, None, 8, None, 7),
    5: (10, 11, 10, 11, 10, 9),
    6: (12, None, 12, None, 12, None, 11),
}

# Minimum (a, b) ETS sizes for girth-8, column-weight-3 codes with chordless
# cycles up to length 12, b = 0..3.
MIN_A_GIRTH8_TABLE: dict[int, tuple[int | None, ...]] = {3: (10, 9, 8, 5)}


def edge_bound(a: int) -> int:
    """Maximum VN-graph edge count of a size-a ETS with chordless 8-cycles."""
    if a < 2:
        return 0
    return (a * a * a) // (4 * a - 3)


def b_lower_bound(a: int, gamma: int) -> int:
    """Fewest odd checks a size-a chord-free ETS can have (clamped at 0)."""
    return max(a * gamma - 2 * edge_bound(a), 0)


def min_a_formula(gamma: int, b: int) -> int:
    """Smallest a compatible with the edge-count bound and, when b < a, with
    the a >= 2*gamma - 2 floor."""
    a = 2
    while True:
        if b_lower_bound(a, gamma) <= b and (b >= a or a >= 2 * gamma - 2):
            return a
        a += 1


@dataclass(frozen=True)
class BoundInfo:
    """A minimum-ETS-size bound plus where it came from."""

    value: int | None  # None mirrors the blank table entries
    source: str  # "table" or "formula"
    formula_value: int
    refined: bool  # table value exceeds the raw formula (case analysis)


def min_a(gamma: int, b: int, girth_regime: str = "girth6") -> BoundInfo:
    """Lower bound on the size of an (a, b) ETS under chordless short cycles.

    ``girth_regime`` selects girth-6 codes free of chorded 8-cycles
    ("girth6") or girth-8, column-weight-3 codes with chordless cycles up to
    length 12 ("girth8").  Tabulated column weights use the table (blank
    entries come back as ``None``); anything else falls back to the analytic
    formula.
    """
    if gamma < 3:
        raise ValueError("bounds are stated for column weight >= 3")
    formula = min_a_formula(gamma, b)
    table = MIN_A_GIRTH8_TABLE if girth_regime == "girth8" else MIN_A_TABLE
    if girth_regime not in ("girth6", "girth8"):
        raise ValueError("girth_regime must be 'girth6' or 'girth8'")
    row = table.get(gamma)
    if row is not None and 0 <= b < len(row):
        value = row[b]
        refined = value is not None and value > formula
        return BoundInfo(value, "table", formula, refined)
    return BoundInfo(formula, "formula", formula, False)


def dmin_bound(gamma: int, girth: int, chordfree_len: int) -> int:
    """Minimum-distance lower bound from girth and chord-freedom.

    ``chordfree_len`` is the largest cycle length verified chordless (0 when
    nothing is known).  Girth-6 codes with chordless 8-cycles get 2*gamma;
    girth-8 weight-3 codes chordless through length 12 get 10; otherwise the
    generic gamma + 1 applies.
    """
    if gamma >= 3 and girth == 6 and chordfree_len >= 8:
        return 2 * gamma
    if gamma == 3 and girth == 8 and chordfree_len >= 12:
        return 10
    return gamma + 1


# ---------------------------------------------------------------------------
# VN graphs and trapping-set records


@dataclass(frozen=True)
class VNGraph:
    """Variable-node graph of a set S: degree-2 induced checks become edges."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (v1, v2, check), v1 < v2

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def triangle_pairs_sharing_edge(self) -> int:
        """Number of triangle pairs glued along an edge (each is a chorded
        8-cycle of the underlying Tanner graph)."""
        pair_checks: dict[tuple[int, int], list[int]] = {}
        nbrs: dict[int, set[int]] = {}
        for v1, v2, c in self.edges:
            pair_checks.setdefault((v1, v2), []).append(c)
            nbrs.setdefault(v1, set()).add(v2)
            nbrs.setdefault(v2, set()).add(v1)

        def chk(a: int, b: int) -> list[int]:
            return pair_checks.get((a, b) if a < b else (b, a), [])

        count = 0
        for (v1, v2), checks in pair_checks.items():
            thirds = sorted(nbrs[v1] & nbrs[v2])
            for c in checks:
                tri = []
                for x in thirds:
                    for ca in chk(v1, x):
                        for cb in chk(v2, x):
                            if ca != c and cb != c and ca != cb:
                                tri.append((x, ca, cb))
                for i in range(len(tri)):
                    for j in range(i + 1, len(tri)):
                        if not ({tri[i][1], tri[i][2]} & {tri[j][1], tri[j][2]}):
                            count += 1
        return count


def induced_check_degrees(v_nodes: tuple[int, ...], graph: TannerGraph) -> dict[int, int]:
    degrees: dict[int, int] = {}
    for v in v_nodes:
        for c in graph.v_adj[v]:
            degrees[c] = degrees.get(c, 0) + 1
    return degrees


def vn_graph(v_nodes: tuple[int, ...], graph: TannerGraph) -> VNGraph:
    """VN graph of a variable set (degree-1 checks dropped, degree-2 kept)."""
    if not v_nodes:
        raise ValueError("variable set must be nonempty")
    vs = tuple(sorted(set(v_nodes)))
    degrees = induced_check_degrees(vs, graph)
    edges = []
    member = set(vs)
    for c, deg in degrees.items():
        if deg != 2:
            continue
        ends = sorted(v for v in graph.c_adj[c] if v in member)
        edges.append((ends[0], ends[1], c))
    return VNGraph(vs, tuple(sorted(edges)))


@dataclass(frozen=True)
class TrappingSetRecord:
    v_nodes: tuple[int, ...]
    a: int
    b: int
    check_degree_histogram: tuple[tuple[int, int], ...]  # (degree, count)
    elementary: bool
    vn_edges: int
    chordfree_eight: bool  # no two VN triangles share an edge

    @property
    def kind(self) -> tuple[int, int]:
        return (self.a, self.b)


def classify_set(v_nodes: tuple[int, ...], graph: TannerGraph) -> TrappingSetRecord:
    vs = tuple(sorted(set(v_nodes)))
    degrees = induced_check_degrees(vs, graph)
    hist: dict[int, int] = {}
    for deg in degrees.values():
        hist[deg] = hist.get(deg, 0) + 1
    b = sum(n for deg, n in hist.items() if deg % 2)
    elementary = all(deg <= 2 for deg in degrees.values())
    vng = vn_graph(vs, graph)
    return TrappingSetRecord(
        vs,
        len(vs),
        b,
        tuple(sorted(hist.items())),
        elementary,
        vng.edge_count,
        vng.triangle_pairs_sharing_edge() == 0,
    )


# ---------------------------------------------------------------------------
# enumeration


def _csr(adj: tuple[tuple[int, ...], ...]) -> tuple[np.ndarray, np.ndarray]:
    ptr = np.zeros(len(adj) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(a) for a in adj])
    idx = np.fromiter((x for a in adj for x in a), dtype=np.int32, count=int(ptr[-1]))
    return ptr, idx


def _vn_adjacency_csr(graph: TannerGraph) -> tuple[np.ndarray, np.ndarray]:
    nbrs: list[set[int]] = [set() for _ in range(graph.n_v)]
    for vs in graph.c_adj:
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                nbrs[vs[a]].add(vs[b])
                nbrs[vs[b]].add(vs[a])
    return _csr(tuple(tuple(sorted(s)) for s in nbrs))


def _drop_table(graph: TannerGraph, a_max: int, four_cycle_free: bool) -> np.ndarray:
    degs = [len(a) for a in graph.v_adj]
    gmin, gmax = min(degs), max(degs)
    drop = np.zeros(a_max + 1, dtype=np.int32)
    for t in range(1, a_max + 1):
        if four_cycle_free:
            drop[t] = max(2 * min(g, t) - g for g in range(gmin, gmax + 1))
        else:
            drop[t] = gmax
    return drop


def enumerate_ets(
    graph: TannerGraph,
    a_max: int,
    b_max: int | None = None,
    b_allow: dict[int, int] | None = None,
) -> list[TrappingSetRecord]:
    """All connected elementary trapping sets up to size a_max.

    Records every connected variable set whose induced check degrees stay at
    most 2 and whose odd-check count b satisfies b <= b_max (or the per-size
    ``b_allow`` map; sizes absent from it are never recorded).  Disconnected
    trapping sets split into smaller ones, so connected enumeration is
    complete for minimal-size questions.
    """
    if a_max < 1:
        raise ValueError("a_max must be positive")
    if (b_max is None) == (b_allow is None):
        raise ValueError("give exactly one of b_max / b_allow")
    allow = np.full(a_max + 1, -1, dtype=np.int32)
    if b_max is not None:
        allow[1:] = b_max
    else:
        for a, b in b_allow.items():
            if 1 <= a <= a_max:
                allow[a] = b
    vc_ptr, vc_idx = _csr(graph.v_adj)
    vv_ptr, vv_idx = _vn_adjacency_csr(graph)
    girth = bfs_girth(graph)
    drop = _drop_table(graph, a_max, four_cycle_free=girth > 4)
    cap = 1 << 14
    while True:
        out_sets = np.empty((cap, a_max), dtype=np.int32)
        out_b = np.empty(cap, dtype=np.int32)
        found = _kernels.ets_enumerate_kernel(
            vv_ptr,
            vv_idx,
            vc_ptr,
            vc_idx,
            graph.n_v,
            graph.n_c,
            a_max,
            allow,
            drop,
            out_sets,
            out_b,
            cap,
        )
        if found >= 0:
            break
        cap *= 4
        if cap > (1 << 26):
            raise QclcError("trapping-set census too large to hold")
    records = []
    for i in range(found):
        vs = tuple(int(v) for v in out_sets[i] if v >= 0)
        records.append(classify_set(vs, graph))
    records.sort(key=lambda r: (r.a, r.b, r.v_nodes))
    return records


# ---------------------------------------------------------------------------
# GF(2) linear algebra and minimum distance


def gf2_rref(rows: list[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2) on bit-packed rows."""
    mat = [int(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r >= len(mat):
            break
        bit = 1 << c
        pivot = next((i for i in range(r, len(mat)) if mat[i] & bit), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i] & bit:
                mat[i] ^= mat[r]
        pivots.append(c)
        r += 1
    return [m for m in mat[: len(pivots)] if m], pivots


def gf2_nullspace(rref_rows: list[int], pivots: list[int], n_cols: int) -> list[int]:
    """Nullspace basis (one vector per free column)."""
    pivot_set = set(pivots)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        vec = 1 << f
        bit = 1 << f
        for row, pc in zip(rref_rows, pivots):
            if row & bit:
                vec |= 1 << pc
        basis.append(vec)
    return basis


def _pack(vals: list[int], n_cols: int) -> np.ndarray:
    words = (n_cols + 63) >> 6
    arr = np.zeros((len(vals), words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(vals):
        for w in range(words):
            arr[i, w] = (v >> (w << 6)) & mask
    return arr


@dataclass(frozen=True)
class DistanceResult:
    value: int | None
    exact: bool
    method: str
    dimension: int
    rank: int
    lower_bound: int | None = None  # when not exact: value > lower_bound - 1
    support: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.dimension == 0:
            return "no nonzero codeword"
        if self.exact:
            return str(self.value)
        return f"> {self.lower_bound - 1}" if self.lower_bound else "unknown"


def min_distance(
    h: ParityCheckMatrix,
    strategy: str = "auto",
    limit: int | None = None,
    dim_threshold: int = 26,
) -> DistanceResult:
    """Minimum codeword weight of the code with parity-check matrix h.

    "enumerate" walks all nonzero codewords through a nullspace basis (the
    dimension must be at most ``dim_threshold``); "even-subgraph" searches
    for the smallest variable set inducing only even check degrees, exact
    whenever it finds one of size <= limit, otherwise a bound.  "auto" picks
    enumerate when the dimension allows, else even-subgraph.
    """
    rows = h.rows_as_ints()
    rref, pivots = gf2_rref(rows, h.n_cols)
    rank = len(pivots)
    k = h.n_cols - rank
    if k == 0:
        return DistanceResult(None, True, "trivial", 0, rank)
    if strategy == "auto":
        strategy = "enumerate" if k <= dim_threshold else "even-subgraph"
    if strategy == "enumerate":
        if k > dim_threshold:
            raise QclcError(f"dimension {k} exceeds enumeration threshold {dim_threshold}")
        basis = _pack(gf2_nullspace(rref, pivots, h.n_cols), h.n_cols)
        if _kernels.NUMBA_ENABLED:
            best = int(_kernels.gray_min_weight(basis))
        else:
            best = _kernels.min_weight_numpy(basis)
        return DistanceResult(best, True, "enumerate", k, rank)
    if strategy != "even-subgraph":
        raise ValueError("strategy must be 'auto', 'enumerate' or 'even-subgraph'")
    if limit is None:
        raise ValueError("even-subgraph search needs a size limit")
    graph = TannerGraph.from_parity_check(h)
    vc_ptr, vc_idx = _csr(graph.v_adj)
    cv_ptr, cv_idx = _csr(graph.c_adj)
    max_vdeg = max((len(a) for a in graph.v_adj), default=1)
    max_cdeg = max((len(a) for a in graph.c_adj), default=1)
    support = np.full(max(limit, 1), -1, dtype=np.int32)
    best = _kernels.even_subgraph_min(
        vc_ptr,
        vc_idx,
        cv_ptr,
        cv_idx,
        graph.n_v,
        graph.n_c,
        limit,
        max_vdeg,
        max_cdeg,
        support,
    )
    if best > 0:
        return DistanceResult(
            int(best),
            True,
            "even-subgraph",
            k,
            rank,
            support=tuple(int(v) for v in support[:best]),
        )
    return DistanceResult(None, False, "even-subgraph", k, rank, lower_bound=limit + 1)
