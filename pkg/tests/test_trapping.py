import random
from itertools import combinations

import pytest

from qclc.matrices import ExponentMatrix, lift
from qclc.search import CompactSpec, build_compact
from qclc.tanner import TannerGraph, bfs_girth, find_8wc, six_cycles
from qclc.trapping import (
    MIN_A_TABLE,
    b_lower_bound,
    classify_set,
    dmin_bound,
    edge_bound,
    enumerate_ets,
    gf2_nullspace,
    gf2_rref,
    min_a,
    min_a_formula,
    min_distance,
    vn_graph,
)

from corpus import random_single_edge, sample_four_cycle_free


def compact(seed, coeffs, n):
    return build_compact(CompactSpec(seed, coeffs, n))


# ---------------------------------------------------------------------------
# bounds


def test_edge_bound_values():
    assert edge_bound(4) == 4
    assert edge_bound(5) == 7
    assert edge_bound(6) == 10
    assert edge_bound(8) == 17


def test_b_lower_bound_values():
    assert b_lower_bound(4, 3) == 4  # no (4, b<=3) chord-free ETS
    assert b_lower_bound(6, 3) == 0  # (6,0) admissible
    assert b_lower_bound(5, 3) == 1  # (5,0) excluded


def test_b0_column_matches_formula():
    for gamma, expect in ((3, 6), (4, 8), (5, 10), (6, 12)):
        info = min_a(gamma, 0)
        assert info.value == expect
        assert info.formula_value == expect
        assert not info.refined


def test_min_a_table_entries():
    assert min_a(3, 1).value == 7
    assert min_a(3, 1).refined  # raw formula gives 5
    assert min_a(4, 0).value == 8
    assert min_a(6, 6).value == 11
    assert min_a(4, 1).value is None  # blank table entry
    assert min_a(3, 3).value == 5


def test_min_a_formula_fallback_for_large_gamma():
    info = min_a(7, 0)
    assert info.source == "formula"
    assert info.value == min_a_formula(7, 0) >= 2 * 7 - 2


def test_min_a_girth8_regime():
    assert min_a(3, 0, girth_regime="girth8").value == 10
    assert min_a(3, 3, girth_regime="girth8").value == 5


def test_dmin_bound():
    assert dmin_bound(3, 6, 8) == 6
    assert dmin_bound(4, 6, 8) == 8
    assert dmin_bound(3, 8, 12) == 10
    assert dmin_bound(3, 6, 0) == 4
    assert dmin_bound(5, 8, 12) == 6  # only the generic bound applies


# ---------------------------------------------------------------------------
# VN graphs


def test_vn_graph_of_six_cycle_is_triangle():
    matrix = compact((0, 1, 3), (0, 1, 2, 4, 7), 11)
    graph = TannerGraph.from_exponent(matrix)
    cyc = six_cycles(graph)[0]
    vng = vn_graph(cyc.v_nodes, graph)
    assert vng.edge_count == 3
    assert len(vng.vertices) == 3


def test_vn_graph_of_chorded_eight_cycle():
    # a weight-3 matrix known to contain chorded 8-cycles
    matrix = ExponentMatrix(
        (((0,), (0,), (3,), (4,)), ((3,), (2,), (4,), (2,)), ((8,), (3,), (4,), (4,))), 9
    )
    graph = TannerGraph.from_exponent(matrix)
    witnesses = find_8wc(graph)
    assert witnesses
    witness = witnesses[0]
    vng = vn_graph(witness.cycle.v_nodes, graph)
    assert vng.edge_count == 5  # two triangles sharing an edge
    assert vng.triangle_pairs_sharing_edge() >= 1
    record = classify_set(witness.cycle.v_nodes, graph)
    assert record.kind == (4, 2)
    assert not record.chordfree_eight


def test_vn_graph_singleton():
    matrix = compact((0, 1, 3), (0, 1, 2), 11)
    graph = TannerGraph.from_exponent(matrix)
    vng = vn_graph((0,), graph)
    assert vng.edge_count == 0


# ---------------------------------------------------------------------------
# enumeration


def _brute_force_ets(graph, a_max, b_max):
    """Reference enumeration by scanning all subsets (tiny graphs only)."""
    nbrs = [set() for _ in range(graph.n_v)]
    for vs in graph.c_adj:
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                nbrs[vs[a]].add(vs[b])
                nbrs[vs[b]].add(vs[a])

    def connected(nodes):
        nodes = set(nodes)
        seen = {min(nodes)}
        frontier = [min(nodes)]
        while frontier:
            u = frontier.pop()
            for w in nbrs[u] & nodes:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return seen == nodes

    out = set()
    for a in range(1, a_max + 1):
        for nodes in combinations(range(graph.n_v), a):
            degrees = {}
            for v in nodes:
                for c in graph.v_adj[v]:
                    degrees[c] = degrees.get(c, 0) + 1
            if any(d > 2 for d in degrees.values()):
                continue
            b = sum(1 for d in degrees.values() if d == 1)
            if b > b_max:
                continue
            if not connected(nodes):
                continue
            out.add(tuple(sorted(nodes)))
    return out


def test_enumerate_ets_matches_brute_force():
    rng = random.Random(41)
    for _ in range(6):
        matrix = random_single_edge(rng, 2, 3, rng.randint(3, 5))
        graph = TannerGraph.from_exponent(matrix)
        kernel = {r.v_nodes for r in enumerate_ets(graph, 4, b_max=6)}
        brute = _brute_force_ets(graph, 4, 6)
        assert kernel == brute


def test_enumerate_ets_b_accounting_identity():
    rng = random.Random(42)
    matrix = random_single_edge(rng, 3, 5, 11)
    graph = TannerGraph.from_exponent(matrix)
    gamma = 3
    for record in enumerate_ets(graph, 6, b_max=8):
        assert record.b == record.a * gamma - 2 * record.vn_edges
        assert record.elementary


def test_enumerate_ets_per_size_allowances():
    matrix = compact((0, 1, 3, 9), (0, 1, 2, 4, 7), 13)
    graph = TannerGraph.from_exponent(matrix)
    full = enumerate_ets(graph, 7, b_max=4)
    only67 = enumerate_ets(graph, 7, b_allow={6: 4, 7: 4})
    assert {r.v_nodes for r in only67} == {
        r.v_nodes for r in full if r.a in (6, 7) and r.b <= 4
    }


def test_chordfree_codes_respect_table_bounds():
    # girth-6 chord-free codes: every (a, b<a) ETS at least as big as the bound
    matrix = compact((0, 1, 3), (0, 1, 2, 4, 7), 11)
    graph = TannerGraph.from_exponent(matrix)
    assert not find_8wc(graph)
    records = enumerate_ets(graph, 6, b_max=3)
    for record in records:
        if record.b < record.a:
            bound = min_a(3, record.b).value
            assert bound is not None and record.a >= bound
        assert record.vn_edges <= edge_bound(record.a)
        assert record.chordfree_eight


# ---------------------------------------------------------------------------
# GF(2) and minimum distance


def test_rref_and_nullspace_shapes():
    rows = [0b1010, 0b0110, 0b1100]
    rref, pivots = gf2_rref(rows, 4)
    assert len(rref) == len(pivots) == 2
    basis = gf2_nullspace(rref, pivots, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert bin(vec & row).count("1") % 2 == 0


def test_min_distance_trivial_full_rank():
    matrix = ExponentMatrix((((0,),), ((1,),)), 3)
    result = min_distance(lift(matrix))
    assert result.dimension == 0
    assert result.value is None
    assert "no nonzero codeword" in str(result)


def test_min_distance_enumerate_vs_even_subgraph():
    rng = random.Random(43)
    done = 0
    while done < 8:
        matrix = random_single_edge(rng, 2, rng.randint(3, 4), rng.randint(3, 6))
        h = lift(matrix)
        enum = min_distance(h, strategy="enumerate", dim_threshold=20)
        if enum.dimension == 0 or enum.dimension > 20:
            continue
        sub = min_distance(h, strategy="even-subgraph", limit=enum.value)
        assert sub.exact and sub.value == enum.value
        done += 1


def test_min_distance_even_subgraph_bound():
    matrix = compact((0, 1, 4), (0, 1, 2, 3, 5, 8), 13)
    result = min_distance(lift(matrix), strategy="even-subgraph", limit=5)
    assert not result.exact
    assert result.lower_bound == 6


def test_min_distance_support_is_codeword():
    matrix = compact((0, 1, 3), (0, 1, 2, 4, 7), 11)
    h = lift(matrix)
    result = min_distance(h, strategy="even-subgraph", limit=10)
    assert result.exact and result.value == 10
    support = set(result.support)
    for r in range(h.n_rows):
        assert len(support.intersection(h.row_support(r))) % 2 == 0


def test_min_distance_strategy_validation():
    matrix = compact((0, 1, 3), (0, 1, 2), 7)
    h = lift(matrix)
    with pytest.raises(ValueError):
        min_distance(h, strategy="even-subgraph")  # needs a limit
    with pytest.raises(ValueError):
        min_distance(h, strategy="nonsense")


def test_table_fixture_is_self_consistent():
    for gamma, row in MIN_A_TABLE.items():
        assert len(row) == gamma + 1
        for b, value in enumerate(row):
            if value is None:
                continue
            assert value >= min_a_formula(gamma, b)
