import pytest

from qclc.search import (
    CompactSpec,
    SearchConfig,
    build_compact,
    corollary_check,
    search_compact,
    search_general,
)
from qclc.chords import check_3x3, check_chordfree
from qclc.cycles import algebraic_girth
from qclc.tanner import TannerGraph, bfs_girth, find_8wc

from itertools import combinations


def test_build_compact_known_rows():
    spec = CompactSpec((0, 1, 3), (0, 1, 2, 4, 7), 11)
    matrix = build_compact(spec)
    assert [list(c[0] for c in row) for row in matrix.cells] == [
        [0, 0, 0, 0, 0],
        [0, 1, 2, 4, 7],
        [0, 3, 6, 1, 10],
    ]


def test_build_compact_two_by_two():
    matrix = build_compact(CompactSpec((0, 1), (0, 1), 5))
    assert matrix.cells == (((0,), (0,)), ((0,), (1,)))


def test_build_compact_row_reduction_mod_n():
    spec = CompactSpec((0, 1, 4, 5), (0, 1, 2, 3, 6, 11), 17)
    matrix = build_compact(spec)
    assert [c[0] for c in matrix.cells[2]] == [0, 4, 8, 12, 7, 10]
    assert [c[0] for c in matrix.cells[3]] == [0, 5, 10, 15, 13, 4]


def test_compact_spec_validation():
    with pytest.raises(ValueError):
        CompactSpec((0, 2), (0, 1), 7)  # seed must start 0, 1
    with pytest.raises(ValueError):
        CompactSpec((0, 1, 1), (0, 1), 7)  # duplicate seed entry
    with pytest.raises(ValueError):
        CompactSpec((0, 1), (0, 1, 5, 3), 7)  # coefficients must increase
    with pytest.raises(ValueError):
        CompactSpec((0, 1), (0, 1, 9), 7)  # coefficient outside range


def test_corollary_pass_example():
    spec = CompactSpec((0, 1, 3), (0, 1, 2, 4, 7), 11)
    assert corollary_check(spec) is None


def test_corollary_zero_phrase_fails():
    # seed 0,1,2: the middle element makes p + r - 2q vanish
    spec = CompactSpec((0, 1, 2), (0, 1, 3), 11)
    violation = corollary_check(spec)
    assert violation is not None
    assert violation.phrase % 11 == 0 or (violation.phrase * 1) % 11 == 0


def test_corollary_pass_implies_3x3_pass():
    for n, seed, coeffs in (
        (11, (0, 1, 3), (0, 1, 2, 4, 7)),
        (13, (0, 1, 4), (0, 1, 2, 3, 5, 8)),
        (17, (0, 1, 4, 5), (0, 1, 2, 3, 6, 11)),
    ):
        spec = CompactSpec(seed, coeffs, n)
        if corollary_check(spec) is not None:
            continue
        matrix = build_compact(spec)
        for rows in combinations(range(matrix.rows), 3):
            for cols in combinations(range(matrix.cols), 3):
                assert check_3x3(matrix, rows, cols) is None


def test_search_compact_small_case():
    cfg = SearchConfig(gamma=3, n_cols=4, n_min=2, n_max=9, mode="compact")
    res = search_compact(cfg)
    assert res.found
    matrix = res.matrix
    assert algebraic_girth(matrix) == 6
    assert check_chordfree(matrix).passed
    graph = TannerGraph.from_exponent(matrix)
    assert bfs_girth(graph) == 6 and not find_8wc(graph)
    # every smaller lifting degree is certified exhausted
    assert all(n < res.n for n in res.exhausted)


def test_search_compact_worker_count_does_not_change_result():
    cfg1 = SearchConfig(gamma=3, n_cols=4, n_min=2, n_max=9, mode="compact", workers=1)
    cfg2 = SearchConfig(gamma=3, n_cols=4, n_min=2, n_max=9, mode="compact", workers=2)
    res1 = search_compact(cfg1)
    res2 = search_compact(cfg2)
    assert res1.found and res2.found
    assert res1.n == res2.n
    assert res1.spec == res2.spec


def test_search_exhaustion_reported():
    cfg = SearchConfig(gamma=3, n_cols=5, n_min=2, n_max=6, mode="compact")
    res = search_compact(cfg)
    assert not res.found
    assert set(res.exhausted) == {2, 3, 4, 5, 6}


def test_search_general_two_rows_trivial():
    cfg = SearchConfig(gamma=2, n_cols=4, n_min=2, n_max=6, mode="general")
    res = search_general(cfg)
    assert res.found
    assert res.n <= 6
    assert check_chordfree(res.matrix).passed


def test_search_general_matches_compact_or_beats_it():
    general = search_general(SearchConfig(gamma=3, n_cols=4, n_min=2, n_max=9, mode="general"))
    compact = search_compact(SearchConfig(gamma=3, n_cols=4, n_min=2, n_max=9, mode="compact"))
    assert general.found and compact.found
    assert general.n <= compact.n


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(gamma=1, n_cols=4)
    with pytest.raises(ValueError):
        SearchConfig(gamma=3, n_cols=2)
    with pytest.raises(ValueError):
        SearchConfig(gamma=3, n_cols=5, n_min=9, n_max=2)
    with pytest.raises(ValueError):
        SearchConfig(gamma=3, n_cols=5, mode="magic")
