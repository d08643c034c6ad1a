import math
import random

import pytest

from qclc.cycles import (
    CycleWalk,
    algebraic_girth,
    cycle_sum,
    enumerate_walks,
    four_cycle_free,
    zero_sum_walks,
)
from qclc.errors import WalkStructureError
from qclc.matrices import ExponentMatrix
from qclc.tanner import TannerGraph, bfs_girth

from corpus import random_multi_edge, random_single_edge


def se(rows, n):
    return ExponentMatrix(tuple(tuple((v,) for v in row) for row in rows), n)


def test_cycle_sum_all_zero_four_cycle():
    matrix = se([[0, 0], [0, 0]], 5)
    walk = CycleWalk(((0, 0, 1, 0, 0), (1, 1, 0, 0, 0)))
    assert cycle_sum(walk, matrix) == 0


def test_cycle_sum_compact_six_walk():
    matrix = se([[0, 0, 0], [0, 1, 2], [0, 3, 6]], 11)
    walk = CycleWalk(((0, 0, 1, 0, 0), (1, 1, 2, 0, 0), (2, 2, 0, 0, 0)))
    assert cycle_sum(walk, matrix) == 5


def test_cycle_sum_length_eight_wrap():
    matrix = se([[0, 0], [0, 1]], 2)
    walk = CycleWalk(
        ((0, 0, 1, 0, 0), (1, 1, 0, 0, 0), (0, 0, 1, 0, 0), (1, 1, 0, 0, 0))
    )
    assert cycle_sum(walk, matrix) == 0
    assert bfs_girth(TannerGraph.from_exponent(matrix)) == 8


def test_walk_constraints_enforced():
    with pytest.raises(WalkStructureError):
        CycleWalk(((0, 0, 0, 1, 1), (0, 0, 0, 2, 2)))  # in-cell backtrack
    with pytest.raises(WalkStructureError):
        CycleWalk(((0, 0, 1, 0, 1), (0, 1, 0, 1, 0)))  # same row reuses shift index
    with pytest.raises(WalkStructureError):
        CycleWalk(((0, 0, 1, 0, 0), (1, 0, 0, 0, 0)))  # broken column chain


def test_walk_referencing_empty_cell_rejected():
    matrix = ExponentMatrix((((0,), None), ((0,), (1,))), 5)
    walk = CycleWalk(((0, 0, 1, 0, 0), (1, 1, 0, 0, 0)))
    with pytest.raises(WalkStructureError):
        cycle_sum(walk, matrix)


def test_enumerate_full_3x3_has_six_classes():
    matrix = se([[0] * 3] * 3, 7)
    walks = list(enumerate_walks(matrix, 3))
    assert len(walks) == 6
    # all six use three distinct rows and columns
    for walk in walks:
        assert len({s[0] for s in walk.segments}) == 3
        assert len({s[1] for s in walk.segments}) == 3


def test_enumerate_2x2_k3_empty():
    matrix = se([[0, 0], [0, 0]], 7)
    assert list(enumerate_walks(matrix, 3)) == []


def test_weight_three_cell_alternating_class_always_vanishes():
    for n in (7, 9, 13):
        matrix = ExponentMatrix((((0, 1, 4),),), n)
        walks = list(enumerate_walks(matrix, 3))
        alternating = [
            w
            for w in walks
            if {s[3] for s in w.segments} == {0, 1, 2} and {s[4] for s in w.segments} == {0, 1, 2}
        ]
        assert len(alternating) == 1, "one class uses all three shifts on both ends"
        assert cycle_sum(alternating[0], matrix) == 0
        assert algebraic_girth(matrix) <= 6
        if four_cycle_free(matrix):
            assert algebraic_girth(matrix) == 6
            assert bfs_girth(TannerGraph.from_exponent(matrix)) == 6


def test_enumeration_is_canonical_and_deterministic():
    rng = random.Random(5)
    matrix = random_multi_edge(rng, 3, 3, 8)
    walks1 = list(enumerate_walks(matrix, 3))
    walks2 = list(enumerate_walks(matrix, 3))
    assert walks1 == walks2
    for walk in walks1:
        assert walk.segments == walk.canonical().segments
    assert len(set(walks1)) == len(walks1)


def test_cycle_sum_rotation_and_reflection():
    rng = random.Random(6)
    for _ in range(20):
        matrix = random_multi_edge(rng, 3, 4, 11)
        for walk in list(enumerate_walks(matrix, 3))[:10]:
            base = cycle_sum(walk, matrix)
            for s in range(walk.k):
                assert cycle_sum(walk.rotated(s), matrix) == base
            reflected = cycle_sum(walk.reflected(), matrix) % matrix.n
            assert (base + reflected) % matrix.n == 0
            # vanishing is orientation-free
            assert (base == 0) == (reflected == 0)


def test_algebraic_girth_examples():
    assert algebraic_girth(se([[0, 0], [0, 0]], 9)) == 4
    compact35 = se([[0, 0, 0, 0, 0], [0, 1, 2, 4, 7], [0, 3, 6, 1, 10]], 11)
    assert algebraic_girth(compact35) == 6
    assert algebraic_girth(se([[0, 0], [0, 1]], 2)) == 8


def test_algebraic_girth_cap_reports_none():
    matrix = se([[0], [0]], 3)  # two stacked identities: no cycles at all
    assert algebraic_girth(matrix, cap=12) is None


def test_weight_three_cell_forces_girth_at_most_six():
    rng = random.Random(7)
    for _ in range(15):
        n = rng.randint(4, 17)
        shifts = tuple(sorted(rng.sample(range(n), 3)))
        matrix = ExponentMatrix(((shifts,),), n)
        girth = algebraic_girth(matrix)
        assert girth is not None and girth <= 6
        assert girth == bfs_girth(TannerGraph.from_exponent(matrix))


def test_girth_matches_oracle_on_small_random():
    rng = random.Random(8)
    for _ in range(120):
        if rng.random() < 0.5:
            matrix = random_single_edge(rng, rng.randint(2, 4), rng.randint(2, 5), rng.randint(2, 12))
        else:
            matrix = random_multi_edge(rng, rng.randint(2, 3), rng.randint(2, 4), rng.randint(4, 12))
        alg = algebraic_girth(matrix, cap=12)
        oracle = bfs_girth(TannerGraph.from_exponent(matrix))
        if alg is None:
            assert oracle is math.inf or oracle > 12
        else:
            assert alg == oracle


def test_zero_sum_walks_subset_of_enumeration():
    matrix = se([[0, 0, 0], [0, 1, 2], [0, 3, 6]], 11)
    zero = zero_sum_walks(matrix, 3)
    assert all(cycle_sum(w, matrix) == 0 for w in zero)
    assert four_cycle_free(matrix)
