import random

import numpy as np
import pytest

from qclc.errors import DimensionMismatchError, MatrixFormatError
from qclc.matrices import (
    BaseMatrix,
    ExponentMatrix,
    export_alist,
    import_alist,
    lift,
    parse_text,
    serialize_text,
    validate,
)

from corpus import random_multi_edge


def test_validate_minimal_matrix():
    matrix = ExponentMatrix((((0,),),), 3)
    assert validate(matrix, BaseMatrix(((1,),))).ok


def test_validate_duplicate_shift_rejected_at_construction():
    with pytest.raises(MatrixFormatError):
        parse_text("1 1 5\n0,0\n")


def test_validate_reports_weight_mismatch():
    matrix = ExponentMatrix((((0, 27), None),), 78)
    report = validate(matrix, BaseMatrix(((2, 0),)))
    assert report.ok
    bad = validate(matrix, BaseMatrix(((1, 0),)))
    assert not bad.ok
    assert "length 2" in str(bad.violations[0])


def test_validate_dimension_mismatch_is_structural():
    matrix = ExponentMatrix((((0,),),), 3)
    with pytest.raises(DimensionMismatchError):
        validate(matrix, BaseMatrix(((1, 1),)))


def test_lifting_degree_one_rejected():
    with pytest.raises(ValueError):
        ExponentMatrix((((0,),),), 1)


def test_lift_zero_shift_is_identity():
    h = lift(ExponentMatrix((((0,),),), 3))
    assert np.array_equal(h.to_dense(), np.eye(3, dtype=np.uint8))


def test_lift_shift_one_right_cyclic():
    h = lift(ExponentMatrix((((1,),),), 3)).to_dense()
    assert h[0].tolist() == [0, 1, 0]
    for s in range(1, 3):
        assert np.array_equal(h[s], np.roll(h[s - 1], 1))


def test_lift_double_edge_block_weights():
    h = lift(ExponentMatrix((((0, 1),),), 4))
    dense = h.to_dense()
    assert (dense.sum(axis=0) == 2).all()
    assert (dense.sum(axis=1) == 2).all()


def test_lift_block_weights_match_base_matrix():
    rng = random.Random(99)
    for _ in range(25):
        matrix = random_multi_edge(rng, rng.randint(2, 3), rng.randint(2, 4), rng.randint(3, 9))
        h = lift(matrix)
        n = matrix.n
        dense = h.to_dense()
        for i in range(matrix.rows):
            for j in range(matrix.cols):
                block = dense[i * n : (i + 1) * n, j * n : (j + 1) * n]
                w = matrix.weight(i, j)
                assert (block.sum(axis=0) == w).all()
                assert (block.sum(axis=1) == w).all()
        col_weights = h.column_weights()
        for j in range(matrix.cols):
            expect = matrix.column_weight(j)
            assert (col_weights[j * n : (j + 1) * n] == expect).all()


def test_parse_minimal():
    base, matrix = parse_text("1 1 3\n0\n")
    assert matrix.cells == (((0,),),)
    assert matrix.n == 3
    assert base.weights == ((1,),)


def test_parse_multi_edge_and_empty():
    base, matrix = parse_text("1 2 78\n0,27 inf\n")
    assert matrix.cells == (((0, 27), None),)
    assert base.weights == ((2, 0),)
    assert base.single_edge is False


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("1 1\n0\n", "header"),
        ("1 1 3\n5\n", "not in [0, 3)"),
        ("1 1 1\n0\n", "lifting degree"),
        ("2 1 3\n0\n", "expected 2 rows"),
        ("1 2 3\n0\n", "expected 2 entries"),
        ("1 1 3\nx\n", "bad entry"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(MatrixFormatError) as err:
        parse_text(text)
    assert fragment in str(err.value)


def test_serialize_parse_roundtrip_random():
    rng = random.Random(4)
    for _ in range(30):
        matrix = random_multi_edge(rng, rng.randint(1, 4), rng.randint(1, 5), rng.randint(2, 20))
        assert parse_text(serialize_text(matrix))[1] == matrix


def test_canonical_text_is_fixed_point():
    text = "2 2 7\n0,3 inf\n1 2\n"
    assert serialize_text(parse_text(text)[1]) == text


def test_alist_identity():
    h = lift(ExponentMatrix((((0,),),), 3))
    lines = export_alist(h).splitlines()
    assert lines[0] == "3 3"
    assert lines[1] == "1 1"
    assert lines[2] == "1 1 1"


def test_alist_two_by_two_lift():
    matrix = ExponentMatrix((((0,), (1,)), ((1,), (0,))), 2)
    h = lift(matrix)
    assert h.n_rows == h.n_cols == 4
    assert all(h.row_weight(r) == 2 for r in range(4))


def test_alist_roundtrip_bit_exact():
    rng = random.Random(11)
    for _ in range(10):
        matrix = random_multi_edge(rng, 2, rng.randint(2, 4), rng.randint(2, 9))
        h = lift(matrix)
        h2 = import_alist(export_alist(h))
        assert np.array_equal(h.words, h2.words)
        assert (h2.n_rows, h2.n_cols) == (h.n_rows, h.n_cols)


def test_cells_stored_sorted():
    matrix = ExponentMatrix((((27, 0),),), 78)
    assert matrix.cells[0][0] == (0, 27)
