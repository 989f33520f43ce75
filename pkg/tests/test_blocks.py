import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifgrade.blocks import (
    BlockGrading,
    BlockGradingError,
    block_grade_of_entry,
    compare_tensorial,
    tensorial_grading_rank,
    total_grading_rank,
    verify_block_grading,
)
from clifgrade.clifford import Signature
from clifgrade.matrix import MetricSignature


def test_D2_entries():
    bg = BlockGrading.even(2, 1)
    assert block_grade_of_entry(bg, 0, 0) == block_grade_of_entry(bg, 1, 1) == (0,)
    assert block_grade_of_entry(bg, 0, 1) == block_grade_of_entry(bg, 1, 0) == (1,)


def test_D4_displayed_matrix():
    bg = BlockGrading.even(4, 2)
    names = [["".join(map(str, g)) for g in r] for r in bg.grade_table()]
    assert names == [["00", "01", "10", "11"],
                     ["01", "00", "11", "10"],
                     ["10", "11", "00", "01"],
                     ["11", "10", "01", "00"]]
    assert block_grade_of_entry(bg, 0, 3) == (1, 1)


def test_out_of_range():
    with pytest.raises(IndexError):
        block_grade_of_entry(BlockGrading.even(2, 1), 0, 2)


@given(st.integers(1, 12), st.data())
def test_diagonal_is_zero_and_symmetric(d, data):
    s = data.draw(st.integers(0, d.bit_length() - 1))
    bg = BlockGrading.even(d, s)
    t = bg.grade_table()
    assert all(t[i][i] == (0,) * s for i in range(d))
    assert all(t[i][j] == t[j][i] for i in range(d) for j in range(d))


@pytest.mark.parametrize("d, s, metric", [(2, 1, MetricSignature(1, 1)), (4, 2, MetricSignature(4))])
def test_verify_examples(d, s, metric):
    assert verify_block_grading(BlockGrading.even(d, s), metric).passed


def test_depth_rejected():
    cert = verify_block_grading(BlockGrading.even(2, 2), MetricSignature(2))
    assert not cert.passed
    assert "depth_bound" in [c.name for c in cert.failures()]


def test_skew_metric_rejected():
    cert = verify_block_grading(BlockGrading.even(2, 1), [[0, 1], [-1, 0]])
    assert not cert.passed
    assert "skew-symmetric" in cert.failures()[0].detail


def test_explicit_diagonal_metric_accepted():
    assert verify_block_grading(BlockGrading.even(3, 1), [[1, 0, 0], [0, -1, 0], [0, 0, 2]]).passed
    assert not verify_block_grading(BlockGrading.even(2, 1), [[1, 1], [1, 1]]).passed


def test_uneven_splits():
    bg = BlockGrading.parse(6, "2,1:3")
    assert bg.labels() == [(0, 0), (0, 1), (1, 0), (1, 0), (1, 0), (1, 1)]
    assert verify_block_grading(bg, MetricSignature(3, 3)).passed


def test_bad_splits():
    with pytest.raises(BlockGradingError):
        BlockGrading.parse(4, "2,a")
    with pytest.raises(BlockGradingError):
        BlockGrading.parse(4, "4").labels()
    assert BlockGrading.parse(4, "2,1:1,2:2").partition_errors()


def test_tensorial_doubles():
    assert tensorial_grading_rank(1) == 2 and tensorial_grading_rank(2) == 4
    for s in (1, 2):
        assert compare_tensorial(s).passed


def test_total_grading_rank():
    assert total_grading_rank(BlockGrading.even(4, 2), Signature.of(0, 2)) == 4
