from fractions import Fraction

import pytest

from bottom_schur.errors import DimensionMismatchError
from bottom_schur.linalg import QMatrix, in_span, kernel_basis, rank_of


class TestQMatrix:
    def test_rank(self):
        assert rank_of(QMatrix([[1, 2], [2, 4]])) == 1
        assert rank_of(QMatrix.identity(3)) == 3
        assert rank_of(QMatrix.zeros(2, 3)) == 0

    def test_kernel(self):
        assert kernel_basis(QMatrix([[1, 2], [2, 4]])) == [[-2, 1]]
        assert kernel_basis(QMatrix.identity(2)) == []

    def test_kernel_size(self):
        m = QMatrix([[1, 0, 1, 2], [0, 1, 1, 3]])
        assert len(kernel_basis(m)) == m.cols - m.rank()

    def test_determinant(self):
        assert QMatrix([[2, 1], [1, 3]]).determinant() == 5
        assert QMatrix([[0, 1], [1, 0]]).determinant() == -1
        assert QMatrix([[1, 2], [2, 4]]).determinant() == 0

    def test_fractions_are_exact(self):
        m = QMatrix([[Fraction(1, 3), Fraction(1, 2)], [1, 1]])
        assert m.determinant() == Fraction(1, 3) - Fraction(1, 2)

    def test_matmul_and_transpose(self):
        a = QMatrix([[1, 2], [3, 4]])
        assert (a @ QMatrix.identity(2)) == a
        assert a.transpose()[0, 1] == 3
        assert (a - a) == QMatrix.zeros(2, 2)

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            QMatrix([[1, 2], [3]])

    def test_non_square_determinant(self):
        with pytest.raises(DimensionMismatchError):
            QMatrix([[1, 2, 3]]).determinant()

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            QMatrix.identity(2) + QMatrix.identity(3)


class TestInSpan:
    def test_member(self):
        assert in_span([[1, 0, 1], [0, 1, 1]], [2, 3, 5])

    def test_non_member(self):
        assert not in_span([[1, 0, 1], [0, 1, 1]], [0, 0, 1])

    def test_zero_is_always_in_span(self):
        assert in_span([], [0, 0])

    def test_empty_span(self):
        assert not in_span([], [1, 0])

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            in_span([[1, 2]], [1, 2, 3])


MATRICES = [
    [[1, 2], [2, 4]],
    [[1, 0, 1, 2], [0, 1, 1, 3]],
    [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
    [[0, 0, 0], [0, 0, 1]],
    [[2, -1, 0, 1], [4, -2, 0, 2], [0, 1, 1, 1]],
]


@pytest.mark.parametrize("rows", MATRICES)
def test_rank_equals_transpose_rank(rows):
    m = QMatrix(rows)
    assert rank_of(m) == rank_of(m.transpose())


@pytest.mark.parametrize("rows", MATRICES)
def test_kernel_vectors_are_independent(rows):
    m = QMatrix(rows)
    kernel = kernel_basis(m)
    assert len(kernel) == m.cols - rank_of(m)
    assert rank_of(QMatrix(kernel)) == len(kernel)
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
