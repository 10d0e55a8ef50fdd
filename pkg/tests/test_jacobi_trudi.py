import pytest

from bottom_schur.errors import PreconditionError, VerificationFailedError
from bottom_schur.jacobi_trudi import (
    JTMatrix,
    SkewShape,
    bessenrodt_skew,
    bottom_via_jacobi_trudi,
    det_ptilde,
    jt_matrix,
    jt_star,
    laplace_sign,
    skew_from_minor,
    square_certificate,
)
from bottom_schur.partitions import Partition, partitions_of, rank
from bottom_schur.snakes import bottom_via_intervals
from bottom_schur.symfunc import Basis, SymFn


def pt(*index, coeff=1):
    return SymFn.monomial(Basis.SCALED_POWER_SUM, index, coeff)


class TestJTMatrix:
    def test_subscripts_of_321(self):
        assert jt_matrix((3, 2, 1)).as_lists() == [[3, 4, 5], [1, 2, 3], [-1, 0, 1]]

    def test_render(self):
        assert jt_matrix((2, 1)).render() == "h2 h3\n 1 h1"

    def test_star_of_554421(self):
        star, rows, cols = jt_star((5, 5, 4, 4, 2, 1))
        assert star.as_lists() == [
            [5, 6, 8, 10],
            [4, 5, 7, 9],
            [2, 3, 5, 7],
            [1, 2, 4, 6],
        ]
        assert rows == (5, 6)
        assert cols == (3, 5)
        assert star.rows_without_unit() == 4

    def test_star_of_321(self):
        star, rows, cols = jt_star((3, 2, 1))
        assert star.as_lists() == [[3, 5], [1, 3]]
        assert (rows, cols) == ((3,), (2,))

    def test_star_of_21(self):
        assert jt_star((2, 1)).matrix.as_lists() == [[3]]

    def test_star_size_is_rank(self):
        for lam in partitions_of(9):
            star = jt_star(lam).matrix
            assert star.size == rank(lam)
            assert 0 not in [x for row in star.subscripts for x in row]


class TestDeterminant:
    def test_laplace_signs(self):
        assert laplace_sign((5, 5, 4, 4, 2, 1)) == -1
        assert laplace_sign((3, 2, 1)) == -1
        assert laplace_sign((4, 4, 4)) == 1

    def test_21(self):
        assert bottom_via_jacobi_trudi((2, 1)) == pt(3, coeff=-1)

    def test_321(self):
        assert bottom_via_jacobi_trudi((3, 2, 1)) == pt(5, 1) - pt(3, 3)

    def test_444_matches_intervals(self):
        assert bottom_via_jacobi_trudi((4, 4, 4)) == bottom_via_intervals((4, 4, 4))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_intervals(self, n):
        for lam in partitions_of(n):
            assert bottom_via_jacobi_trudi(lam) == bottom_via_intervals(lam), lam

    def test_unit_entry_is_rejected(self):
        with pytest.raises(PreconditionError):
            det_ptilde(jt_matrix((2, 1)))

    def test_vanishing_determinant(self):
        matrix = JTMatrix(((1, 1), (1, 1)), (1, 2), (1, 2))
        with pytest.raises(VerificationFailedError):
            det_ptilde(matrix)


class TestSkewShape:
    def test_321(self):
        shape = skew_from_minor((3, 2, 1))
        assert shape.outer == Partition([4, 3])
        assert shape.inner_padded == (1, 0)
        assert str(shape) == "43/10"

    def test_554421(self):
        shape = skew_from_minor((5, 5, 4, 4, 2, 1))
        assert str(shape) == "7766/2210"
        assert shape.size == 26 - 5

    @pytest.mark.parametrize("n", range(1, 10))
    def test_closed_form_agrees(self, n):
        for lam in partitions_of(n):
            assert skew_from_minor(lam) == bessenrodt_skew(lam), lam

    def test_square_certificate(self):
        assert square_certificate(skew_from_minor((5, 5, 4, 4, 2, 1)), 4)
        assert square_certificate(skew_from_minor((3, 2, 1)), 2)

    def test_square_missing(self):
        assert not square_certificate(SkewShape(Partition([2, 1]), Partition([1])), 2)

    def test_row_count_mismatch(self):
        with pytest.raises(PreconditionError):
            square_certificate(SkewShape(Partition([2, 1]), Partition()), 3)

    def test_inner_not_contained(self):
        with pytest.raises(PreconditionError):
            SkewShape(Partition([2]), Partition([3]))
