import random

import pytest

from bottom_schur.errors import ContainmentError, PreconditionError, SizeMismatchError
from bottom_schur.jacobi_trudi import bottom_via_jacobi_trudi
from bottom_schur.partitions import Partition, partitions_of, rank
from bottom_schur.tableaux import (
    SkewTableau,
    expand_bottom_in_basis,
    is_lattice,
    jdt_rectify,
    lr_coeff_jdt,
    lr_coeff_lattice,
    lr_coefficients_jdt,
    reading_word,
    reverse_reading_word,
    slide_inward,
    slide_outward,
    standard_tableaux,
    superstandard,
)


class TestReadingWord:
    def test_reading_word(self, reading_tableau):
        assert reading_word(reading_tableau) == [4, 7, 2, 3, 8, 9, 1, 5, 6]
        assert reverse_reading_word(reading_tableau)[0] == 6

    def test_is_standard(self, reading_tableau):
        assert reading_tableau.is_standard()
        assert reading_tableau.outer == Partition([6, 5, 2])
        assert reading_tableau.inner == Partition([3, 1])

    def test_lattice(self, reading_tableau):
        assert is_lattice([1, 1, 2, 1, 2, 3])
        assert is_lattice([1, 2, 3, 1, 1, 2, 2, 1, 3])
        assert not is_lattice([1, 2, 2])
        assert not is_lattice(reading_word(reading_tableau))

    def test_round_trip_rows(self, reading_tableau):
        assert SkewTableau.from_rows(reading_tableau.to_rows()) == reading_tableau

    def test_unfilled_cell(self):
        with pytest.raises(PreconditionError):
            SkewTableau((2, 1), (), {(1, 1): 1, (1, 2): 2})


class TestJeuDeTaquin:
    def test_slides_are_inverse(self, reading_tableau):
        slid = slide_inward(reading_tableau, (2, 1))
        assert slid.outer == Partition([6, 4, 2])
        assert slid.inner == Partition([3])
        assert slid[2, 1] == 2
        assert slide_outward(slid, (2, 5)) == reading_tableau

    def test_slide_pair(self, reading_tableau):
        partner = SkewTableau.from_rows(
            [
                [None, None, None, 1, 5, 6],
                [2, 3, 8, 9],
                [4, 7],
            ]
        )
        assert slide_inward(reading_tableau, (2, 1)) == partner
        assert slide_outward(partner, (2, 5)) == reading_tableau
        assert reading_word(partner) == reading_word(reading_tableau)

    def test_not_an_inner_corner(self, reading_tableau):
        with pytest.raises(PreconditionError):
            slide_inward(reading_tableau, (1, 1))

    def test_rectification_is_order_independent(self, reading_tableau):
        expected = jdt_rectify(reading_tableau)
        assert not expected.inner
        assert expected.is_standard()
        for seed in range(5):
            assert jdt_rectify(reading_tableau, random.Random(seed)) == expected

    def test_rectify_requires_standard(self):
        tableau = SkewTableau.from_rows([[None, 1], [1]])
        with pytest.raises(PreconditionError):
            jdt_rectify(tableau)

    def test_superstandard(self):
        assert superstandard((2, 1)).to_rows() == [[1, 2], [3]]

    @pytest.mark.parametrize(
        "outer, inner, count",
        [
            ((3, 2, 1), (), 16),
            ((3, 3), (), 5),
            ((2, 1), (1,), 2),
            ((4, 1), (), 4),
        ],
    )
    def test_standard_tableaux_counts(self, outer, inner, count):
        tableaux = standard_tableaux(outer, inner)
        assert len(tableaux) == count
        assert all(t.is_standard() for t in tableaux)


class TestLittlewoodRichardson:
    @pytest.mark.parametrize(
        "lam, mu, nu, expected",
        [
            ((3, 2, 1), (2, 1), (2, 1), 2),
            ((5, 3, 3, 1), (3, 1), (3, 3, 2), 2),
            ((2, 1), (1,), (2,), 1),
            ((2, 2), (1,), (2, 1), 1),
            ((3, 3), (2,), (2, 2), 0),
            ((3, 3), (2,), (3, 1), 1),
            ((3, 1), (2,), (1, 1), 1),
            ((2, 2), (1, 1), (1, 1), 1),
        ],
    )
    def test_both_rules(self, lam, mu, nu, expected):
        assert lr_coeff_lattice(lam, mu, nu) == expected
        assert lr_coeff_jdt(lam, mu, nu) == expected

    def test_zero_coefficient(self):
        assert lr_coeff_lattice((2, 2), (1, 1), (2,)) == 0
        assert lr_coeff_jdt((2, 2), (1, 1), (2,)) == 0

    def test_jdt_table_sums_to_syt_count(self):
        # Σ_ν c^λ_{μν} f^ν = f^{λ/μ}
        table = lr_coefficients_jdt((3, 2, 1), (2, 1))
        counts = {nu: len(standard_tableaux(nu)) for nu in table}
        total = sum(c * counts[nu] for nu, c in table.items())
        assert total == len(standard_tableaux((3, 2, 1), (2, 1)))

    def test_containment(self):
        with pytest.raises(ContainmentError):
            lr_coeff_lattice((2, 1), (3,), ())

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            lr_coeff_jdt((2, 1), (1,), (1,))


class TestBasisExpansion:
    def test_321(self):
        expansion = expand_bottom_in_basis((3, 2, 1))
        assert expansion.sign == -1
        assert expansion.coefficients == {Partition([4, 2]): 1, Partition([3, 3]): 1}
        assert expansion.to_symfn() == bottom_via_jacobi_trudi((3, 2, 1))

    def test_444_is_its_own_basis_element(self):
        expansion = expand_bottom_in_basis((4, 4, 4))
        assert expansion.support() == [Partition([4, 4, 4])]
        assert expansion.sign == 1

    def test_support_has_length_equal_rank(self):
        expansion = expand_bottom_in_basis((5, 3, 3, 3, 2, 2))
        k = len(expansion.shape.outer)
        assert all(len(nu) == k for nu in expansion.support())


RANK3_BASIS_12 = {Partition(p) for p in [(6, 3, 3), (5, 4, 3), (4, 4, 4)]}


@pytest.mark.parametrize("lam", [lam for lam in partitions_of(12) if rank(lam) == 3])
def test_rank_three_of_twelve_expands_over_basis(lam):
    expansion = expand_bottom_in_basis(lam)
    assert set(expansion.support()) <= RANK3_BASIS_12
    assert expansion.to_symfn() == bottom_via_jacobi_trudi(lam)


def test_rank_three_of_twelve_partitions():
    shapes = [lam for lam in partitions_of(12) if rank(lam) == 3]
    assert len(shapes) == 10
    supports = set()
    for lam in shapes:
        supports |= set(expand_bottom_in_basis(lam).support())
    assert supports == RANK3_BASIS_12
