from fractions import Fraction

import pytest

from bottom_schur.characters import (
    BorderStrip,
    border_strip_tableaux,
    bottom_via_expansion,
    character_table,
    chi,
    chi_by_enumeration,
    greedy_z,
    removable_border_strips,
    schur_in_p,
)
from bottom_schur.errors import PreconditionError, SizeMismatchError
from bottom_schur.partitions import Partition, partitions_of, rank
from bottom_schur.symfunc import Basis, SymFn


def pt(*index, coeff=1):
    return SymFn.monomial(Basis.SCALED_POWER_SUM, index, coeff)


class TestBorderStrip:
    def test_hook_is_a_strip(self):
        strip = BorderStrip.from_shapes((3, 2, 1), (1,))
        assert strip.size == 5
        assert strip.height == 2

    def test_square_is_rejected(self):
        with pytest.raises(PreconditionError):
            BorderStrip.from_shapes((2, 2), ())

    def test_disconnected_is_rejected(self):
        with pytest.raises(PreconditionError):
            BorderStrip.from_shapes((2, 1), (1,))

    def test_removals_of_321(self):
        assert removable_border_strips((3, 2, 1), 3) == [
            (Partition([3]), 1),
            (Partition([1, 1, 1]), 1),
        ]

    def test_tableaux_of_53321(self):
        tableaux = border_strip_tableaux((5, 3, 3, 2, 1), (3, 1, 3, 0, 7))
        assert tableaux
        heights = {t.height for t in tableaux}
        assert 6 in heights
        for t in tableaux:
            assert t.chain[0] == Partition() and t.chain[-1] == Partition([5, 3, 3, 2, 1])
            assert t.strips[3] is None

    def test_type_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            border_strip_tableaux((3, 1), (3, 3))


class TestCharacters:
    @pytest.mark.parametrize(
        "lam, nu, expected",
        [
            ((2, 1), (1, 1, 1), 2),
            ((2, 1), (2, 1), 0),
            ((2, 1), (3,), -1),
            ((1, 1, 1), (2, 1), -1),
            ((3, 2, 1), (1, 1, 1, 1, 1, 1), 16),
            ((3, 2, 1), (5, 1), 1),
            ((3, 2, 1), (3, 3), -2),
        ],
    )
    def test_known_values(self, lam, nu, expected):
        assert chi(lam, nu) == expected

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            chi((2, 1), (2,))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_enumeration_agrees(self, n):
        index = partitions_of(n)
        for lam in index:
            for nu in index:
                assert chi_by_enumeration(lam, nu) == chi(lam, nu)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_vanishes_below_rank(self, n):
        for lam in partitions_of(n):
            for nu in partitions_of(n, max_len=rank(lam) - 1) if rank(lam) > 1 else []:
                assert chi(lam, nu) == 0

    def test_table_format(self):
        table = character_table(3)
        assert table.n == 3
        assert len(table.entries) == 9
        first = table.model_dump(by_alias=True)["entries"][0]
        assert first == {"lambda": [3], "nu": [3], "chi": 1}

    def test_fresh_table_matches_memo(self):
        assert character_table(6, use_memo=False) == character_table(6)


class TestExpansion:
    def test_schur_321_power_sum(self):
        s = schur_in_p((3, 2, 1))
        assert s.basis == Basis.POWER_SUM
        assert s[(1, 1, 1, 1, 1, 1)] == Fraction(1, 45)
        assert s[(5, 1)] == Fraction(1, 5)

    def test_greedy_z(self):
        assert greedy_z((3, 2, 1)) == 2
        assert greedy_z((2, 1)) == 1
        assert greedy_z((4, 4, 4)) == 3

    def test_bottom_321(self):
        assert bottom_via_expansion((3, 2, 1)) == pt(5, 1) - pt(3, 3)

    def test_bottom_444(self):
        expected = (
            pt(6, 4, 2, coeff=-1) + pt(6, 3, 3) + pt(5, 5, 2) + pt(5, 4, 3, coeff=-2) + pt(4, 4, 4)
        )
        assert bottom_via_expansion((4, 4, 4)) == expected

    def test_bottom_has_rank_length_terms(self):
        f = bottom_via_expansion((5, 4, 4, 2, 1))
        assert {len(idx) for idx in f} == {3}

    def test_j_bottom_keeps_longer_terms(self):
        # ℓ(ν) ≤ 2 에서는 χ^21(21) = 0 이라 추가 항이 없음
        assert bottom_via_expansion((2, 1), j=2) == pt(3, coeff=-1)
        f = bottom_via_expansion((2, 1), j=3)
        assert f == pt(3, coeff=-1) + pt(1, 1, 1, coeff=Fraction(1, 3))

    def test_j_must_be_positive(self):
        with pytest.raises(PreconditionError):
            bottom_via_expansion((2, 1), j=0)
