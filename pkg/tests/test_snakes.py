import pytest

from bottom_schur.errors import PreconditionError, UnfaithfulEvaluationError
from bottom_schur.partitions import Cell, Partition
from bottom_schur.snakes import (
    IntervalSet,
    LabelFilter,
    bottom_via_intervals,
    count_crossings,
    interval_sets,
    interval_sets_of_type,
    involution_check,
    involution_partner,
    label_interval_set,
    labelled_sum_by_type,
    noncrossing_interval_set,
    snake_cells,
    snake_sequence,
)
from bottom_schur.symfunc import Basis, MonomialVector, SymFn, evaluate_finite


def pt(*index, coeff=1):
    return SymFn.monomial(Basis.SCALED_POWER_SUM, index, coeff)


class TestSnakeSequence:
    @pytest.mark.parametrize(
        "lam, word",
        [
            ((1,), "LR"),
            ((2, 1), "LOOR"),
            ((3, 2, 1), "LOLROR"),
            ((4, 4, 4), "LLLORRR"),
            ((6, 3, 3), "LLLRROOOR"),
            ((5, 3, 3, 3, 2, 2), "LLOOLORROOR"),
        ],
    )
    def test_words(self, lam, word):
        assert snake_sequence(lam).word == word

    def test_letter_counts_equal_rank(self):
        seq = snake_sequence((5, 5, 4, 4, 2, 1))
        assert len(seq.positions("L")) == len(seq.positions("R")) == 4

    def test_ls_before_rs(self):
        for lam in [(3, 2, 1), (5, 3, 3, 3, 2, 2), (5, 5, 4, 4, 2, 1), (4, 4, 4)]:
            seq = snake_sequence(lam)
            assert max(seq.positions("L")) < min(seq.positions("R"))

    def test_edge_length(self):
        # 하단 외곽선 변 개수 = λ₁ + ℓ(λ)
        assert len(snake_sequence((5, 3, 3, 3, 2, 2))) == 11

    def test_horizontal_edges_under_first_row(self):
        edges = snake_sequence((5, 3, 3, 3, 2, 2)).edges
        assert edges[8].cell == Cell(1, 4) and edges[8].orientation == "horizontal"
        assert edges[9].cell == Cell(1, 5) and edges[9].letter == "O"

    def test_empty_partition(self):
        assert snake_sequence(()).word == ""


class TestSnakeCells:
    def test_first_edge_of_321(self):
        assert snake_cells((3, 2, 1), 1) == {Cell(3, 1), Cell(2, 1)}

    def test_singleton_snakes(self):
        assert snake_cells((5, 3, 3, 3, 2, 2), 9) == {Cell(1, 4)}
        assert snake_cells((5, 3, 3, 3, 2, 2), 10) == {Cell(1, 5)}

    def test_position_out_of_range(self):
        with pytest.raises(PreconditionError):
            snake_cells((2, 1), 5)


class TestIntervalSets:
    def test_crossings(self):
        assert count_crossings([(1, 4), (2, 5), (3, 6)]) == 3
        assert count_crossings([(1, 6), (2, 5), (3, 4)]) == 0
        assert count_crossings([(1, 4), (3, 6)]) == 1

    def test_interval_sets_of_321(self):
        sets = {s.pairs: s for s in interval_sets((3, 2, 1))}
        assert set(sets) == {((1, 4), (3, 6)), ((1, 6), (3, 4))}
        assert sets[((1, 4), (3, 6))].type_ == Partition([3, 3])
        assert sets[((1, 4), (3, 6))].sign == -1
        assert sets[((1, 6), (3, 4))].type_ == Partition([5, 1])
        assert sets[((1, 6), (3, 4))].crossings == 0

    def test_count_is_factorial_of_rank(self):
        assert len(interval_sets((5, 3, 3, 3, 2, 2))) == 6
        assert len(interval_sets((5, 5, 4, 4, 2, 1))) == 24

    def test_noncrossing(self):
        assert noncrossing_interval_set((4, 4, 4)).pairs == ((1, 7), (2, 6), (3, 5))
        assert noncrossing_interval_set((5, 3, 3, 3, 2, 2)).pairs == ((1, 11), (2, 8), (5, 7))
        assert noncrossing_interval_set((4, 4, 4)).crossings == 0

    def test_of_type(self):
        sets = interval_sets_of_type((4, 4, 4), (6, 3, 3))
        assert [s.pairs for s in sets] == [((1, 7), (2, 5), (3, 6))]


class TestBottomViaIntervals:
    def test_321(self):
        assert bottom_via_intervals((3, 2, 1)) == pt(5, 1) - pt(3, 3)

    def test_21(self):
        assert bottom_via_intervals((2, 1)) == pt(3, coeff=-1)

    def test_444(self):
        expected = (
            pt(6, 4, 2, coeff=-1) + pt(6, 3, 3) + pt(5, 5, 2) + pt(5, 4, 3, coeff=-2) + pt(4, 4, 4)
        )
        assert bottom_via_intervals((4, 4, 4)) == expected

    def test_render_444(self):
        assert bottom_via_intervals((4, 4, 4)).render() == (
            "-p~[6,4,2] + p~[6,3,3] + p~[5,5,2] - 2 p~[5,4,3] + p~[4,4,4]"
        )


class TestLabelledIntervalSets:
    @pytest.fixture
    def base_633(self):
        return IntervalSet.from_pairs([(1, 7), (2, 5), (3, 6)])

    def test_monomial(self, base_633):
        labelled = label_interval_set(base_633, [1, 2, 2], 12)
        assert labelled.monomial() == MonomialVector((6, 6) + (0,) * 10)
        assert labelled.has_repeat

    def test_label_out_of_range(self, base_633):
        with pytest.raises(PreconditionError):
            label_interval_set(base_633, [1, 2, 13], 12)

    def test_distinct_sum_of_one_set(self, base_633):
        # 교차 1 개: 서로 다른 라벨 합은 −2·m_633
        total = labelled_sum_by_type(
            (4, 4, 4), (6, 3, 3), 12, LabelFilter.DISTINCT, only=base_633
        )
        assert total == evaluate_finite(SymFn.monomial(Basis.MONOMIAL, (6, 3, 3), -2), 12)

    def test_all_labels_give_power_sum(self):
        total = labelled_sum_by_type((3, 2, 1), (5, 1), 6)
        assert total == evaluate_finite(SymFn.monomial(Basis.POWER_SUM, (5, 1)), 6)

    def test_repeated_sum_per_type_is_not_zero(self):
        # 반복 라벨 합은 유형 하나만으로는 사라지지 않음
        assert labelled_sum_by_type((3, 2, 1), (3, 3), 6, LabelFilter.REPEATED)

    def test_too_few_variables(self):
        with pytest.raises(UnfaithfulEvaluationError):
            labelled_sum_by_type((3, 2, 1), (3, 3), 5)

    def test_partner_swaps_right_ends(self):
        base = IntervalSet.from_pairs([(1, 4), (3, 6)])
        partner = involution_partner(label_interval_set(base, [2, 2], 6))
        assert partner.base.pairs == ((1, 6), (3, 4))
        assert partner.labels == (2, 2)

    def test_no_partner_without_repeats(self):
        base = IntervalSet.from_pairs([(1, 4), (3, 6)])
        assert involution_partner(label_interval_set(base, [1, 2], 6)) is None

    def test_involution_321(self):
        report = involution_check((3, 2, 1))
        assert report.passed
        # 두 구간 집합 × 반복 라벨 6 가지
        assert report.checked == 12

    def test_involution_444(self):
        report = involution_check((4, 4, 4), n_vars=12)
        assert report.passed, report.violations[:3]
