import pytest

from bottom_schur.errors import InvalidPartitionError
from bottom_schur.partitions import (
    Cell,
    Partition,
    conjugate,
    format_partition,
    is_subpartition,
    p_le_k,
    parse_partition,
    partition_count,
    partitions_of,
    rank,
    z_of,
)


class TestPartition:
    def test_rejects_increasing_parts(self):
        with pytest.raises(InvalidPartitionError):
            Partition([1, 2])

    def test_rejects_non_positive_parts(self):
        with pytest.raises(InvalidPartitionError):
            Partition([3, -1])

    def test_trailing_zeros_are_dropped(self):
        assert Partition([3, 1, 0, 0]) == Partition([3, 1])

    def test_basic_properties(self):
        lam = Partition([5, 4, 4, 2, 1])
        assert lam.n == 16
        assert lam.length == 5
        assert lam.part(1) == 5
        assert lam.part(9) == 0
        assert lam.multiplicities()[4] == 2

    def test_cells_and_contains(self):
        lam = Partition([2, 1])
        assert lam.cells() == [Cell(1, 1), Cell(1, 2), Cell(2, 1)]
        assert lam.contains(Cell(2, 1))
        assert not lam.contains(Cell(2, 2))

    def test_hook_lengths_of_321(self):
        lam = Partition([3, 2, 1])
        assert [lam.hook_length(c) for c in lam.cells()] == [5, 3, 1, 3, 1, 1]


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("5,4,4,2,1", (5, 4, 4, 2, 1)),
            ("54421", (5, 4, 4, 2, 1)),
            ("12,3", (12, 3)),
            ("(3,2,1)", (3, 2, 1)),
            ("0", ()),
            ("", ()),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_partition(text) == Partition(expected)

    @pytest.mark.parametrize("text", ["3,x", "1,2", "abc"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidPartitionError):
            parse_partition(text)

    def test_format(self):
        assert format_partition(Partition([10, 2])) == "10,2"
        assert format_partition(Partition()) == "∅"


class TestEnumeration:
    def test_zero(self):
        assert partitions_of(0) == [Partition()]

    def test_four(self):
        assert partitions_of(4) == [
            Partition(p) for p in ([4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1])
        ]

    def test_max_len(self):
        assert partitions_of(6, max_len=2) == [
            Partition(p) for p in ([6], [5, 1], [4, 2], [3, 3])
        ]

    def test_negative(self):
        with pytest.raises(InvalidPartitionError):
            partitions_of(-1)

    def test_counts(self):
        assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
        assert partition_count(20) == 627
        assert p_le_k(6, 2) == 4


class TestStatistics:
    @pytest.mark.parametrize(
        "lam, expected",
        [((3, 2, 1), 2), ((5, 5, 4, 4, 2, 1), 4), ((), 0), ((1, 1, 1), 1), ((4, 4, 4), 3)],
    )
    def test_rank(self, lam, expected):
        assert rank(lam) == expected

    def test_z(self):
        assert z_of((1, 1, 1, 1, 1, 1)) == 720
        assert z_of((2, 1)) == 2
        assert z_of((3, 3)) == 18

    def test_conjugate(self):
        assert conjugate((5, 4, 4, 2, 1)) == Partition([5, 4, 3, 3, 1])
        assert conjugate(()) == Partition()

    def test_subpartition(self):
        assert is_subpartition((3, 1), (6, 5, 2))
        assert not is_subpartition((3, 3, 1, 1), (6, 5, 2))
