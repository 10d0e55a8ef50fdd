"""
정확한 유리수 행렬 모듈

분수(Fraction) 위의 가우스 소거로 랭크, 핵(kernel) 기저, 행렬식, 생성 공간 포함 여부를 계산합니다.
부동소수점은 사용하지 않습니다.

피벗 규칙: 열 순서대로 처음 나오는 0 아닌 원소 (결정적이므로 핵 기저가 실행마다 같음).
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatchError, VerificationFailedError
from .partitions import Partition, format_partition

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Vector = List[Fraction]


def _row_reduce(rows: List[List[Fraction]], n_cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """
    기약 행사다리꼴(RREF)

    Returns:
        (피벗 행들, 피벗 열 목록)
    """
    m = [row[:] for row in rows]
    pivot_cols: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, len(m)):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            m[piv_r] = [x / fp for x in m[piv_r]]
        pivot_row = m[piv_r]
        for r in range(len(m)):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = [a - fr * b if b else a for a, b in zip(m[r], pivot_row)]
        pivot_cols.append(piv_c)
        piv_r += 1
        if piv_r == len(m):
            break
    return m[:piv_r], pivot_cols


class QMatrix:
    """
    정확한 유리수 밀집 행렬

    행/열에 분할 라벨을 선택적으로 붙일 수 있습니다 (전이 행렬 R, D 등).
    """

    def __init__(
        self,
        rows: Sequence[Sequence[Scalar]],
        n_cols: Optional[int] = None,
        row_index: Optional[Sequence[Partition]] = None,
        col_index: Optional[Sequence[Partition]] = None,
    ):
        self.entries: List[List[Fraction]] = [[Fraction(x) for x in row] for row in rows]
        self.rows = len(self.entries)
        if n_cols is None:
            n_cols = len(self.entries[0]) if self.entries else 0
        self.cols = n_cols
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError(self.cols, len(row))

        self.row_index = list(row_index) if row_index is not None else None
        self.col_index = list(col_index) if col_index is not None else None
        if self.row_index is not None and len(self.row_index) != self.rows:
            raise DimensionMismatchError(self.rows, len(self.row_index))
        if self.col_index is not None and len(self.col_index) != self.cols:
            raise DimensionMismatchError(self.cols, len(self.col_index))

    @classmethod
    def identity(cls, size: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], n_cols=size)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "QMatrix":
        return cls([[0] * n_cols for _ in range(n_rows)], n_cols=n_cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, pos: Tuple[int, int]) -> Fraction:
        i, j = pos
        return self.entries[i][j]

    def entry(self, row_label: Partition, col_label: Partition) -> Fraction:
        """분할 라벨로 원소 조회"""
        if self.row_index is None or self.col_index is None:
            raise DimensionMismatchError(0, 0)
        return self.entries[self.row_index.index(row_label)][self.col_index.index(col_label)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def transpose(self) -> "QMatrix":
        return QMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            n_cols=self.rows,
            row_index=self.col_index,
            col_index=self.row_index,
        )

    def _check_same_shape(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(self.rows * self.cols, other.rows * other.cols)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            n_cols=self.cols,
            row_index=self.row_index,
            col_index=self.col_index,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            n_cols=self.cols,
            row_index=self.row_index,
            col_index=self.col_index,
        )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """M·v"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(self.cols, len(vector))
        v = [Fraction(x) for x in vector]
        return [sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in self.entries]

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows)
        cols = other.transpose().entries
        return QMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.entries],
            n_cols=other.cols,
            row_index=self.row_index,
            col_index=other.col_index,
        )

    def rank(self) -> int:
        _, pivots = _row_reduce(self.entries, self.cols)
        return len(pivots)

    def kernel_basis(self) -> List[Vector]:
        """
        오른쪽 영공간 기저

        자유 열마다 하나의 벡터를 만들고, 각 벡터가 Mv = 0 을 만족하는지 확인합니다.

        Raises:
            VerificationFailedError: 반환 벡터가 Mv = 0 을 만족하지 않을 때
        """
        reduced, pivots = _row_reduce(self.entries, self.cols)
        pivot_set = set(pivots)
        basis: List[Vector] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for r, c in enumerate(pivots):
                vec[c] = -reduced[r][free]
            basis.append(vec)

        for vec in basis:
            if any(self.apply(vec)):
                raise VerificationFailedError(detail="kernel vector does not satisfy Mv = 0")
        return basis

    def determinant(self) -> Fraction:
        """정사각 행렬의 정확한 행렬식"""
        if self.rows != self.cols:
            raise DimensionMismatchError(self.rows, self.cols)
        m = [row[:] for row in self.entries]
        det = Fraction(1)
        size = self.rows
        for c in range(size):
            pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            fp = m[c][c]
            det *= fp
            for r in range(c + 1, size):
                fr = m[r][c]
                if fr:
                    factor = fr / fp
                    m[r] = [a - factor * b for a, b in zip(m[r], m[c])]
        return det

    def render(self) -> str:
        """디버깅용 분수 격자 출력"""
        cells = [[str(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        lines = []
        for i, row in enumerate(cells):
            label = ""
            if self.row_index is not None:
                label = f"{format_partition(self.row_index[i]):>12} | "
            lines.append(label + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def rank_of(matrix: QMatrix) -> int:
    """정확한 랭크"""
    return matrix.rank()


def kernel_basis(matrix: QMatrix) -> List[Vector]:
    """오른쪽 영공간 기저 (크기 = cols − rank)"""
    return matrix.kernel_basis()


def in_span(vectors: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> bool:
    """
    target 이 vectors 의 유리 선형결합인지 판정

    Raises:
        DimensionMismatchError: 벡터 길이가 서로 다를 때
    """
    dim = len(target)
    for vec in vectors:
        if len(vec) != dim:
            raise DimensionMismatchError(dim, len(vec))
    if not any(target):
        return True
    if not vectors:
        return False
    base = QMatrix(vectors, n_cols=dim).rank()
    extended = QMatrix(list(vectors) + [target], n_cols=dim).rank()
    return base == extended
