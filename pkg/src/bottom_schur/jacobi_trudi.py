"""
Jacobi–Trudi 행렬 모듈

- JT_λ 첨자 격자 (λ_i − i + j)
- h₀ = 1 을 포함하는 행/열 제거 → JT*
- p̃ 행렬식 (jt 경로) 과 Laplace 부호
- JT* 로부터 skew 모양 μ/σ 복원, Bessenrodt 닫힌 식, 크기 k 정사각형 확인
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, NamedTuple, Tuple

from .errors import PreconditionError, VerificationFailedError
from .partitions import Partition, rank
from .symfunc import Basis, SymFn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JTMatrix:
    """
    Jacobi–Trudi 첨자 격자

    음수 첨자는 0 원소, 0 첨자는 상수 1 (h₀) 입니다.
    row_labels/col_labels 는 원래 JT_λ 에서의 1-based 행/열 번호.
    """

    subscripts: Tuple[Tuple[int, ...], ...]
    row_labels: Tuple[int, ...]
    col_labels: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.subscripts)

    def __getitem__(self, pos: Tuple[int, int]) -> int:
        i, j = pos
        return self.subscripts[i][j]

    def rows_without_unit(self) -> int:
        return sum(1 for row in self.subscripts if 0 not in row)

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.subscripts]

    def render(self) -> str:
        """h₀ 는 "1", 음수 첨자는 "0", 나머지는 h 첨자"""

        def show(x: int) -> str:
            if x < 0:
                return "0"
            if x == 0:
                return "1"
            return f"h{x}"

        cells = [[show(x) for x in row] for row in self.subscripts]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


class JTStar(NamedTuple):
    matrix: JTMatrix
    removed_rows: Tuple[int, ...]
    removed_cols: Tuple[int, ...]


@dataclass(frozen=True)
class SkewShape:
    """μ/σ (σ 는 뒤쪽 0 없이 저장, inner_padded 로 ℓ(μ) 까지 채움)"""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if len(self.inner) > len(self.outer) or any(
            s > m for s, m in zip(self.inner, self.outer)
        ):
            raise PreconditionError(detail=f"{self.inner} is not contained in {self.outer}")

    @property
    def inner_padded(self) -> Tuple[int, ...]:
        return tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def __str__(self) -> str:
        outer = "".join(str(p) for p in self.outer)
        inner = "".join(str(p) for p in self.inner_padded)
        return f"{outer}/{inner}"


# ============================================================================
# 행렬 구성
# ============================================================================


def jt_matrix(lam: Iterable[int]) -> JTMatrix:
    """ℓ(λ) 크기 JT_λ, 원소 (i,j) 의 첨자는 λ_i − i + j"""
    lam = Partition(lam)
    size = len(lam)
    labels = tuple(range(1, size + 1))
    return JTMatrix(
        subscripts=tuple(
            tuple(lam.part(i) - i + j for j in labels) for i in labels
        ),
        row_labels=labels,
        col_labels=labels,
    )


def jt_star(lam: Iterable[int]) -> JTStar:
    """
    h₀ 를 포함하는 행과 열을 모두 제거한 JT*

    행 i 는 λ_i < i 일 때 열 i − λ_i 에 h₀ 를 가집니다. 남는 크기는 rank(λ).
    """
    lam = Partition(lam)
    full = jt_matrix(lam)
    removed_rows = tuple(i for i in full.row_labels if lam.part(i) < i)
    removed_cols = tuple(i - lam.part(i) for i in removed_rows)
    rows = tuple(i for i in full.row_labels if i not in removed_rows)
    cols = tuple(j for j in full.col_labels if j not in removed_cols)
    star = JTMatrix(
        subscripts=tuple(tuple(full[i - 1, j - 1] for j in cols) for i in rows),
        row_labels=rows,
        col_labels=cols,
    )
    if star.size != rank(lam):
        raise VerificationFailedError(detail=f"JT* size {star.size} != rank {rank(lam)} for {lam}")
    return JTStar(star, removed_rows, removed_cols)


# ============================================================================
# 행렬식 (jt 경로)
# ============================================================================


def _permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def det_ptilde(matrix: JTMatrix) -> SymFn:
    """
    Σ_π sgn(π) Π p̃_{jt(i, π(i))} (음수 첨자는 0)

    Raises:
        PreconditionError: 상수 1 (첨자 0) 원소가 남아 있을 때
        VerificationFailedError: 행렬식이 0 일 때
    """
    if any(0 in row for row in matrix.subscripts):
        raise PreconditionError(detail="matrix still contains h_0 entries; apply jt_star first")
    size = matrix.size
    terms: Dict[Partition, int] = {}
    for perm in permutations(range(size)):
        parts = [matrix[i, perm[i]] for i in range(size)]
        if any(x < 0 for x in parts):
            continue
        key = Partition(sorted(parts, reverse=True))
        terms[key] = terms.get(key, 0) + _permutation_sign(perm)
    result = SymFn(Basis.SCALED_POWER_SUM, terms)
    if not result:
        raise VerificationFailedError(detail="JT* determinant vanished")
    return result


def laplace_sign(lam: Iterable[int]) -> int:
    """(−1)^{Σ 제거된 행 + Σ 제거된 열}"""
    _, rows, cols = jt_star(lam)
    return -1 if (sum(rows) + sum(cols)) % 2 else 1


def bottom_via_jacobi_trudi(lam: Iterable[int]) -> SymFn:
    """
    ŝ_λ = (−1)^{Σ 제거된 행 + Σ 제거된 열} · det JT*_p

    제거된 h₀ 원소들은 단위삼각 블록을 이루므로, 전체 행렬식의 최저 차수 항은
    그 원소들을 따라 Laplace 전개한 값입니다.
    """
    lam = Partition(lam)
    star, rows, cols = jt_star(lam)
    sign = -1 if (sum(rows) + sum(cols)) % 2 else 1
    det = det_ptilde(star)
    return det if sign == 1 else -det


# ============================================================================
# Skew 모양 복원
# ============================================================================


def skew_from_minor(lam: Iterable[int]) -> SkewShape:
    """
    JT* (크기 k) 에서 μ/σ 복원

    σ_i = jt*_{1,k} − jt*_{1,i} − k + i,  μ_i = jt*_{i,i} + σ_i
    """
    star = jt_star(lam).matrix
    k = star.size
    sigma = [star[0, k - 1] - star[0, i - 1] - k + i for i in range(1, k + 1)]
    mu = [star[i - 1, i - 1] + sigma[i - 1] for i in range(1, k + 1)]
    return SkewShape(outer=Partition(mu), inner=Partition(sigma))


def bessenrodt_skew(lam: Iterable[int]) -> SkewShape:
    """
    닫힌 식: μ_i = ℓ(λ) − k + λ_i,  σ_i = #{s : λ_s ≤ k − i}  (i = 1..k)
    """
    lam = Partition(lam)
    k = rank(lam)
    length = len(lam)
    mu = [length - k + lam.part(i) for i in range(1, k + 1)]
    sigma = [sum(1 for part in lam if part <= k - i) for i in range(1, k + 1)]
    return SkewShape(outer=Partition(mu), inner=Partition(sigma))


def square_certificate(shape: SkewShape, k: int) -> bool:
    """
    μ/σ 가 k×k 정사각형 (열 σ₁+1 .. σ₁+k, 행 1..k) 을 포함하는지

    Raises:
        PreconditionError: μ 의 행 수가 k 가 아닐 때
    """
    if len(shape.outer) != k:
        raise PreconditionError(detail=f"skew shape {shape} does not have {k} rows")
    if k == 0:
        return True
    return shape.outer.part(k) >= shape.inner.part(1) + k
