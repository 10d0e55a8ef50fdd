"""
Tableau, jeu de taquin, Littlewood–Richardson 모듈

- skew tableau (SYT / SSYT), 읽기 단어, 격자 순열
- jeu de taquin 안쪽/바깥쪽 슬라이드와 정규화(rectification)
- LR 계수: 격자 단어 규칙과 jeu de taquin 규칙
- ŝ_λ 를 {ŝ_ν : ℓ(ν) = rank(ν) = k} 로 전개
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import ContainmentError, PreconditionError, SizeMismatchError, VerificationFailedError
from .jacobi_trudi import SkewShape, bottom_via_jacobi_trudi, laplace_sign, skew_from_minor
from .partitions import Cell, Partition, is_subpartition, partitions_of
from .snakes import bottom_via_intervals
from .storage import KeyedMemo
from .symfunc import Basis, SymFn

logger = logging.getLogger(__name__)


def _skew_cells(outer: Partition, inner: Partition) -> List[Cell]:
    return [
        Cell(r, c)
        for r in range(1, len(outer) + 1)
        for c in range(inner.part(r) + 1, outer.part(r) + 1)
    ]


def _bump(shape: Partition, row: int, delta: int) -> Partition:
    parts = list(shape) + [0] * max(0, row - len(shape))
    parts[row - 1] += delta
    return Partition(parts)


class SkewTableau:
    """
    outer/inner 모양의 칸에 양의 정수를 채운 것

    값 객체로 취급합니다 (슬라이드는 새 tableau 를 반환).
    """

    __slots__ = ("outer", "inner", "_entries")

    def __init__(self, outer: Iterable[int], inner: Iterable[int], entries: Mapping[Cell, int]):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not is_subpartition(self.inner, self.outer):
            raise ContainmentError(self.outer, self.inner)
        self._entries = {Cell(*cell): int(v) for cell, v in entries.items()}
        if set(self._entries) != set(_skew_cells(self.outer, self.inner)):
            raise PreconditionError(detail=f"entries do not fill {self.outer}/{self.inner}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "SkewTableau":
        """[[None, None, 1, 3], [None, 2], ...] (None 은 안쪽 칸)"""
        outer = [len(row) for row in rows]
        inner = [sum(1 for x in row if x is None) for row in rows]
        entries = {}
        for r, row in enumerate(rows, start=1):
            for c, v in enumerate(row, start=1):
                if v is None:
                    if c > inner[r - 1]:
                        raise PreconditionError(detail=f"inner cell after entry in row {r}")
                else:
                    entries[Cell(r, c)] = v
        return cls(outer, inner, entries)

    def to_rows(self) -> List[List[Optional[int]]]:
        return [
            [None if c <= self.inner.part(r) else self._entries[Cell(r, c)] for c in range(1, width + 1)]
            for r, width in enumerate(self.outer, start=1)
        ]

    @property
    def size(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> Dict[Cell, int]:
        return dict(self._entries)

    def __getitem__(self, cell: Tuple[int, int]) -> int:
        return self._entries[Cell(*cell)]

    def __contains__(self, cell: object) -> bool:
        return cell in self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return (self.outer, self.inner, self._entries) == (other.outer, other.inner, other._entries)

    def __hash__(self) -> int:
        return hash((self.outer, self.inner, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SkewTableau({self.to_rows()!r})"

    def is_semistandard(self) -> bool:
        for (r, c), v in self._entries.items():
            right = self._entries.get(Cell(r, c + 1))
            below = self._entries.get(Cell(r + 1, c))
            if right is not None and right < v:
                return False
            if below is not None and below <= v:
                return False
        return True

    def is_standard(self) -> bool:
        values = sorted(self._entries.values())
        if values != list(range(1, self.size + 1)):
            return False
        return self.is_semistandard() and all(
            self._entries.get(Cell(r, c + 1), v + 1) > v for (r, c), v in self._entries.items()
        )

    def weight(self) -> Counter:
        return Counter(self._entries.values())

    def inner_corners(self) -> List[Cell]:
        """안쪽 모양에서 제거 가능한 칸"""
        return [
            Cell(r, part)
            for r, part in enumerate(self.inner, start=1)
            if part > self.inner.part(r + 1)
        ]

    def outer_addable(self) -> List[Cell]:
        """바깥 모양에 추가 가능한 칸"""
        cells = []
        for r in range(1, len(self.outer) + 2):
            c = self.outer.part(r) + 1
            if r == 1 or self.outer.part(r - 1) >= c:
                cells.append(Cell(r, c))
        return cells


# ============================================================================
# 읽기 단어 / 격자 순열
# ============================================================================


def reading_word(tableau: SkewTableau) -> List[int]:
    """아래 행부터 위로, 각 행은 왼쪽에서 오른쪽"""
    word: List[int] = []
    for r in range(len(tableau.outer), 0, -1):
        for c in range(tableau.inner.part(r) + 1, tableau.outer.part(r) + 1):
            word.append(tableau[r, c])
    return word


def reverse_reading_word(tableau: SkewTableau) -> List[int]:
    return list(reversed(reading_word(tableau)))


def is_lattice(word: Iterable[int]) -> bool:
    """모든 접두사에서 #i ≥ #(i+1)"""
    counts: Counter = Counter()
    for letter in word:
        counts[letter] += 1
        if letter > 1 and counts[letter] > counts[letter - 1]:
            return False
    return True


# ============================================================================
# Jeu de taquin
# ============================================================================


def slide_inward(tableau: SkewTableau, corner: Tuple[int, int]) -> SkewTableau:
    """
    안쪽 모서리 칸에서 시작하는 슬라이드

    빈 칸으로 오른쪽/아래 이웃 중 작은 값을 옮기고, 빈 칸이 바깥 모서리에 닿으면 멈춥니다.

    Raises:
        PreconditionError: corner 가 안쪽 모서리가 아닐 때
        VerificationFailedError: 두 이웃 값이 같을 때 (SYT 에서는 불가능)
    """
    corner = Cell(*corner)
    if corner not in tableau.inner_corners():
        raise PreconditionError(detail=f"{corner} is not an inner corner of {tableau.inner}")
    entries = tableau.entries
    hole = corner
    while True:
        right = Cell(hole.row, hole.col + 1)
        below = Cell(hole.row + 1, hole.col)
        candidates = [cell for cell in (right, below) if cell in entries]
        if not candidates:
            break
        if len(candidates) == 2 and entries[right] == entries[below]:
            raise VerificationFailedError(detail=f"jeu de taquin tie at {hole}")
        source = min(candidates, key=lambda cell: entries[cell])
        entries[hole] = entries.pop(source)
        hole = source
    return SkewTableau(
        _bump(tableau.outer, hole.row, -1), _bump(tableau.inner, corner.row, -1), entries
    )


def slide_outward(tableau: SkewTableau, cell: Tuple[int, int]) -> SkewTableau:
    """
    바깥 모양에 추가 가능한 칸에서 시작하는 역방향 슬라이드 (왼쪽/위 이웃 중 큰 값)

    slide_inward 의 역연산입니다.
    """
    cell = Cell(*cell)
    if cell not in tableau.outer_addable():
        raise PreconditionError(detail=f"{cell} cannot be added to {tableau.outer}")
    entries = tableau.entries
    hole = cell
    while True:
        left = Cell(hole.row, hole.col - 1)
        above = Cell(hole.row - 1, hole.col)
        candidates = [c for c in (left, above) if c in entries]
        if not candidates:
            break
        if len(candidates) == 2 and entries[left] == entries[above]:
            raise VerificationFailedError(detail=f"jeu de taquin tie at {hole}")
        source = max(candidates, key=lambda c: entries[c])
        entries[hole] = entries.pop(source)
        hole = source
    return SkewTableau(
        _bump(tableau.outer, cell.row, 1), _bump(tableau.inner, hole.row, 1), entries
    )


def jdt_rectify(tableau: SkewTableau, rng: Optional[random.Random] = None) -> SkewTableau:
    """
    안쪽 모양이 빌 때까지 안쪽 슬라이드 반복

    Args:
        tableau: SYT
        rng: 주어지면 모서리를 무작위로 선택 (없으면 가장 아래 모서리)
    """
    if not tableau.is_standard():
        raise PreconditionError(detail="jeu de taquin rectification requires a standard tableau")
    current = tableau
    while current.inner:
        corners = current.inner_corners()
        corner = rng.choice(corners) if rng is not None else corners[-1]
        current = slide_inward(current, corner)
    return current


def superstandard(nu: Iterable[int]) -> SkewTableau:
    """행 i 를 행 i−1 다음의 연속 정수로 채운 SYT"""
    nu = Partition(nu)
    entries: Dict[Cell, int] = {}
    value = 1
    for cell in nu.cells():
        entries[cell] = value
        value += 1
    return SkewTableau(nu, (), entries)


_syt_memo: KeyedMemo[Tuple[Partition, Partition], Tuple[SkewTableau, ...]] = KeyedMemo("syt")


def standard_tableaux(outer: Iterable[int], inner: Iterable[int] = ()) -> List[SkewTableau]:
    """outer/inner 모양의 모든 SYT (값 1..m 을 차례로 추가 가능한 칸에 배치)"""
    outer, inner = Partition(outer), Partition(inner)
    if not is_subpartition(inner, outer):
        raise ContainmentError(outer, inner)

    def build() -> Tuple[SkewTableau, ...]:
        total = outer.n - inner.n
        found: List[SkewTableau] = []
        shape = list(inner) + [0] * (len(outer) - len(inner))
        entries: Dict[Cell, int] = {}

        def place(value: int) -> None:
            if value > total:
                found.append(SkewTableau(outer, inner, entries))
                return
            for r in range(1, len(outer) + 1):
                c = shape[r - 1] + 1
                if c > outer.part(r):
                    continue
                if r > 1 and shape[r - 2] < c:
                    continue
                shape[r - 1] = c
                entries[Cell(r, c)] = value
                place(value + 1)
                del entries[Cell(r, c)]
                shape[r - 1] = c - 1

        place(1)
        return tuple(found)

    return list(_syt_memo.get_or_compute((outer, inner), build))


# ============================================================================
# Littlewood–Richardson 계수
# ============================================================================


def _check_lr(lam: Partition, mu: Partition, nu: Partition) -> None:
    if not is_subpartition(mu, lam):
        raise ContainmentError(lam, mu)
    if lam.n - mu.n != nu.n:
        raise SizeMismatchError(lam.n - mu.n, nu.n)


def lr_tableaux_lattice(
    lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]
) -> Iterator[SkewTableau]:
    """
    모양 λ/μ, 유형 ν 이고 역읽기 단어가 격자 순열인 SSYT

    역읽기 순서 (위 행부터, 각 행 오른쪽에서 왼쪽) 로 채우며 격자 접두사로 가지치기합니다.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_lr(lam, mu, nu)
    order = [
        Cell(r, c)
        for r in range(1, len(lam) + 1)
        for c in range(lam.part(r), mu.part(r), -1)
    ]
    entries: Dict[Cell, int] = {}
    counts = [0] * (len(nu) + 1)

    def fill(pos: int) -> Iterator[SkewTableau]:
        if pos == len(order):
            yield SkewTableau(lam, mu, entries)
            return
        r, c = order[pos]
        upper = entries.get(Cell(r, c + 1), len(nu))
        lower = entries.get(Cell(r - 1, c), 0) + 1
        for v in range(lower, upper + 1):
            if counts[v] >= nu.part(v):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            entries[Cell(r, c)] = v
            yield from fill(pos + 1)
            del entries[Cell(r, c)]
            counts[v] -= 1

    yield from fill(0)


def lr_coeff_lattice(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^λ_{μν} (격자 단어 규칙)"""
    return sum(1 for _ in lr_tableaux_lattice(lam, mu, nu))


_lr_jdt_memo: KeyedMemo[Tuple[Partition, Partition], Dict[Partition, int]] = KeyedMemo("lr_jdt")


def lr_coefficients_jdt(lam: Iterable[int], mu: Iterable[int]) -> Dict[Partition, int]:
    """
    λ/μ 의 모든 SYT 를 정규화해 superstandard 로 가는 것을 모양별로 셈

    Returns:
        ν → c^λ_{μν} (0 은 생략)
    """
    lam, mu = Partition(lam), Partition(mu)
    if not is_subpartition(mu, lam):
        raise ContainmentError(lam, mu)

    def build() -> Dict[Partition, int]:
        counts: Dict[Partition, int] = {}
        for tableau in standard_tableaux(lam, mu):
            rect = jdt_rectify(tableau)
            if rect == superstandard(rect.outer):
                counts[rect.outer] = counts.get(rect.outer, 0) + 1
        return counts

    return dict(_lr_jdt_memo.get_or_compute((lam, mu), build))


def lr_coeff_jdt(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^λ_{μν} (jeu de taquin 규칙, 목표 P = superstandard(ν))"""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_lr(lam, mu, nu)
    return lr_coefficients_jdt(lam, mu).get(nu, 0)


# ============================================================================
# 기저 전개
# ============================================================================


@dataclass(frozen=True)
class BasisExpansion:
    """ŝ_λ = sign · Σ_ν c^μ_{σν} ŝ_ν"""

    partition: Partition
    shape: SkewShape
    sign: int
    coefficients: Dict[Partition, int] = field(default_factory=dict, hash=False)

    def support(self) -> List[Partition]:
        return sorted(self.coefficients, reverse=True)

    def to_symfn(self) -> SymFn:
        total = SymFn.zero(Basis.SCALED_POWER_SUM)
        for nu, c in self.coefficients.items():
            total = total + bottom_via_intervals(nu) * c
        return total * self.sign


def expand_bottom_in_basis(lam: Iterable[int]) -> BasisExpansion:
    """
    (μ, σ) = skew_from_minor(λ) 에서 c^μ_{σν} 를 계산

    0 이 아닌 계수는 ℓ(ν) = rank(ν) = k 인 ν 에만 나타나며,
    p̃ 기저에서 전개 등식을 정확히 확인합니다.

    Raises:
        VerificationFailedError: 전개가 ŝ_λ 와 다를 때
    """
    lam = Partition(lam)
    shape = skew_from_minor(lam)
    k = len(shape.outer)
    coefficients: Dict[Partition, int] = {}
    for nu in partitions_of(shape.size, max_len=k):
        if not is_subpartition(nu, shape.outer):
            continue
        c = lr_coeff_lattice(shape.outer, shape.inner, nu)
        if c:
            coefficients[nu] = c

    expansion = BasisExpansion(
        partition=lam, shape=shape, sign=laplace_sign(lam), coefficients=coefficients
    )
    if expansion.to_symfn() != bottom_via_jacobi_trudi(lam):
        raise VerificationFailedError(detail=f"basis expansion identity fails for {lam}")
    logger.debug(f"Basis expansion of {lam}: {len(coefficients)} terms over {shape}")
    return expansion
