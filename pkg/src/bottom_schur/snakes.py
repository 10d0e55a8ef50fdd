"""
뱀 수열(snake sequence)과 구간 집합(interval set) 모듈

- 하단 외곽선 변 목록과 L/R/O 분류 (대각선 규칙)
- 구간 집합, 교차 수, 구간 집합 공식에 의한 bottom 계산 (intervals 경로)
- 라벨 붙은 구간 집합, 유형별 라벨 합, 부호 반전 involution 검사
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, List, Literal, Optional, Sequence, Set, Tuple

from .errors import PreconditionError, UnfaithfulEvaluationError
from .models import InvolutionReport
from .partitions import Cell, Partition
from .symfunc import Basis, MonomialVector, Polynomial, SymFn
from .characters import greedy_z

logger = logging.getLogger(__name__)

Letter = Literal["L", "R", "O"]
Orientation = Literal["horizontal", "vertical"]


# ============================================================================
# 뱀 수열
# ============================================================================


@dataclass(frozen=True)
class SnakeEdge:
    """하단 외곽선의 한 변과 그 변에 붙은 칸"""

    position: int  # 1-based
    orientation: Orientation
    cell: Cell
    letter: Letter


@dataclass(frozen=True)
class SnakeSequence:
    partition: Partition
    edges: Tuple[SnakeEdge, ...]

    @property
    def word(self) -> str:
        return "".join(e.letter for e in self.edges)

    def positions(self, letter: Letter) -> List[int]:
        return [e.position for e in self.edges if e.letter == letter]

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return self.word


def lower_envelope(lam: Iterable[int]) -> List[Tuple[Orientation, Cell]]:
    """
    하단 외곽선 변 (왼쪽 아래 → 오른쪽 위)

    행 i = ℓ, …, 1 순서로, 행 i 아래의 노출된 수평 변 (열 λ_{i+1}+1 .. λ_i) 다음에
    행 i 오른쪽 끝의 수직 변 하나.
    """
    lam = Partition(lam)
    edges: List[Tuple[Orientation, Cell]] = []
    for i in range(len(lam), 0, -1):
        for j in range(lam.part(i + 1) + 1, lam.part(i) + 1):
            edges.append(("horizontal", Cell(i, j)))
        edges.append(("vertical", Cell(i, lam.part(i))))
    return edges


def _classify(orientation: Orientation, cell: Cell) -> Letter:
    i, j = cell
    if orientation == "horizontal":
        return "L" if i >= j else "O"
    return "R" if i <= j else "O"


def snake_sequence(lam: Iterable[int]) -> SnakeSequence:
    """
    SS(λ)

    수평 변 아래 칸 (i,j): i ≥ j 이면 L, 아니면 O
    수직 변 왼쪽 칸 (i,j): i ≤ j 이면 R, 아니면 O
    """
    lam = Partition(lam)
    edges = tuple(
        SnakeEdge(position=pos, orientation=orientation, cell=cell, letter=_classify(orientation, cell))
        for pos, (orientation, cell) in enumerate(lower_envelope(lam), start=1)
    )
    return SnakeSequence(partition=lam, edges=edges)


def snake_cells(lam: Iterable[int], position: int) -> Set[Cell]:
    """
    변 e 에 붙은 뱀 S_e (사슬이 λ 를 벗어나는 첫 칸에서 멈춤)

    수평: (i,j), (i−1,j), (i−1,j−1), (i−2,j−1), …
    수직: (i,j), (i,j−1), (i−1,j−1), (i−1,j−2), …

    L/R/O 분류에는 쓰이지 않습니다.

    Raises:
        PreconditionError: 위치가 범위를 벗어날 때
    """
    lam = Partition(lam)
    envelope = lower_envelope(lam)
    if not 1 <= position <= len(envelope):
        raise PreconditionError(detail=f"edge position {position} out of 1..{len(envelope)}")
    orientation, (i, j) = envelope[position - 1]

    # 수평은 위로 먼저, 수직은 왼쪽으로 먼저
    steps = [(-1, 0), (0, -1)] if orientation == "horizontal" else [(0, -1), (-1, 0)]
    cells: Set[Cell] = set()
    cell = Cell(i, j)
    step = 0
    while lam.contains(cell):
        cells.add(cell)
        di, dj = steps[step % 2]
        cell = Cell(cell.row + di, cell.col + dj)
        step += 1
    return cells


# ============================================================================
# 구간 집합
# ============================================================================


def count_crossings(pairs: Sequence[Tuple[int, int]]) -> int:
    """#{(i,j) : u_i < u_j < v_i < v_j}"""
    total = 0
    for ui, vi in pairs:
        for uj, vj in pairs:
            if ui < uj < vi < vj:
                total += 1
    return total


@dataclass(frozen=True)
class IntervalSet:
    """L 위치와 R 위치의 짝짓기 (u 오름차순)"""

    pairs: Tuple[Tuple[int, int], ...]
    crossings: int

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "IntervalSet":
        ordered = tuple(sorted((int(u), int(v)) for u, v in pairs))
        return cls(pairs=ordered, crossings=count_crossings(ordered))

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(v - u for u, v in self.pairs)

    @property
    def type_(self) -> Partition:
        return Partition(sorted(self.lengths, reverse=True))

    @property
    def sign(self) -> int:
        return -1 if self.crossings % 2 else 1


def interval_sets(lam: Iterable[int]) -> List[IntervalSet]:
    """
    λ 의 모든 구간 집합 (R 위치 순열 순서)

    모든 L 이 R 보다 앞서므로 u < v 는 자동으로 성립합니다.
    """
    seq = snake_sequence(lam)
    ls, rs = seq.positions("L"), seq.positions("R")
    return [IntervalSet.from_pairs(zip(ls, perm)) for perm in permutations(rs)]


def interval_sets_of_type(lam: Iterable[int], mu: Iterable[int]) -> List[IntervalSet]:
    mu = Partition(mu)
    return [s for s in interval_sets(lam) if s.type_ == mu]


def noncrossing_interval_set(lam: Iterable[int]) -> IntervalSet:
    """i 번째 L (왼쪽부터) 과 i 번째 R (오른쪽부터) 을 잇는 구간 집합"""
    seq = snake_sequence(lam)
    ls, rs = seq.positions("L"), seq.positions("R")
    return IntervalSet.from_pairs(zip(ls, reversed(rs)))


def bottom_via_intervals(lam: Iterable[int]) -> SymFn:
    """ŝ_λ = (−1)^{z(λ)} Σ_𝓘 (−1)^{c(𝓘)} Π p̃_{v_i−u_i}"""
    lam = Partition(lam)
    sign = -1 if greedy_z(lam) % 2 else 1
    terms: dict = {}
    for s in interval_sets(lam):
        terms[s.type_] = terms.get(s.type_, 0) + sign * s.sign
    return SymFn(Basis.SCALED_POWER_SUM, terms)


# ============================================================================
# 라벨 붙은 구간 집합
# ============================================================================


class LabelFilter(str, Enum):
    ALL = "all"
    REPEATED = "repeated"
    DISTINCT = "distinct"


@dataclass(frozen=True)
class LabelledIntervalSet:
    """구간마다 변수 번호 α_i (1..N) 를 붙인 구간 집합"""

    base: IntervalSet
    labels: Tuple[int, ...]
    n_vars: int

    def __post_init__(self):
        if len(self.labels) != len(self.base.pairs):
            raise PreconditionError(detail=f"{len(self.labels)} labels for {len(self.base.pairs)} intervals")
        if any(not 1 <= a <= self.n_vars for a in self.labels):
            raise PreconditionError(detail=f"labels {self.labels} outside 1..{self.n_vars}")

    @property
    def has_repeat(self) -> bool:
        return len(set(self.labels)) < len(self.labels)

    def monomial(self) -> MonomialVector:
        """x^𝓘 = Π x_{α_i}^{v_i−u_i}"""
        exps = [0] * self.n_vars
        for (u, v), a in zip(self.base.pairs, self.labels):
            exps[a - 1] += v - u
        return MonomialVector(tuple(exps))

    def signed_term(self) -> Tuple[MonomialVector, int]:
        return self.monomial(), self.base.sign


def label_interval_set(
    base: IntervalSet, labels: Sequence[int], n_vars: int
) -> LabelledIntervalSet:
    return LabelledIntervalSet(base=base, labels=tuple(labels), n_vars=n_vars)


def _labellings(base: IntervalSet, n_vars: int) -> Iterable[LabelledIntervalSet]:
    for labels in product(range(1, n_vars + 1), repeat=len(base.pairs)):
        yield LabelledIntervalSet(base=base, labels=labels, n_vars=n_vars)


def _check_vars(lam: Partition, n_vars: Optional[int]) -> int:
    if n_vars is None:
        return lam.n
    if n_vars < lam.n:
        raise UnfaithfulEvaluationError(n_vars, lam.n)
    return n_vars


def labelled_sum_by_type(
    lam: Iterable[int],
    mu: Iterable[int],
    n_vars: Optional[int] = None,
    label_filter: LabelFilter = LabelFilter.ALL,
    only: Optional[IntervalSet] = None,
) -> Polynomial:
    """
    Σ (−1)^{c(𝓘)} x^𝓘 (유형 μ 의 라벨 붙은 구간 집합, 필터 적용)

    Args:
        lam: 모양 λ
        mu: 유형 μ
        n_vars: 변수 개수 N (기본 |λ|)
        label_filter: all / repeated / distinct
        only: 주어지면 이 구간 집합 하나만 합산

    Raises:
        UnfaithfulEvaluationError: N < |λ|
    """
    lam, mu = Partition(lam), Partition(mu)
    n_vars = _check_vars(lam, n_vars)
    label_filter = LabelFilter(label_filter)
    bases = [only] if only is not None else interval_sets_of_type(lam, mu)

    out: Polynomial = {}
    for base in bases:
        if base.type_ != mu:
            continue
        for labelled in _labellings(base, n_vars):
            if label_filter == LabelFilter.REPEATED and not labelled.has_repeat:
                continue
            if label_filter == LabelFilter.DISTINCT and labelled.has_repeat:
                continue
            mono, sign = labelled.signed_term()
            out[mono] = out.get(mono, Fraction(0)) + sign
    return {k: v for k, v in out.items() if v != 0}


def involution_partner(labelled: LabelledIntervalSet) -> Optional[LabelledIntervalSet]:
    """
    가장 작은 반복 라벨 a 를 가진 처음 두 구간의 오른쪽 끝점을 교환

    반복 라벨이 없으면 None.
    """
    labels = labelled.labels
    repeated = sorted({a for a in labels if labels.count(a) > 1})
    if not repeated:
        return None
    a = repeated[0]
    first, second = [idx for idx, b in enumerate(labels) if b == a][:2]

    pairs = [list(p) for p in labelled.base.pairs]
    pairs[first][1], pairs[second][1] = pairs[second][1], pairs[first][1]
    # u 는 그대로이므로 구간 순서와 라벨 대응이 유지됨
    swapped = tuple((u, v) for u, v in pairs)
    base = IntervalSet(pairs=swapped, crossings=count_crossings(swapped))
    return LabelledIntervalSet(base=base, labels=labels, n_vars=labelled.n_vars)


def involution_check(lam: Iterable[int], n_vars: Optional[int] = None) -> InvolutionReport:
    """
    반복 라벨 구간 집합 전체에서 involution 성질 검사

    - 두 번 적용하면 원래대로
    - 교차 수 홀짝이 바뀜
    - x^𝓘 보존
    - 고정점 없음
    """
    lam = Partition(lam)
    n_vars = _check_vars(lam, n_vars)
    violations: List[str] = []
    checked = 0
    for base in interval_sets(lam):
        for labelled in _labellings(base, n_vars):
            if not labelled.has_repeat:
                continue
            checked += 1
            partner = involution_partner(labelled)
            tag = f"{list(base.pairs)} labels={list(labelled.labels)}"
            if partner is None or partner == labelled:
                violations.append(f"fixed point: {tag}")
                continue
            if involution_partner(partner) != labelled:
                violations.append(f"not an involution: {tag}")
            if (partner.base.crossings - base.crossings) % 2 == 0:
                violations.append(f"crossing parity preserved: {tag}")
            if partner.monomial() != labelled.monomial():
                violations.append(f"monomial changed: {tag}")

    logger.info(f"Involution check: {lam} N={n_vars} checked={checked} violations={len(violations)}")
    return InvolutionReport(
        partition=list(lam),
        n_vars=n_vars,
        checked=checked,
        violations=violations,
        passed=not violations,
    )
