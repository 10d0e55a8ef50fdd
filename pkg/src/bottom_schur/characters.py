"""
Border strip 및 대칭군 지표 모듈

- border strip 제거 (베타 집합 / abacus 방식)
- border-strip tableau 열거
- Murnaghan–Nakayama 지표 χ^λ(ν)
- s_λ 의 멱합 전개와 bottom 추출 (mn 경로)
- 탐욕 border-strip tableau 높이 z(λ)
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError, SizeMismatchError, VerificationFailedError
from .models import CharacterEntryModel, CharacterTableModel
from .partitions import Cell, Partition, is_subpartition, partitions_of, rank, z_of
from .storage import KeyedMemo
from .symfunc import Basis, SymFn, rescale_p_tilde

logger = logging.getLogger(__name__)


# ============================================================================
# Border strip
# ============================================================================


@dataclass(frozen=True)
class BorderStrip:
    """연결되어 있고 2×2 블록이 없는 skew 모양"""

    cells: FrozenSet[Cell]
    height: int

    @property
    def size(self) -> int:
        return len(self.cells)

    @classmethod
    def from_shapes(cls, outer: Iterable[int], inner: Iterable[int]) -> "BorderStrip":
        """
        outer/inner 로부터 border strip 생성

        Raises:
            PreconditionError: inner ⊄ outer, 비어 있음, 비연결, 2×2 블록 포함
        """
        outer, inner = Partition(outer), Partition(inner)
        if not is_subpartition(inner, outer):
            raise PreconditionError(detail=f"{inner} is not contained in {outer}")
        cells = frozenset(c for c in outer.cells() if not inner.contains(c))
        if not cells:
            raise PreconditionError(detail="empty skew shape is not a border strip")

        for i, j in cells:
            if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
                raise PreconditionError(detail=f"2x2 block at ({i},{j})")

        # 변으로 연결되어 있는지 확인
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(Cell(*nb))
                    stack.append(nb)
        if len(seen) != len(cells):
            raise PreconditionError(detail=f"{outer}/{inner} is not connected")

        return cls(cells=cells, height=len({c.row for c in cells}) - 1)


@dataclass(frozen=True)
class BorderStripTableau:
    """∅ = λ⁰ ⊆ λ¹ ⊆ ⋯ 사슬. 연속 차이는 비어 있거나 크기 α_i 의 border strip"""

    shape: Partition
    chain: Tuple[Partition, ...]
    type_: Tuple[int, ...]
    strips: Tuple[Optional[BorderStrip], ...]

    @property
    def height(self) -> int:
        return sum(s.height for s in self.strips if s is not None)


def _beta_set(lam: Partition) -> List[int]:
    length = len(lam)
    return [part + length - i for i, part in enumerate(lam, start=1)]


def _from_beta(beta: Sequence[int]) -> Partition:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return Partition(b - (length - i) for i, b in enumerate(ordered, start=1))


@lru_cache(maxsize=None)
def _removals(lam: Partition, size: int) -> Tuple[Tuple[Partition, int], ...]:
    beta = _beta_set(lam)
    present = set(beta)
    out = []
    for b in beta:
        target = b - size
        if target < 0 or target in present:
            continue
        height = sum(1 for c in beta if target < c < b)
        out.append((_from_beta([target if c == b else c for c in beta]), height))
    out.sort(key=lambda item: item[0], reverse=True)
    return tuple(out)


def removable_border_strips(lam: Iterable[int], size: int) -> List[Tuple[Partition, int]]:
    """
    λ 에서 제거할 수 있는 크기 size 의 border strip 전부

    베타 집합 β_i = λ_i + ℓ − i 에서 β 하나를 size 만큼 줄이는 것이
    border strip 제거와 일대일 대응하고, 높이는 건너뛴 β 의 개수입니다.

    Returns:
        (남는 분할, 높이) 목록 (남는 분할 내림차순)
    """
    if size < 1:
        raise PreconditionError(detail=f"strip size {size} must be positive")
    return list(_removals(Partition(lam), size))


def border_strip_tableaux(lam: Iterable[int], type_: Sequence[int]) -> List[BorderStripTableau]:
    """
    모양 λ, 유형 α (약 조성, 0 허용) 의 border-strip tableau 전부

    위에서부터 α 의 마지막 성분부터 strip 을 떼어내는 깊이 우선 탐색.

    Raises:
        SizeMismatchError: |λ| ≠ Σα
    """
    lam = Partition(lam)
    alpha = tuple(int(a) for a in type_)
    if any(a < 0 for a in alpha):
        raise PreconditionError(detail=f"negative entry in type {alpha}")
    if sum(alpha) != lam.n:
        raise SizeMismatchError(lam.n, sum(alpha))

    results: List[BorderStripTableau] = []

    def descend(shape: Partition, depth: int, chain: List[Partition]) -> None:
        if depth == 0:
            if not shape:
                full = tuple(reversed(chain))
                strips = tuple(
                    BorderStrip.from_shapes(full[i + 1], full[i]) if alpha[i] else None
                    for i in range(len(alpha))
                )
                results.append(BorderStripTableau(lam, full, alpha, strips))
            return
        size = alpha[depth - 1]
        if size == 0:
            descend(shape, depth - 1, chain + [shape])
            return
        for smaller, _ in _removals(shape, size):
            descend(smaller, depth - 1, chain + [smaller])

    descend(lam, len(alpha), [lam])
    return results


# ============================================================================
# 지표 χ^λ(ν)
# ============================================================================

chi_memo: KeyedMemo[Tuple[Partition, Partition], int] = KeyedMemo("chi")

ChiLookup = Callable[[Partition, Partition], int]


def _murnaghan_nakayama(lam: Partition, nu: Partition, recurse: ChiLookup) -> int:
    # ν 의 가장 큰 부분부터 제거
    if not nu:
        return 1 if not lam else 0
    head, rest = nu[0], Partition(nu[1:])
    return sum(
        (-1) ** height * recurse(smaller, rest) for smaller, height in _removals(lam, head)
    )


def chi(lam: Iterable[int], nu: Iterable[int]) -> int:
    """
    χ^λ(ν) (Murnaghan–Nakayama, 메모이즈)

    Raises:
        SizeMismatchError: |λ| ≠ |ν|
    """
    lam, nu = Partition(lam), Partition(nu)
    if lam.n != nu.n:
        raise SizeMismatchError(lam.n, nu.n)
    return chi_memo.get_or_compute(
        (lam, nu), lambda: _murnaghan_nakayama(lam, nu, chi)
    )


def _chi_fresh(lam: Partition, nu: Partition, table: Dict[Tuple[Partition, Partition], int]) -> int:
    key = (lam, nu)
    if key not in table:
        table[key] = _murnaghan_nakayama(lam, nu, lambda a, b: _chi_fresh(a, b, table))
    return table[key]


def chi_by_enumeration(lam: Iterable[int], nu: Iterable[int]) -> int:
    """χ^λ(ν) = Σ_T (−1)^{ht(T)} (border-strip tableau 직접 열거)"""
    lam, nu = Partition(lam), Partition(nu)
    if lam.n != nu.n:
        raise SizeMismatchError(lam.n, nu.n)
    return sum((-1) ** t.height for t in border_strip_tableaux(lam, tuple(nu)))


def character_table(n: int, use_memo: bool = True) -> CharacterTableModel:
    """
    n 차 지표표 (λ, ν 모두 내림차순 사전식)

    Args:
        n: 차수
        use_memo: False 면 전역 메모를 거치지 않고 새로 계산 (캐시 검증용)
    """
    started = time.perf_counter()
    index = partitions_of(n)
    table: Dict[Tuple[Partition, Partition], int] = {}
    lookup: ChiLookup = chi if use_memo else (lambda a, b: _chi_fresh(a, b, table))
    entries = [
        CharacterEntryModel(lambda_=list(lam), nu=list(nu), chi=lookup(lam, nu))
        for lam in index
        for nu in index
    ]
    elapsed = (time.perf_counter() - started) * 1000
    logger.info(f"Character table built: n={n} ({len(entries)} entries, {elapsed:.0f}ms)")
    return CharacterTableModel(n=n, entries=entries)


def prime_character_table(table: CharacterTableModel) -> int:
    """캐시 파일에서 읽은 지표값을 χ 메모에 주입하고 주입 개수를 반환"""
    for entry in table.entries:
        chi_memo.prime((Partition(entry.lambda_), Partition(entry.nu)), entry.chi)
    logger.debug(f"Primed chi memo from cache: n={table.n} ({len(table.entries)} values)")
    return len(table.entries)


# ============================================================================
# 멱합 전개와 bottom (mn 경로)
# ============================================================================


def schur_in_p(lam: Iterable[int]) -> SymFn:
    """s_λ = Σ_ν χ^λ(ν) p_ν / z_ν"""
    lam = Partition(lam)
    return SymFn(
        Basis.POWER_SUM,
        {nu: Fraction(chi(lam, nu), z_of(nu)) for nu in partitions_of(lam.n)},
    )


def greedy_z(lam: Iterable[int]) -> int:
    """
    탐욕 border-strip tableau 의 높이 z(λ)

    매 단계 가장 큰 strip (주 hook 크기 λ₁ + ℓ − 1) 을 제거합니다.

    Raises:
        VerificationFailedError: 최대 크기 strip 제거가 유일하지 않을 때
    """
    shape = Partition(lam)
    total = 0
    while shape:
        size = shape[0] + len(shape) - 1
        removals = _removals(shape, size)
        if len(removals) != 1:
            raise VerificationFailedError(
                detail=f"greedy strip of size {size} in {shape} is not unique ({len(removals)})"
            )
        shape, height = removals[0]
        total += height
    return total


def bottom_via_expansion(lam: Iterable[int], j: int = 1) -> SymFn:
    """
    ŝ^j_λ: s_λ 의 멱합 전개에서 ℓ(ν) ≤ rank(λ)+j−1 인 항만 남겨 p̃ 기저로

    허용 길이의 ν 에 대해서만 χ 를 계산합니다.
    """
    if j < 1:
        raise PreconditionError(detail=f"j={j} must be at least 1")
    lam = Partition(lam)
    max_len = rank(lam) + j - 1
    kept = SymFn(
        Basis.POWER_SUM,
        {
            nu: Fraction(chi(lam, nu), z_of(nu))
            for nu in partitions_of(lam.n, max_len=max_len)
        },
    )
    return rescale_p_tilde(kept)
