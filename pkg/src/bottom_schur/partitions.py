"""
정수 분할(partition) 모듈

분할 산술, 생성, 그리고 차원 공식에 필요한 계수 함수들.

규약:
- 분할은 뒤쪽 0 없이 저장합니다. 파싱 시 뒤쪽 0은 제거됩니다. (예: 2210 → 2,2,1)
- 열거 순서는 내림차순 사전식(descending lexicographic)으로 고정합니다.
"""

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, List, NamedTuple, Optional, Tuple

from .errors import InvalidPartitionError


class Cell(NamedTuple):
    """1부터 시작하는 (행, 열) 칸"""

    row: int
    col: int


class Partition(tuple):
    """
    약하게 감소하는 양의 정수열

    tuple 을 상속하므로 해시 가능하고, 같은 n 사이의 비교는 사전식 순서입니다.
    빈 tuple 은 0의 유일한 분할입니다.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p < 1 for p in values):
            raise InvalidPartitionError(detail=f"non-positive part in {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise InvalidPartitionError(detail=f"parts not weakly decreasing: {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def n(self) -> int:
        """분할되는 정수 |λ|"""
        return sum(self)

    @property
    def length(self) -> int:
        """ℓ(λ)"""
        return len(self)

    def part(self, i: int) -> int:
        """1-based λ_i (범위 밖이면 0)"""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicities(self) -> Counter:
        """m_i(λ) = #{j : λ_j = i}"""
        return Counter(self)

    def cells(self) -> List[Cell]:
        """다이어그램 {(i,j) : 1 ≤ j ≤ λ_i} (행 우선)"""
        return [Cell(i, j) for i, row in enumerate(self, start=1) for j in range(1, row + 1)]

    def contains(self, cell: Cell) -> bool:
        return cell[0] >= 1 and cell[1] >= 1 and cell[1] <= self.part(cell[0])

    def hook_length(self, cell: Cell) -> int:
        i, j = cell
        return self.part(i) - j + conjugate(self).part(j) - i + 1


def parse_partition(text: str) -> Partition:
    """
    분할 문자열 파싱

    Args:
        text: 쉼표 구분 ("5,4,4,2,1") 또는 모든 부분이 9 이하일 때의
              숫자열 축약형 ("54421"). 빈 문자열과 "0" 은 빈 분할.

    Returns:
        Partition

    Raises:
        InvalidPartitionError: 형식 또는 불변식 위반
    """
    raw = text.strip().strip("()[]")
    if raw in ("", "0", "∅"):
        return Partition()
    try:
        if "," in raw:
            parts = [int(tok) for tok in raw.split(",") if tok.strip() != ""]
        elif raw.isdigit():
            parts = [int(ch) for ch in raw]
        else:
            raise ValueError(raw)
    except ValueError:
        raise InvalidPartitionError(detail=f"cannot parse {text!r}")
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """쉼표 구분 표기 (빈 분할은 '∅')"""
    parts = list(lam)
    return ",".join(str(p) for p in parts) if parts else "∅"


@lru_cache(maxsize=None)
def _partitions(n: int, bound: int, max_len: Optional[int]) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    next_len = None if max_len is None else max_len - 1
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first, next_len):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_len: Optional[int] = None) -> List[Partition]:
    """
    n 의 모든 분할 (내림차순 사전식)

    Args:
        n: 음이 아닌 정수
        max_len: 주어지면 길이 ≤ max_len 인 분할만

    Returns:
        Partition 목록
    """
    if n < 0:
        raise InvalidPartitionError(detail=f"n={n} must be non-negative")
    return [Partition(p) for p in _partitions(n, n, max_len)]


def partition_count(n: int) -> int:
    """p(n)"""
    return p_le_k(n, n) if n > 0 else 1


def rank(lam: Iterable[int]) -> int:
    """Durfee 랭크: λ_i ≥ i 인 최대 i"""
    r = 0
    for i, part in enumerate(lam, start=1):
        if part >= i:
            r = i
        else:
            break
    return r


def z_of(lam: Iterable[int]) -> int:
    """z_λ = Π_i i^{m_i(λ)} m_i(λ)!"""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part**mult * factorial(mult)
    return z


@lru_cache(maxsize=None)
def p_le_k(n: int, k: int) -> int:
    """길이 ≤ k 인 n 의 분할 수 (p_{≤k}(0) = 1)"""
    if n == 0:
        return 1
    if n < 0 or k <= 0:
        return 0
    # 길이 ≤ k 분할 = 부분 크기 ≤ k 분할 (켤레)
    return p_le_k(n, k - 1) + p_le_k(n - k, k)


def conjugate(lam: Iterable[int]) -> Partition:
    """λ′_j = #{i : λ_i ≥ j}"""
    parts = list(lam)
    if not parts:
        return Partition()
    return Partition(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def is_subpartition(inner: Iterable[int], outer: Iterable[int]) -> bool:
    """inner ⊆ outer (다이어그램 포함)"""
    a, b = list(inner), list(outer)
    if len(a) > len(b):
        return False
    return all(x <= y for x, y in zip(a, b))
