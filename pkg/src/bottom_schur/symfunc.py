"""
희소 정확-유리수 대칭함수 모듈

p, p̃, m, m̃, h 기저의 대칭함수와 기저 변환.

- p̃_i = p_i / i
- m̃_μ = m_1(μ)! m_2(μ)! ⋯ · m_μ
- p_λ = Σ_μ R_{λμ} m_μ (R 은 부분 병합 계수, 대각선은 Π m_i(λ)!)

혼합 차수 값은 허용하지만, 모든 기저 변환은 차수 성분별로 독립적으로 처리합니다.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from .errors import BasisMismatchError, PreconditionError, UnfaithfulEvaluationError
from .linalg import QMatrix
from .models import SymFnModel, TermModel
from .partitions import Partition, partitions_of, z_of
from .storage import KeyedMemo

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Basis(str, Enum):
    """기저 라벨"""

    POWER_SUM = "p"
    SCALED_POWER_SUM = "ptilde"
    MONOMIAL = "m"
    AUGMENTED_MONOMIAL = "mtilde"
    HOMOGENEOUS = "h"


# 텍스트 출력용 기호
BASIS_SYMBOLS = {
    Basis.POWER_SUM: "p",
    Basis.SCALED_POWER_SUM: "p~",
    Basis.MONOMIAL: "m",
    Basis.AUGMENTED_MONOMIAL: "m~",
    Basis.HOMOGENEOUS: "h",
}

MULTIPLICATIVE_BASES = (Basis.POWER_SUM, Basis.SCALED_POWER_SUM, Basis.HOMOGENEOUS)


class MonomialVector(NamedTuple):
    """N 변수 단항식 x₁^{a₁}⋯x_N^{a_N} 의 지수 벡터"""

    exponents: Tuple[int, ...]

    @property
    def n_vars(self) -> int:
        return len(self.exponents)

    @property
    def shape(self) -> Partition:
        """지수 중복집합을 분할로 본 것"""
        return Partition(sorted((e for e in self.exponents if e), reverse=True))


Polynomial = Dict[MonomialVector, Fraction]


class SymFn:
    """
    기저 라벨이 붙은 희소 대칭함수

    terms 는 분할 → 0이 아닌 Fraction. 0 계수는 저장하지 않습니다.
    값은 생성 후 변경하지 않습니다.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Union[Basis, str], terms: Optional[Mapping[Iterable[int], Scalar]] = None):
        self.basis = Basis(basis)
        clean: Dict[Partition, Fraction] = {}
        for index, coeff in (terms or {}).items():
            key = Partition(index)
            clean[key] = clean.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: v for k, v in clean.items() if v != 0}

    # ------------------------------------------------------------------
    # 생성자
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, basis: Union[Basis, str]) -> "SymFn":
        return cls(basis)

    @classmethod
    def monomial(cls, basis: Union[Basis, str], index: Iterable[int], coeff: Scalar = 1) -> "SymFn":
        return cls(basis, {Partition(index): coeff})

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Partition, Fraction]]:
        """내림차순 사전식 (차수 큰 것 먼저)"""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].n, kv[0]), reverse=True)

    def __getitem__(self, index: Iterable[int]) -> Fraction:
        return self._terms.get(Partition(index), Fraction(0))

    def __iter__(self) -> Iterator[Partition]:
        return iter(k for k, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def degrees(self) -> List[int]:
        return sorted({idx.n for idx in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def components(self) -> Dict[int, "SymFn"]:
        """차수별 성분"""
        out: Dict[int, Dict[Partition, Fraction]] = {}
        for idx, c in self._terms.items():
            out.setdefault(idx.n, {})[idx] = c
        return {d: SymFn(self.basis, t) for d, t in out.items()}

    def max_length(self) -> int:
        return max((len(idx) for idx in self._terms), default=0)

    def vector(self, index: Sequence[Partition]) -> List[Fraction]:
        """주어진 분할 좌표계에서의 계수 벡터"""
        return [self._terms.get(Partition(p), Fraction(0)) for p in index]

    # ------------------------------------------------------------------
    # 환 연산
    # ------------------------------------------------------------------

    def __add__(self, other: "SymFn") -> "SymFn":
        return add(self, other)

    def __sub__(self, other: "SymFn") -> "SymFn":
        return add(self, scale(other, -1))

    def __neg__(self) -> "SymFn":
        return scale(self, -1)

    def __mul__(self, other: Union["SymFn", Scalar]) -> "SymFn":
        if isinstance(other, SymFn):
            return multiply_p(self, other)
        return scale(self, other)

    def __rmul__(self, other: Scalar) -> "SymFn":
        return scale(self, other)

    def relabel(self, basis: Union[Basis, str]) -> "SymFn":
        """같은 계수를 다른 기저로 재해석 (Σ c_μ p̃_μ → Σ c_μ p_μ 등)"""
        return SymFn(basis, self._terms)

    # ------------------------------------------------------------------
    # 직렬화
    # ------------------------------------------------------------------

    def to_model(self) -> SymFnModel:
        return SymFnModel(
            basis=self.basis.value,
            terms=[
                TermModel(index=list(idx), num=c.numerator, den=c.denominator)
                for idx, c in self.items()
            ],
        )

    @classmethod
    def from_model(cls, model: SymFnModel) -> "SymFn":
        return cls(model.basis, {tuple(t.index): Fraction(t.num, t.den) for t in model.terms})

    def to_json(self) -> str:
        return self.to_model().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "SymFn":
        return cls.from_model(SymFnModel.model_validate_json(text))

    def render(self) -> str:
        """
        텍스트 표기

        예: "p~[5,1] - p~[3,3]", "1/2 p[2] + 1/2 p[1,1]". 영함수는 "0".
        """
        if not self._terms:
            return "0"
        symbol = BASIS_SYMBOLS[self.basis]
        chunks: List[str] = []
        for idx, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            label = f"{symbol}[{','.join(str(p) for p in idx)}]"
            body = label if mag == 1 else f"{mag} {label}"
            if not idx:
                body = str(mag)
            if not chunks:
                chunks.append(f"-{body}" if sign == "-" else body)
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"SymFn({self.basis.value}: {self.render()})"


# ============================================================================
# 환 연산
# ============================================================================


def add(f: SymFn, g: SymFn) -> SymFn:
    """
    합

    Raises:
        BasisMismatchError: 기저가 다를 때 (한쪽이 0 이면 허용)
    """
    if not g:
        return f
    if not f:
        return g
    if f.basis != g.basis:
        raise BasisMismatchError(f.basis.value, g.basis.value)
    terms = dict(f._terms)
    for idx, c in g._terms.items():
        terms[idx] = terms.get(idx, Fraction(0)) + c
    return SymFn(f.basis, terms)


def scale(f: SymFn, c: Scalar) -> SymFn:
    c = Fraction(c)
    return SymFn(f.basis, {idx: v * c for idx, v in f._terms.items()})


def multiply_p(f: SymFn, g: SymFn) -> SymFn:
    """
    곱셈 (p, p̃, h 기저에서 인덱스 중복집합의 합집합)

    Raises:
        BasisMismatchError: 곱셈적 기저가 아니거나 기저가 다를 때
    """
    if f.basis not in MULTIPLICATIVE_BASES:
        raise BasisMismatchError(f.basis.value)
    if f.basis != g.basis:
        raise BasisMismatchError(f.basis.value, g.basis.value)
    terms: Dict[Partition, Fraction] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            key = Partition(sorted(a + b, reverse=True))
            terms[key] = terms.get(key, Fraction(0)) + ca * cb
    return SymFn(f.basis, terms)


# ============================================================================
# 기저 변환
# ============================================================================


def h_in_p(n: int) -> SymFn:
    """h_n = Σ_{λ⊢n} p_λ / z_λ"""
    if n < 1:
        raise PreconditionError(detail=f"h_{n} needs a positive degree")
    return SymFn(Basis.POWER_SUM, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


def h_to_p(f: SymFn) -> SymFn:
    """h 기저 → p 기저 (h_λ = Π h_{λ_i})"""
    if f.basis != Basis.HOMOGENEOUS:
        raise BasisMismatchError(f.basis.value, Basis.HOMOGENEOUS.value)
    out = SymFn.zero(Basis.POWER_SUM)
    for idx, c in f._terms.items():
        product = SymFn.monomial(Basis.POWER_SUM, ())
        for part in idx:
            product = multiply_p(product, h_in_p(part))
        out = add(out, scale(product, c))
    return out


def rescale_p_tilde(f: SymFn) -> SymFn:
    """p 기저 → p̃ 기저: p̃_ν 계수 = p_ν 계수 × Π ν_i"""
    if f.basis != Basis.POWER_SUM:
        raise BasisMismatchError(f.basis.value, Basis.POWER_SUM.value)
    return SymFn(Basis.SCALED_POWER_SUM, {idx: c * prod(idx) for idx, c in f._terms.items()})


def unscale_p_tilde(f: SymFn) -> SymFn:
    """p̃ 기저 → p 기저 (rescale_p_tilde 의 역)"""
    if f.basis != Basis.SCALED_POWER_SUM:
        raise BasisMismatchError(f.basis.value, Basis.SCALED_POWER_SUM.value)
    return SymFn(Basis.POWER_SUM, {idx: c / prod(idx) for idx, c in f._terms.items()})


def degree_filter(f: SymFn, max_len: int) -> SymFn:
    """ℓ(ν) ≤ max_len 인 항만 남김 (p, p̃ 기저)"""
    if f.basis not in (Basis.POWER_SUM, Basis.SCALED_POWER_SUM):
        raise BasisMismatchError(f.basis.value)
    return SymFn(f.basis, {idx: c for idx, c in f._terms.items() if len(idx) <= max_len})


def _repeat_factor(index: Iterable[int]) -> int:
    return prod(factorial(m) for m in Partition(index).multiplicities().values())


def augment_m(f: SymFn) -> SymFn:
    """m 기저 → m̃ 기저: m̃_μ 계수 = m_μ 계수 / Π m_i(μ)!"""
    if f.basis != Basis.MONOMIAL:
        raise BasisMismatchError(f.basis.value, Basis.MONOMIAL.value)
    return SymFn(
        Basis.AUGMENTED_MONOMIAL,
        {idx: c / _repeat_factor(idx) for idx, c in f._terms.items()},
    )


def reduce_m(f: SymFn) -> SymFn:
    """m̃ 기저 → m 기저 (augment_m 의 역)"""
    if f.basis != Basis.AUGMENTED_MONOMIAL:
        raise BasisMismatchError(f.basis.value, Basis.AUGMENTED_MONOMIAL.value)
    return SymFn(Basis.MONOMIAL, {idx: c * _repeat_factor(idx) for idx, c in f._terms.items()})


@lru_cache(maxsize=None)
def _merge_count(parts: Tuple[int, ...], capacities: Tuple[int, ...]) -> int:
    """
    parts 를 capacities 칸에 배정해 각 칸을 정확히 채우는 함수의 개수

    칸은 서로 구별되지만 개수는 용량의 중복집합에만 의존하므로 정렬해 메모합니다.
    """
    if not parts:
        return 1 if not capacities else 0
    head, rest = parts[0], parts[1:]
    total = 0
    for i, cap in enumerate(capacities):
        if cap >= head:
            remaining = list(capacities)
            remaining[i] -= head
            total += _merge_count(rest, tuple(sorted((c for c in remaining if c), reverse=True)))
    return total


def transition_entry(lam: Iterable[int], mu: Iterable[int]) -> int:
    """R_{λμ}: p_λ 의 m_μ 계수"""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n or len(mu) > len(lam):
        return 0
    return _merge_count(tuple(lam), tuple(mu))


_transition_memo: KeyedMemo[int, QMatrix] = KeyedMemo("transition_R")


def _p_row_to_m(lam: Partition) -> Dict[Partition, int]:
    return {
        mu: count
        for mu in partitions_of(lam.n, max_len=len(lam))
        if (count := transition_entry(lam, mu))
    }


def p_to_m(f: SymFn) -> SymFn:
    """
    p 기저 → m 기저 (부분 병합 계수 직접 계산)

    혼합 차수는 성분별로 독립 처리합니다. p̃ 입력은 먼저 p 로 되돌립니다.
    """
    if f.basis == Basis.SCALED_POWER_SUM:
        f = unscale_p_tilde(f)
    if f.basis != Basis.POWER_SUM:
        raise BasisMismatchError(f.basis.value, Basis.POWER_SUM.value)
    terms: Dict[Partition, Fraction] = {}
    for lam, c in f._terms.items():
        for mu, count in _p_row_to_m(lam).items():
            terms[mu] = terms.get(mu, Fraction(0)) + c * count
    return SymFn(Basis.MONOMIAL, terms)


def to_monomial(f: SymFn) -> SymFn:
    """p, p̃, h, m, m̃ 어느 기저든 m 기저로"""
    if f.basis == Basis.MONOMIAL:
        return f
    if f.basis == Basis.AUGMENTED_MONOMIAL:
        return reduce_m(f)
    if f.basis == Basis.HOMOGENEOUS:
        return p_to_m(h_to_p(f))
    return p_to_m(f)


def transition_R(n: int) -> QMatrix:  # noqa: N802
    """
    전이 행렬 R (행/열 = partitions_of(n) 순서)

    대각선 R_{λλ} = Π m_i(λ)! 를 확인합니다.
    """

    def build() -> QMatrix:
        index = partitions_of(n)
        rows = [[transition_entry(lam, mu) for mu in index] for lam in index]
        matrix = QMatrix(rows, n_cols=len(index), row_index=index, col_index=index)
        for i, lam in enumerate(index):
            assert matrix[i, i] == _repeat_factor(lam), f"R diagonal mismatch at {lam}"
        logger.info(f"Transition matrix R built: n={n} ({len(index)}x{len(index)})")
        return matrix

    return _transition_memo.get_or_compute(n, build)


def diagonal_D(n: int) -> QMatrix:  # noqa: N802
    """D_{λλ} = Π m_i(λ)!"""
    index = partitions_of(n)
    size = len(index)
    rows = [[_repeat_factor(lam) if i == j else 0 for j in range(size)] for i, lam in enumerate(index)]
    return QMatrix(rows, n_cols=size, row_index=index, col_index=index)


# ============================================================================
# 유한 변수 평가
# ============================================================================


def _poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = MonomialVector(tuple(x + y for x, y in zip(ea.exponents, eb.exponents)))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def _unit(n_vars: int) -> Polynomial:
    return {MonomialVector((0,) * n_vars): Fraction(1)}


def _power_sum_poly(k: int, n_vars: int) -> Polynomial:
    return {
        MonomialVector(tuple(k if j == i else 0 for j in range(n_vars))): Fraction(1)
        for i in range(n_vars)
    }


def _complete_poly(k: int, n_vars: int) -> Polynomial:
    out: Polynomial = {}
    for combo in combinations_with_replacement(range(n_vars), k):
        exps = [0] * n_vars
        for v in combo:
            exps[v] += 1
        out[MonomialVector(tuple(exps))] = Fraction(1)
    return out


def _monomial_poly(mu: Partition, n_vars: int) -> Polynomial:
    padded = list(mu) + [0] * (n_vars - len(mu))
    return {MonomialVector(tuple(perm)): Fraction(1) for perm in multiset_permutations(padded)}


def evaluate_finite(f: SymFn, n_vars: int) -> Polynomial:
    """
    x₁..x_N 다항식으로 평가

    Args:
        f: 대칭함수
        n_vars: 변수 개수 N (차수 이상이어야 충실함)

    Returns:
        MonomialVector → 계수

    Raises:
        UnfaithfulEvaluationError: N < 차수
    """
    degree = max(f.degrees(), default=0)
    if n_vars < degree:
        raise UnfaithfulEvaluationError(n_vars, degree)

    if f.basis == Basis.SCALED_POWER_SUM:
        f = unscale_p_tilde(f)
    elif f.basis == Basis.AUGMENTED_MONOMIAL:
        f = reduce_m(f)

    out: Polynomial = {}
    for idx, c in f._terms.items():
        if f.basis == Basis.MONOMIAL:
            poly = _monomial_poly(idx, n_vars)
        else:
            factor = _power_sum_poly if f.basis == Basis.POWER_SUM else _complete_poly
            poly = _unit(n_vars)
            for part in idx:
                poly = _poly_mul(poly, factor(part, n_vars))
        for mono, v in poly.items():
            out[mono] = out.get(mono, Fraction(0)) + c * v
    return {k: v for k, v in out.items() if v != 0}
