"""
데이터 모델 정의

CLI --json 출력, HTTP 응답, 캐시 파일이 공유하는 직렬화 스키마.
모든 모델은 model_validate_json 으로 왕복(round-trip) 가능합니다.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

BasisName = Literal["p", "ptilde", "m", "mtilde", "h"]


# ============================================================================
# 대칭함수 / 지표표
# ============================================================================


class TermModel(BaseModel):
    """희소 대칭함수의 한 항"""

    index: List[int] = Field(..., description="인덱스 분할")
    num: int = Field(..., description="분자")
    den: int = Field(default=1, description="분모 (양수)", gt=0)


class SymFnModel(BaseModel):
    """
    대칭함수 JSON 스키마

    {"basis": "ptilde", "terms": [{"index": [5,1], "num": 1, "den": 1}, ...]}
    terms 는 내림차순 사전식 순서입니다.
    """

    basis: BasisName
    terms: List[TermModel] = Field(default_factory=list)


class CharacterEntryModel(BaseModel):
    """지표값 χ^λ(ν) 한 개"""

    model_config = ConfigDict(populate_by_name=True)

    lambda_: List[int] = Field(..., alias="lambda")
    nu: List[int]
    chi: int


class CharacterTableModel(BaseModel):
    """n 차 대칭군 지표표 (캐시 파일 형식)"""

    n: int = Field(..., ge=0)
    entries: List[CharacterEntryModel] = Field(default_factory=list)


# ============================================================================
# 뱀 수열 / 구간 집합
# ============================================================================


class SnakeEdgeModel(BaseModel):
    """하단 외곽선의 한 변"""

    position: int = Field(..., description="1-based 위치")
    orientation: Literal["horizontal", "vertical"]
    row: int
    col: int
    letter: Literal["L", "R", "O"]
    cells: List[List[int]] = Field(default_factory=list, description="변에 붙은 뱀 칸")


class SnakeReport(BaseModel):
    partition: List[int]
    word: str
    edges: List[SnakeEdgeModel] = Field(default_factory=list)


class IntervalSetModel(BaseModel):
    pairs: List[List[int]] = Field(..., description="1-based (u, v) 쌍")
    crossings: int = Field(..., ge=0)


class IntervalsReport(BaseModel):
    partition: List[int]
    word: str
    z: int = Field(..., description="탐욕 border-strip tableau 높이")
    interval_sets: List[IntervalSetModel] = Field(default_factory=list)


# ============================================================================
# 전개 / bottom / JT* / LR
# ============================================================================


class ExpandReport(BaseModel):
    partition: List[int]
    basis: BasisName
    expansion: SymFnModel
    rendered: str


class BottomReport(BaseModel):
    partition: List[int]
    j: int = Field(default=1, ge=1)
    routes: Dict[str, SymFnModel] = Field(default_factory=dict)
    rendered: Dict[str, str] = Field(default_factory=dict)
    agree: Optional[bool] = Field(default=None, description="route=all 일 때 세 경로 일치 여부")


class JTStarReport(BaseModel):
    partition: List[int]
    rank: int
    matrix: List[List[int]] = Field(..., description="전체 JT 첨자 격자")
    star: List[List[int]] = Field(..., description="JT* 첨자 격자")
    removed_rows: List[int]
    removed_cols: List[int]
    outer: List[int]
    inner: List[int]
    bessenrodt_outer: List[int]
    bessenrodt_inner: List[int]
    square_certificate: bool
    laplace_sign: int
    determinant: SymFnModel


class LRReport(BaseModel):
    outer: List[int]
    inner: List[int]
    nu: List[int]
    lattice: Optional[int] = None
    jdt: Optional[int] = None
    agree: Optional[bool] = None


# ============================================================================
# 분석 보고서
# ============================================================================


class DimensionReport(BaseModel):
    """βₙ 를 네 가지 독립 계수로 계산한 보고서"""

    n: int = Field(..., ge=1)
    k_breakdown: Dict[int, int] = Field(default_factory=dict, description="랭크 k 별 생성 공간 차원")
    beta: Optional[int] = Field(default=None, description="ŝ_λ 계수 행렬의 정확한 랭크")
    length_rank_count: int = Field(..., description="#{ν⊢n : ℓ(ν)=rank(ν)}")
    formula_value: int = Field(..., description="Σ_k p_{≤k}(n−k²)")
    distinct2_count: int = Field(..., description="부분 차이가 2 이상인 분할 수")
    mod5_count: int = Field(..., description="부분이 1,4 mod 5 인 분할 수")
    consistent: bool


class JBottomReport(BaseModel):
    n: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    dimension: int
    count: int = Field(..., description="#{λ⊢n : ℓ(λ) ≤ rank(λ)+j−1}")
    equal: bool


class GammaReport(BaseModel):
    n: int = Field(..., ge=1)
    gamma: int
    beta: int
    kernel: List[SymFnModel] = Field(default_factory=list)
    bottoms_in_gamma: bool
    beta_le_gamma: bool


class IdentityReport(BaseModel):
    partition: List[int]
    power_side: SymFnModel = Field(..., description="Σ c_μ p_μ 의 m 전개")
    monomial_side: SymFnModel = Field(..., description="Σ c_μ m̃_μ 의 m 전개")
    holds: bool


class InvolutionReport(BaseModel):
    partition: List[int]
    n_vars: int
    checked: int = Field(..., description="검사한 반복 라벨 구간 집합 수")
    violations: List[str] = Field(default_factory=list)
    passed: bool


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: Optional[str] = None


class VerifyReport(BaseModel):
    max_n: int
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool


class DimsResponse(BaseModel):
    j: int = Field(default=1, ge=1)
    rows: List[DimensionReport] = Field(default_factory=list)
    jbottom_rows: List[JBottomReport] = Field(default_factory=list)


class GammaResponse(BaseModel):
    rows: List[GammaReport] = Field(default_factory=list)
