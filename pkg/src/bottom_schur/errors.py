"""
에러 처리 표준화 모듈

입력 거부(rejected input)와 수학적 자기검증 실패를 구분하는 에러 코드 및 메시지 정의
"""

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    """표준 에러 코드"""

    # 시스템 에러
    E_INTERNAL_ERROR = "E_INTERNAL_ERROR"
    E_USAGE = "E_USAGE"

    # 입력 에러
    E_INVALID_PARTITION = "E_INVALID_PARTITION"
    E_BASIS_MISMATCH = "E_BASIS_MISMATCH"
    E_SIZE_MISMATCH = "E_SIZE_MISMATCH"
    E_CONTAINMENT = "E_CONTAINMENT"
    E_UNFAITHFUL_EVALUATION = "E_UNFAITHFUL_EVALUATION"
    E_DIMENSION_MISMATCH = "E_DIMENSION_MISMATCH"
    E_PRECONDITION = "E_PRECONDITION"
    E_OVERSIZE_REQUEST = "E_OVERSIZE_REQUEST"

    # 검증 에러
    E_VERIFICATION_FAILED = "E_VERIFICATION_FAILED"
    E_CACHE_MISMATCH = "E_CACHE_MISMATCH"


# 사용자 친화적 에러 메시지
ERROR_MESSAGES = {
    ErrorCode.E_INTERNAL_ERROR: "내부 오류가 발생했습니다.",
    ErrorCode.E_USAGE: "명령 사용법이 올바르지 않습니다. --help 를 확인해주세요.",
    ErrorCode.E_INVALID_PARTITION: "분할(partition) 형식이 올바르지 않습니다. 예: 5,4,4,2,1 또는 54421",
    ErrorCode.E_BASIS_MISMATCH: "대칭함수의 기저가 서로 맞지 않습니다.",
    ErrorCode.E_SIZE_MISMATCH: "두 분할의 크기가 같아야 합니다.",
    ErrorCode.E_CONTAINMENT: "안쪽 분할이 바깥 분할에 포함되지 않습니다.",
    ErrorCode.E_UNFAITHFUL_EVALUATION: "변수 개수가 차수보다 작아 유한 변수 평가가 충실하지 않습니다.",
    ErrorCode.E_DIMENSION_MISMATCH: "벡터 또는 행렬의 차원이 맞지 않습니다.",
    ErrorCode.E_PRECONDITION: "연산의 사전 조건을 만족하지 않는 입력입니다.",
    ErrorCode.E_OVERSIZE_REQUEST: "요청 규모가 너무 큽니다. --slow 옵션을 사용하거나 범위를 줄여주세요.",
    ErrorCode.E_VERIFICATION_FAILED: "수학적 검증이 실패했습니다.",
    ErrorCode.E_CACHE_MISMATCH: "캐시된 지표표가 재계산 결과와 다릅니다.",
}


class BottomSchurError(Exception):
    """bottom-schur 기본 예외 클래스"""

    def __init__(
        self,
        code: ErrorCode,
        message: Optional[str] = None,
        detail: Optional[str] = None,
    ):
        self.code = code
        self.message = message or ERROR_MESSAGES.get(code, "알 수 없는 오류가 발생했습니다.")
        self.detail = detail  # 내부 디버깅용 상세 정보
        super().__init__(self.message if detail is None else f"{self.message} ({detail})")

    def to_dict(self) -> dict:
        """API 응답용 딕셔너리 변환"""
        # detail은 응답에 노출하지 않음 (로그에만 기록)
        return {
            "error_code": self.code.value,
            "error_message": self.message,
        }


class InvalidPartitionError(BottomSchurError):
    """분할 형식 또는 불변식 위반"""

    def __init__(self, detail: Optional[str] = None):
        super().__init__(ErrorCode.E_INVALID_PARTITION, detail=detail)


class BasisMismatchError(BottomSchurError):
    """기저 라벨 불일치"""

    def __init__(self, left: str, right: Optional[str] = None):
        detail = f"basis {left} vs {right}" if right else f"basis {left} not allowed here"
        super().__init__(ErrorCode.E_BASIS_MISMATCH, detail=detail)


class SizeMismatchError(BottomSchurError):
    """|λ| ≠ |ν| 등 크기 불일치"""

    def __init__(self, left: int, right: int):
        super().__init__(ErrorCode.E_SIZE_MISMATCH, detail=f"sizes {left} and {right}")


class ContainmentError(BottomSchurError):
    """skew 모양 μ ⊆ λ 위반"""

    def __init__(self, outer, inner):
        super().__init__(ErrorCode.E_CONTAINMENT, detail=f"{inner} is not contained in {outer}")


class UnfaithfulEvaluationError(BottomSchurError):
    """N < 차수 인 유한 변수 평가"""

    def __init__(self, n_vars: int, degree: int):
        super().__init__(
            ErrorCode.E_UNFAITHFUL_EVALUATION,
            detail=f"N={n_vars} variables for degree {degree}",
        )


class DimensionMismatchError(BottomSchurError):
    """벡터/행렬 차원 불일치"""

    def __init__(self, expected: int, actual: int):
        super().__init__(
            ErrorCode.E_DIMENSION_MISMATCH, detail=f"expected {expected}, got {actual}"
        )


class PreconditionError(BottomSchurError):
    """연산 사전 조건 위반"""

    def __init__(self, message: Optional[str] = None, detail: Optional[str] = None):
        super().__init__(ErrorCode.E_PRECONDITION, message=message, detail=detail)


class OversizeRequestError(BottomSchurError):
    """--slow 없이 큰 계산을 요청했을 때"""

    def __init__(self, requested: int, limit: int):
        super().__init__(
            ErrorCode.E_OVERSIZE_REQUEST, detail=f"requested n={requested}, limit n={limit}"
        )


class VerificationFailedError(BottomSchurError):
    """수학적 자기검증 실패"""

    def __init__(self, detail: Optional[str] = None):
        super().__init__(ErrorCode.E_VERIFICATION_FAILED, detail=detail)


class CacheMismatchError(BottomSchurError):
    """캐시 적중 결과가 재계산과 비트 단위로 다를 때"""

    def __init__(self, n: int):
        super().__init__(ErrorCode.E_CACHE_MISMATCH, detail=f"character table n={n}")


class UsageError(BottomSchurError):
    """CLI 사용법 오류"""

    def __init__(self, detail: Optional[str] = None):
        super().__init__(ErrorCode.E_USAGE, detail=detail)
