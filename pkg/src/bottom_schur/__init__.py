"""
Bottom Schur - exact computation of bottom Schur functions

이 패키지는 Schur 함수의 power sum 전개에서 최저 차수 부분 (bottom Schur 함수) 을
정확한 유리수 연산으로 계산하고, 관련 항등식과 차원 공식을 검증합니다.

주요 기능:
- 세 가지 독립 경로: Murnaghan-Nakayama 전개, 구간 집합, Jacobi-Trudi 행렬식
- 뱀 수열, 구간 집합, border-strip tableau, LR 계수, jeu de taquin
- βₙ / γₙ / j-bottom 차원 분석
- CLI 와 REST API

사용 예시:
    from bottom_schur import Partition, bottom_via_intervals

    f = bottom_via_intervals(Partition([3, 2, 1]))
    print(f.render())  # p~[5,1] - p~[3,3]
"""

__version__ = "1.0.0"
__author__ = "bottom-schur contributors"

from .characters import bottom_via_expansion, chi, schur_in_p
from .errors import (
    BottomSchurError,
    ErrorCode,
    InvalidPartitionError,
    OversizeRequestError,
    VerificationFailedError,
)
from .jacobi_trudi import bottom_via_jacobi_trudi, jt_star
from .partitions import Partition, parse_partition, partitions_of, rank
from .service import BottomSchurService
from .snakes import bottom_via_intervals, interval_sets, snake_sequence
from .symfunc import Basis, SymFn

__all__ = [
    "Basis",
    "BottomSchurError",
    "BottomSchurService",
    "ErrorCode",
    "InvalidPartitionError",
    "OversizeRequestError",
    "Partition",
    "SymFn",
    "VerificationFailedError",
    "bottom_via_expansion",
    "bottom_via_intervals",
    "bottom_via_jacobi_trudi",
    "chi",
    "interval_sets",
    "jt_star",
    "parse_partition",
    "partitions_of",
    "rank",
    "schur_in_p",
    "snake_sequence",
]
