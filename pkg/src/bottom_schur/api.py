"""
FastAPI 기반 읽기 전용 REST API

엔드포인트:
- GET /v1/expand        - s_λ 전체 전개
- GET /v1/bottom        - ŝ_λ / ŝ^j_λ (세 경로 교차 검증)
- GET /v1/snakes        - 뱀 수열
- GET /v1/intervals     - 구간 집합
- GET /v1/jtstar        - JT* 소행렬과 skew 모양
- GET /v1/lr            - Littlewood-Richardson 계수
- GET /v1/dims          - βₙ / j-bottom 차원 표
- GET /v1/gamma         - γₙ 표
- GET /v1/characters/{n} - 지표표

분할은 CLI 와 같은 텍스트 형식 ("5,4,4,2,1" 또는 "54421") 으로 받습니다.
"""

import logging
import os
from contextlib import asynccontextmanager
from datetime import datetime
from typing import Literal, Optional

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .errors import BottomSchurError, ErrorCode, OversizeRequestError
from .models import (
    BottomReport,
    CharacterTableModel,
    DimsResponse,
    ExpandReport,
    GammaResponse,
    IntervalsReport,
    JTStarReport,
    LRReport,
    SnakeReport,
)
from .partitions import parse_partition
from .service import BottomSchurService
from .storage import CACHE_ENV_VAR, get_cache

# 로깅 설정
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

# 범위 요청당 최대 차수 개수
MAX_RANGE = 30

_service: Optional[BottomSchurService] = None


def get_service() -> BottomSchurService:
    """전역 서비스 인스턴스 (BOTTOMSCHUR_CACHE 가 있으면 지표표 캐시 사용)"""
    global _service
    if _service is None:
        cache = get_cache() if os.environ.get(CACHE_ENV_VAR) else None
        _service = BottomSchurService(cache=cache)
    return _service


# ============================================================================
# 앱 라이프사이클
# ============================================================================


@asynccontextmanager
async def lifespan(app: FastAPI):
    """앱 라이프사이클 관리"""
    service = get_service()
    cache = service.cache.base_dir if service.cache else "memory only"
    logger.info(f"Bottom Schur API started (cache: {cache})")

    yield

    logger.info("Bottom Schur API stopped")


app = FastAPI(
    title="Bottom Schur 계산 서비스",
    description="""
bottom Schur 함수와 관련 조합론 객체를 정확한 유리수 연산으로 계산합니다.

## 주요 기능

* **전개**: s_λ 의 p / m 기저 전개
* **bottom**: Murnaghan-Nakayama, 구간 집합, Jacobi-Trudi 세 경로
* **조합론 객체**: 뱀 수열, 구간 집합, JT* 와 skew 모양, LR 계수
* **분석**: βₙ, j-bottom 차원, γₙ
    """,
    version=__version__,
    lifespan=lifespan,
)

# CORS 설정
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET"],
    allow_headers=["*"],
)


# ============================================================================
# 예외 핸들러
# ============================================================================


@app.exception_handler(BottomSchurError)
async def bottom_schur_error_handler(request: Request, exc: BottomSchurError):
    """bottom-schur 에러 핸들러"""
    status_code = 400
    if exc.code == ErrorCode.E_OVERSIZE_REQUEST:
        status_code = 422
    elif exc.code in (
        ErrorCode.E_VERIFICATION_FAILED,
        ErrorCode.E_CACHE_MISMATCH,
        ErrorCode.E_INTERNAL_ERROR,
    ):
        status_code = 500

    logger.warning(f"{request.url.path}: {exc.code.value} {exc.detail or ''}")
    return JSONResponse(status_code=status_code, content=exc.to_dict())


def _check_range(start: int, end: int) -> None:
    if end - start + 1 > MAX_RANGE:
        raise OversizeRequestError(end - start + 1, MAX_RANGE)


# ============================================================================
# 상태 확인
# ============================================================================


@app.get("/api", tags=["상태"])
async def api_status():
    """API 상태 확인"""
    return {
        "service": "Bottom Schur 계산 서비스",
        "version": __version__,
        "status": "running",
        "api_version": "v1",
    }


@app.get("/healthz", tags=["상태"])
async def health_check():
    """헬스체크 (ŝ_1 = p̃_1 계산 확인)"""
    try:
        report = get_service().bottom(parse_partition("1"), route="all")
        if not report.agree:
            raise RuntimeError("bottom routes disagree on (1)")
        return {"status": "healthy", "timestamp": datetime.now().isoformat()}
    except Exception as e:
        return JSONResponse(
            status_code=503,
            content={
                "status": "unhealthy",
                "error": str(e),
                "timestamp": datetime.now().isoformat(),
            },
        )


# ============================================================================
# 계산 API
# ============================================================================


@app.get("/v1/expand", response_model=ExpandReport, tags=["전개"])
def expand(
    partition: str = Query(..., description="분할, 예: 3,2,1"),
    basis: Literal["p", "m"] = Query(default="p"),
):
    """s_λ 의 전체 전개"""
    return get_service().expand(parse_partition(partition), basis)


@app.get("/v1/bottom", response_model=BottomReport, tags=["전개"])
def bottom(
    partition: str = Query(..., description="분할, 예: 4,4,4"),
    j: int = Query(default=1, ge=1),
    route: Literal["mn", "intervals", "jt", "all"] = Query(default="mn"),
):
    """ŝ_λ 또는 ŝ^j_λ (route=all 이면 agree 필드로 교차 검증 결과 보고)"""
    return get_service().bottom(parse_partition(partition), j, route)


@app.get("/v1/snakes", response_model=SnakeReport, tags=["조합론"])
def snakes(partition: str = Query(...)):
    return get_service().snakes(parse_partition(partition))


@app.get("/v1/intervals", response_model=IntervalsReport, tags=["조합론"])
def intervals(partition: str = Query(...)):
    return get_service().intervals(parse_partition(partition))


@app.get("/v1/jtstar", response_model=JTStarReport, tags=["조합론"])
def jtstar(partition: str = Query(...)):
    return get_service().jtstar(parse_partition(partition))


@app.get("/v1/lr", response_model=LRReport, tags=["조합론"])
def lr(
    outer: str = Query(..., description="λ"),
    inner: str = Query(..., description="μ"),
    nu: str = Query(..., description="ν"),
    rule: Literal["lattice", "jdt", "both"] = Query(default="both"),
):
    """c^λ_{μν}"""
    return get_service().lr(
        parse_partition(outer), parse_partition(inner), parse_partition(nu), rule
    )


@app.get("/v1/dims", response_model=DimsResponse, tags=["분석"])
def dims(
    start: int = Query(default=1, ge=1, alias="from"),
    end: int = Query(..., ge=1, alias="to"),
    j: int = Query(default=1, ge=1),
):
    _check_range(start, end)
    return get_service().dims(start, end, j)


@app.get("/v1/gamma", response_model=GammaResponse, tags=["분석"])
def gamma(
    start: int = Query(default=1, ge=1, alias="from"),
    end: int = Query(..., ge=1, alias="to"),
):
    _check_range(start, end)
    return get_service().gamma(start, end)


@app.get(
    "/v1/characters/{n}",
    response_model=CharacterTableModel,
    response_model_by_alias=True,
    tags=["분석"],
)
def characters(n: int):
    """n 차 대칭군 지표표 (캐시 파일과 같은 JSON 형식)"""
    return get_service().character_table(n)


# ============================================================================
# 서버 실행
# ============================================================================


def run_server(host: str = "0.0.0.0", port: int = 8000, reload: bool = False):
    """API 서버 실행"""
    import uvicorn

    print(
        f"""
    ╔══════════════════════════════════════════════════════════════╗
    ║       Bottom Schur 계산 서비스 (API Server v{__version__})            ║
    ║                                                              ║
    ║  ŝ_λ : Murnaghan-Nakayama / 구간 집합 / Jacobi-Trudi         ║
    ║                                                              ║
    ║  API 문서: http://localhost:{port}/docs                      ║
    ╚══════════════════════════════════════════════════════════════╝
    """
    )

    uvicorn.run(
        "bottom_schur.api:app",
        host=host,
        port=port,
        reload=reload,
    )


if __name__ == "__main__":
    run_server(reload=True)
