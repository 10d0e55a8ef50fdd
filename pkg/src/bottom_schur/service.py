"""
bottom-schur 서비스 코어

CLI 와 HTTP API 가 공유하는 계산 진입점. 모든 메서드는 models.py 의 보고서 모델을 반환합니다.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Literal, Optional, TypeVar

from . import analysis
from .characters import bottom_via_expansion, character_table, greedy_z, schur_in_p
from .errors import OversizeRequestError, PreconditionError
from .jacobi_trudi import (
    bessenrodt_skew,
    bottom_via_jacobi_trudi,
    jt_matrix,
    jt_star,
    laplace_sign,
    skew_from_minor,
    square_certificate,
)
from .models import (
    BottomReport,
    CharacterTableModel,
    DimsResponse,
    ExpandReport,
    GammaResponse,
    IntervalSetModel,
    IntervalsReport,
    JTStarReport,
    LRReport,
    SnakeEdgeModel,
    SnakeReport,
    VerifyReport,
)
from .partitions import Partition
from .snakes import bottom_via_intervals, interval_sets, snake_cells, snake_sequence
from .storage import CharacterTableStore
from .symfunc import SymFn, p_to_m
from .tableaux import lr_coeff_jdt, lr_coeff_lattice

logger = logging.getLogger(__name__)

T = TypeVar("T")

Route = Literal["mn", "intervals", "jt", "all"]
Rule = Literal["lattice", "jdt", "both"]

ROUTES: Dict[str, Callable[[Partition], SymFn]] = {
    "mn": lambda lam: bottom_via_expansion(lam, 1),
    "intervals": bottom_via_intervals,
    "jt": bottom_via_jacobi_trudi,
}


class BottomSchurService:
    """
    bottom Schur 계산 서비스

    지표표 캐시가 주어지면 χ 가 필요한 차수의 표를 먼저 읽어 메모에 주입하고,
    없으면 계산해서 저장합니다.
    """

    # 단일 분할 요청의 최대 크기
    MAX_PARTITION_SIZE = 30

    # 캐시 파일로 저장할 지표표의 최대 차수 (p(n)² 항목)
    CACHE_TABLE_LIMIT = 16

    def __init__(
        self,
        cache: Optional[CharacterTableStore] = None,
        cache_verify: bool = False,
        slow: bool = False,
        threads: int = 1,
    ):
        """
        서비스 초기화

        Args:
            cache: 지표표 디렉토리 캐시 (None 이면 메모리 메모만 사용)
            cache_verify: 캐시 적중을 재계산과 비교
            slow: 크기 제한을 넘는 계산 허용
            threads: 차수별 작업 병렬도
        """
        self.cache = cache
        self.cache_verify = cache_verify
        self.slow = slow
        self.threads = max(1, threads)

    # ------------------------------------------------------------------
    # 내부 도우미
    # ------------------------------------------------------------------

    def _partition(self, value) -> Partition:
        lam = Partition(value)
        if lam.n > self.MAX_PARTITION_SIZE and not self.slow:
            raise OversizeRequestError(lam.n, self.MAX_PARTITION_SIZE)
        return lam

    def _warm(self, n: int) -> None:
        """n 차 χ 메모를 캐시에서 채우거나, 계산 후 캐시에 저장"""
        if self.cache is None or n > self.CACHE_TABLE_LIMIT:
            return
        if self.cache.prime_memo(n) == 0:
            self.cache.save(character_table(n))
        elif self.cache_verify:
            self.cache.verify(n)

    def _fan_out(self, fn: Callable[[int], T], values: Iterable[int]) -> List[T]:
        # 완료 순서와 무관하게 입력 순서로 반환
        values = list(values)
        if self.threads == 1:
            return [fn(v) for v in values]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, values))

    @staticmethod
    def _range(start: int, end: int) -> range:
        if start < 1 or end < start:
            raise PreconditionError(detail=f"invalid range {start}..{end}")
        return range(start, end + 1)

    # ------------------------------------------------------------------
    # 전개 / bottom
    # ------------------------------------------------------------------

    def character_table(self, n: int) -> CharacterTableModel:
        if n < 0:
            raise PreconditionError(detail=f"n={n} must be non-negative")
        if n > self.CACHE_TABLE_LIMIT and not self.slow:
            raise OversizeRequestError(n, self.CACHE_TABLE_LIMIT)
        if self.cache is None:
            return character_table(n)
        table = self.cache.get_or_build(n)
        if self.cache_verify:
            self.cache.verify(n)
        return table

    def expand(self, partition, basis: Literal["p", "m"] = "p") -> ExpandReport:
        """s_λ 전체 전개 (p 또는 m 기저)"""
        lam = self._partition(partition)
        self._warm(lam.n)
        f = schur_in_p(lam)
        if basis == "m":
            f = p_to_m(f)
        elif basis != "p":
            raise PreconditionError(detail=f"unsupported basis {basis!r}")
        return ExpandReport(
            partition=list(lam), basis=f.basis.value, expansion=f.to_model(), rendered=f.render()
        )

    def bottom(self, partition, j: int = 1, route: Route = "mn") -> BottomReport:
        """
        ŝ_λ (또는 ŝ^j_λ)

        route=all 이면 세 경로를 모두 계산하고 일치 여부를 보고합니다.
        j > 1 은 mn 경로에서만 정의됩니다.
        """
        lam = self._partition(partition)
        if j < 1:
            raise PreconditionError(detail=f"j={j} must be at least 1")
        names = list(ROUTES) if route == "all" else [route]
        if any(name not in ROUTES for name in names):
            raise PreconditionError(detail=f"unknown route {route!r}")
        if j > 1 and names != ["mn"]:
            raise PreconditionError(detail="j-bottom functions are only computed by the mn route")

        if "mn" in names:
            self._warm(lam.n)
        results = {
            name: bottom_via_expansion(lam, j) if name == "mn" else ROUTES[name](lam)
            for name in names
        }
        values = list(results.values())
        agree = all(v == values[0] for v in values) if route == "all" else None
        if agree is False:
            logger.warning(f"Bottom routes disagree for {lam}")
        return BottomReport(
            partition=list(lam),
            j=j,
            routes={name: f.to_model() for name, f in results.items()},
            rendered={name: f.render() for name, f in results.items()},
            agree=agree,
        )

    # ------------------------------------------------------------------
    # 뱀 수열 / 구간 집합 / JT*
    # ------------------------------------------------------------------

    def snakes(self, partition) -> SnakeReport:
        lam = self._partition(partition)
        seq = snake_sequence(lam)
        edges = [
            SnakeEdgeModel(
                position=e.position,
                orientation=e.orientation,
                row=e.cell.row,
                col=e.cell.col,
                letter=e.letter,
                cells=[list(c) for c in sorted(snake_cells(lam, e.position))],
            )
            for e in seq.edges
        ]
        return SnakeReport(partition=list(lam), word=seq.word, edges=edges)

    def intervals(self, partition) -> IntervalsReport:
        lam = self._partition(partition)
        return IntervalsReport(
            partition=list(lam),
            word=snake_sequence(lam).word,
            z=greedy_z(lam),
            interval_sets=[
                IntervalSetModel(pairs=[list(p) for p in s.pairs], crossings=s.crossings)
                for s in interval_sets(lam)
            ],
        )

    def jtstar(self, partition) -> JTStarReport:
        lam = self._partition(partition)
        if not lam:
            raise PreconditionError(detail="the empty partition has no Jacobi-Trudi matrix")
        star, rows, cols = jt_star(lam)
        shape = skew_from_minor(lam)
        closed = bessenrodt_skew(lam)
        return JTStarReport(
            partition=list(lam),
            rank=star.size,
            matrix=jt_matrix(lam).as_lists(),
            star=star.as_lists(),
            removed_rows=list(rows),
            removed_cols=list(cols),
            outer=list(shape.outer),
            inner=list(shape.inner_padded),
            bessenrodt_outer=list(closed.outer),
            bessenrodt_inner=list(closed.inner_padded),
            square_certificate=square_certificate(shape, star.size),
            laplace_sign=laplace_sign(lam),
            determinant=bottom_via_jacobi_trudi(lam).to_model(),
        )

    # ------------------------------------------------------------------
    # LR 계수
    # ------------------------------------------------------------------

    def lr(self, outer, inner, nu, rule: Rule = "both") -> LRReport:
        lam, mu, nu = self._partition(outer), Partition(inner), Partition(nu)
        if rule not in ("lattice", "jdt", "both"):
            raise PreconditionError(detail=f"unknown rule {rule!r}")
        lattice = lr_coeff_lattice(lam, mu, nu) if rule in ("lattice", "both") else None
        jdt = lr_coeff_jdt(lam, mu, nu) if rule in ("jdt", "both") else None
        agree = lattice == jdt if rule == "both" else None
        return LRReport(
            outer=list(lam), inner=list(mu), nu=list(nu), lattice=lattice, jdt=jdt, agree=agree
        )

    # ------------------------------------------------------------------
    # 분석
    # ------------------------------------------------------------------

    def dims(self, start: int, end: int, j: int = 1) -> DimsResponse:
        """βₙ (j = 1) 또는 j-bottom 차원 (j > 1) 표"""
        values = self._range(start, end)
        if j == 1:
            rows = self._fan_out(lambda n: analysis.beta(n, slow=self.slow), values)
            return DimsResponse(j=1, rows=rows)
        return DimsResponse(
            j=j, jbottom_rows=self._fan_out(lambda n: analysis.jbottom_dim(n, j, self.slow), values)
        )

    def gamma(self, start: int, end: int) -> GammaResponse:
        values = self._range(start, end)
        # 범위 전체를 먼저 검사해 일부만 계산하고 실패하지 않도록 함
        if end > analysis.GAMMA_FAST_LIMIT and not self.slow:
            raise OversizeRequestError(end, analysis.GAMMA_FAST_LIMIT)
        return GammaResponse(rows=self._fan_out(lambda n: analysis.gamma(n, self.slow), values))

    def verify(self, max_n: int) -> VerifyReport:
        return analysis.run_property_suite(max_n, threads=self.threads)
