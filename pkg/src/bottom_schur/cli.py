"""
명령행 인터페이스 (CLI)

bottom Schur 함수 계산과 검증을 명령행에서 실행합니다.

사용법:
    bottom-schur bottom 3,2,1 --route all
    bottom-schur snakes 5,3,3,3,2,2
    bottom-schur dims --from 1 --to 12
    bottom-schur gamma --from 1 --to 14 --slow
    bottom-schur verify --n 8 --json

종료 코드:
    0  성공, 모든 검증 통과
    1  사용법 오류 또는 거부된 입력
    2  수학적 검증 실패
"""

import argparse
import logging
import os
import sys
import traceback
from typing import List, Optional, Sequence

from pydantic import BaseModel

from .errors import (
    BottomSchurError,
    CacheMismatchError,
    UsageError,
    VerificationFailedError,
)
from .jacobi_trudi import JTMatrix
from .models import (
    BottomReport,
    DimsResponse,
    ExpandReport,
    GammaResponse,
    IntervalsReport,
    JTStarReport,
    LRReport,
    SnakeReport,
    VerifyReport,
)
from .partitions import Partition, format_partition, parse_partition
from .service import BottomSchurService
from .storage import CACHE_ENV_VAR, CharacterTableStore
from .symfunc import SymFn

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


class _Parser(argparse.ArgumentParser):
    """사용법 오류를 SystemExit 대신 UsageError 로 올리는 파서"""

    def error(self, message: str):
        raise UsageError(detail=message)


def _partition_arg(text: str) -> Partition:
    return parse_partition(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON 출력")
    common.add_argument("--cache", metavar="DIR", help=f"지표표 캐시 디렉토리 (기본: ${CACHE_ENV_VAR})")
    common.add_argument("--cache-verify", action="store_true", help="캐시 적중을 재계산과 비교")
    common.add_argument("--threads", type=int, default=1, help="차수별 작업 스레드 수")
    common.add_argument("--slow", action="store_true", help="크기 제한을 넘는 계산 허용")
    common.add_argument("-v", "--verbose", action="store_true", help="상세 출력")

    parser = _Parser(
        prog="bottom-schur",
        description="bottom Schur 함수를 정확한 유리수 연산으로 계산하고 검증합니다.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("사용법:", 1)[1],
    )
    parser.add_argument("--version", action="store_true", help="버전 정보 출력")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="s_λ 의 전체 전개")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("--basis", choices=["p", "m"], default="p")

    p = sub.add_parser("bottom", parents=[common], help="ŝ_λ 또는 ŝ^j_λ")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--route", choices=["mn", "intervals", "jt", "all"], default="mn")

    p = sub.add_parser("snakes", parents=[common], help="뱀 수열과 변별 칸")
    p.add_argument("partition", type=_partition_arg)

    p = sub.add_parser("intervals", parents=[common], help="구간 집합과 교차 수")
    p.add_argument("partition", type=_partition_arg)

    p = sub.add_parser("jtstar", parents=[common], help="JT* 소행렬과 skew 모양")
    p.add_argument("partition", type=_partition_arg)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson 계수 c^λ_{μν}")
    p.add_argument("outer", type=_partition_arg)
    p.add_argument("inner", type=_partition_arg)
    p.add_argument("nu", type=_partition_arg)
    p.add_argument("--rule", choices=["lattice", "jdt", "both"], default="both")

    p = sub.add_parser("dims", parents=[common], help="βₙ 또는 j-bottom 차원 표")
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--j", type=int, default=1)

    p = sub.add_parser("gamma", parents=[common], help="γₙ = dim Γₙ 표")
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", dest="end", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="차수 N 까지 성질 검사")
    p.add_argument("--n", dest="max_n", type=int, required=True)

    return parser


# ============================================================================
# 텍스트 출력
# ============================================================================


def _rendered(model) -> str:
    return SymFn.from_model(model).render()


def _show_expand(r: ExpandReport) -> None:
    print(f"s_{format_partition(r.partition)} = {r.rendered}")


def _show_bottom(r: BottomReport) -> None:
    name = "ŝ" if r.j == 1 else f"ŝ^{r.j}"
    for route, text in r.rendered.items():
        print(f"{name}_{format_partition(r.partition)} [{route}] = {text}")
    if r.agree is not None:
        print("✅ 세 경로 일치" if r.agree else "❌ 경로 불일치")


def _show_snakes(r: SnakeReport) -> None:
    print(r.word)
    for e in r.edges:
        cells = " ".join(f"({i},{j})" for i, j in e.cells)
        print(f"  {e.position:>3} {e.letter} {e.orientation:<10} ({e.row},{e.col})  {cells}")


def _show_intervals(r: IntervalsReport) -> None:
    print(f"{r.word}  z={r.z}")
    for s in r.interval_sets:
        pairs = ",".join(f"[{u},{v}]" for u, v in s.pairs)
        print(f"  [{pairs}]  c={s.crossings}")


def _show_jtstar(r: JTStarReport) -> None:
    def grid(rows: List[List[int]]) -> str:
        return JTMatrix(tuple(tuple(row) for row in rows), (), ()).render()

    print(f"JT_{format_partition(r.partition)} (rank {r.rank})")
    print(grid(r.matrix))
    print(f"JT* (removed rows {r.removed_rows}, cols {r.removed_cols})")
    print(grid(r.star))
    skew = f"{''.join(map(str, r.outer))}/{''.join(map(str, r.inner))}"
    closed = f"{''.join(map(str, r.bessenrodt_outer))}/{''.join(map(str, r.bessenrodt_inner))}"
    print(f"skew shape: {skew}  (closed form {closed})")
    print(f"square certificate: {'✅' if r.square_certificate else '❌'}")
    print(f"ŝ = {'+' if r.laplace_sign > 0 else '-'}det = {_rendered(r.determinant)}")


def _show_lr(r: LRReport) -> None:
    label = (
        f"c^{format_partition(r.outer)}_"
        f"{{{format_partition(r.inner)},{format_partition(r.nu)}}}"
    )
    if r.lattice is not None:
        print(f"{label} (lattice) = {r.lattice}")
    if r.jdt is not None:
        print(f"{label} (jdt) = {r.jdt}")
    if r.agree is not None:
        print("✅ 두 규칙 일치" if r.agree else "❌ 규칙 불일치")


def _show_dims(r: DimsResponse) -> None:
    if r.j == 1:
        print("  n  beta  rank  #l=rank  gap2  mod5  ok")
        for row in r.rows:
            span = "-" if row.beta is None else str(row.beta)
            print(
                f"{row.n:>3} {row.formula_value:>5} {span:>5} {row.length_rank_count:>8}"
                f" {row.distinct2_count:>5} {row.mod5_count:>5}  {'✅' if row.consistent else '❌'}"
            )
        return
    print(f"  n  dim  count  (j={r.j})")
    for row in r.jbottom_rows:
        print(f"{row.n:>3} {row.dimension:>4} {row.count:>6}  {'=' if row.equal else '≠'}")


def _show_gamma(r: GammaResponse) -> None:
    print("  n  gamma  beta  bottoms⊂Γ")
    for row in r.rows:
        print(
            f"{row.n:>3} {row.gamma:>6} {row.beta:>5}  {'✅' if row.bottoms_in_gamma else '❌'}"
        )


def _show_verify(r: VerifyReport) -> None:
    for check in r.checks:
        mark = "✅" if check.passed else "❌"
        line = f"{mark} {check.name}"
        if check.detail:
            line += f": {check.detail}"
        print(line)
    print(f"{'✅' if r.passed else '❌'} verify --n {r.max_n}")


def _failed(report: BaseModel) -> bool:
    """보고서 안의 수학적 단언 실패 여부"""
    if isinstance(report, (BottomReport, LRReport)):
        return report.agree is False
    if isinstance(report, DimsResponse):
        # j-bottom 부등호는 관찰 결과이지 실패가 아님
        return any(not row.consistent for row in report.rows)
    if isinstance(report, GammaResponse):
        return any(not (row.bottoms_in_gamma and row.beta_le_gamma) for row in report.rows)
    if isinstance(report, VerifyReport):
        return not report.passed
    return False


# ============================================================================
# 진입점
# ============================================================================


def _dispatch(service: BottomSchurService, args: argparse.Namespace):
    command = args.command
    if command == "expand":
        return service.expand(args.partition, args.basis), _show_expand
    if command == "bottom":
        return service.bottom(args.partition, args.j, args.route), _show_bottom
    if command == "snakes":
        return service.snakes(args.partition), _show_snakes
    if command == "intervals":
        return service.intervals(args.partition), _show_intervals
    if command == "jtstar":
        return service.jtstar(args.partition), _show_jtstar
    if command == "lr":
        return service.lr(args.outer, args.inner, args.nu, args.rule), _show_lr
    if command == "dims":
        return service.dims(args.start, args.end, args.j), _show_dims
    if command == "gamma":
        return service.gamma(args.start, args.end), _show_gamma
    if command == "verify":
        return service.verify(args.max_n), _show_verify
    raise UsageError(detail=f"unknown command {command!r}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 실행

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])

    Returns:
        종료 코드 (0, 1, 2)
    """
    parser = build_parser()
    verbose = False
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            # --help
            return EXIT_OK if e.code in (None, 0) else EXIT_USAGE

        if args.version:
            from . import __version__

            print(f"bottom-schur {__version__}")
            return EXIT_OK
        if args.command is None:
            parser.print_help()
            return EXIT_USAGE

        verbose = args.verbose
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
        )
        if args.threads < 1:
            raise UsageError(detail="--threads must be at least 1")

        cache_dir = args.cache or os.environ.get(CACHE_ENV_VAR)
        service = BottomSchurService(
            cache=CharacterTableStore(cache_dir) if cache_dir else None,
            cache_verify=args.cache_verify,
            slow=args.slow,
            threads=args.threads,
        )
        report, show = _dispatch(service, args)

        if args.json:
            print(report.model_dump_json(by_alias=True, indent=2))
        else:
            show(report)
        return EXIT_FAILED if _failed(report) else EXIT_OK

    except (VerificationFailedError, CacheMismatchError) as e:
        print(f"❌ 검증 실패 [{e.code.value}]: {e.message}", file=sys.stderr)
        if verbose and e.detail:
            print(f"   상세: {e.detail}", file=sys.stderr)
        return EXIT_FAILED

    except BottomSchurError as e:
        print(f"❌ 오류 [{e.code.value}]: {e.message}", file=sys.stderr)
        if e.detail and (verbose or isinstance(e, UsageError)):
            print(f"   상세: {e.detail}", file=sys.stderr)
        return EXIT_USAGE

    except Exception as e:
        print(f"❌ 예상치 못한 오류: {e}", file=sys.stderr)
        if verbose:
            traceback.print_exc()
        return EXIT_USAGE


def main():
    """CLI 메인 진입점"""
    sys.exit(run())


if __name__ == "__main__":
    main()
