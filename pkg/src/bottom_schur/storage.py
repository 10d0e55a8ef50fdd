"""
캐시 및 저장소 모듈

- KeyedMemo: 키별 잠금을 갖는 읽기 위주 메모 테이블 (키마다 계산은 최대 한 번)
- CharacterTableStore: n 별 지표표를 JSON 파일로 저장하는 디렉토리 캐시
"""

import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Callable, Dict, Generic, Hashable, List, Optional, TypeVar

from .errors import CacheMismatchError
from .models import CharacterTableModel

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")

CACHE_ENV_VAR = "BOTTOMSCHUR_CACHE"


class KeyedMemo(Generic[K, V]):
    """
    읽기 위주 메모 테이블

    적중 경로는 잠금 없이 dict 를 읽고, 미스일 때만 키별 잠금을 잡아
    같은 키에 대한 factory 호출이 한 번만 관측되도록 합니다.
    저장된 값은 불변으로 취급합니다.
    """

    def __init__(self, name: str):
        self.name = name
        self._values: Dict[K, V] = {}
        self._locks: Dict[K, threading.Lock] = {}
        self._guard = threading.Lock()
        self.computations = 0

    def get_or_compute(self, key: K, factory: Callable[[], V]) -> V:
        try:
            return self._values[key]
        except KeyError:
            pass

        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())

        with lock:
            if key in self._values:
                return self._values[key]
            value = factory()
            self._values[key] = value
            self.computations += 1
            return value

    def prime(self, key: K, value: V) -> None:
        """외부(캐시 파일)에서 읽은 값을 미리 채움"""
        self._values.setdefault(key, value)

    def get(self, key: K) -> Optional[V]:
        return self._values.get(key)

    def clear(self) -> None:
        with self._guard:
            self._values.clear()
            self._locks.clear()
            self.computations = 0

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: object) -> bool:
        return key in self._values


class CharacterTableStore:
    """
    지표표 디렉토리 캐시

    파일 형식은 tableaux_characters 의 JSON 형식
    {"n": 6, "entries": [{"lambda": [3,2,1], "nu": [5,1], "chi": 1}, ...]} 입니다.
    """

    FILE_PATTERN = "chi_{n:03d}.json"

    def __init__(self, base_dir: Optional[str] = None):
        """
        저장소 초기화

        Args:
            base_dir: 캐시 디렉토리 (None이면 환경변수 BOTTOMSCHUR_CACHE, 그 다음 임시 디렉토리)
        """
        if base_dir is None:
            base_dir = os.environ.get(CACHE_ENV_VAR)
        if base_dir:
            self.base_dir = Path(base_dir)
        else:
            self.base_dir = Path(tempfile.gettempdir()) / "bottom_schur"

        self.base_dir.mkdir(parents=True, exist_ok=True)
        self._tables: Dict[int, CharacterTableModel] = {}
        self._lock = threading.RLock()

    def path_for(self, n: int) -> Path:
        return self.base_dir / self.FILE_PATTERN.format(n=n)

    @staticmethod
    def dumps(table: CharacterTableModel) -> str:
        return table.model_dump_json(by_alias=True)

    def load(self, n: int) -> Optional[CharacterTableModel]:
        """캐시 파일 로드 (없거나 손상되면 None)"""
        with self._lock:
            if n in self._tables:
                return self._tables[n]

        path = self.path_for(n)
        if not path.exists():
            logger.debug(f"Character table cache miss: n={n}")
            return None

        try:
            table = CharacterTableModel.model_validate_json(path.read_text(encoding="utf-8"))
        except Exception as e:
            logger.warning(f"Failed to load character table {path}: {e}")
            return None

        with self._lock:
            self._tables[n] = table
        logger.debug(f"Character table cache hit: n={n}")
        return table

    def save(self, table: CharacterTableModel) -> Path:
        path = self.path_for(table.n)
        with self._lock:
            # 임시 파일에 쓴 뒤 교체 (중단되어도 잘린 파일이 남지 않음)
            with tempfile.NamedTemporaryFile(
                "w",
                encoding="utf-8",
                dir=self.base_dir,
                prefix=f".{path.stem}.",
                suffix=".tmp",
                delete=False,
            ) as tmp:
                tmp.write(self.dumps(table))
            try:
                os.replace(tmp.name, path)
            except OSError:
                os.unlink(tmp.name)
                raise
            self._tables[table.n] = table
        logger.info(f"Character table saved: n={table.n} ({len(table.entries)} entries)")
        return path

    def get_or_build(self, n: int) -> CharacterTableModel:
        table = self.load(n)
        if table is not None:
            return table
        from .characters import character_table

        table = character_table(n)
        self.save(table)
        return table

    def prime_memo(self, n: int) -> int:
        """
        캐시된 n 차 지표표를 χ 메모 테이블에 주입

        Returns:
            주입한 값의 수 (캐시가 없으면 0)
        """
        table = self.load(n)
        if table is None:
            return 0
        from .characters import prime_character_table

        return prime_character_table(table)

    def verify(self, n: int) -> bool:
        """
        캐시 적중이 재계산과 비트 단위로 같은지 확인

        Raises:
            CacheMismatchError: 캐시 파일 내용이 재계산과 다를 때
        """
        path = self.path_for(n)
        if not path.exists():
            return False
        from .characters import character_table

        cached = path.read_text(encoding="utf-8")
        fresh = self.dumps(character_table(n, use_memo=False))
        if cached != fresh:
            raise CacheMismatchError(n)
        return True

    def list_degrees(self) -> List[int]:
        degrees = []
        for path in sorted(self.base_dir.glob("chi_*.json")):
            try:
                degrees.append(int(path.stem.split("_")[1]))
            except (IndexError, ValueError):
                continue
        return degrees

    def clear(self) -> int:
        deleted = 0
        with self._lock:
            for path in self.base_dir.glob("chi_*.json"):
                path.unlink()
                deleted += 1
            self._tables.clear()
        if deleted:
            logger.info(f"Character table cache cleared: {deleted} files")
        return deleted


# 전역 캐시 인스턴스
_cache: Optional[CharacterTableStore] = None


def get_cache() -> CharacterTableStore:
    """전역 캐시 인스턴스 가져오기"""
    global _cache
    if _cache is None:
        _cache = CharacterTableStore()
    return _cache


def init_cache(base_dir: Optional[str] = None) -> CharacterTableStore:
    """캐시 초기화"""
    global _cache
    _cache = CharacterTableStore(base_dir=base_dir)
    return _cache
