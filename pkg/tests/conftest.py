"""공용 pytest 픽스처"""

import pytest

from bottom_schur.storage import CACHE_ENV_VAR, CharacterTableStore


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    # 사용자 환경의 캐시 디렉토리를 테스트에서 쓰지 않음
    monkeypatch.delenv(CACHE_ENV_VAR, raising=False)


@pytest.fixture
def store(tmp_path):
    return CharacterTableStore(str(tmp_path / "chi"))


@pytest.fixture
def reading_tableau():
    """모양 652/31, 읽기 단어 472389156"""
    from bottom_schur.tableaux import SkewTableau

    return SkewTableau.from_rows(
        [
            [None, None, None, 1, 5, 6],
            [None, 2, 3, 8, 9],
            [4, 7],
        ]
    )
