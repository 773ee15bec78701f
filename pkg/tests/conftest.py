"""テスト共通フィクスチャ."""

from __future__ import annotations

import pytest

from wilfinv.config import Settings, load_settings
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.fillings.transversal import Transversal
from wilfinv.matchings.matching import Matching
from wilfinv.matchings.oscillating import OscillatingTableau
from wilfinv.paths.pairs import DyckPair

LAMBDA = (8, 8, 8, 8, 8, 5, 5, 5)


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="重い網羅検証も実行")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="--slow 指定時のみ実行")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def settings(tmp_path) -> Settings:
    """テスト用設定（逐次実行、出力は一時ディレクトリ）."""
    s = load_settings(use_env=False)
    s.enumeration.threads = 1
    s.output.progress = False
    s.output.report_dir = str(tmp_path / "reports")
    s.logging.file = str(tmp_path / "wilfinv.log")
    return s


# ---------------------------------------------------------------------------
# λ = (8,8,8,8,8,5,5,5) 上の例
# ---------------------------------------------------------------------------

@pytest.fixture
def sample_transversal() -> Transversal:
    """321 回避の対称横断."""
    return Transversal(YoungDiagram(LAMBDA), (6, 2, 8, 4, 7, 1, 5, 3))


@pytest.fixture
def image_transversal() -> Transversal:
    """123 回避の対称横断（sample_transversal の Ψ 像）."""
    return Transversal(YoungDiagram(LAMBDA), (6, 4, 8, 2, 7, 1, 5, 3))


@pytest.fixture
def sample_matching() -> Matching:
    return Matching.from_pairs(
        [(1, 8), (2, 15), (3, 6), (4, 13), (5, 7), (9, 16), (10, 12), (11, 14)]
    )


@pytest.fixture
def image_matching() -> Matching:
    return Matching.from_pairs(
        [(1, 8), (2, 13), (3, 6), (4, 15), (5, 7), (9, 16), (10, 12), (11, 14)]
    )


@pytest.fixture
def sample_tableau() -> OscillatingTableau:
    return OscillatingTableau.from_parts([
        (), (1,), (1, 1), (2, 1), (2, 2), (3, 2), (3, 1), (2, 1), (2,),
        (2, 1), (3, 1), (3, 2), (2, 2), (2, 1), (1, 1), (1,), (),
    ])


@pytest.fixture
def image_tableau() -> OscillatingTableau:
    return OscillatingTableau.from_parts([
        (), (1,), (1, 1), (2, 1), (2, 1, 1), (2, 2, 1), (2, 1, 1), (1, 1, 1), (1, 1),
        (1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 1, 1), (2, 1), (1, 1), (1,), (),
    ])


@pytest.fixture
def sample_pair() -> DyckPair:
    return DyckPair.of("UUUUUDDDUUUDDDDD", "UDUDUUDUDUDDUDUD")


@pytest.fixture
def image_pair() -> DyckPair:
    return DyckPair.of("UUUUUDDDUUUDDDDD", "UUDUDUUDUDDUDUDD")
