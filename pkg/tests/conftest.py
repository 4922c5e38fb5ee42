"""
Shared fixtures
"""

from pathlib import Path

import pytest

from hallsearch.config import SearchConfig, reload_settings
from hallsearch.logging_config import setup_logging
from hallsearch.pipeline import SearchCell, build_candidates

# Every known good example below 10^6
SMALL_HITS = [2, 5234, 8158, 93844, 367806, 421351, 720114, 939787]


@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    setup_logging(log_level="WARNING", log_format="text")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ("HALLSEARCH_SEARCH_SHARDS", "HALLSEARCH_SEARCH_CHUNK_SIZE", "HALLSEARCH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reload_settings()
    yield
    reload_settings()


@pytest.fixture
def golden_cell() -> SearchCell:
    return SearchCell(b=26, c2=1)


@pytest.fixture
def golden_candidate(golden_cell):
    return next(c for c in build_candidates(golden_cell, n_window=0) if c.a0 == 529)


@pytest.fixture
def run_paths(tmp_path: Path):
    return tmp_path / "run.ckpt", tmp_path / "hits.tsv"


@pytest.fixture
def small_config() -> SearchConfig:
    return SearchConfig(b_lo=26, b_hi=26, c2_cap_override=1)
