"""
Tests for logging helpers
"""

import json
import logging

import pytest
import structlog

from hallsearch.logging_config import (
    PerformanceLogger,
    bind_run_context,
    clear_run_context,
    get_logger,
    setup_logging,
)


@pytest.fixture
def json_log_dir(tmp_path):
    setup_logging(log_level="INFO", log_format="json", log_dir=tmp_path)
    yield tmp_path
    for handler in logging.getLogger().handlers:
        handler.close()
    setup_logging(log_level="WARNING", log_format="text")


class TestPerformanceLogger:
    def test_records_duration(self):
        with PerformanceLogger(get_logger("test"), "unit.op", b_lo=2) as perf:
            pass
        assert perf.duration_ms >= 0

    def test_exception_propagates(self):
        with pytest.raises(ZeroDivisionError):
            with PerformanceLogger(get_logger("test"), "unit.op"):
                raise ZeroDivisionError


class TestFiles:
    def test_json_lines_with_run_context(self, json_log_dir):
        bind_run_context(run_id="abc123")
        try:
            get_logger("test").info("search.hit", x="5234", k=-17)
        finally:
            clear_run_context()
        for handler in logging.getLogger().handlers:
            handler.flush()

        lines = (json_log_dir / "hallsearch.log").read_text().splitlines()
        events = [json.loads(line) for line in lines]
        hit = next(event for event in events if event["event"] == "search.hit")
        assert hit["run_id"] == "abc123"
        assert hit["x"] == "5234"
        assert hit["level"] == "info"

    def test_context_cleared(self):
        bind_run_context(run_id="abc123")
        clear_run_context()
        assert structlog.contextvars.get_contextvars() == {}
