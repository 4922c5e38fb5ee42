"""
Structured Logging

structlog processors on top of stdlib logging: JSON lines for machines,
colored console output for humans. Log files, when enabled, are always JSON.
Run-scoped fields (run id, shard) are bound through structlog contextvars.
"""

import logging
import sys
import time
from pathlib import Path
from typing import Any, Optional

import structlog


_SHARED_PROCESSORS: list[Any] = [
    structlog.contextvars.merge_contextvars,
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.processors.TimeStamper(fmt="iso", utc=True),
    structlog.processors.StackInfoRenderer(),
]


class PerformanceLogger:
    """
    Context manager for performance logging

    Usage:
        with PerformanceLogger(logger, "search.chunk", b_lo=2, b_hi=65):
            ...
    """

    def __init__(
        self,
        logger: Any,
        operation: str,
        level: int = logging.INFO,
        **extra: Any,
    ):
        self.logger = logger
        self.operation = operation
        self.level = level
        self.extra = extra
        self.start_time: float = 0.0
        self.duration_ms: float = 0.0

    def __enter__(self) -> "PerformanceLogger":
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        self.duration_ms = round((time.perf_counter() - self.start_time) * 1000, 2)

        if exc_type is None:
            self.logger.log(
                self.level,
                self.operation,
                duration_ms=self.duration_ms,
                **self.extra,
            )
        else:
            self.logger.error(
                f"{self.operation}.failed",
                duration_ms=self.duration_ms,
                exc_info=(exc_type, exc_val, exc_tb),
                **self.extra,
            )


def setup_logging(
    log_level: str = "INFO",
    log_format: str = "text",
    log_dir: Optional[Path] = None,
    app_name: str = "hallsearch",
) -> None:
    """
    Configure application logging

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Console format ("json" or "text")
        log_dir: Directory for log files (None for console only)
        app_name: Base name of the log files
    """
    level = getattr(logging, log_level.upper())

    structlog.configure(
        processors=[
            *_SHARED_PROCESSORS,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )

    console_renderer: Any
    if log_format == "json":
        console_renderer = structlog.processors.JSONRenderer()
    else:
        console_renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())

    json_formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=_SHARED_PROCESSORS,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ],
    )
    console_formatter = structlog.stdlib.ProcessorFormatter(
        foreign_pre_chain=_SHARED_PROCESSORS,
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            console_renderer,
        ],
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers.clear()

    # stdout belongs to hit output
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    if log_dir:
        log_dir.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_dir / f"{app_name}.log", encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(json_formatter)
        root_logger.addHandler(file_handler)

        error_handler = logging.FileHandler(log_dir / f"{app_name}.error.log", encoding="utf-8")
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(json_formatter)
        root_logger.addHandler(error_handler)

    get_logger(__name__).debug(
        "logging.configured",
        level=log_level,
        format=log_format,
        log_dir=str(log_dir) if log_dir else None,
    )


def get_logger(name: str) -> Any:
    """
    Get a structlog logger bound to a stdlib logger name

    Args:
        name: Logger name (typically __name__)
    """
    return structlog.stdlib.get_logger(name)


def bind_run_context(**fields: Any) -> None:
    """Bind fields (run id, shard, ...) to every subsequent log event"""
    structlog.contextvars.bind_contextvars(**fields)


def clear_run_context() -> None:
    """Drop all run-scoped logging fields"""
    structlog.contextvars.clear_contextvars()
