"""
Structured logging for omlab campaigns.

Logs go to stderr so that CLI stdout carries only tables and reports.
Console rendering for interactive runs, JSON (LOG_JSON=true) for CI.
Campaign parameters (class, block dimension, seed, check id) are bound with
LogContext and merged into every event, including events raised on sweep
and search worker threads via `carry_log_context`.
"""

import functools
import logging
import sys
from typing import Any, Callable, TextIO, TypeVar

import structlog
from structlog.types import EventDict, Processor

R = TypeVar("R")


def add_app_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """Tag every entry with the application name."""
    event_dict["app"] = "omlab"
    return event_dict


def configure_logging(
    json_logs: bool = False, log_level: str = "WARNING", stream: TextIO | None = None
) -> None:
    """
    Configure structlog for the CLI.

    Args:
        json_logs: If True, output JSON logs. If False, plain console logs.
        log_level: Minimum log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        stream: Destination stream, stderr by default.
    """
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    logging.basicConfig(
        format="%(message)s",
        stream=stream or sys.stderr,
        level=numeric_level,
    )
    logging.getLogger().setLevel(numeric_level)

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        add_app_context,
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]
    processors.append(
        structlog.processors.JSONRenderer() if json_logs else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str = __name__) -> structlog.stdlib.BoundLogger:
    """
    Get a configured logger instance.

    Example:
        logger = get_logger(__name__)
        logger.info("sweep_started", trials=1000, checks=25, workers=4)
    """
    return structlog.get_logger(name)


class LogContext:
    """
    Bind campaign context for the duration of a block.

    Context lives in contextvars, which pool threads do not inherit; wrap
    pool tasks with `carry_log_context` to see it there.

    Example:
        with LogContext(matrix_class="accretive_dissipative", block_dim=2, seed=42):
            logger.info("sweep_started", trials=1000)
    """

    def __init__(self, **kwargs: Any):
        self.context = kwargs
        self.token: Any = None

    def __enter__(self) -> "LogContext":
        self.token = structlog.contextvars.bind_contextvars(**self.context)
        return self

    def __exit__(self, *args: Any) -> None:
        if self.token is not None:
            structlog.contextvars.reset_contextvars(**self.token)


def carry_log_context(fn: Callable[..., R]) -> Callable[..., R]:
    """
    Wrap `fn` so it runs under the log context bound where it was wrapped.

    Call this in the submitting thread; every call of the wrapper binds a
    snapshot of that context in whichever thread it runs.
    """
    snapshot = structlog.contextvars.get_contextvars()

    @functools.wraps(fn)
    def run(*args: Any, **kwargs: Any) -> R:
        with LogContext(**snapshot):
            return fn(*args, **kwargs)

    return run
