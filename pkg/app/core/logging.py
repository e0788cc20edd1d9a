"""Structured logging on stderr, with run-scoped context."""

import sys
from typing import Any, Optional

import structlog

from app.core.config import settings


def _level(name: str) -> int:
    levels = structlog._log_levels.NAME_TO_LEVEL
    return levels.get(name.lower(), levels["info"])


def setup_logging(level: Optional[str] = None) -> None:
    """Configure structlog; ``level`` overrides ``settings.log_level``."""
    renderer: Any = (
        structlog.dev.ConsoleRenderer()
        if settings.app_env == "development"
        else structlog.processors.JSONRenderer(sort_keys=True)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(_level(level or settings.log_level)),
        context_class=dict,
        # stdout carries reports and graph text; stderr is looked up per call
        logger_factory=lambda *_: structlog.PrintLogger(sys.stderr),
        cache_logger_on_first_use=False,
    )


def bind_run(**context: Any) -> None:
    """Replace the run context (run id, profile, ...) merged into every event."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**context)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
