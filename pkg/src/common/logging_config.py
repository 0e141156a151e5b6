#!/usr/bin/env python3
"""
Structured logging configuration for the census experiments.

Provides centralized logging setup with:
- Colored console output and JSON-lines structured files
- Log rotation with size and time-based policies
- Run IDs (correlation IDs) so every record of one CLI invocation can be grouped
- Performance logging for long experiment entry points

Library modules only call ``logging.getLogger(__name__)``; handlers are
installed by the CLI through ``setup_logging``.
"""

import os
import sys
import json
import logging
import logging.handlers
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Optional
import uuid
from functools import wraps
import time

PROJECT_ROOT = Path(os.environ.get('PROJECT_ROOT', Path(__file__).resolve().parents[2]))
LOG_DIR = PROJECT_ROOT / 'logs'

# LogRecord attributes that are not user-supplied ``extra`` fields
_RESERVED_ATTRS = frozenset([
    'name', 'msg', 'args', 'created', 'filename', 'funcName',
    'levelname', 'levelno', 'lineno', 'module', 'msecs',
    'pathname', 'process', 'processName', 'relativeCreated',
    'thread', 'threadName', 'exc_info', 'exc_text', 'stack_info',
    'correlation_id', 'taskName', 'message',
])


class CorrelationIdFilter(logging.Filter):
    """Add the current run ID to log records."""

    def __init__(self):
        super().__init__()
        self._correlation_id = None

    def set_correlation_id(self, correlation_id: Optional[str] = None):
        """Set correlation ID for current context."""
        self._correlation_id = correlation_id or uuid.uuid4().hex[:12]

    def clear_correlation_id(self):
        """Clear correlation ID."""
        self._correlation_id = None

    @property
    def correlation_id(self) -> Optional[str]:
        return self._correlation_id

    def filter(self, record: logging.LogRecord) -> bool:
        record.correlation_id = self._correlation_id or '-'
        return True


class StructuredFormatter(logging.Formatter):
    """JSON structured log formatter."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as one JSON line."""
        log_obj = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'correlation_id': getattr(record, 'correlation_id', '-'),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno,
        }

        if record.exc_info:
            log_obj['exception'] = self.formatException(record.exc_info)

        # Extra fields passed through ``extra=``
        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS:
                log_obj[key] = value

        return json.dumps(log_obj, default=str)


class ColoredFormatter(logging.Formatter):
    """Colored console formatter for better readability."""

    COLORS = {
        'DEBUG': '\033[36m',     # Cyan
        'INFO': '\033[32m',      # Green
        'WARNING': '\033[33m',   # Yellow
        'ERROR': '\033[31m',     # Red
        'CRITICAL': '\033[35m',  # Magenta
    }
    RESET = '\033[0m'

    def __init__(self, use_color: bool = True):
        super().__init__()
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, '') if self.use_color else ''
        reset = self.RESET if self.use_color else ''
        timestamp = datetime.fromtimestamp(record.created).strftime('%Y-%m-%d %H:%M:%S')
        correlation_id = getattr(record, 'correlation_id', '-')

        formatted = f"{color}{timestamp} [{record.levelname:8}]{reset} "
        formatted += f"[{correlation_id[:8]}] "
        formatted += f"{record.name} - {record.getMessage()}"

        if record.exc_info:
            formatted += f"\n{self.formatException(record.exc_info)}"

        return formatted


def setup_logging(
    log_level: str = "INFO",
    enable_console: bool = True,
    enable_file: bool = False,
    enable_json: bool = False,
    log_dir: Optional[Path] = None,
    service_name: Optional[str] = None
) -> Dict[str, logging.Logger]:
    """
    Set up structured logging for the census CLI.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        enable_console: Enable console logging (stderr, so stdout stays clean)
        enable_file: Enable rotating text log files
        enable_json: Enable JSON structured logging
        log_dir: Directory for log files (defaults to PROJECT_ROOT/logs)
        service_name: Base name for log files

    Returns:
        Dictionary of configured loggers
    """
    level = getattr(logging, log_level.upper(), logging.INFO)
    service_name = service_name or "census"
    correlation_filter = CorrelationIdFilter()

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers.clear()

    if enable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(ColoredFormatter(use_color=sys.stderr.isatty()))
        console_handler.addFilter(correlation_filter)
        root_logger.addHandler(console_handler)

    if enable_file or enable_json:
        log_dir = Path(log_dir or LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)

    if enable_file:
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_dir / f"{service_name}.log",
            when='midnight',
            interval=1,
            backupCount=30,
            encoding='utf-8'
        )
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s [%(levelname)s] [%(correlation_id)s] %(name)s - %(message)s'
        ))
        file_handler.addFilter(correlation_filter)
        root_logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            filename=log_dir / f"{service_name}_errors.log",
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(logging.Formatter(
            '%(asctime)s [%(levelname)s] [%(correlation_id)s] %(name)s - %(message)s'
        ))
        error_handler.addFilter(correlation_filter)
        root_logger.addHandler(error_handler)

    if enable_json:
        json_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_dir / f"{service_name}_structured.jsonl",
            when='midnight',
            interval=1,
            backupCount=30,
            encoding='utf-8'
        )
        json_handler.setLevel(level)
        json_handler.setFormatter(StructuredFormatter())
        json_handler.addFilter(correlation_filter)
        root_logger.addHandler(json_handler)

    loggers = {
        'root': root_logger,
        'census': logging.getLogger('census_cli'),
        'free_group': logging.getLogger('free_group'),
        'cover_family': logging.getLogger('cover_family'),
        'schreier': logging.getLogger('schreier'),
        'hyperbolic': logging.getLogger('hyperbolic'),
    }
    loggers['_correlation_filter'] = correlation_filter

    return loggers


def _find_correlation_filter() -> Optional[CorrelationIdFilter]:
    for handler in logging.getLogger().handlers:
        for flt in handler.filters:
            if isinstance(flt, CorrelationIdFilter):
                return flt
    return None


def with_correlation_id(correlation_id: Optional[str] = None):
    """Decorator that tags every record emitted during the call with a run ID."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            correlation_filter = _find_correlation_filter()
            if correlation_filter is None:
                return func(*args, **kwargs)

            correlation_filter.set_correlation_id(correlation_id)
            try:
                return func(*args, **kwargs)
            finally:
                correlation_filter.clear_correlation_id()

        return wrapper
    return decorator


def log_performance(logger: Optional[logging.Logger] = None):
    """Decorator to log function duration and outcome."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            log = logger or logging.getLogger(func.__module__)
            start_time = time.perf_counter()

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start_time
                log.error(
                    f"Function {func.__name__} failed",
                    extra={
                        'function_name': func.__name__,
                        'duration_ms': round(elapsed * 1000, 2),
                        'status': 'error',
                        'error': str(e)
                    }
                )
                raise

            elapsed = time.perf_counter() - start_time
            log.info(
                f"Function {func.__name__} completed in {elapsed * 1000:.1f} ms",
                extra={
                    'function_name': func.__name__,
                    'duration_ms': round(elapsed * 1000, 2),
                    'status': 'success'
                }
            )
            return result

        return wrapper
    return decorator
