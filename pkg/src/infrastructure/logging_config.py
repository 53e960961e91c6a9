"""
Centralized Logging Configuration for the safer C library

Provides structured logging with:
- Per-operation context (current safer function, session)
- JSON formatting for log aggregation
- Multiple output handlers (console, rotating file, JSONL)

Handlers are attached to the package logger only, so importing the library
never reconfigures a host application's root logger.
"""

import json
import logging
import logging.handlers
import sys
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Optional

from src.core.types import Violation

PACKAGE_LOGGER = "src"

# Thread-local storage for context
_context = threading.local()


class OperationContextFilter(logging.Filter):
    """Add operation context to log records"""

    def filter(self, record):
        # Add context from thread-local storage
        record.function_name = getattr(_context, 'function_name', '-')
        record.session_id = getattr(_context, 'session_id', None)
        return True


class JSONFormatter(logging.Formatter):
    """Format logs as JSON for structured logging"""

    def format(self, record):
        log_data = {
            'timestamp': datetime.now().isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'function_name': getattr(record, 'function_name', None),
            'session_id': getattr(record, 'session_id', None),
        }

        # Add exception info if present
        if record.exc_info:
            log_data['exception'] = self.formatException(record.exc_info)

        # Add extra fields
        if hasattr(record, 'extra_data'):
            log_data['extra'] = record.extra_data

        return json.dumps(log_data)


class LoggingManager:
    """Centralized logging management for the library and its CLI"""

    def __init__(
        self,
        log_dir: Optional[Path] = None,
        console_level: int = logging.WARNING,
        file_level: int = logging.DEBUG,
        json_logging: bool = False,
    ):
        self.log_dir = Path(log_dir) if log_dir is not None else None
        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

        self.console_level = console_level
        self.file_level = file_level
        self.json_logging = json_logging

        # Session ID for this run's log files
        self.session_id = datetime.now().strftime("%Y%m%d_%H%M%S")

        # Initialize loggers dict
        self.loggers: dict[str, logging.Logger] = {}

        # Setup package logger
        self._setup_package_logger()

    def _setup_package_logger(self):
        """Configure the package logger"""
        package_logger = logging.getLogger(PACKAGE_LOGGER)
        package_logger.setLevel(logging.DEBUG)
        # Remove existing handlers
        package_logger.handlers.clear()

        # Shared context filter for every handler
        context_filter = OperationContextFilter()

        # Console handler (human-readable, stderr)
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.console_level)
        console_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - [%(function_name)s] - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        console_handler.setFormatter(console_formatter)
        console_handler.addFilter(context_filter)
        package_logger.addHandler(console_handler)

        if self.log_dir is None:
            return

        # File handler (detailed)
        file_handler = logging.handlers.RotatingFileHandler(
            self.log_dir / f"safec_{self.session_id}.log",
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
        file_handler.setLevel(self.file_level)
        file_handler.setFormatter(console_formatter)
        file_handler.addFilter(context_filter)
        package_logger.addHandler(file_handler)

        # JSON handler (for log aggregation)
        if self.json_logging:
            json_handler = logging.handlers.RotatingFileHandler(
                self.log_dir / f"safec_{self.session_id}.jsonl",
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5
            )
            json_handler.setLevel(self.file_level)
            json_handler.setFormatter(JSONFormatter())
            json_handler.addFilter(context_filter)
            package_logger.addHandler(json_handler)

    def get_logger(self, name: str) -> logging.Logger:
        """Get or create a logger for a specific component

        Args:
            name: Logger name (e.g., 'src.constraints.validator', 'src.ui.cli')

        Returns:
            Configured logger instance
        """
        if name not in self.loggers:
            self.loggers[name] = logging.getLogger(name)
        return self.loggers[name]

    def set_context(
        self,
        function_name: Optional[str] = None,
        session_id: Optional[str] = None,
    ):
        """Set logging context for current thread

        Args:
            function_name: Safer function currently executing
            session_id: Current session ID
        """
        if function_name is not None:
            _context.function_name = function_name
        if session_id is not None:
            _context.session_id = session_id

    def clear_context(self):
        """Clear logging context for current thread"""
        _context.function_name = '-'
        _context.session_id = None

    def log_violation(self, violation: Violation, code: int, level: int = logging.DEBUG):
        """Log a runtime-constraint violation with structured data

        Args:
            violation: The violation record
            code: Numeric code returned to the caller
            level: Log level (DEBUG keeps the console transcript clean)
        """
        logger = self.get_logger(f"{PACKAGE_LOGGER}.constraints")
        self.set_context(function_name=violation.function_name)

        details = {
            'function': violation.function_name,
            'param': violation.param_name,
            'pair_param': violation.pair_param_name,
            'kind': violation.kind.name,
            'code': code,
            'detail': violation.detail,
        }
        logger.log(level, f"Constraint violation: {violation.function_name}", extra={'extra_data': details})

    def log_operation(self, function_name: str, code: int, details: Optional[dict[str, Any]] = None):
        """Log the outcome of a safer operation

        Args:
            function_name: Operation name
            code: Returned error code (0 = success)
            details: Additional structured data
        """
        logger = self.get_logger(f"{PACKAGE_LOGGER}.operations")
        self.set_context(function_name=function_name)

        data = {'function': function_name, 'code': code, **(details or {})}
        level = logging.DEBUG if code == 0 else logging.INFO
        logger.log(level, f"Operation {function_name} returned {code}", extra={'extra_data': data})


# Global logging manager instance
_logging_manager: Optional[LoggingManager] = None


def get_logging_manager() -> LoggingManager:
    """Get the global logging manager instance"""
    global _logging_manager
    if _logging_manager is None:
        _logging_manager = LoggingManager()
    return _logging_manager


def init_logging(
    log_dir: Optional[Path] = None,
    console_level: int = logging.WARNING,
    file_level: int = logging.DEBUG,
    json_logging: bool = False,
) -> LoggingManager:
    """Initialize the global logging system

    Args:
        log_dir: Directory for log files (None = console only)
        console_level: Console output level
        file_level: File output level
        json_logging: Enable JSON structured logging

    Returns:
        LoggingManager instance
    """
    global _logging_manager
    _logging_manager = LoggingManager(
        log_dir=log_dir,
        console_level=console_level,
        file_level=file_level,
        json_logging=json_logging
    )
    return _logging_manager


# Convenience functions
def get_logger(name: str) -> logging.Logger:
    """Get a logger instance"""
    return get_logging_manager().get_logger(name)


def set_context(**kwargs):
    """Set logging context"""
    get_logging_manager().set_context(**kwargs)


def log_violation(violation: Violation, code: int):
    """Log a constraint violation"""
    get_logging_manager().log_violation(violation, code)


def log_operation(function_name: str, code: int, **details):
    """Log an operation outcome"""
    get_logging_manager().log_operation(function_name, code, details or None)
