#!/usr/bin/env python3
"""
Unit tests for LoggingManager
"""

import json
import logging
import sys
import tempfile
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import ErrorKind
from src.core.types import Violation
from src.infrastructure.logging_config import (
    PACKAGE_LOGGER,
    JSONFormatter,
    LoggingManager,
    OperationContextFilter,
    get_logging_manager,
    init_logging,
)


@pytest.fixture
def temp_log_dir():
    """Create a temporary log directory"""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def record():
    return logging.LogRecord(
        name="test",
        level=logging.INFO,
        pathname="",
        lineno=0,
        msg="Test message",
        args=(),
        exc_info=None
    )


@pytest.fixture(autouse=True)
def restore_package_logger():
    """Managers replace the package logger's handlers; put them back afterwards."""
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    saved = list(package_logger.handlers)
    yield
    for handler in package_logger.handlers:
        if handler not in saved:
            handler.close()
    package_logger.handlers[:] = saved


class TestOperationContextFilter:
    """Test OperationContextFilter"""

    def test_filter_adds_defaults(self, temp_log_dir, record):
        LoggingManager(log_dir=temp_log_dir).clear_context()

        assert OperationContextFilter().filter(record) is True
        assert record.function_name == '-'
        assert record.session_id is None

    def test_filter_uses_thread_context(self, temp_log_dir, record):
        manager = LoggingManager(log_dir=temp_log_dir)
        manager.set_context(function_name="strcpy_s", session_id="s1")
        try:
            OperationContextFilter().filter(record)
        finally:
            manager.clear_context()

        assert record.function_name == "strcpy_s"
        assert record.session_id == "s1"


class TestJSONFormatter:
    """Test JSONFormatter"""

    def test_json_formatter_output(self, record):
        """Test that formatter outputs valid JSON"""
        record.function_name = "memcpy_s"
        record.session_id = "session_001"
        record.extra_data = {"code": 8}

        data = json.loads(JSONFormatter().format(record))

        assert data['level'] == 'INFO'
        assert data['message'] == 'Test message'
        assert data['function_name'] == 'memcpy_s'
        assert data['session_id'] == 'session_001'
        assert data['extra'] == {"code": 8}

    def test_json_formatter_with_exception(self):
        """Test formatter with exception info"""
        try:
            raise ValueError("Test error")
        except ValueError:
            exc_info = sys.exc_info()

        record = logging.LogRecord(
            name="test",
            level=logging.ERROR,
            pathname="",
            lineno=0,
            msg="Error occurred",
            args=(),
            exc_info=exc_info
        )

        data = json.loads(JSONFormatter().format(record))

        assert data['level'] == 'ERROR'
        assert 'Test error' in data['exception']


class TestLoggingManager:
    """Test LoggingManager"""

    def test_console_only_by_default(self):
        manager = LoggingManager()

        assert manager.log_dir is None
        assert manager.console_level == logging.WARNING
        assert manager.json_logging is False
        assert len(logging.getLogger(PACKAGE_LOGGER).handlers) == 1

    def test_console_handler_uses_stderr(self):
        LoggingManager()
        (handler,) = logging.getLogger(PACKAGE_LOGGER).handlers
        assert handler.stream is sys.stderr

    def test_root_logger_untouched(self, temp_log_dir):
        root_handlers = list(logging.getLogger().handlers)
        LoggingManager(log_dir=temp_log_dir, json_logging=True)
        assert logging.getLogger().handlers == root_handlers

    def test_get_logger_caches(self):
        manager = LoggingManager()
        logger = manager.get_logger("src.ui.cli")

        assert logger.name == "src.ui.cli"
        assert manager.get_logger("src.ui.cli") is logger
        assert "src.ui.cli" in manager.loggers

    def test_log_files_created(self, temp_log_dir):
        manager = LoggingManager(log_dir=temp_log_dir, json_logging=True)
        manager.get_logger(f"{PACKAGE_LOGGER}.test").info("Test message")

        assert list(temp_log_dir.glob("safec_*.log"))
        assert list(temp_log_dir.glob("safec_*.jsonl"))

    def test_log_violation_structured(self, temp_log_dir):
        manager = LoggingManager(log_dir=temp_log_dir, json_logging=True)
        violation = Violation(ErrorKind.OBJECTS_OVERLAP, "strcpy_s", "s1", "s2")

        manager.log_violation(violation, 8)
        manager.clear_context()

        (jsonl,) = temp_log_dir.glob("safec_*.jsonl")
        entries = [json.loads(line) for line in jsonl.read_text().splitlines()]
        (entry,) = [e for e in entries if e['message'].startswith("Constraint violation")]
        assert entry['function_name'] == "strcpy_s"
        assert entry['extra']['kind'] == "OBJECTS_OVERLAP"
        assert entry['extra']['pair_param'] == "s2"
        assert entry['extra']['code'] == 8

    def test_log_operation_levels(self, caplog):
        manager = LoggingManager()
        with caplog.at_level(logging.DEBUG, logger=PACKAGE_LOGGER):
            manager.log_operation("strnlen_s", 0)
            manager.log_operation("strcat_s", 2, {"s1max": 4})
        manager.clear_context()

        levels = [(r.levelno, r.getMessage()) for r in caplog.records]
        assert (logging.DEBUG, "Operation strnlen_s returned 0") in levels
        assert (logging.INFO, "Operation strcat_s returned 2") in levels
        assert caplog.records[-1].extra_data == {'function': 'strcat_s', 'code': 2, 's1max': 4}


class TestGlobalFunctions:
    """Test global helper functions"""

    def test_get_logging_manager(self):
        assert isinstance(get_logging_manager(), LoggingManager)

    def test_init_logging(self, temp_log_dir):
        manager = init_logging(log_dir=temp_log_dir)

        assert get_logging_manager() is manager
        assert manager.log_dir == temp_log_dir


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
