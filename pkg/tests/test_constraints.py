#!/usr/bin/env python3
"""
Unit tests for the constraint engine: handler registry, built-in handlers,
diagnostic rendering and validators
"""

import io
import sys
import threading
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.constraints.diagnostics import (
    ByteStreamSink,
    CaptureSink,
    StderrSink,
    get_diagnostic_sink,
    render_message,
    set_diagnostic_sink,
)
from src.constraints.handlers import (
    DEFAULT,
    abort_handler,
    clear_last_error,
    get_abort_status,
    get_constraint_handler,
    get_last_error,
    ignore_handler,
    resolve_handler,
    set_abort_status,
    set_constraint_handler,
)
from src.constraints.validator import (
    record_outcome,
    report_format_violation,
    report_token_end_not_found,
    report_violation,
    validate_no_overlap,
    validate_not_null,
    validate_not_zero,
    validate_rsize_limit,
    validate_value_in_range,
)
from src.core.errors import ErrorKind
from src.core.sizes import RSIZE_MAX
from src.core.types import MemRegion, ValueRange, Violation
from src.infrastructure.metrics import get_metrics


class TestHandlerRegistry:
    """Test set_constraint_handler"""

    def test_default_is_abort(self):
        assert get_constraint_handler() is abort_handler

    def test_set_returns_previous(self):
        assert set_constraint_handler(ignore_handler) is abort_handler

    def test_round_trip(self):
        def h1(message, violation, code):
            pass

        def h2(message, violation, code):
            pass

        set_constraint_handler(h1)
        assert set_constraint_handler(h2) is h1
        assert set_constraint_handler(h1) is h2

    def test_default_sentinel_restores_abort(self):
        set_constraint_handler(ignore_handler)
        set_constraint_handler(DEFAULT)
        assert get_constraint_handler() is abort_handler

    def test_rejects_non_callable(self):
        with pytest.raises(TypeError):
            set_constraint_handler(42)

    def test_resolve_handler(self):
        assert resolve_handler("ignore") is ignore_handler
        assert resolve_handler("abort") is abort_handler
        with pytest.raises(ValueError):
            resolve_handler("explode")

    def test_concurrent_replacement(self):
        """Concurrent set calls never lose a handler"""
        handlers = [lambda m, v, c: None for _ in range(32)]
        seen = []
        lock = threading.Lock()

        def swap(h):
            previous = set_constraint_handler(h)
            with lock:
                seen.append(previous)

        threads = [threading.Thread(target=swap, args=(h,)) for h in handlers]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        final = get_constraint_handler()
        # Every handler except the final one was returned exactly once, plus the initial one
        assert sorted(map(id, seen + [final])) == sorted(map(id, handlers + [abort_handler]))


class TestBuiltinHandlers:
    """Test abort_handler and ignore_handler"""

    def test_abort_writes_then_exits(self, diagnostics):
        with pytest.raises(SystemExit) as exc_info:
            validate_not_null("strcpy_s", "s2", False)
        assert exc_info.value.code == 134
        assert diagnostics.lines == ["strcpy_s(): has invalid NULL pointer argument : s2"]

    def test_abort_status_configurable(self, diagnostics):
        set_abort_status(7)
        assert get_abort_status() == 7
        with pytest.raises(SystemExit) as exc_info:
            validate_not_zero("f", "n", 0)
        assert exc_info.value.code == 7

    def test_abort_from_worker_thread_exits_process(self, diagnostics, mocker):
        exit_mock = mocker.patch("src.constraints.handlers.os._exit")
        mocker.patch("src.constraints.handlers.logging.shutdown")
        set_abort_status(9)
        worker = threading.Thread(target=validate_not_null, args=("strcat_s", "s1", False))
        worker.start()
        worker.join()
        exit_mock.assert_called_once_with(9)
        assert diagnostics.lines == ["strcat_s(): has invalid NULL pointer argument : s1"]

    def test_abort_status_range(self):
        with pytest.raises(ValueError):
            set_abort_status(0)
        with pytest.raises(ValueError):
            set_abort_status(256)

    def test_ignore_writes_and_returns(self, ignoring):
        assert validate_not_null("strcpy_s", "s2", False) == 1
        assert ignoring.lines == ["strcpy_s(): has invalid NULL pointer argument : s2"]


class TestDiagnostics:
    """Test message rendering and sinks"""

    def test_plain_grammar(self):
        v = Violation(ErrorKind.RSIZE_MAX_EXCEEDED, "strcat_s", "s1max")
        assert render_message(v) == "strcat_s(): rsize_t value exceeds RSIZE_MAX : s1max"

    def test_pair_grammar(self):
        v = Violation(ErrorKind.OBJECTS_OVERLAP, "strncat_s", "s1", pair_param_name="s2")
        assert render_message(v) == "strncat_s(): two data structures overlap in memory : s1 and s2"

    def test_format_grammar(self):
        v = Violation(ErrorKind.INVALID_FORMAT_PARAMETER_S, "printf_s", "format", detail="NULL argument for %s")
        assert render_message(v) == "printf_s(): invalid format parameter (NULL argument for %s)"
        v = Violation(ErrorKind.INVALID_FORMAT_PARAMETER_N, "printf_s", "format")
        assert render_message(v) == "printf_s(): invalid format parameter (%n)"

    def test_stderr_sink(self, capsys):
        StderrSink().write_line("x(): y : z")
        assert capsys.readouterr().err == "x(): y : z\n"

    def test_byte_stream_sink(self):
        stream = io.BytesIO()
        ByteStreamSink(stream).write_line("f(): m : p")
        assert stream.getvalue() == b"f(): m : p\n"

    def test_set_sink_returns_previous(self, diagnostics):
        other = CaptureSink()
        assert set_diagnostic_sink(other) is diagnostics
        assert get_diagnostic_sink() is other
        previous = set_diagnostic_sink(None)
        assert previous is other
        assert isinstance(get_diagnostic_sink(), StderrSink)


class TestReportViolation:
    """Test report_violation"""

    def test_overlap_example(self, ignoring):
        v = Violation(ErrorKind.OBJECTS_OVERLAP, "strncat_s", "s1", pair_param_name="s2")
        assert report_violation(v) == 8
        assert ignoring.lines == ["strncat_s(): two data structures overlap in memory : s1 and s2"]

    def test_token_example(self, ignoring):
        assert report_violation(Violation(ErrorKind.TOKEN_END_NOT_FOUND, "strtok_s", "*ptr")) == 10
        assert ignoring.lines == ["strtok_s(): token end not found within defined bounds : *ptr"]

    def test_noerror_rejected(self):
        with pytest.raises(ValueError):
            report_violation(Violation(ErrorKind.NOERROR))

    def test_handler_receives_record(self, counting):
        v = Violation(ErrorKind.NULL_PARAMETER_NOT_ALLOWED, "memmove_s", "s2")
        report_violation(v)
        message, violation, code = counting.calls[0]
        assert message == "memmove_s(): has invalid NULL pointer argument : s2"
        assert violation == v
        assert code == 1

    def test_sets_last_error(self, counting):
        clear_last_error()
        validate_rsize_limit("f", "n", -1)
        assert get_last_error() == 6

    def test_last_error_is_per_thread(self, counting):
        validate_not_zero("f", "n", 0)
        seen = []
        t = threading.Thread(target=lambda: seen.append(get_last_error()))
        t.start()
        t.join()
        assert seen == [0]
        assert get_last_error() == 7

    def test_metrics_recorded(self, counting):
        validate_not_null("strcpy_s", "s2", False)
        validate_not_null("strcpy_s", "s1", False)
        metrics = get_metrics()
        assert metrics.violation_count("strcpy_s", "NULL_PARAMETER_NOT_ALLOWED") == 2
        assert metrics.registry.get_sample_value(
            "safec_handler_invocations_total", {"handler": "counting"}
        ) == 2

    def test_record_outcome_skips_handler(self, counting):
        assert record_outcome("getenv_s", 3) == 3
        assert counting.count == 0
        assert get_last_error() == 3


class TestValidators:
    """Test the validator suite"""

    def test_not_null(self, counting):
        assert validate_not_null("strcpy_s", "s2", True) == 0
        assert validate_not_null("strcpy_s", "s2", False) == 1
        assert counting.messages == ["strcpy_s(): has invalid NULL pointer argument : s2"]

    def test_value_in_range_exhaustive(self, counting):
        r = ValueRange(3, 7)
        for value in range(21):
            expected = 0 if 3 <= value <= 7 else 2
            assert validate_value_in_range("f", "v", value, r) == expected
        assert counting.count == 21 - 5

    def test_value_in_range_examples(self, counting):
        assert validate_value_in_range("f", "v", 5, ValueRange(1, 10)) == 0
        assert validate_value_in_range("f", "v", 0, ValueRange(1, 10)) == 2
        assert validate_value_in_range("f", "v", 10, ValueRange(1, 10)) == 0

    def test_not_zero(self, counting):
        assert validate_not_zero("f", "n", 1) == 0
        assert validate_not_zero("f", "n", 0) == 7
        assert validate_not_zero("f", "n", RSIZE_MAX) == 0

    def test_rsize_limit(self, counting):
        assert validate_rsize_limit("strcat_s", "s1max", -1) == 6
        assert counting.messages == ["strcat_s(): rsize_t value exceeds RSIZE_MAX : s1max"]
        assert validate_rsize_limit("f", "n", RSIZE_MAX) == 0
        assert validate_rsize_limit("f", "n", RSIZE_MAX + 1) == 6

    def test_no_overlap(self, counting):
        base = 0x4000
        assert validate_no_overlap("strncat_s", "s1 and s2", MemRegion(base, 1024), MemRegion(base - 10, 50)) == 8
        assert counting.messages == ["strncat_s(): two data structures overlap in memory : s1 and s2"]
        assert validate_no_overlap("f", ("a", "b"), MemRegion(0, 10), MemRegion(10, 10)) == 0
        assert validate_no_overlap("f", ("a", "b"), MemRegion(5, 0), MemRegion(5, 0)) == 0
        assert validate_no_overlap("f", ("a", "b"), MemRegion(0, 10), None) == 0

    @pytest.mark.slow
    def test_no_overlap_exhaustive_grid(self, counting):
        """Every region pair over a small address space agrees with a set oracle"""
        regions = [MemRegion(b, n) for b in range(17) for n in range(17)]
        expected_count = 0
        for a in regions:
            cells_a = set(range(a.base, a.end))
            for b in regions:
                overlapping = bool(cells_a & set(range(b.base, b.end)))
                expected_count += overlapping
                assert validate_no_overlap("f", ("s1", "s2"), a, b) == (8 if overlapping else 0)
                assert counting.count == expected_count
        assert set(counting.codes) == {8}

    def test_token_end_not_found(self, counting):
        assert report_token_end_not_found("strtok_s", "*ptr") == 10
        assert counting.messages == ["strtok_s(): token end not found within defined bounds : *ptr"]

    def test_format_violation_requires_format_kind(self, counting):
        assert report_format_violation("printf_s", ErrorKind.INVALID_FORMAT_PARAMETER_N, "%n") == 5
        with pytest.raises(ValueError):
            report_format_violation("printf_s", ErrorKind.OBJECTS_OVERLAP, "x")

    def test_success_path_is_silent(self, counting, diagnostics):
        validate_not_null("f", "p", True)
        validate_value_in_range("f", "p", 1, ValueRange(0, 1))
        validate_not_zero("f", "p", 1)
        validate_rsize_limit("f", "p", 1)
        validate_no_overlap("f", "a and b", MemRegion(0, 1), MemRegion(1, 1))
        assert counting.count == 0
        assert diagnostics.lines == []

    def test_validators_are_pure(self, counting):
        validate_rsize_limit("f", "n", -1)
        validate_rsize_limit("f", "n", -1)
        first, second = counting.calls
        assert first[1] == second[1]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
