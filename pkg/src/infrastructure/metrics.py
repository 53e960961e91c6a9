"""
Prometheus Metrics for the constraint engine

Exposes metrics for:
- Runtime-constraint violations per function and kind
- Constraint handler invocations
- Format lint results
- Demo transcript runs
"""

import time
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    Info,
    write_to_textfile,
)

from src.core.types import Violation


class ConstraintMetrics:
    """Prometheus metrics for the safer library"""

    def __init__(self, registry: Optional[CollectorRegistry] = None):
        self.registry = registry or CollectorRegistry()

        self.violations = Counter(
            'safec_violations_total',
            'Runtime-constraint violations detected',
            ['function', 'kind'],
            registry=self.registry
        )

        self.handler_invocations = Counter(
            'safec_handler_invocations_total',
            'Constraint handler invocations',
            ['handler'],
            registry=self.registry
        )

        self.lint_lines = Counter(
            'safec_lint_lines_total',
            'Format strings audited by the lint command',
            ['status'],  # status: ok|violation
            registry=self.registry
        )

        self.demo_duration = Histogram(
            'safec_demo_duration_seconds',
            'Time to replay a demo transcript',
            ['target'],
            registry=self.registry
        )

        self.build_info = Info(
            'safec_build',
            'Library build metadata',
            registry=self.registry
        )

    def record_violation(self, violation: Violation, handler: str):
        """Record a violation and the handler it was routed to"""
        self.violations.labels(function=violation.function_name, kind=violation.kind.name).inc()
        self.handler_invocations.labels(handler=handler).inc()

    def record_lint_line(self, ok: bool):
        self.lint_lines.labels(status='ok' if ok else 'violation').inc()

    def violation_count(self, function: str, kind: str) -> float:
        """Current counter value, mainly for tests and summaries"""
        value = self.registry.get_sample_value(
            'safec_violations_total', {'function': function, 'kind': kind}
        )
        return value or 0.0

    @contextmanager
    def track_demo(self, target: str):
        """Context manager to time a demo run"""
        start = time.time()
        try:
            yield
        finally:
            self.demo_duration.labels(target=target).observe(time.time() - start)

    def register_build(self, version: str, **metadata):
        """Register build metadata"""
        self.build_info.info({'version': version, **{k: str(v) for k, v in metadata.items()}})

    def export_to_file(self, filename: Path):
        """Export metrics to a file for node-exporter textfile collector"""
        Path(filename).parent.mkdir(parents=True, exist_ok=True)
        write_to_textfile(str(filename), self.registry)


# Global metrics instance
_metrics: Optional[ConstraintMetrics] = None


def get_metrics() -> ConstraintMetrics:
    """Get the global metrics instance"""
    global _metrics
    if _metrics is None:
        _metrics = ConstraintMetrics()
    return _metrics


def init_metrics(registry: Optional[CollectorRegistry] = None) -> ConstraintMetrics:
    """Initialize the global metrics system"""
    global _metrics
    _metrics = ConstraintMetrics(registry=registry)
    return _metrics


def record_violation(violation: Violation, handler: str):
    """Record a violation"""
    get_metrics().record_violation(violation, handler)
