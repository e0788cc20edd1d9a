"""Runtime tracking for suite runs: per-check latency and pass/fail counts."""

import time
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class MetricsCollector:
    """Collect and aggregate timing and verdict counts for one suite run."""

    run_id: str = ""
    start_time: float = field(default_factory=time.perf_counter)
    latencies: dict[str, float] = field(default_factory=dict)
    passed: int = 0
    failed: int = 0
    resource_failures: int = 0
    _timers: dict[str, float] = field(default_factory=dict)

    def start_timer(self, name: str) -> None:
        """Start a named timer."""
        self._timers[name] = time.perf_counter()

    def stop_timer(self, name: str) -> float:
        """Stop a named timer and record latency."""
        if name not in self._timers:
            return 0.0
        elapsed = time.perf_counter() - self._timers.pop(name)
        self.latencies[name] = elapsed
        return elapsed

    def record_verdict(self, verdict: bool, resource: bool = False) -> None:
        if verdict:
            self.passed += 1
        else:
            self.failed += 1
            if resource:
                self.resource_failures += 1

    @property
    def total_latency(self) -> float:
        """Total elapsed time since metrics collection started."""
        return time.perf_counter() - self.start_time

    def summary(self) -> dict[str, Any]:
        """Return a summary of all collected metrics."""
        slowest = max(self.latencies.items(), key=lambda item: item[1], default=("", 0.0))
        return {
            "run_id": self.run_id,
            "total_latency_s": round(self.total_latency, 3),
            "latencies": {k: round(v, 3) for k, v in self.latencies.items()},
            "slowest_check": slowest[0],
            "passed": self.passed,
            "failed": self.failed,
            "resource_failures": self.resource_failures,
        }


def create_metrics(run_id: Optional[str] = None) -> MetricsCollector:
    """Create a new metrics collector for a suite run."""
    return MetricsCollector(run_id=run_id or "")
