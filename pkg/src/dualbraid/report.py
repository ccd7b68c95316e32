"""Verification reports shared by the library checks and the CLI."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class Report:
    type: str
    check: str
    instances: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, item) -> None:
        self.failures.append(item)

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "type": self.type,
            "check": self.check,
            "instances": self.instances,
            "failures": [_plain(f) for f in self.failures],
            "passed": self.passed,
            "details": _plain(self.details),
        }
        if timings:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


@contextmanager
def timed(report: Report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.wall_time = time.perf_counter() - start
