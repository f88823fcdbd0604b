import logging
import numbers
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Outcome of one verification suite on one shape, or on a sweep of shapes."""
    suite: str
    shape: Optional[str] = None
    checked: int = 0
    skipped: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: str, expected: Any, actual: Any):
        logger.debug(f"[{self.suite}] {self.shape} {case}: expected {expected!r}, got {actual!r}")
        self.failures.append({"case": case, "expected": to_jsonable(expected), "actual": to_jsonable(actual)})

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        """Folds a per-shape report into a sweep report; failure case ids gain the shape prefix."""
        self.checked += other.checked
        self.skipped += other.skipped
        for f in other.failures:
            prefix = f"{other.shape}:" if other.shape and self.shape != other.shape else ""
            self.failures.append({**f, "case": prefix + f["case"]})
        self.elapsed_ms += other.elapsed_ms
        return self

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "shape": self.shape,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def merge_reports(suite: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    total = VerificationReport(suite)
    for r in reports:
        total.merge(r)
    return total


def to_jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, dict):
        return {(str(tuple(k)) if isinstance(k, tuple) else str(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    return str(value)


@contextmanager
def timed(label: str):
    start_time = time.time()
    yield
    end_time = time.time()
    logger.info(f"--- {label} finished in {end_time - start_time:.2f} seconds ---")
