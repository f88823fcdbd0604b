import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from config import (
    DEFAULT_Q_DEGREE,
    DEFAULT_SWEEP_MAX_SIZE,
    FORMULA_SWEEP_MAX_SIZE,
    HG_EXHAUSTIVE_MAX_ENTRY,
    HG_EXHAUSTIVE_MAX_SIZE,
    HG_RANDOM_COUNT,
    HG_RANDOM_MAX_ENTRY,
    HG_RANDOM_MAX_SIZE,
    LITTLEWOOD_Q_DEGREE,
    Q_SWEEP_MAX_SIZE,
    RESTRICTED_ARRAY_MAX_ENTRY,
    RESTRICTED_MAX_ENTRY,
    RESTRICTED_MAX_SIZE,
    SKEWHOOK_SEED,
    SKEWHOOK_THREADS,
)
from counting_lib import (
    verify_formulas,
    verify_leading_terms,
    verify_littlewood,
    verify_ne_excited,
    verify_qnhlf,
    verify_special_shapes,
    verify_term_counts,
)
from errors import PreconditionError
from hillman_grassl_lib import (
    verify_additivity, verify_phi_vs_hg, verify_random_roundtrips, verify_restricted, verify_roundtrip,
    verify_straight_additivity,
)
from phi_lib import verify_bijection, verify_commutation
from report_lib import VerificationReport, merge_reports, timed
from shape_lib import SkewShape, is_connected, is_slim, skew_shapes
from strip_lib import verify_gamma_theta
from tableau_lib import verify_characterization

logger = logging.getLogger(__name__)


@dataclass
class SuiteOptions:
    degree: Optional[int] = None
    seed: int = SKEWHOOK_SEED
    random_count: int = HG_RANDOM_COUNT


@dataclass(frozen=True)
class Suite:
    """A named theorem check: a per-shape runner, the sweep it runs on, and which shapes it accepts."""
    name: str
    check: Callable[[SkewShape, SuiteOptions], VerificationReport]
    default_size: int
    applies: Callable[[SkewShape], bool] = field(default=lambda s: True)
    straight_only: bool = False
    once: Optional[Callable[[SuiteOptions], VerificationReport]] = None


# --- Per-Shape Runners ---

def _straight(s: SkewShape):
    if s.inner.parts:
        raise PreconditionError(f"Suite needs a straight shape, got {s}")


def _check_littlewood(s: SkewShape, options: SuiteOptions) -> VerificationReport:
    _straight(s)
    return verify_littlewood(s.outer, options.degree if options.degree is not None else LITTLEWOOD_Q_DEGREE)


def _check_roundtrip(s: SkewShape, options: SuiteOptions) -> VerificationReport:
    _straight(s)
    return verify_roundtrip(s.outer, HG_EXHAUSTIVE_MAX_ENTRY)


def _check_straight_additivity(s: SkewShape, options: SuiteOptions) -> VerificationReport:
    _straight(s)
    return verify_straight_additivity(s.outer, HG_EXHAUSTIVE_MAX_ENTRY)


def _random_roundtrips(options: SuiteOptions) -> VerificationReport:
    return verify_random_roundtrips(options.seed, options.random_count, HG_RANDOM_MAX_SIZE, HG_RANDOM_MAX_ENTRY)


def _special_shapes(options: SuiteOptions) -> VerificationReport:
    return verify_special_shapes()


SUITES: Dict[str, Suite] = {suite.name: suite for suite in [
    Suite('gamma-theta', lambda s, o: verify_gamma_theta(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('commutation', lambda s, o: verify_commutation(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('bijection', lambda s, o: verify_bijection(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('characterization', lambda s, o: verify_characterization(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('phi-hg', lambda s, o: verify_phi_vs_hg(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('restricted-hg',
          lambda s, o: verify_restricted(s, RESTRICTED_MAX_ENTRY, RESTRICTED_ARRAY_MAX_ENTRY),
          RESTRICTED_MAX_SIZE),
    Suite('additivity', lambda s, o: verify_additivity(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('qnhlf',
          lambda s, o: verify_qnhlf(s, o.degree if o.degree is not None else DEFAULT_Q_DEGREE),
          Q_SWEEP_MAX_SIZE),
    Suite('littlewood', _check_littlewood, Q_SWEEP_MAX_SIZE, straight_only=True),
    Suite('leading-terms', lambda s, o: verify_leading_terms(s), DEFAULT_SWEEP_MAX_SIZE, is_connected),
    Suite('term-counts', lambda s, o: verify_term_counts(s), FORMULA_SWEEP_MAX_SIZE, is_connected),
    Suite('formulas', lambda s, o: verify_formulas(s), FORMULA_SWEEP_MAX_SIZE),
    Suite('hg-roundtrip', _check_roundtrip, HG_EXHAUSTIVE_MAX_SIZE, straight_only=True, once=_random_roundtrips),
    Suite('straight-additivity', _check_straight_additivity, HG_EXHAUSTIVE_MAX_SIZE, straight_only=True),
    Suite('ne-excited', lambda s, o: verify_ne_excited(s), DEFAULT_SWEEP_MAX_SIZE,
          lambda s: is_connected(s) and is_slim(s)),
    Suite('special-shapes', lambda s, o: verify_special_shapes(), 0, straight_only=True, once=_special_shapes),
]}


# --- Runners ---

def _map_shapes(fn: Callable[[SkewShape], VerificationReport], shapes: List[SkewShape]) -> List[VerificationReport]:
    """Runs fn over the shapes; results keep the input order for any thread count."""
    if SKEWHOOK_THREADS == 1:
        return [fn(s) for s in shapes]
    with ThreadPoolExecutor(max_workers=SKEWHOOK_THREADS) as executor:
        return list(executor.map(fn, shapes))


def run_on_shape(name: str, s: SkewShape, options: Optional[SuiteOptions] = None) -> VerificationReport:
    suite = SUITES[name]
    options = options or SuiteOptions()
    logger.info(f"Running suite '{name}' on {s}")
    with timed(f"suite {name}"):
        return suite.check(s, options)


def run_sweep(name: str, max_size: Optional[int] = None, options: Optional[SuiteOptions] = None) -> VerificationReport:
    """Runs a suite over every shape up to max_size; shapes the suite does not accept count as skipped."""
    suite = SUITES[name]
    options = options or SuiteOptions()
    size = suite.default_size if max_size is None else max_size
    start_time = time.time()

    with timed(f"suite {name}"):
        shapes = skew_shapes(size, straight_only=suite.straight_only) if size > 0 else []
        accepted = [s for s in shapes if suite.applies(s)]
        skipped = len(shapes) - len(accepted)
        logger.info(f"Running suite '{name}' on {len(accepted)} shapes (|lambda| <= {size}, {skipped} skipped)")
        reports = _map_shapes(lambda s: suite.check(s, options), accepted)
        if suite.once is not None:
            reports.append(suite.once(options))
        report = merge_reports(name, reports)
        report.skipped += skipped

    report.elapsed_ms = (time.time() - start_time) * 1000.0
    if report.passed:
        logger.info(f"Suite '{name}' passed: {report.checked} checks")
    else:
        logger.warning(f"Suite '{name}' failed: {len(report.failures)} of {report.checked} checks")
    return report
