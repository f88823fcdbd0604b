import logging
import time
from collections import Counter
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from config import SKEWHOOK_DEBUG
from errors import PreconditionError, StructuralError
from excited_lib import ExcitedDiagram, enumerate_excited, excited_array
from phi_lib import phi, phi_inverse
from report_lib import VerificationReport
from shape_lib import Cell, LambdaArray, Partition, SkewShape, hook, partitions
from strip_lib import lascoux_pragacz, require_connected
from tableau_lib import SkewTableau, enumerate_min_via_moves, enumerate_ssyt

logger = logging.getLogger(__name__)


# --- Types ---

def _is_rpp(rows: List[List[int]]) -> bool:
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if j > 0 and row[j - 1] > v:
                return False
            if i > 0 and rows[i - 1][j] > v:
                return False
    return True


class RppLambda(LambdaArray):
    """Reverse plane partition of shape lambda: rows and columns weakly increase."""

    def __init__(self, outer: Partition, values: Optional[np.ndarray] = None):
        super().__init__(outer, values)
        if not _is_rpp(self.rows()):
            raise PreconditionError(f"Filling {self.rows()} is not a reverse plane partition")


class WeightArray(LambdaArray):
    """Nonnegative array on [lambda]; its hook weight matches the size of the RPP it encodes."""


# --- Forward Map ---

def _start_cell(rows: List[List[int]], outer: Partition) -> Optional[Cell]:
    """Nonzero cell of minimal column, lowest in that column."""
    for j in range(1, outer.part(1) + 1):
        for i in range(outer.conjugate.part(j), 0, -1):
            if rows[i - 1][j - 1] > 0:
                return Cell(i, j)
    return None


def _forward_path(rows: List[List[int]], outer: Partition, start: Cell) -> List[Cell]:
    a, b = start
    path = [start]
    while True:
        v = rows[a - 1][b - 1]
        if a > 1 and rows[a - 2][b - 1] == v:
            a -= 1
        elif b < outer.part(a):
            b += 1
        else:
            return path
        path.append(Cell(a, b))


def hg_passes(p: RppLambda) -> Iterator[Tuple[Cell, List[Cell]]]:
    """Yields each extracted unit with the path removed for it, in extraction order."""
    outer = p.outer
    rows = p.rows()
    while True:
        start = _start_cell(rows, outer)
        if start is None:
            return
        path = _forward_path(rows, outer, start)
        u = Cell(path[-1].row, start.col)
        if len(path) != hook(outer, u):
            raise StructuralError(f"Path for unit {tuple(u)} has length {len(path)}, hook is {hook(outer, u)}")
        for c in path:
            rows[c.row - 1][c.col - 1] -= 1
        if SKEWHOOK_DEBUG and not _is_rpp(rows):
            raise StructuralError(f"Pass at {tuple(u)} left a non-RPP filling {rows}")
        logger.debug(f"HG pass: unit {tuple(u)}, path length {len(path)}")
        yield u, path


def hg_forward(p: RppLambda) -> WeightArray:
    units = Counter(u for u, _ in hg_passes(p))
    return WeightArray.from_cells(p.outer, units)


# --- Inverse Map ---

def _inverse_path(rows: List[List[int]], outer: Partition, u: Cell) -> List[Cell]:
    a, b = u.row, outer.part(u.row)
    path = [Cell(a, b)]
    while True:
        v = rows[a - 1][b - 1]
        if a < outer.length and b <= outer.part(a + 1) and rows[a][b - 1] == v:
            a += 1
        elif b > u.col:
            b -= 1
        else:
            return path
        path.append(Cell(a, b))


def hg_inverse(a: WeightArray) -> RppLambda:
    """Adds back one reverse path per unit, columns right to left and top to bottom within a column."""
    outer = a.outer
    rows = [[0] * p for p in outer.parts]
    units = a.entries()
    for u in sorted(units, key=lambda c: (-c.col, c.row)):
        for _ in range(units[u]):
            path = _inverse_path(rows, outer, u)
            if len(path) != hook(outer, u):
                raise StructuralError(f"Reverse path for unit {tuple(u)} has length {len(path)}")
            for c in path:
                rows[c.row - 1][c.col - 1] += 1
    return RppLambda.from_rows(outer, rows)


# --- Skew Tableaux Inside [lambda] ---

def embed(t: SkewTableau) -> RppLambda:
    """The tableau as an RPP of shape lambda, zero on [mu]."""
    return RppLambda.from_cells(t.shape.outer, dict(t.items()))


def is_embedded_ssyt(p: LambdaArray, s: SkewShape) -> bool:
    """Zero on [mu] and strictly increasing down the columns of [lambda/mu]."""
    if p.outer != s.outer:
        return False
    if any(p[c] for c in s.inner.cells()):
        return False
    return all(p[Cell(c.row - 1, c.col)] < p[c] for c in s.cells if Cell(c.row - 1, c.col) in s.cell_set)


def _fits(a: LambdaArray, d: ExcitedDiagram) -> bool:
    support = a.support()
    return not (support & d.cells) and d.broken <= support


def classify_restricted(a: WeightArray, s: SkewShape) -> ExcitedDiagram:
    """The unique excited diagram D with support(a) off D and a positive on Br(D)."""
    matches = [d for d in enumerate_excited(s) if _fits(a, d)]
    if not matches:
        raise StructuralError(f"Array {a.rows()} lies outside the restricted image for {s}")
    if len(matches) > 1:
        raise StructuralError(f"Array {a.rows()} fits {len(matches)} excited diagrams of {s}")
    return matches[0]


def strip_restriction(t: SkewTableau, i: int) -> RppLambda:
    """T on theta_i as an RPP of lambda with theta_1, ..., theta_(i-1) peeled off."""
    s = t.shape
    require_connected(s)
    theta = lascoux_pragacz(s)
    strip = theta.strip(i)
    peeled = {c for k in range(1, i) for c in theta.strip(k).cells}
    parts = []
    for r in range(1, s.outer.length + 1):
        kept = [j for j in range(1, s.outer.part(r) + 1) if Cell(r, j) not in peeled]
        if kept != list(range(1, len(kept) + 1)):
            raise StructuralError(f"Peeling {i - 1} strips from ({s.outer}) does not leave a partition")
        if kept:
            parts.append(len(kept))
    return RppLambda.from_cells(Partition(tuple(parts)), {c: t[c] for c in strip.cells})


# --- Verification ---

def verify_phi_vs_hg(s: SkewShape) -> VerificationReport:
    """hg_inverse(A_D) = embed(Phi(D)) and, conversely, hg_forward recovers A_D."""
    start_time = time.time()
    report = VerificationReport("phi-hg", s.text())
    require_connected(s)
    for d in enumerate_excited(s):
        report.checked += 1
        case = f"D={[tuple(c) for c in d.sorted_cells()]}"
        a_d = excited_array(d)
        expected = embed(phi(d))
        actual = hg_inverse(WeightArray(a_d.outer, a_d.values))
        if actual != expected:
            report.fail(f"{case}/inverse", expected.rows(), actual.rows())
        forward = hg_forward(expected)
        if forward != a_d:
            report.fail(f"{case}/forward", a_d.rows(), forward.rows())
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_additivity(s: SkewShape) -> VerificationReport:
    """Per-strip HG arrays sit on Br(D) cut by gamma_i(D) and, shifted back by epsilon_i, sum to HG(T)."""
    start_time = time.time()
    report = VerificationReport("additivity", s.text())
    require_connected(s)
    theta = lascoux_pragacz(s)
    for t in enumerate_min_via_moves(s):
        d = phi_inverse(t)
        case = f"T={list(t.entries)}"
        aligned: Dict[Cell, int] = Counter()
        for strip in theta.strips:
            report.checked += 1
            eps = strip.epsilon
            piece = hg_forward(strip_restriction(t, strip.index)).entries()
            on_path = set(d.gammas[strip.index - 1])
            expected = {c.shifted(-eps, -eps): 1 for c in d.broken if c in on_path}
            if piece != expected:
                report.fail(f"{case}/strip-{strip.index}", expected, piece)
            for c, v in piece.items():
                aligned[c.shifted(eps, eps)] += v
        whole = hg_forward(embed(t)).entries()
        if dict(aligned) != whole:
            report.fail(f"{case}/sum", whole, dict(aligned))
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def _arrays_for(d: ExcitedDiagram, max_entry: int) -> Iterator[WeightArray]:
    """Every array supported off D, positive on Br(D), with entries at most max_entry."""
    outer = d.shape.outer
    free = [c for c in outer.cells() if c not in d.cells]
    ranges = [range(1, max_entry + 1) if c in d.broken else range(0, max_entry + 1) for c in free]
    for values in product(*ranges):
        yield WeightArray.from_cells(outer, dict(zip(free, values)))


def verify_restricted(s: SkewShape, max_entry: int, array_max_entry: int) -> VerificationReport:
    """HG of every embedded skew SSYT lands in exactly one class, and every class inverts to a skew SSYT."""
    start_time = time.time()
    report = VerificationReport("restricted-hg", s.text())
    for t in enumerate_ssyt(s, max_entry):
        report.checked += 1
        a = hg_forward(embed(t))
        try:
            classify_restricted(a, s)
        except StructuralError as e:
            report.fail(f"T={list(t.entries)}", "unique excited diagram", str(e))
    for d in enumerate_excited(s):
        for a in _arrays_for(d, array_max_entry):
            report.checked += 1
            p = hg_inverse(a)
            if not is_embedded_ssyt(p, s):
                report.fail(f"D={[tuple(c) for c in d.sorted_cells()]}/A={a.rows()}", "embedded skew SSYT", p.rows())
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


# --- Round Trips ---

def enumerate_rpp(outer: Partition, max_entry: int) -> Iterator[RppLambda]:
    cells = outer.cells()
    for values in product(range(max_entry + 1), repeat=len(cells)):
        rows = [[0] * p for p in outer.parts]
        for c, v in zip(cells, values):
            rows[c.row - 1][c.col - 1] = v
        if _is_rpp(rows):
            yield RppLambda.from_rows(outer, rows)


def random_rpp(rng: np.random.Generator, outer: Partition, max_entry: int) -> RppLambda:
    """Random entries made weakly increasing by running maxima along rows, then down columns."""
    width = outer.part(1)
    values = np.zeros((outer.length, width), dtype=np.int64)
    for i, p in enumerate(outer.parts):
        values[i, :p] = np.maximum.accumulate(rng.integers(0, max_entry + 1, size=p))
    for j, h in enumerate(outer.conjugate.parts):
        values[:h, j] = np.maximum.accumulate(values[:h, j])
    return RppLambda(outer, values)


def random_weight_array(rng: np.random.Generator, outer: Partition, max_entry: int) -> WeightArray:
    width = outer.part(1)
    values = rng.integers(0, max_entry + 1, size=(outer.length, width))
    for i, p in enumerate(outer.parts):
        values[i, p:] = 0
    return WeightArray(outer, values)


def _check_roundtrip(report: VerificationReport, p: RppLambda, case: str):
    report.checked += 1
    a = hg_forward(p)
    if a.hook_weight() != p.total():
        report.fail(f"{case}/hook-weight", p.total(), a.hook_weight())
    back = hg_inverse(a)
    if back != p:
        report.fail(f"{case}/rpp", p.rows(), back.rows())


def _check_array_roundtrip(report: VerificationReport, a: WeightArray, case: str):
    report.checked += 1
    again = hg_forward(hg_inverse(a))
    if again != a:
        report.fail(f"{case}/array", a.rows(), again.rows())


def verify_roundtrip(outer: Partition, max_entry: int) -> VerificationReport:
    """Exhaustive round trips on lambda: every RPP and every array with entries at most max_entry."""
    start_time = time.time()
    report = VerificationReport("hg-roundtrip", outer.to_text())
    for p in enumerate_rpp(outer, max_entry):
        _check_roundtrip(report, p, f"rpp={p.rows()}")
    cells = outer.cells()
    for values in product(range(max_entry + 1), repeat=len(cells)):
        a = WeightArray.from_cells(outer, dict(zip(cells, values)))
        _check_array_roundtrip(report, a, f"array={a.rows()}")
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_random_roundtrips(seed: int, count: int, max_size: int, max_entry: int) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("hg-roundtrip", f"random(seed={seed})")
    rng = np.random.default_rng(seed)
    shapes = [lam for n in range(1, max_size + 1) for lam in partitions(n)]
    for k in range(count):
        outer = shapes[int(rng.integers(len(shapes)))]
        _check_roundtrip(report, random_rpp(rng, outer, max_entry), f"random-{k}")
        _check_array_roundtrip(report, random_weight_array(rng, outer, max_entry), f"random-{k}")
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


# --- Adding the Minimum Filling ---

def minimum_rpp(outer: Partition) -> RppLambda:
    """T_min(lambda): the SSYT of shape lambda whose row i is all i - 1."""
    return RppLambda.from_cells(outer, {c: c.row - 1 for c in outer.cells()})


def additivity_defect(p: RppLambda, base: RppLambda) -> Dict[Cell, int]:
    """Nonzero entries of HG(p + base) - HG(p) - HG(base); empty exactly when HG adds up on the pair."""
    if p.outer != base.outer:
        raise PreconditionError(f"Cannot add fillings of ({p.outer}) and ({base.outer})")
    together = hg_forward(RppLambda(p.outer, p.values + base.values))
    diff = together.values - hg_forward(p).values - hg_forward(base).values
    return {Cell(int(i) + 1, int(j) + 1): int(diff[i, j]) for i, j in zip(*np.nonzero(diff))}


def skew_additivity_defect(t: SkewTableau, d: ExcitedDiagram) -> Dict[Cell, int]:
    """The same defect for a skew SSYT with the minimal tableau Phi(D) standing in for T_min."""
    if t.shape != d.shape:
        raise PreconditionError(f"Tableau of {t.shape} and diagram of {d.shape} differ in shape")
    return additivity_defect(embed(t), embed(phi(d)))


def verify_straight_additivity(outer: Partition, max_entry: int) -> VerificationReport:
    """HG(T) + HG(T_min) = HG(T + T_min) for every RPP T of lambda with entries at most max_entry."""
    start_time = time.time()
    report = VerificationReport("straight-additivity", outer.to_text())
    base = minimum_rpp(outer)
    for p in enumerate_rpp(outer, max_entry):
        report.checked += 1
        defect = additivity_defect(p, base)
        if defect:
            report.fail(f"rpp={p.rows()}", {}, defect)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report
