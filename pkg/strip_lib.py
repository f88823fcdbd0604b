import logging
import time
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from errors import PreconditionError, ShapeError, UnsupportedShapeError
from report_lib import VerificationReport
from shape_lib import Cell, SkewShape, diagonal_runs, is_connected

logger = logging.getLogger(__name__)

THETA = 'theta'
GAMMA = 'gamma'


# --- Border Strips ---

@dataclass(frozen=True)
class BorderStrip:
    """One strip of a decomposition; cells run from the SW end to the NE end."""
    kind: str
    index: int
    epsilon: int
    cells: Tuple[Cell, ...]

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    @property
    def top_row(self) -> int:
        return min(c.row for c in self.cells)

    @cached_property
    def columns(self) -> Tuple[int, ...]:
        return tuple(sorted({c.col for c in self.cells}))

    @cached_property
    def contents(self) -> Tuple[int, ...]:
        return tuple(c.content for c in self.cells)

    def to_json(self) -> Dict:
        return {"epsilon": self.epsilon, "cells": [list(c) for c in self.cells]}


@dataclass(frozen=True)
class Decomposition:
    shape: SkewShape
    kind: str
    strips: Tuple[BorderStrip, ...]

    def __len__(self) -> int:
        return len(self.strips)

    def strip(self, i: int) -> BorderStrip:
        """Strip by its 1-based index."""
        if not 1 <= i <= len(self.strips):
            raise PreconditionError(f"Strip index {i} out of range 1..{len(self.strips)}")
        return self.strips[i - 1]

    @cached_property
    def strip_of(self) -> Dict[Cell, BorderStrip]:
        return {c: s for s in self.strips for c in s.cells}

    def to_json(self) -> Dict:
        return {"kind": self.kind, "strips": [s.to_json() for s in self.strips]}


def _adjacent(a: Cell, b: Cell) -> bool:
    return abs(a.row - b.row) + abs(a.col - b.col) == 1


def _decompose(s: SkewShape, kind: str) -> Decomposition:
    # Rank of a cell on its diagonal: counted from the larger row for theta,
    # from the smaller row for gamma. Equal ranks form the strips at that epsilon.
    by_epsilon: Dict[int, List[Cell]] = {}
    for run in diagonal_runs(s).values():
        m = len(run)
        for k, c in enumerate(run):
            eps = k if kind == GAMMA else m - 1 - k
            by_epsilon.setdefault(eps, []).append(c)

    components: List[Tuple[int, int, List[Cell]]] = []
    for eps, group in by_epsilon.items():
        group.sort(key=lambda c: -c.content)
        current = [group[0]]
        for c in group[1:]:
            prev = current[-1]
            if prev.content - c.content == 1 and _adjacent(prev, c):
                current.append(c)
            else:
                components.append((eps, -current[0].content, current))
                current = [c]
        components.append((eps, -current[0].content, current))

    components.sort(key=lambda item: (item[0], item[1]))
    strips = tuple(BorderStrip(kind, i, eps, tuple(reversed(run)))
                   for i, (eps, _, run) in enumerate(components, 1))
    return Decomposition(s, kind, strips)


@lru_cache(maxsize=4096)
def lascoux_pragacz(s: SkewShape) -> Decomposition:
    """Theta decomposition: each diagonal's j-th cell from the outer end goes to epsilon j-1."""
    return _decompose(s, THETA)


@lru_cache(maxsize=4096)
def kreiman(s: SkewShape) -> Decomposition:
    """Gamma decomposition: the inner-rank rule, so gamma_1 hugs mu."""
    return _decompose(s, GAMMA)


def require_connected(s: SkewShape):
    if not is_connected(s):
        raise UnsupportedShapeError(f"Shape {s} is disconnected; strip decompositions need a connected shape")


def theta_height(strip: BorderStrip, row: int) -> int:
    if strip.kind != THETA:
        raise PreconditionError("Heights are defined for Lascoux-Pragacz strips only")
    if row < strip.top_row:
        raise ShapeError(f"Row {row} lies above strip theta_{strip.index} (top row {strip.top_row})")
    return row - strip.top_row


def column_segment(strip: BorderStrip, col: int) -> List[Cell]:
    segment = sorted(c for c in strip.cells if c.col == col)
    if not segment:
        raise ShapeError(f"Strip {strip.kind}_{strip.index} has no cell in column {col}")
    return segment


# --- Strip Comparison ---

def verify_gamma_theta(s: SkewShape) -> VerificationReport:
    """Checks that theta_i and gamma_i start epsilon_i columns (and rows) apart."""
    start_time = time.time()
    report = VerificationReport("gamma-theta", s.text())
    require_connected(s)
    thetas = lascoux_pragacz(s)
    gammas = kreiman(s)

    if len(thetas) != len(gammas):
        report.fail("strip-count", len(thetas), len(gammas))
    for theta, gamma in zip(thetas.strips, gammas.strips):
        case = f"strip-{theta.index}"
        report.checked += 1
        if theta.epsilon != gamma.epsilon:
            report.fail(f"{case}/epsilon", theta.epsilon, gamma.epsilon)
        if sorted(theta.contents) != sorted(gamma.contents):
            report.fail(f"{case}/contents", sorted(theta.contents), sorted(gamma.contents))
        if gamma.start.col - theta.start.col != theta.epsilon:
            report.fail(f"{case}/column-offset", theta.epsilon, gamma.start.col - theta.start.col)
        if gamma.start.row - theta.start.row != theta.epsilon:
            report.fail(f"{case}/row-offset", theta.epsilon, gamma.start.row - theta.start.row)

    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report
