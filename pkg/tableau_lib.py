import logging
import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from errors import PreconditionError, ShapeError
from report_lib import VerificationReport
from shape_lib import Cell, Partition, SkewShape
from strip_lib import column_segment, lascoux_pragacz, require_connected, theta_height

logger = logging.getLogger(__name__)


# --- Types ---

@dataclass(frozen=True)
class SkewTableau:
    """A 0-based filling of [lambda/mu]; entries follow the row-major order of shape.cells."""
    shape: SkewShape
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != len(self.shape.cells):
            raise ShapeError(f"Tableau has {len(entries)} entries but {self.shape} has {len(self.shape.cells)} cells")
        if any(v < 0 for v in entries):
            raise ShapeError("Tableau entries must be nonnegative")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_cells(cls, shape: SkewShape, mapping: Mapping[Cell, int]) -> 'SkewTableau':
        try:
            return cls(shape, tuple(mapping[c] for c in shape.cells))
        except KeyError as e:
            raise ShapeError(f"Missing entry for cell {tuple(e.args[0])}") from e

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[Optional[int]]]) -> 'SkewTableau':
        """Reads the JSON row layout, where inner cells hold None."""
        if len(rows) != shape.outer.length:
            raise ShapeError(f"Expected {shape.outer.length} rows for {shape}")
        mapping = {}
        for i, row in enumerate(rows, 1):
            if len(row) != shape.outer.part(i):
                raise ShapeError(f"Row {i} has {len(row)} entries, expected {shape.outer.part(i)}")
            for j, v in enumerate(row, 1):
                if j > shape.mu[i - 1]:
                    if v is None:
                        raise ShapeError(f"Missing entry at ({i},{j})")
                    mapping[Cell(i, j)] = v
        return cls.from_cells(shape, mapping)

    def __getitem__(self, c: Cell) -> int:
        return self.entries[self.shape.cell_index[c]]

    def get(self, c: Cell, default: Optional[int] = None) -> Optional[int]:
        k = self.shape.cell_index.get(c)
        return default if k is None else self.entries[k]

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def items(self) -> Iterable[Tuple[Cell, int]]:
        return zip(self.shape.cells, self.entries)

    def incremented(self, cells: Iterable[Cell], amount: int = 1) -> 'SkewTableau':
        values = list(self.entries)
        for c in cells:
            values[self.shape.cell_index[c]] += amount
        return SkewTableau(self.shape, tuple(values))

    def rows(self) -> List[List[Optional[int]]]:
        return [[None if j <= self.shape.mu[i - 1] else self[Cell(i, j)]
                 for j in range(1, self.shape.outer.part(i) + 1)]
                for i in range(1, self.shape.outer.length + 1)]

    def to_json(self) -> Dict:
        return {"outer": list(self.shape.outer.parts), "inner": list(self.shape.inner.parts), "rows": self.rows()}


@dataclass(frozen=True)
class MuTableau:
    """A filling of the straight shape mu with entries in 1..bound, row-major."""
    shape: Partition
    entries: Tuple[int, ...]
    bound: int

    def __getitem__(self, c: Cell) -> int:
        return self.entries[_straight_index(self.shape)[c]]

    def items(self) -> Iterable[Tuple[Cell, int]]:
        return zip(self.shape.cells(), self.entries)

    def rows(self) -> List[List[int]]:
        return [[self[Cell(i, j)] for j in range(1, p + 1)] for i, p in enumerate(self.shape.parts, 1)]

    def to_json(self) -> Dict:
        return {"shape": list(self.shape.parts), "bound": self.bound, "rows": self.rows()}


@lru_cache(maxsize=None)
def _straight_index(p: Partition) -> Dict[Cell, int]:
    return {c: k for k, c in enumerate(p.cells())}


def is_semistandard(t: SkewTableau) -> bool:
    for c, v in t.items():
        left = t.get(Cell(c.row, c.col - 1))
        if left is not None and left > v:
            return False
        up = t.get(Cell(c.row - 1, c.col))
        if up is not None and up >= v:
            return False
    return True


# --- Backtracking ---

def _fillings(cells: Sequence[Cell],
              candidates: Callable[[Cell, int, List[int], int], Iterable[int]],
              base: int = 0) -> Iterator[Tuple[int, ...]]:
    """Row-major semistandard fillings; candidates(cell, lower, values, weight) yields allowed entries.

    Results come out in lexicographic order of the entry vector.
    """
    index = {c: k for k, c in enumerate(cells)}
    values = [0] * len(cells)

    def lower(c: Cell) -> int:
        lo = base
        left = index.get(Cell(c.row, c.col - 1))
        if left is not None:
            lo = max(lo, values[left])
        up = index.get(Cell(c.row - 1, c.col))
        if up is not None:
            lo = max(lo, values[up] + 1)
        return lo

    def extend(k: int, weight: int) -> Iterator[Tuple[int, ...]]:
        if k == len(cells):
            yield tuple(values)
            return
        c = cells[k]
        for v in candidates(c, lower(c), values, weight):
            values[k] = v
            yield from extend(k + 1, weight + v)

    yield from extend(0, 0)


def _tableaux(s: SkewShape, candidates) -> List[SkewTableau]:
    return [SkewTableau(s, entries) for entries in _fillings(s.cells, candidates)]


# --- Minimum Tableau and Strip Context ---

def minimum_tableau(s: SkewShape) -> SkewTableau:
    """Column j holds 0, 1, ..., lambda'_j - mu'_j - 1 from top to bottom."""
    return SkewTableau(s, tuple(c.row - s.inner_col(c.col) - 1 for c in s.cells))


@lru_cache(maxsize=1024)
def strip_segments(s: SkewShape) -> Tuple[Tuple[int, int, Tuple[Cell, ...]], ...]:
    """Every column segment theta_k(j) as (k, j, cells top to bottom), ordered by k then j."""
    require_connected(s)
    return tuple((strip.index, j, tuple(column_segment(strip, j)))
                 for strip in lascoux_pragacz(s).strips
                 for j in strip.columns)


def _segment(s: SkewShape, k: int, j: int) -> Tuple[Cell, ...]:
    for kk, jj, seg in strip_segments(s):
        if kk == k and jj == j:
            return seg
    raise PreconditionError(f"Strip theta_{k} has no segment in column {j}")


def _delta_is_active(t: SkewTableau, k: int, seg: Tuple[Cell, ...]) -> bool:
    top = seg[0]
    strip = lascoux_pragacz(t.shape).strip(k)
    if t[top] >= theta_height(strip, top.row):
        return False
    members = set(seg)
    for c in seg:
        new = t[c] + 1
        right = Cell(c.row, c.col + 1)
        if right not in members:
            v = t.get(right)
            if v is not None and new > v:
                return False
        below = Cell(c.row + 1, c.col)
        if below not in members:
            v = t.get(below)
            if v is not None and new >= v:
                return False
    return True


def active_columns(t: SkewTableau) -> List[Tuple[int, int]]:
    return [(k, j) for k, j, seg in strip_segments(t.shape) if _delta_is_active(t, k, seg)]


def apply_delta(t: SkewTableau, k: int, j: int) -> SkewTableau:
    seg = _segment(t.shape, k, j)
    if not _delta_is_active(t, k, seg):
        raise PreconditionError(f"delta on (theta_{k}, column {j}) is not active")
    logger.debug(f"delta(theta_{k}, col {j}) on {t.shape}: +{len(seg)}")
    return t.incremented(seg)


def tbar(t: SkewTableau) -> Tuple[int, ...]:
    """Entries of T - T_0 in row-major order."""
    base = minimum_tableau(t.shape)
    return tuple(a - b for a, b in zip(t.entries, base.entries))


def is_minimal(t: SkewTableau) -> bool:
    """Semistandard, bounded by strip heights, with unit steps down every strip column segment."""
    if not is_semistandard(t):
        return False
    theta = lascoux_pragacz(t.shape)
    for k, j, seg in strip_segments(t.shape):
        strip = theta.strip(k)
        for c in seg:
            if t[c] > theta_height(strip, c.row):
                return False
        for a, b in zip(seg, seg[1:]):
            if t[b] - t[a] != 1:
                return False
    return True


# --- Minimal Tableaux ---

@lru_cache(maxsize=1024)
def _min_closure(s: SkewShape) -> Tuple[SkewTableau, ...]:
    require_connected(s)
    start = minimum_tableau(s)
    seen = {start.entries: start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for k, j in active_columns(t):
            nt = apply_delta(t, k, j)
            if nt.entries not in seen:
                seen[nt.entries] = nt
                queue.append(nt)
    return tuple(seen[e] for e in sorted(seen))


def enumerate_min_via_moves(s: SkewShape) -> List[SkewTableau]:
    return list(_min_closure(s))


def enumerate_min_via_characterization(s: SkewShape) -> List[SkewTableau]:
    require_connected(s)
    theta = lascoux_pragacz(s)
    index = s.cell_index

    def candidates(c: Cell, lo: int, values: List[int], weight: int) -> Iterable[int]:
        strip = theta.strip_of[c]
        hi = theta_height(strip, c.row)
        up = Cell(c.row - 1, c.col)
        if theta.strip_of.get(up) is strip:
            forced = values[index[up]] + 1
            return [forced] if lo <= forced <= hi else []
        return range(lo, hi + 1)

    return _tableaux(s, candidates)


# --- Other Tableau Families ---

def enumerate_flagged_skew(s: SkewShape) -> List[SkewTableau]:
    """0-based SSYT with row-i entries at most i - 1."""
    return _tableaux(s, lambda c, lo, values, weight: range(lo, c.row))


def enumerate_ssyt(s: SkewShape, max_entry: int) -> List[SkewTableau]:
    return _tableaux(s, lambda c, lo, values, weight: range(lo, max_entry + 1))


def enumerate_bounded_ssyt(s: SkewShape, max_weight: int) -> List[SkewTableau]:
    if max_weight < 0:
        raise PreconditionError("maxWeight must be nonnegative")
    return _tableaux(s, lambda c, lo, values, weight: range(lo, max_weight - weight + 1))


def enumerate_oot(s: SkewShape) -> List[MuTableau]:
    """Semistandard fillings of mu with entries in 1..d and c(u) < lambda_{d+1-T(u)}."""
    d = s.d
    lam = s.outer

    def candidates(c: Cell, lo: int, values: List[int], weight: int) -> Iterable[int]:
        return [v for v in range(lo, d + 1) if lam.part(d + 1 - v) > c.content]

    mu_cells = s.inner.cells()
    return [MuTableau(s.inner, entries, d) for entries in _fillings(mu_cells, candidates, base=1)]


# --- Standard Tableaux Oracle ---

@lru_cache(maxsize=None)
def _count_syt(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> int:
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for i, p in enumerate(outer):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        mu_i = inner[i] if i < len(inner) else 0
        if p > below and p > mu_i:
            smaller = outer[:i] + (p - 1,) + outer[i + 1:]
            if smaller[-1] == 0:
                smaller = smaller[:-1]
            total += _count_syt(smaller, inner)
    return total


def count_syt(s: SkewShape) -> int:
    """Number of standard fillings, by peeling removable outer corners."""
    return _count_syt(s.outer.parts, s.inner.parts)


# --- Verification ---

def verify_characterization(s: SkewShape) -> VerificationReport:
    """The delta-closure of T_0 equals the height/unit-step set and sits inside the flagged tableaux."""
    start_time = time.time()
    report = VerificationReport("characterization", s.text())
    by_moves = {t.entries for t in enumerate_min_via_moves(s)}
    by_rule = {t.entries for t in enumerate_min_via_characterization(s)}
    report.checked += len(by_moves | by_rule)
    for entries in sorted(by_moves - by_rule):
        report.fail(f"moves-only/{list(entries)}", "in characterization set", "missing")
    for entries in sorted(by_rule - by_moves):
        report.fail(f"characterization-only/{list(entries)}", "in delta-closure", "missing")
    for entries in sorted(by_moves):
        t = SkewTableau(s, entries)
        if any(v > c.row - 1 for c, v in t.items()):
            report.fail(f"flagged/{list(entries)}", "row-i entries at most i-1", t.rows())
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report
