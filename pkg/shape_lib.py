import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from errors import ShapeError

logger = logging.getLogger(__name__)


# --- Cells ---

class Cell(NamedTuple):
    """A box (row, col) of a Young diagram, 1-indexed, rows growing downward."""
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def shifted(self, rows: int, cols: int) -> 'Cell':
        return Cell(self.row + rows, self.col + cols)


def content(c: Cell) -> int:
    """Content c(i,j) = j - i; cells of equal content form a diagonal."""
    return c.col - c.row


# --- Partitions ---

@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            parts = tuple(int(p) for p in self.parts)
        except (TypeError, ValueError) as e:
            raise ShapeError(f"Partition parts must be integers, got {self.parts!r}") from e
        for p in parts:
            if p < 1:
                raise ShapeError(f"Partition parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"Partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: Optional[str]) -> 'Partition':
        """Parses the comma-separated text form, e.g. '5,5,3,3,2'. Trailing zeros are dropped."""
        text = (text or '').strip()
        if not text:
            return cls(())
        try:
            parts = [int(x) for x in text.split(',')]
        except ValueError as e:
            raise ShapeError(f"Invalid partition text '{text}'") from e
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the length."""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    def contains(self, c: Cell) -> bool:
        return 1 <= c.row <= len(self.parts) and 1 <= c.col <= self.parts[c.row - 1]

    @cached_property
    def conjugate(self) -> 'Partition':
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def cells(self) -> List[Cell]:
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return self.to_text()


def conjugate(p: Partition) -> Partition:
    return p.conjugate


def hook(p: Partition, c: Cell) -> int:
    """Hook length lambda_i - i + lambda'_j - j + 1 of a cell of [p]."""
    if not p.contains(c):
        raise ShapeError(f"Cell {tuple(c)} is outside the diagram of ({p})")
    return p.part(c.row) - c.row + p.conjugate.part(c.col) - c.col + 1


@lru_cache(maxsize=None)
def hook_table(p: Partition) -> np.ndarray:
    """Hooks of every cell of [p] as an l(p) x p_1 array, zero outside the diagram."""
    width = p.parts[0] if p.parts else 0
    table = np.zeros((p.length, width), dtype=np.int64)
    for c in p.cells():
        table[c.row - 1, c.col - 1] = hook(p, c)
    table.setflags(write=False)
    return table


# --- Skew Shapes ---

@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, 'outer', Partition(tuple(self.outer)))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, 'inner', Partition(tuple(self.inner)))
        if self.inner.length > self.outer.length:
            raise ShapeError(f"Inner shape ({self.inner}) is longer than outer shape ({self.outer})")
        for i, m in enumerate(self.inner.parts, 1):
            if m > self.outer.part(i):
                raise ShapeError(f"Inner shape ({self.inner}) is not contained in ({self.outer})")

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> 'SkewShape':
        return cls(Partition(tuple(outer)), Partition(tuple(inner)))

    @classmethod
    def parse(cls, outer_text: str, inner_text: Optional[str] = None) -> 'SkewShape':
        return cls(Partition.parse(outer_text), Partition.parse(inner_text))

    @classmethod
    def from_json(cls, data: Mapping) -> 'SkewShape':
        try:
            return cls.of(data['outer'], data.get('inner', []))
        except (KeyError, TypeError, AttributeError) as e:
            raise ShapeError(f"Invalid shape JSON: {data!r}") from e

    def to_json(self) -> Dict[str, List[int]]:
        return {"outer": list(self.outer.parts), "inner": list(self.inner.parts)}

    def text(self) -> str:
        return f"{self.outer}/{self.inner}"

    def __str__(self) -> str:
        return self.text()

    # --- derived data (cached on the frozen instance) ---

    @cached_property
    def mu(self) -> Tuple[int, ...]:
        """Inner partition zero-padded to length l(lambda)."""
        return tuple(self.inner.part(i) for i in range(1, self.outer.length + 1))

    @cached_property
    def cells(self) -> Tuple[Cell, ...]:
        return tuple(Cell(i, j)
                     for i in range(1, self.outer.length + 1)
                     for j in range(self.mu[i - 1] + 1, self.outer.part(i) + 1))

    @cached_property
    def cell_index(self) -> Dict[Cell, int]:
        return {c: k for k, c in enumerate(self.cells)}

    @cached_property
    def cell_set(self) -> FrozenSet[Cell]:
        return frozenset(self.cells)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    @property
    def d(self) -> int:
        return self.outer.length

    @cached_property
    def r(self) -> int:
        """max{i : mu_1 = mu_i}, over the zero-padded inner shape."""
        if not self.mu:
            return 0
        return max(i for i in range(1, len(self.mu) + 1) if self.mu[i - 1] == self.mu[0])

    def inner_col(self, j: int) -> int:
        """mu'_j."""
        return self.inner.conjugate.part(j)

    def outer_col(self, j: int) -> int:
        """lambda'_j."""
        return self.outer.conjugate.part(j)

    def contains(self, c: Cell) -> bool:
        return c in self.cell_set

    @cached_property
    def reduced(self) -> 'SkewShape':
        """The same cells with empty top rows cut (rows shifted up) and empty bottom rows dropped."""
        rows = [i for i in range(1, self.d + 1) if self.outer.part(i) > self.mu[i - 1]]
        if not rows:
            return SkewShape(Partition(()))
        top, bottom = rows[0], rows[-1]
        inner = tuple(m for m in self.mu[top - 1:bottom] if m > 0)
        return SkewShape.of(self.outer.parts[top - 1:bottom], inner)


def cells(s: SkewShape) -> List[Cell]:
    return list(s.cells)


def is_connected(s: SkewShape) -> bool:
    """Edge-connectivity of [lambda/mu]; the empty shape counts as connected."""
    if not s.cells:
        return True
    seen = {s.cells[0]}
    queue = deque([s.cells[0]])
    while queue:
        c = queue.popleft()
        for n in (Cell(c.row - 1, c.col), Cell(c.row + 1, c.col), Cell(c.row, c.col - 1), Cell(c.row, c.col + 1)):
            if n in s.cell_set and n not in seen:
                seen.add(n)
                queue.append(n)
    return len(seen) == len(s.cells)


def diagonal_lengths(s: SkewShape) -> List[Tuple[int, int]]:
    counts = Counter(c.content for c in s.cells)
    return sorted(counts.items(), key=lambda item: -item[0])


def diagonal_runs(s: SkewShape) -> Dict[int, List[Cell]]:
    """Cells of each diagonal, keyed by content, each run sorted by row ascending."""
    runs: Dict[int, List[Cell]] = {}
    for c in s.cells:
        runs.setdefault(c.content, []).append(c)
    for run in runs.values():
        run.sort()
    return runs


def is_slim(s: SkewShape) -> bool:
    """lambda_d >= mu_r + d - r on the reduced shape, the equality case of the term-count comparison."""
    s = s.reduced
    if s.d == 0:
        return True
    return s.outer.part(s.d) >= s.mu[s.r - 1] + s.d - s.r


# --- Sweeps ---

@lru_cache(maxsize=None)
def _partitions_bounded(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions(n: int) -> List[Partition]:
    """All partitions of n in lexicographic order of their parts."""
    return [Partition(p) for p in sorted(_partitions_bounded(n, n))]


def sub_partitions(p: Partition) -> List[Partition]:
    """All mu contained in p (including the empty partition and p itself), lexicographic."""
    found: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], i: int, cap: int):
        found.append(prefix)
        if i > p.length:
            return
        for m in range(1, min(cap, p.part(i)) + 1):
            extend(prefix + (m,), i + 1, m)

    extend((), 1, p.part(1))
    return [Partition(m) for m in sorted(found)]


def skew_shapes(max_size: int,
                connected_only: bool = False,
                include_empty: bool = False,
                straight_only: bool = False) -> List[SkewShape]:
    """Deterministic sweep: outer partitions by size then lex, inner sub-partitions by lex."""
    shapes = []
    for n in range(1, max_size + 1):
        for lam in partitions(n):
            inners = [Partition(())] if straight_only else sub_partitions(lam)
            for mu in inners:
                s = SkewShape(lam, mu)
                if s.is_empty and not include_empty:
                    continue
                if connected_only and not is_connected(s):
                    continue
                shapes.append(s)
    return shapes


# --- Fillings of [lambda] ---

class LambdaArray:
    """Nonnegative integer filling of [lambda] stored as an l(lambda) x lambda_1 array.

    Cells outside the diagram are kept at zero. Subclasses add the invariants of
    excited arrays, reverse plane partitions and Hillman-Grassl weight arrays;
    equality compares only the outer shape and the values.
    """

    def __init__(self, outer: Partition, values: Optional[np.ndarray] = None):
        self.outer = outer
        width = outer.parts[0] if outer.parts else 0
        if values is None:
            arr = np.zeros((outer.length, width), dtype=np.int64)
        else:
            arr = np.array(values, dtype=np.int64)
            if arr.shape != (outer.length, width):
                raise ShapeError(f"Array of shape {arr.shape} does not fit ({outer})")
        if arr.size and arr.min() < 0:
            raise ShapeError("Array entries must be nonnegative")
        for i, p in enumerate(outer.parts):
            if arr[i, p:].any():
                raise ShapeError(f"Array has nonzero entries outside ({outer}) in row {i + 1}")
        self.values = arr

    @classmethod
    def from_rows(cls, outer: Partition, rows: Sequence[Sequence[int]]):
        """Builds from ragged rows, row i of length lambda_i (the JSON layout)."""
        if len(rows) != outer.length or any(len(r) != p for r, p in zip(rows, outer.parts)):
            raise ShapeError(f"Rows do not match the diagram of ({outer})")
        width = outer.parts[0] if outer.parts else 0
        arr = np.zeros((outer.length, width), dtype=np.int64)
        for i, row in enumerate(rows):
            arr[i, :len(row)] = row
        return cls(outer, arr)

    @classmethod
    def from_cells(cls, outer: Partition, entries: Mapping[Cell, int]):
        width = outer.parts[0] if outer.parts else 0
        arr = np.zeros((outer.length, width), dtype=np.int64)
        for c, v in entries.items():
            if not outer.contains(c):
                raise ShapeError(f"Cell {tuple(c)} is outside the diagram of ({outer})")
            arr[c.row - 1, c.col - 1] = v
        return cls(outer, arr)

    def __getitem__(self, c: Cell) -> int:
        return int(self.values[c.row - 1, c.col - 1])

    def rows(self) -> List[List[int]]:
        return [[int(v) for v in self.values[i, :p]] for i, p in enumerate(self.outer.parts)]

    def entries(self) -> Dict[Cell, int]:
        """Nonzero entries keyed by cell."""
        return {Cell(int(i) + 1, int(j) + 1): int(self.values[i, j]) for i, j in zip(*np.nonzero(self.values))}

    def support(self) -> FrozenSet[Cell]:
        return frozenset(self.entries())

    def total(self) -> int:
        return int(self.values.sum())

    def hook_weight(self) -> int:
        """Sum over cells of value times hook length."""
        return int((self.values * hook_table(self.outer)).sum())

    def to_json(self) -> Dict[str, List]:
        return {"outer": list(self.outer.parts), "values": self.rows()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaArray):
            return NotImplemented
        return self.outer == other.outer and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.outer, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(outer=({self.outer}), rows={self.rows()})"
