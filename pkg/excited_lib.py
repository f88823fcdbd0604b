import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Tuple

from config import SKEWHOOK_DEBUG
from errors import PreconditionError, StructuralError
from shape_lib import Cell, LambdaArray, SkewShape
from strip_lib import kreiman

logger = logging.getLogger(__name__)


# --- Types ---

@dataclass(frozen=True)
class ExcitedDiagram:
    """A |mu|-cell subset of [lambda] plus the state carried along beta-moves.

    origin maps each current cell to the cell of [mu] it started from, gammas are
    the deformed Kreiman paths (SW to NE, indexed like kreiman(shape)), and broken
    is the set of broken diagonals Br(D). Equality is by shape and cell set.
    """
    shape: SkewShape
    cells: FrozenSet[Cell]
    origin: Mapping[Cell, Cell] = field(compare=False, hash=False)
    gammas: Tuple[Tuple[Cell, ...], ...] = field(compare=False, hash=False)
    broken: FrozenSet[Cell] = field(compare=False, hash=False)

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells)

    def excitation(self, c: Cell) -> int:
        """How many times the cell now at c has been moved."""
        return c.row - self.origin[c].row

    def to_json(self) -> Dict:
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "cells": [list(c) for c in sorted(self.cells)],
            "broken": [list(c) for c in sorted(self.broken)],
        }


class ExcitedArray(LambdaArray):
    """The 0-1 array A_D: ones exactly on Br(D)."""


@dataclass(frozen=True)
class NEExcitedDiagram:
    """A diagram reached from the flipped inner shape by north-east moves."""
    shape: SkewShape
    cells: FrozenSet[Cell]
    origin: Mapping[Cell, Cell] = field(compare=False, hash=False)

    def sorted_cells(self) -> List[Cell]:
        return sorted(self.cells)

    def to_json(self) -> Dict:
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "cells": [list(c) for c in sorted(self.cells)],
        }


# --- Excited Diagrams ---

def initial_broken(s: SkewShape) -> FrozenSet[Cell]:
    targets = {s.mu[i - 1] - i for i in range(1, s.d)}
    return frozenset(c for c in s.cells if c.content in targets)


def initial_diagram(s: SkewShape) -> ExcitedDiagram:
    mu_cells = s.inner.cells()
    return ExcitedDiagram(
        shape=s,
        cells=frozenset(mu_cells),
        origin={c: c for c in mu_cells},
        gammas=tuple(strip.cells for strip in kreiman(s).strips),
        broken=initial_broken(s),
    )


def _is_free(d, c: Cell) -> bool:
    return d.shape.outer.contains(c) and c not in d.cells


def active_cells(d: ExcitedDiagram) -> List[Cell]:
    result = []
    for c in sorted(d.cells):
        i, j = c
        if _is_free(d, Cell(i + 1, j)) and _is_free(d, Cell(i, j + 1)) and _is_free(d, Cell(i + 1, j + 1)):
            result.append(c)
    return result


def _ladder_corner(d: ExcitedDiagram, u: Cell) -> Tuple[int, int]:
    """Locates the east-then-north corner (i+1,j) -> (i+1,j+1) -> (i,j+1) on the gammas."""
    i, j = u
    west, corner, north = Cell(i + 1, j), Cell(i + 1, j + 1), Cell(i, j + 1)
    for k, path in enumerate(d.gammas):
        for p, c in enumerate(path):
            if c != corner:
                continue
            if 0 < p < len(path) - 1 and path[p - 1] == west and path[p + 1] == north:
                return k, p
            raise StructuralError(f"Cell {tuple(corner)} is on gamma_{k + 1} but not at an east-north corner")
    raise StructuralError(f"Cell {tuple(corner)} is not on any Kreiman path of the diagram")


def beta_path_index(d: ExcitedDiagram, u: Cell) -> int:
    """1-based index of the Kreiman path that the ladder move of beta_u modifies."""
    return _ladder_corner(d, u)[0] + 1


def apply_beta(d: ExcitedDiagram, u: Cell) -> ExcitedDiagram:
    if u not in active_cells(d):
        raise PreconditionError(f"Cell {tuple(u)} is not active in the excited diagram")
    i, j = u
    moved = Cell(i + 1, j + 1)
    k, p = _ladder_corner(d, u)

    if moved not in d.broken:
        raise StructuralError(f"Expected a broken diagonal at {tuple(moved)}")
    broken = (d.broken - {moved}) | {Cell(i + 1, j)}

    path = list(d.gammas[k])
    path[p] = u
    gammas = d.gammas[:k] + (tuple(path),) + d.gammas[k + 1:]

    origin = dict(d.origin)
    origin[moved] = origin.pop(u)

    result = ExcitedDiagram(d.shape, (d.cells - {u}) | {moved}, origin, gammas, broken)
    logger.debug(f"beta{tuple(u)} on {d.shape}: ladder move on gamma_{k + 1}")
    if SKEWHOOK_DEBUG:
        problems = check_diagram(result)
        if problems:
            raise StructuralError("; ".join(problems))
    return result


def broken_from_paths(gammas: Tuple[Tuple[Cell, ...], ...]) -> FrozenSet[Cell]:
    """Cells whose next step along their path goes north."""
    return frozenset(path[p] for path in gammas for p in range(len(path) - 1)
                     if path[p + 1] == Cell(path[p].row - 1, path[p].col))


def check_diagram(d: ExcitedDiagram) -> List[str]:
    """Recomputes the carried state and lists every inconsistency found."""
    problems = []
    lam = d.shape.outer
    if len(d.cells) != d.shape.inner.size:
        problems.append(f"diagram has {len(d.cells)} cells, expected {d.shape.inner.size}")
    if any(not lam.contains(c) for c in d.cells):
        problems.append("diagram leaves [lambda]")

    undeformed = kreiman(d.shape).strips
    covered: List[Cell] = [c for path in d.gammas for c in path]
    if len(covered) != len(set(covered)):
        problems.append("Kreiman paths intersect")
    complement = {c for c in lam.cells() if c not in d.cells}
    if set(covered) != complement:
        problems.append("Kreiman paths do not cover the complement of the diagram")
    if len(d.gammas) != len(undeformed):
        problems.append("wrong number of Kreiman paths")
    for path, strip in zip(d.gammas, undeformed):
        if path[0] != strip.start or path[-1] != strip.end:
            problems.append(f"gamma_{strip.index} endpoints moved")
        for a, b in zip(path, path[1:]):
            if b not in (Cell(a.row - 1, a.col), Cell(a.row, a.col + 1)):
                problems.append(f"gamma_{strip.index} takes a non-lattice step at {tuple(a)}")
                break

    if d.broken != broken_from_paths(d.gammas):
        problems.append("broken diagonals differ from the north steps of the paths")
    if d.broken & d.cells:
        problems.append("a broken diagonal lies inside the diagram")
    for c, o in d.origin.items():
        if c.row - o.row != c.col - o.col or c.row < o.row:
            problems.append(f"cell {tuple(c)} is not a diagonal excitation of {tuple(o)}")
    return problems


@lru_cache(maxsize=1024)
def _closure(s: SkewShape) -> Tuple[ExcitedDiagram, ...]:
    start = initial_diagram(s)
    seen = {start.cells: start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for u in active_cells(d):
            nd = apply_beta(d, u)
            if nd.cells not in seen:
                seen[nd.cells] = nd
                queue.append(nd)
    logger.debug(f"{s}: {len(seen)} excited diagrams")
    return tuple(sorted(seen.values(), key=lambda e: e.sorted_cells()))


def enumerate_excited(s: SkewShape) -> List[ExcitedDiagram]:
    return list(_closure(s))


@lru_cache(maxsize=1024)
def excited_index(s: SkewShape) -> Dict[FrozenSet[Cell], ExcitedDiagram]:
    return {d.cells: d for d in _closure(s)}


def excited_array(d: ExcitedDiagram) -> ExcitedArray:
    return ExcitedArray.from_cells(d.shape.outer, {c: 1 for c in d.broken})


# --- North-East Excited Diagrams ---

def ne_initial_diagram(s: SkewShape) -> NEExcitedDiagram:
    """The horizontal flip of mu: row d+1-x holds columns 1..mu_x."""
    d = s.d
    cells = [Cell(d + 1 - x, y) for x, m in enumerate(s.inner.parts, 1) for y in range(1, m + 1)]
    if any(not s.outer.contains(c) for c in cells):
        raise PreconditionError(f"The flipped inner shape does not fit inside ({s.outer})")
    return NEExcitedDiagram(s, frozenset(cells), {c: c for c in cells})


def ne_active_cells(d: NEExcitedDiagram) -> List[Cell]:
    result = []
    for c in sorted(d.cells):
        i, j = c
        if i > 1 and _is_free(d, Cell(i - 1, j)) and _is_free(d, Cell(i - 1, j + 1)) and _is_free(d, Cell(i, j + 1)):
            result.append(c)
    return result


def apply_ne_move(d: NEExcitedDiagram, u: Cell) -> NEExcitedDiagram:
    if u not in ne_active_cells(d):
        raise PreconditionError(f"Cell {tuple(u)} is not NE-active")
    moved = Cell(u.row - 1, u.col + 1)
    origin = dict(d.origin)
    origin[moved] = origin.pop(u)
    return NEExcitedDiagram(d.shape, (d.cells - {u}) | {moved}, origin)


@lru_cache(maxsize=1024)
def _ne_closure(s: SkewShape) -> Tuple[NEExcitedDiagram, ...]:
    start = ne_initial_diagram(s)
    seen = {start.cells: start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for u in ne_active_cells(d):
            nd = apply_ne_move(d, u)
            if nd.cells not in seen:
                seen[nd.cells] = nd
                queue.append(nd)
    return tuple(sorted(seen.values(), key=lambda e: e.sorted_cells()))


def enumerate_ne_excited(s: SkewShape) -> List[NEExcitedDiagram]:
    return list(_ne_closure(s))
