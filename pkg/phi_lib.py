import logging
import time
from itertools import groupby
from typing import Dict, List, Sequence, Tuple

from config import SKEWHOOK_DEBUG
from errors import PreconditionError, ShapeError, StructuralError
from excited_lib import ExcitedDiagram, active_cells, apply_beta, beta_path_index, enumerate_excited, excited_index
from report_lib import VerificationReport
from shape_lib import Cell, SkewShape, hook
from strip_lib import lascoux_pragacz, require_connected
from tableau_lib import SkewTableau, apply_delta, enumerate_min_via_moves, is_minimal, minimum_tableau, strip_segments

logger = logging.getLogger(__name__)


def _path_columns(path: Sequence[Cell]) -> List[List[Cell]]:
    """Splits a SW-to-NE path into its columns, west to east; each column runs bottom to top."""
    return [list(group) for _, group in groupby(path, key=lambda c: c.col)]


# --- Phi ---

def phi(d: ExcitedDiagram) -> SkewTableau:
    """Fills theta_i column by column from the broken diagonals on the matching column of gamma_i(D)."""
    s = d.shape
    require_connected(s)
    theta = lascoux_pragacz(s)
    if len(d.gammas) != len(theta):
        raise StructuralError(f"Diagram carries {len(d.gammas)} paths but {s} has {len(theta)} strips")

    values: Dict[Cell, int] = {}
    for gamma, strip in zip(d.gammas, theta.strips):
        gamma_cols = _path_columns(gamma)
        theta_cols = _path_columns(strip.cells)
        if len(gamma_cols) != len(theta_cols):
            raise StructuralError(f"gamma_{strip.index}(D) spans {len(gamma_cols)} columns, theta_{strip.index} spans {len(theta_cols)}")
        previous_top = None
        for g_col, t_col in zip(gamma_cols, theta_cols):
            b = sum(1 for c in g_col if c in d.broken)
            bottom = b if previous_top is None else previous_top + b
            for k, c in enumerate(t_col):
                values[c] = bottom - k
            previous_top = bottom - (len(t_col) - 1)

    try:
        t = SkewTableau.from_cells(s, values)
    except ShapeError as e:
        raise StructuralError(f"Phi produced an invalid filling of {s}: {e}") from e
    if SKEWHOOK_DEBUG and not is_minimal(t):
        raise StructuralError(f"Phi produced a non-minimal tableau on {s}: {t.rows()}")
    return t


def _segment_excess(t: SkewTableau) -> List[Tuple[int, int]]:
    """(column, T - T_0 on the segment) for every strip column segment."""
    base = minimum_tableau(t.shape)
    return [(j, t[seg[0]] - base[seg[0]]) for _, j, seg in strip_segments(t.shape)]


def _alpha(excess: List[Tuple[int, int]], s: SkewShape, u: Cell) -> int:
    bound = s.inner_col(u.col) - u.row
    return sum(1 for j, value in excess if j == u.col and value > bound)


def alpha(t: SkewTableau, u: Cell) -> int:
    """Number of strips whose column-j segment has T - T_0 above mu'_j - i."""
    s = t.shape
    if not s.inner.contains(u):
        raise ShapeError(f"Cell {tuple(u)} is not in the inner shape ({s.inner})")
    if not is_minimal(t):
        raise PreconditionError("alpha is defined on minimal tableaux only")
    return _alpha(_segment_excess(t), s, u)


def alphas(t: SkewTableau) -> Dict[Cell, int]:
    """alpha for every cell of [mu] at once."""
    if not is_minimal(t):
        raise PreconditionError("alpha is defined on minimal tableaux only")
    excess = _segment_excess(t)
    return {u: _alpha(excess, t.shape, u) for u in t.shape.inner.cells()}


def phi_inverse(t: SkewTableau) -> ExcitedDiagram:
    s = t.shape
    cells = {Cell(u.row + a, u.col + a) for u, a in alphas(t).items()}
    d = excited_index(s).get(frozenset(cells))
    if d is None:
        raise StructuralError(f"Displaced cells {sorted(cells)} are not an excited diagram of {s}")
    return d


# --- Verification ---

def verify_commutation(s: SkewShape) -> VerificationReport:
    """Phi(beta_u(D)) = delta_(i, origin column of u)(Phi(D)) for every diagram and active cell."""
    start_time = time.time()
    report = VerificationReport("commutation", s.text())
    require_connected(s)
    for d in enumerate_excited(s):
        image = phi(d)
        for u in active_cells(d):
            report.checked += 1
            case = f"D={[tuple(c) for c in d.sorted_cells()]}/u={tuple(u)}"
            k = beta_path_index(d, u)
            j = d.origin[u].col
            actual = phi(apply_beta(d, u))
            try:
                expected = apply_delta(image, k, j)
            except PreconditionError:
                report.fail(case, f"active delta on (theta_{k}, column {j})", actual.rows())
                continue
            if expected != actual:
                report.fail(case, expected.rows(), actual.rows())
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_bijection(s: SkewShape) -> VerificationReport:
    """Phi is injective onto the delta-closure, inverts through alpha and obeys the weight law."""
    start_time = time.time()
    report = VerificationReport("bijection", s.text())
    require_connected(s)
    diagrams = enumerate_excited(s)
    closure = {t.entries for t in enumerate_min_via_moves(s)}
    images = set()
    for d in diagrams:
        report.checked += 1
        case = f"D={[tuple(c) for c in d.sorted_cells()]}"
        t = phi(d)
        images.add(t.entries)
        if t.entries not in closure:
            report.fail(f"{case}/image", "minimal tableau", t.rows())
            continue
        back = phi_inverse(t)
        if back != d:
            report.fail(f"{case}/inverse", d.sorted_cells(), back.sorted_cells())
        hook_weight = sum(hook(s.outer, c) for c in d.broken)
        if t.weight != hook_weight:
            report.fail(f"{case}/weight", hook_weight, t.weight)
    if len(images) != len(diagrams):
        report.fail("injective", len(diagrams), len(images))
    if images != closure:
        report.fail("surjective", len(closure), len(images))
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report
