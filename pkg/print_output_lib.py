import json
import os
import sys
from typing import Any, Iterable, List, Mapping, Optional, Sequence, Type

from errors import PreconditionError, ShapeError
from excited_lib import ExcitedDiagram, NEExcitedDiagram, excited_index
from qseries_lib import QPolynomial
from report_lib import VerificationReport, to_jsonable
from shape_lib import Cell, LambdaArray, Partition, SkewShape
from tableau_lib import MuTableau, SkewTableau

INNER_MARK = '.'
SKEW_MARK = '#'
DIAGRAM_MARK = 'X'
BROKEN_MARK = '*'
FREE_MARK = 'o'


# --- ASCII Rendering ---

def _grid(rows: Sequence[Sequence[str]]) -> str:
    """Right-justifies every label to a common width; rows are separated by newlines."""
    labels = [label for row in rows for label in row]
    if not labels:
        return ""
    width = max(len(label) for label in labels)
    return "\n".join(" ".join(label.rjust(width) for label in row) for row in rows)


def _shape_rows(outer: Partition) -> List[List[Cell]]:
    return [[Cell(i, j) for j in range(1, p + 1)] for i, p in enumerate(outer.parts, 1)]


def render_ascii(obj: Any) -> str:
    """Fixed-width grid: '.' on inner cells, entries elsewhere; diagrams mark D with 'X' and Br(D) with '*'."""
    if isinstance(obj, SkewShape):
        if obj.is_empty:
            return ""
        return _grid([[INNER_MARK if obj.inner.contains(c) else SKEW_MARK for c in row] for row in _shape_rows(obj.outer)])
    if isinstance(obj, SkewTableau):
        if obj.shape.is_empty:
            return ""
        return _grid([["." if v is None else str(v) for v in row] for row in obj.rows()])
    if isinstance(obj, ExcitedDiagram):
        def mark(c: Cell) -> str:
            if c in obj.cells:
                return DIAGRAM_MARK
            return BROKEN_MARK if c in obj.broken else FREE_MARK
        return _grid([[mark(c) for c in row] for row in _shape_rows(obj.shape.outer)])
    if isinstance(obj, NEExcitedDiagram):
        return _grid([[DIAGRAM_MARK if c in obj.cells else FREE_MARK for c in row] for row in _shape_rows(obj.shape.outer)])
    if isinstance(obj, (LambdaArray, MuTableau)):
        return _grid([[str(v) for v in row] for row in obj.rows()])
    if isinstance(obj, QPolynomial):
        return str(obj)
    if isinstance(obj, VerificationReport):
        status = "PASS" if obj.passed else "FAIL"
        lines = [f"{obj.suite}: {status} (checked {obj.checked}, skipped {obj.skipped}, {obj.elapsed_ms:.1f} ms)"]
        lines += [f"  {f['case']}: expected {f['expected']}, got {f['actual']}" for f in obj.failures]
        return "\n".join(lines)
    return str(obj)


# --- JSON ---

def to_json_text(obj: Any, indent: Optional[int] = None) -> str:
    return json.dumps(to_jsonable(obj), indent=indent, ensure_ascii=False)


def print_listing(items: Iterable[Any], fmt: str, limit: Optional[int] = None) -> int:
    """Prints items in order, at most limit of them, and the total count on the final line."""
    total = 0
    for item in items:
        total += 1
        if limit is not None and total > limit:
            continue
        if fmt == 'json':
            print(to_json_text(item))
        else:
            print(f"# {total}")
            print(render_ascii(item))
            print()
    if fmt == 'json':
        print(json.dumps({"count": total}))
    else:
        print(f"count: {total}")
    return total


def load_json_file(path: str) -> Mapping:
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as e:
        raise ShapeError(f"Could not read input file '{path}': {e}") from e
    except json.JSONDecodeError as e:
        raise ShapeError(f"Input file '{path}' is not valid JSON: {e}") from e


def shape_from_json(data: Mapping) -> SkewShape:
    return SkewShape.from_json(data)


def tableau_from_json(data: Mapping) -> SkewTableau:
    try:
        return SkewTableau.from_rows(shape_from_json(data), data['rows'])
    except (KeyError, TypeError) as e:
        raise ShapeError(f"Invalid tableau JSON: {e}") from e


def diagram_from_json(data: Mapping) -> ExcitedDiagram:
    """Looks the cell set up among the excited diagrams of the shape, recovering its carried state."""
    s = shape_from_json(data)
    try:
        cells = frozenset(Cell(int(i), int(j)) for i, j in data['cells'])
    except (KeyError, TypeError, ValueError) as e:
        raise ShapeError(f"Invalid diagram JSON: {e}") from e
    d = excited_index(s).get(cells)
    if d is None:
        raise PreconditionError(f"Cells {sorted(tuple(c) for c in cells)} are not an excited diagram of {s}")
    return d


def array_from_json(data: Mapping, cls: Type[LambdaArray]) -> LambdaArray:
    try:
        outer, rows = Partition(tuple(data["outer"])), data["values"]
    except (KeyError, TypeError) as e:
        raise ShapeError(f"Invalid array JSON: {e}") from e
    return cls.from_rows(outer, rows)


# --- Report Files ---

def write_report(report: VerificationReport, directory: str) -> Optional[str]:
    """Writes one suite report as <directory>/<suite>.json and returns the path."""
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        print(f"Error creating directory: {e}", file=sys.stderr)
        return None

    filename = os.path.join(directory, f"{report.suite}.json")
    try:
        with open(filename, 'w', encoding='utf-8') as handle:
            handle.write(to_json_text(report, indent=2))
            handle.write("\n")
    except IOError as e:
        print(f"Error writing to file: {e}", file=sys.stderr)
        return None
    return filename
