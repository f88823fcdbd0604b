import logging
import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import sympy
from sympy import Rational

from errors import IntegralityError, PreconditionError, StructuralError
from excited_lib import NEExcitedDiagram, enumerate_excited, enumerate_ne_excited, excited_array
from phi_lib import alphas
from qseries_lib import QPolynomial, q_binomial
from report_lib import VerificationReport
from shape_lib import Cell, Partition, SkewShape, hook, is_connected, is_slim
from strip_lib import require_connected
from tableau_lib import MuTableau, count_syt, enumerate_bounded_ssyt, enumerate_min_via_moves, enumerate_oot

logger = logging.getLogger(__name__)


# --- Exact Formulas ---

def hook_product(p: Partition) -> int:
    return math.prod(hook(p, c) for c in p.cells())


def _exact_integer(value: Rational, label: str) -> int:
    value = Rational(value)
    if not value.is_integer:
        raise IntegralityError(f"{label} evaluated to the non-integer {value}")
    return int(value)


def _prefactor(s: SkewShape) -> Rational:
    """n! / prod of the hooks of lambda."""
    return Rational(sympy.factorial(s.size), hook_product(s.outer))


def f_hlf(p: Partition) -> int:
    """Standard tableaux of a straight shape: n! over the product of hooks."""
    return _exact_integer(Rational(sympy.factorial(p.size), hook_product(p)), f"hook length formula on ({p})")


def f_nhlf(s: SkewShape) -> int:
    """n! times the sum over excited diagrams D of 1 / prod of the hooks off D."""
    lam = s.outer
    total = Rational(0)
    for d in enumerate_excited(s):
        off = math.prod(hook(lam, c) for c in lam.cells() if c not in d.cells)
        total += Rational(1, off)
    return _exact_integer(sympy.factorial(s.size) * total, f"excited diagram formula on {s}")


def _oof_factor(s: SkewShape, c: Cell, v: int) -> int:
    return s.outer.part(s.d + 1 - v) + c.row - c.col


def _oof_factor_printed(s: SkewShape, c: Cell, v: int) -> int:
    return s.outer.part(s.d + 1 - v) - c.row + c.col


def _oof_sum(s: SkewShape, factor: Callable[[SkewShape, Cell, int], int], strict: bool = True) -> int:
    total = 0
    for t in enumerate_oot(s):
        term = 1
        for c, v in t.items():
            f = factor(s, c, v)
            if strict and f <= 0:
                raise StructuralError(f"Tableau {t.rows()} gives the non-positive factor {f} at {tuple(c)}")
            term *= f
        total += term
    return total


def f_oof(s: SkewShape) -> int:
    """Sum over tableaux of shape mu with entries at most d of prod (lambda_(d+1-T(i,j)) + i - j)."""
    return _exact_integer(_prefactor(s) * _oof_sum(s, _oof_factor), f"tableau-of-mu formula on {s}")


def f_oof_printed(s: SkewShape) -> Rational:
    """The same sum with the factor lambda_(d+1-T(i,j)) - i + j; not a count in general."""
    return _prefactor(s) * _oof_sum(s, _oof_factor_printed, strict=False)


def f_minimal(s: SkewShape) -> int:
    """Sum over minimal tableaux T of prod over [mu] of h(i + alpha, j + alpha)."""
    require_connected(s)
    lam = s.outer
    total = 0
    for t in enumerate_min_via_moves(s):
        total += math.prod(hook(lam, Cell(u.row + a, u.col + a)) for u, a in alphas(t).items())
    return _exact_integer(_prefactor(s) * total, f"minimal tableau formula on {s}")


# --- Term Counts ---

@dataclass(frozen=True)
class TermCounts:
    ed: int
    oot: int
    slim: bool

    def to_json(self) -> Dict:
        return {"ED": self.ed, "OOT": self.oot, "slim": self.slim}


def term_counts(s: SkewShape) -> TermCounts:
    """Counted on the reduced shape, so d and r ignore rows with lambda_i = mu_i.

    ED and OOT are defined for any shape; the comparison theorem is only claimed for connected ones.
    """
    s = s.reduced
    return TermCounts(len(enumerate_excited(s)), len(enumerate_oot(s)), is_slim(s))


def _content_product(mu: Partition, m: int) -> Rational:
    """prod over [mu] of (m + c(u)) / hook(mu, u), the number of SSYT of shape mu in m letters."""
    value = Rational(1)
    for u in mu.cells():
        value *= Rational(m + u.content, hook(mu, u))
    return value


def hook_content_count(s: SkewShape) -> int:
    if not is_connected(s) or not is_slim(s):
        raise PreconditionError(f"Shape {s} is not slim")
    s = s.reduced
    return _exact_integer(_content_product(s.inner, s.d), f"hook-content count on {s}")


def hook_content_count_printed(s: SkewShape) -> Rational:
    """The count with d - r letters instead of d."""
    s = s.reduced
    return _content_product(s.inner, s.d - s.r)


# --- q-Series ---

def _partition_b(p: Partition) -> int:
    return sum((i - 1) * part for i, part in enumerate(p.parts, 1))


def littlewood_q(p: Partition, degree: int) -> QPolynomial:
    """q^b(lambda) over prod (1 - q^h(u)), truncated at the degree."""
    series = QPolynomial.monomial(_partition_b(p), degree)
    for c in p.cells():
        series = series * QPolynomial.geometric(hook(p, c), degree)
    return series


def _qnhlf_sum(s: SkewShape, degree: int, on_diagram: bool) -> QPolynomial:
    lam = s.outer
    total = QPolynomial.zero(degree)
    for d in enumerate_excited(s):
        cells = d.cells if on_diagram else [c for c in lam.cells() if c not in d.cells]
        exponent = sum(lam.conjugate.part(c.col) - c.row for c in cells)
        term = QPolynomial.monomial(exponent, degree)
        for c in cells:
            term = term * QPolynomial.geometric(hook(lam, c), degree)
        total = total + term
    return total


def qnhlf_rhs(s: SkewShape, degree: int) -> QPolynomial:
    """Sum over excited diagrams D of prod over [lambda] minus D of q^(lambda'_j - i) / (1 - q^h(i,j))."""
    return _qnhlf_sum(s, degree, on_diagram=False)


def qnhlf_rhs_printed(s: SkewShape, degree: int) -> QPolynomial:
    """The same sum with the product taken over the cells of D."""
    return _qnhlf_sum(s, degree, on_diagram=True)


def skew_schur_q_lhs(s: SkewShape, degree: int) -> QPolynomial:
    """Sum of q^|T| over 0-based SSYT of weight at most the degree."""
    return QPolynomial.from_exponents((t.weight for t in enumerate_bounded_ssyt(s, degree)), degree)


def _diagram_exponents(s: SkewShape, on_diagram: bool) -> List[int]:
    lam = s.outer
    exponents = []
    for d in enumerate_excited(s):
        cells = d.cells if on_diagram else [c for c in lam.cells() if c not in d.cells]
        exponents.append(sum(lam.conjugate.part(c.col) - c.row for c in cells))
    return exponents


def _paired(left: List[int], right: List[int]) -> Tuple[QPolynomial, QPolynomial]:
    degree = max(left + right, default=0)
    return QPolynomial.from_exponents(left, degree), QPolynomial.from_exponents(right, degree)


def leading_terms(s: SkewShape) -> Tuple[QPolynomial, QPolynomial]:
    """(sum of q^|T| over minimal tableaux, sum over D of q^(sum over [lambda] minus D of lambda'_j - i))."""
    require_connected(s)
    weights = [t.weight for t in enumerate_min_via_moves(s)]
    return _paired(weights, _diagram_exponents(s, on_diagram=False))


def leading_terms_printed(s: SkewShape) -> Tuple[QPolynomial, QPolynomial]:
    require_connected(s)
    weights = [t.weight for t in enumerate_min_via_moves(s)]
    return _paired(weights, _diagram_exponents(s, on_diagram=True))


def excited_array_weights(s: SkewShape) -> QPolynomial:
    """Sum over D of q to the hook weight of the excited array A_D."""
    exponents = [excited_array(d).hook_weight() for d in enumerate_excited(s)]
    return QPolynomial.from_exponents(exponents)


# --- North-East Excited Diagrams and Tableaux of mu ---

def psi(d: NEExcitedDiagram) -> MuTableau:
    """T(x,y) = d + 1 - i, where (i,j) now holds the cell that started at (d+1-x, y)."""
    s = d.shape
    rows = s.d
    current = {o: c for c, o in d.origin.items()}
    entries = tuple(rows + 1 - current[Cell(rows + 1 - u.row, u.col)].row for u in s.inner.cells())
    return MuTableau(s.inner, entries, rows)


def omega(s: SkewShape, t: MuTableau) -> NEExcitedDiagram:
    rows = s.d
    origin = {}
    for u, v in t.items():
        origin[Cell(rows + 1 - v, u.col - u.row + v)] = Cell(rows + 1 - u.row, u.col)
    return NEExcitedDiagram(s, frozenset(origin), origin)


def ne_hook_product(d: NEExcitedDiagram) -> int:
    return math.prod(hook(d.shape.outer, c) for c in d.cells)


def oot_factor_product(s: SkewShape, t: MuTableau) -> int:
    return math.prod(_oof_factor(s, c, v) for c, v in t.items())


# --- Special Shapes ---

def staircase(k: int) -> Partition:
    """delta_k = (k-1, ..., 1)."""
    return Partition(tuple(range(k - 1, 0, -1)))


def staircase_zigzag(n: int) -> SkewShape:
    """The border strip delta_(n+2) / delta_n."""
    return SkewShape(staircase(n + 2), staircase(n))


def reverse_hook(m: int, n: int) -> SkewShape:
    """(m+1)^(n+1) / m^n."""
    return SkewShape(Partition((m + 1,) * (n + 1)), Partition((m,) * n))


def minimal_weight_polynomial(s: SkewShape) -> QPolynomial:
    return QPolynomial.from_exponents(t.weight for t in enumerate_min_via_moves(s))


# --- Verification ---

def verify_formulas(s: SkewShape) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("formulas", s.text())
    oracle = count_syt(s)
    checks = [("nhlf", f_nhlf), ("oof", f_oof)]
    if is_connected(s):
        checks.append(("minimal", f_minimal))
    if not s.inner.parts:
        checks.append(("hlf", lambda shape: f_hlf(shape.outer)))
    for name, evaluate in checks:
        report.checked += 1
        value = evaluate(s)
        if value != oracle:
            report.fail(name, oracle, value)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_term_counts(s: SkewShape) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("term-counts", s.text())
    counts = term_counts(s)
    report.checked += 1
    if counts.ed > counts.oot:
        report.fail("ED<=OOT", f"ED <= {counts.oot}", counts.ed)
    if (counts.ed == counts.oot) != counts.slim:
        report.fail("equality-iff-slim", counts.slim, counts.ed == counts.oot)
    if counts.slim:
        report.checked += 1
        value = hook_content_count(s)
        if value != counts.ed:
            report.fail("hook-content", counts.ed, value)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_qnhlf(s: SkewShape, degree: int) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("qnhlf", s.text())
    report.checked += 1
    lhs = skew_schur_q_lhs(s, degree)
    rhs = qnhlf_rhs(s, degree)
    if lhs != rhs:
        report.fail(f"degree-{degree}", lhs, rhs)
    if not s.inner.parts:
        report.checked += 1
        straight = littlewood_q(s.outer, degree)
        if straight != rhs:
            report.fail(f"littlewood/degree-{degree}", straight, rhs)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_littlewood(p: Partition, degree: int) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("littlewood", p.to_text())
    report.checked += 1
    expected = skew_schur_q_lhs(SkewShape(p), degree)
    actual = littlewood_q(p, degree)
    if expected != actual:
        report.fail(f"degree-{degree}", expected, actual)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_leading_terms(s: SkewShape) -> VerificationReport:
    start_time = time.time()
    report = VerificationReport("leading-terms", s.text())
    left, right = leading_terms(s)
    report.checked += 2
    if left != right:
        report.fail("minimal-vs-diagrams", left, right)
    arrays = excited_array_weights(s)
    if arrays != left:
        report.fail("minimal-vs-excited-arrays", left, arrays)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_ne_excited(s: SkewShape) -> VerificationReport:
    """On slim shapes psi is a bijection onto the tableaux of mu, matching products term by term."""
    start_time = time.time()
    report = VerificationReport("ne-excited", s.text())
    require_connected(s)
    if not is_slim(s):
        raise PreconditionError(f"Shape {s} is not slim")
    s = s.reduced
    oot = {t.entries: t for t in enumerate_oot(s)}
    images = set()
    for d in enumerate_ne_excited(s):
        report.checked += 1
        case = f"D={[tuple(c) for c in d.sorted_cells()]}"
        t = psi(d)
        images.add(t.entries)
        if t.entries not in oot:
            report.fail(f"{case}/image", "tableau of mu with admissible entries", t.rows())
            continue
        back = omega(s, t)
        if back.cells != d.cells:
            report.fail(f"{case}/inverse", d.sorted_cells(), back.sorted_cells())
        hooks, factors = ne_hook_product(d), oot_factor_product(s, t)
        if hooks != factors:
            report.fail(f"{case}/product", hooks, factors)
    if images != set(oot):
        report.fail("bijective", len(oot), len(images))
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report


def verify_special_shapes(max_n: int = 5, max_hook: int = 3) -> VerificationReport:
    """Zigzag strips count Catalan numbers; reverse hooks count binomials with a Gaussian binomial weight."""
    start_time = time.time()
    report = VerificationReport("special-shapes")
    for n in range(0, max_n + 1):
        s = staircase_zigzag(n)
        report.checked += 1
        expected = int(sympy.catalan(n))
        minimal, diagrams = len(enumerate_min_via_moves(s)), len(enumerate_excited(s))
        if minimal != expected or diagrams != expected:
            report.fail(f"zigzag-{n}", expected, {"minimal": minimal, "excited": diagrams})
    for m in range(1, max_hook + 1):
        for n in range(1, max_hook + 1):
            s = reverse_hook(m, n)
            report.checked += 1
            expected = int(sympy.binomial(n + m, n))
            count = len(enumerate_min_via_moves(s))
            if count != expected:
                report.fail(f"reverse-hook-{m}-{n}/count", expected, count)
            shift = n * (n + 1) // 2
            expected_q = q_binomial(n + m, n)
            expected_q = QPolynomial([0] * shift + expected_q.coefficient_list(), shift + expected_q.degree)
            actual_q = minimal_weight_polynomial(s)
            if actual_q != expected_q:
                report.fail(f"reverse-hook-{m}-{n}/q", expected_q, actual_q)
    report.elapsed_ms = (time.time() - start_time) * 1000.0
    return report
