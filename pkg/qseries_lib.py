import logging
from collections import Counter
from typing import Dict, Iterable, List, Union

import numpy as np

logger = logging.getLogger(__name__)


class QPolynomial:
    """
    A power series in q truncated after q^degree, with exact big-integer coefficients.

    Coefficients live in an object-dtype numpy array so they stay Python ints.
    Binary operations on series of different degrees keep the smaller degree.
    """

    def __init__(self, coeffs: Iterable[int], degree: int = None):
        values = [int(c) for c in coeffs]
        if degree is None:
            degree = max(len(values) - 1, 0)
        if degree < 0:
            raise ValueError(f"Truncation degree must be nonnegative, got {degree}")
        values = values[:degree + 1] + [0] * max(0, degree + 1 - len(values))
        self.degree = degree
        self.coeffs = np.array(values, dtype=object)

    # --- constructors ---

    @classmethod
    def zero(cls, degree: int) -> 'QPolynomial':
        return cls([], degree)

    @classmethod
    def one(cls, degree: int) -> 'QPolynomial':
        return cls([1], degree)

    @classmethod
    def monomial(cls, exponent: int, degree: int, coefficient: int = 1) -> 'QPolynomial':
        series = cls.zero(degree)
        if exponent <= degree:
            series.coeffs[exponent] = coefficient
        return series

    @classmethod
    def geometric(cls, h: int, degree: int) -> 'QPolynomial':
        """1 / (1 - q^h) = 1 + q^h + q^2h + ..."""
        if h < 1:
            raise ValueError(f"Geometric series needs a positive step, got {h}")
        series = cls.zero(degree)
        series.coeffs[::h] = 1
        return series

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], degree: int = None) -> 'QPolynomial':
        """Sum of q^e over the given exponents; exponents above the degree are dropped."""
        counts = Counter(exponents)
        if degree is None:
            degree = max(counts, default=0)
        series = cls.zero(degree)
        for e, m in counts.items():
            if e <= degree:
                series.coeffs[e] += m
        return series

    # --- arithmetic ---

    def __add__(self, other: Union['QPolynomial', int]) -> 'QPolynomial':
        if isinstance(other, int):
            result = self.copy()
            result.coeffs[0] += other
            return result
        degree = min(self.degree, other.degree)
        return QPolynomial(self.coeffs[:degree + 1] + other.coeffs[:degree + 1], degree)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other: 'QPolynomial') -> 'QPolynomial':
        degree = min(self.degree, other.degree)
        return QPolynomial(self.coeffs[:degree + 1] - other.coeffs[:degree + 1], degree)

    def __mul__(self, other: Union['QPolynomial', int]) -> 'QPolynomial':
        if isinstance(other, int):
            return QPolynomial(self.coeffs * other, self.degree)
        degree = min(self.degree, other.degree)
        result = np.array([0] * (degree + 1), dtype=object)
        for i in range(degree + 1):
            a = self.coeffs[i]
            if a:
                result[i:] += a * other.coeffs[:degree + 1 - i]
        return QPolynomial(result, degree)

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift(self, k: int) -> 'QPolynomial':
        """Multiplies by q^k, keeping the truncation degree."""
        if k >= self.degree + 1:
            return QPolynomial.zero(self.degree)
        return QPolynomial([0] * k + list(self.coeffs[:self.degree + 1 - k]), self.degree)

    def truncate(self, degree: int) -> 'QPolynomial':
        return QPolynomial(self.coeffs[:degree + 1], min(degree, self.degree))

    def copy(self) -> 'QPolynomial':
        return QPolynomial(self.coeffs, self.degree)

    # --- inspection ---

    def __getitem__(self, k: int) -> int:
        return int(self.coeffs[k]) if 0 <= k <= self.degree else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.degree == other.degree and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.degree, tuple(self.coeffs)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> Dict[int, int]:
        return {k: int(c) for k, c in enumerate(self.coeffs) if c}

    def coefficient_list(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    def to_json(self) -> Dict:
        return {"degree": self.degree, "coeffs": [str(int(c)) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Dict) -> 'QPolynomial':
        return cls([int(c) for c in data["coeffs"]], int(data["degree"]))

    def __str__(self) -> str:
        parts = []
        for k, c in self.terms().items():
            if k == 0:
                parts.append(str(c))
            else:
                coeff = "" if c == 1 else f"{c}*"
                parts.append(f"{coeff}q" if k == 1 else f"{coeff}q^{k}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"QPolynomial(degree={self.degree}, {self})"


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial [n choose k]_q, exact, of degree k(n-k)."""
    if k < 0 or k > n:
        return QPolynomial.zero(0)
    degree = k * (n - k)
    # Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], row by row.
    row: List[List[int]] = [[1]]
    for m in range(1, n + 1):
        new_row = []
        for j in range(0, min(m, k) + 1):
            left = row[j - 1] if j >= 1 else []
            right = row[j] if j < len(row) else []
            size = max(len(left), len(right) + j)
            coeffs = [0] * size
            for e, c in enumerate(left):
                coeffs[e] += c
            for e, c in enumerate(right):
                coeffs[e + j] += c
            new_row.append(coeffs)
        row = new_row
    return QPolynomial(row[k], degree)
