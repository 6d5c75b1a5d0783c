"""Exact rational arithmetic: matrices, determinants, minors and polynomials.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import ArgumentError, DimensionError, UndefinedInputError

logger = logging.getLogger(__name__)

ExactScalar = Fraction
ScalarLike = Union[int, str, Fraction]

_RATIONAL_TEXT = re.compile(r"[+-]?\d+(/\d+)?")


def as_exact(value: ScalarLike) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to an exact scalar."""
    if isinstance(value, bool):
        raise ArgumentError(f"not an exact rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_TEXT.fullmatch(text):
            raise ArgumentError(f"not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ArgumentError(f"zero denominator in {value!r}")
    raise ArgumentError(f"not an exact rational: {value!r} ({type(value).__name__})")


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], List[int]]:
    # Row i is multiplied by scales[i] > 0, so every minor keeps its sign.
    int_rows, scales = [], []
    for row in rows:
        scale = math.lcm(*(entry.denominator for entry in row)) if row else 1
        int_rows.append([entry.numerator * (scale // entry.denominator) for entry in row])
        scales.append(scale)
    return int_rows, scales


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative dimension {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(as_exact(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ScalarLike]]) -> "Matrix":
        grid = [list(row) for row in rows]
        cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise DimensionError("rows of unequal length")
        return cls(len(grid), cols, tuple(entry for row in grid for entry in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> "Matrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ArgumentError(f"index ({i},{j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[Tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return Matrix.from_rows(
            [
                [sum((self[i, k] * other[k, j] for k in range(self.cols)), Fraction(0))
                 for j in range(other.cols)]
                for i in range(self.rows)
            ]
        )

    def submatrix(self, rowset: Sequence[int], colset: Sequence[int]) -> "Matrix":
        return Matrix.from_rows([[self[i, j] for j in colset] for i in rowset])

    def leading(self, n: int) -> "Matrix":
        """Leading principal n x n window."""
        if n > min(self.rows, self.cols):
            raise DimensionError(f"no {n}x{n} leading window in a {self.rows}x{self.cols} matrix")
        return self.submatrix(range(n), range(n))


def _bareiss(a: List[List[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous
        previous = pivot
    return sign * a[n - 1][n - 1]


def determinant_exact(m: Matrix) -> Fraction:
    """Fraction-free Bareiss elimination after clearing row denominators."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    int_rows, scales = _integer_rows(m.to_rows())
    return Fraction(_bareiss(int_rows), math.prod(scales))


def _check_index_set(indices: Sequence[int], bound: int, what: str) -> None:
    if any(not 0 <= i < bound for i in indices):
        raise ArgumentError(f"{what} index out of range 0..{bound - 1}: {list(indices)}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ArgumentError(f"{what} set must be strictly increasing: {list(indices)}")


def minor(m: Matrix, rowset: Sequence[int], colset: Sequence[int]) -> Fraction:
    rowset, colset = tuple(rowset), tuple(colset)
    if len(rowset) != len(colset):
        raise ArgumentError(f"row set of size {len(rowset)} with column set of size {len(colset)}")
    _check_index_set(rowset, m.rows, "row")
    _check_index_set(colset, m.cols, "column")
    return determinant_exact(m.submatrix(rowset, colset))


class MinorWitness(NamedTuple):
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    value: Fraction


def first_negative_minor(m: Matrix, max_order: int) -> Optional[MinorWitness]:
    """Return the first negative minor of order <= max_order, or None.

    Minors are visited by increasing order, then lexicographic row set, then
    lexicographic column set. Order-k minors come from the order-(k-1) ones
    by Laplace expansion along the last selected row.
    """
    order = min(max_order, m.rows, m.cols)
    int_rows, scales = _integer_rows(m.to_rows())
    previous: dict = {}
    for k in range(1, order + 1):
        current: dict = {}
        keep = k < order
        for rows in combinations(range(m.rows), k):
            last = int_rows[rows[-1]]
            head = rows[:-1]
            for cols in combinations(range(m.cols), k):
                if k == 1:
                    value = last[cols[0]]
                else:
                    value = 0
                    for pos, col in enumerate(cols):
                        entry = last[col]
                        if not entry:
                            continue
                        sub = previous[head, cols[:pos] + cols[pos + 1:]]
                        if sub:
                            value += entry * sub if (k - 1 + pos) % 2 == 0 else -entry * sub
                if value < 0:
                    scale = math.prod(scales[i] for i in rows)
                    return MinorWitness(rows, cols, Fraction(value, scale))
                if keep:
                    current[rows, cols] = value
        logger.debug(f"all order-{k} minors of the {m.rows}x{m.cols} matrix are nonnegative")
        previous = current
    return None


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coeffs[i] multiplies x**i, trailing zeros trimmed."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [as_exact(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def of(cls, *coeffs: ScalarLike) -> "Polynomial":
        return cls(tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[ScalarLike]) -> "Polynomial":
        result = cls.of(1)
        for root in roots:
            result = result * cls.of(-as_exact(root), 1)
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: ScalarLike) -> Fraction:
        x = as_exact(x)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = as_exact(other)
            return Polynomial(tuple(c * factor for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise UndefinedInputError("division by the zero polynomial")
        remainder = list(self.coeffs)
        d = other.degree
        quotient = [Fraction(0)] * max(len(remainder) - d, 0)
        for shift in range(len(remainder) - d - 1, -1, -1):
            factor = remainder[shift + d] / other.leading
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(other.coeffs):
                    remainder[shift + i] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def primitive(self) -> "Polynomial":
        """Positive rescaling to coprime integer coefficients (content normalization)."""
        if self.is_zero:
            return self
        scale = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (scale // c.denominator) for c in self.coeffs]
        content = math.gcd(*ints)
        return Polynomial(tuple(Fraction(v // content) for v in ints))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero:
            a, b = b, divmod(a, b)[1].primitive()
        return a.monic()

    def squarefree_part(self) -> "Polynomial":
        if self.degree < 1:
            return self
        quotient, _ = divmod(self, self.gcd(self.derivative()))
        return quotient

    def without_zero_roots(self) -> "Polynomial":
        """Divide out the largest power of x."""
        coeffs = list(self.coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        return Polynomial(tuple(coeffs))


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sign_changes(values: Iterable[Fraction]) -> int:
    """Count sign changes, ignoring zeros."""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: Polynomial) -> List[Polynomial]:
    chain = [p.primitive()]
    derivative = p.derivative().primitive()
    if derivative.is_zero:
        return chain
    chain.append(derivative)
    while True:
        _, remainder = divmod(chain[-2], chain[-1])
        if remainder.is_zero:
            return chain
        chain.append((-remainder).primitive())


def count_distinct_real_roots(p: Polynomial) -> int:
    if p.is_zero:
        raise UndefinedInputError("the zero polynomial has no finite root count")
    q = p.squarefree_part()
    if q.degree < 1:
        return 0
    chain = sturm_chain(q)
    at_plus_infinity = [c.leading for c in chain]
    at_minus_infinity = [c.leading if c.degree % 2 == 0 else -c.leading for c in chain]
    return sign_changes(at_minus_infinity) - sign_changes(at_plus_infinity)


def series_product(p: Sequence[Fraction], q: Sequence[Fraction], order: int) -> List[Fraction]:
    """First `order` coefficients of the product of two power series."""
    out = [Fraction(0)] * order
    for i, a in enumerate(p[:order]):
        if a:
            for j, b in enumerate(q[:order - i]):
                out[i + j] += a * b
    return out
