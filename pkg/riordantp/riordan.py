"""Riordan triangles from A/Z sequences, from (g, f) series, and as recursive matrices."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple, Union

from .errors import ArgumentError, DomainError, NotRiordanError, PropernessError, SingularityError
from .exact import Matrix, ScalarLike, as_exact, series_product
from .sequences import SequenceSpec, TailRule

logger = logging.getLogger(__name__)


class NamedTriangle(str, Enum):
    PASCAL = "pascal"
    CATALAN = "catalan"
    MOTZKIN = "motzkin"
    BALLOT = "ballot"
    SCHRODER_LARGE = "schroder-large"
    SCHRODER_LITTLE = "schroder-little"


class Consistency(str, Enum):
    CONSISTENT = "consistent"
    QUASI_CONSISTENT = "quasi-consistent"
    BOTH = "consistent and quasi-consistent"
    NEITHER = "neither"


@dataclass(frozen=True)
class Triangle:
    """Rows 0..n_rows-1 of a lower-triangular array; row n holds r_{n,0..n}."""

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_exact(v) for v in row) for row in self.rows)
        if not rows:
            raise ArgumentError("a triangle needs at least one row")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ArgumentError(f"row {n} has {len(row)} entries, expected {n + 1}")
        if rows[0][0] != 1:
            raise PropernessError(f"r_0,0 must be 1, got {rows[0][0]}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ScalarLike]]) -> "Triangle":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if 0 <= k <= n < self.n_rows:
            return self.rows[n][k]
        return Fraction(0)

    def row(self, n: int) -> Tuple[Fraction, ...]:
        return self.rows[n]

    def column(self, k: int) -> Tuple[Fraction, ...]:
        """Entries r_{n,k} for k <= n < n_rows."""
        return tuple(self.rows[n][k] for n in range(k, self.n_rows))

    def to_matrix(self, size: int = None) -> Matrix:
        size = self.n_rows if size is None else size
        if not 0 <= size <= self.n_rows:
            raise ArgumentError(f"no {size}x{size} window in a {self.n_rows}-row triangle")
        return Matrix.from_rows([[self.entry(n, k) for k in range(size)] for n in range(size)])


@dataclass(frozen=True)
class RiordanSpec:
    a_seq: SequenceSpec
    z_seq: SequenceSpec

    def __post_init__(self):
        if self.a_seq.term(0) == 0:
            raise PropernessError("a_0 must be nonzero for a proper Riordan array")

    @classmethod
    def of(
        cls,
        z: Iterable[ScalarLike],
        a: Iterable[ScalarLike],
        tail: Union[TailRule, str] = TailRule.ZERO,
    ) -> "RiordanSpec":
        return cls(a_seq=SequenceSpec.of(a, tail), z_seq=SequenceSpec.of(z, tail))

    @property
    def consistency(self) -> Consistency:
        consistent = self.a_seq.same_as(self.z_seq)
        quasi = self.z_seq.same_as(self.a_seq.shifted(1))
        if consistent and quasi:
            return Consistency.BOTH
        if consistent:
            return Consistency.CONSISTENT
        if quasi:
            return Consistency.QUASI_CONSISTENT
        return Consistency.NEITHER


@dataclass(frozen=True)
class RecursiveMatrixParams:
    a: Fraction
    b: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for field in ("a", "b", "s", "t"):
            value = as_exact(getattr(self, field))
            if value < 0:
                raise DomainError(f"{field} must be nonnegative, got {value}")
            object.__setattr__(self, field, value)

    @classmethod
    def of(cls, a: ScalarLike, b: ScalarLike, s: ScalarLike, t: ScalarLike) -> "RecursiveMatrixParams":
        return cls(a, b, s, t)


@dataclass(frozen=True)
class SeriesPair:
    g_coeffs: Tuple[Fraction, ...]
    f_coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        g = tuple(as_exact(v) for v in self.g_coeffs)
        f = tuple(as_exact(v) for v in self.f_coeffs)
        if not g or g[0] != 1:
            raise PropernessError("g(0) must be 1")
        if not f or f[0] == 0:
            raise PropernessError("f(0) must be nonzero")
        object.__setattr__(self, "g_coeffs", g)
        object.__setattr__(self, "f_coeffs", f)

    @property
    def truncation_order(self) -> int:
        return min(len(self.g_coeffs), len(self.f_coeffs))


class AZPrefixes(NamedTuple):
    z: Tuple[Fraction, ...]
    a: Tuple[Fraction, ...]


_ONE_REPEATED = SequenceSpec.of([1], TailRule.REPEAT_LAST)

NAMED_TRIANGLES: Dict[NamedTriangle, RiordanSpec] = {
    NamedTriangle.PASCAL: RiordanSpec.of(z=[1], a=[1, 1]),
    NamedTriangle.CATALAN: RiordanSpec.of(z=[2, 1], a=[1, 2, 1]),
    NamedTriangle.MOTZKIN: RiordanSpec.of(z=[1, 1], a=[1, 1, 1]),
    NamedTriangle.BALLOT: RiordanSpec(a_seq=_ONE_REPEATED, z_seq=_ONE_REPEATED),
    NamedTriangle.SCHRODER_LARGE: RiordanSpec.of(z=[2], a=[1, 2], tail=TailRule.REPEAT_LAST),
    NamedTriangle.SCHRODER_LITTLE: RiordanSpec.of(z=[1, 2], a=[1, 2], tail=TailRule.REPEAT_LAST),
}

# Column 0 of each recursive matrix gives the named Catalan-like numbers.
NAMED_RECURSIVE_PARAMS: Dict[str, RecursiveMatrixParams] = {
    "pascal": RecursiveMatrixParams.of(1, 0, 1, 0),
    "catalan": RecursiveMatrixParams.of(2, 1, 2, 1),
    "motzkin": RecursiveMatrixParams.of(1, 1, 1, 1),
    "central-binomial": RecursiveMatrixParams.of(2, 2, 2, 1),
    "schroder-large": RecursiveMatrixParams.of(2, 2, 3, 2),
}


def named_triangle(name: Union[NamedTriangle, str]) -> RiordanSpec:
    try:
        key = NamedTriangle(name)
    except ValueError:
        known = ", ".join(n.value for n in NamedTriangle)
        raise ArgumentError(f"unknown triangle {name!r}; expected one of {known}")
    return NAMED_TRIANGLES[key]


def recursive_matrix_spec(p: RecursiveMatrixParams) -> RiordanSpec:
    return RiordanSpec.of(z=[p.a, p.b], a=[1, p.s, p.t])


def build_triangle(spec: RiordanSpec, n_rows: int) -> Triangle:
    """Apply the A/Z recurrence; sums stop at the triangle boundary."""
    if n_rows < 1:
        raise ArgumentError(f"n_rows must be at least 1, got {n_rows}")
    z = spec.z_seq.terms(n_rows)
    a = spec.a_seq.terms(n_rows)
    rows = [(Fraction(1),)]
    for n in range(n_rows - 1):
        prev = rows[-1]
        head = sum(z[j] * prev[j] for j in range(n + 1))
        rest = [sum(a[j] * prev[k + j] for j in range(n - k + 1)) for k in range(n + 1)]
        rows.append((head, *rest))
    logger.debug(f"built {n_rows} rows from A/Z sequences")
    return Triangle(tuple(rows))


def coefficient_matrix(spec: RiordanSpec, n: int) -> Matrix:
    """n x n window of J(R): Z in column 0, the Toeplitz matrix of A after it."""
    if n < 1:
        raise ArgumentError(f"window size must be at least 1, got {n}")
    z = spec.z_seq.terms(n)
    a = spec.a_seq.terms(n)
    return Matrix.from_rows(
        [[z[i]] + [a[i - j + 1] if i - j + 1 >= 0 else 0 for j in range(1, n)] for i in range(n)]
    )


def build_recursive_matrix(p: RecursiveMatrixParams, n_rows: int) -> Triangle:
    if n_rows < 1:
        raise ArgumentError(f"n_rows must be at least 1, got {n_rows}")
    rows = [(Fraction(1),)]
    for n in range(n_rows - 1):
        prev = rows[-1]

        def at(k: int) -> Fraction:
            return prev[k] if 0 <= k <= n else Fraction(0)

        head = p.a * at(0) + p.b * at(1)
        rest = [at(k - 1) + p.s * at(k) + p.t * at(k + 1) for k in range(1, n + 2)]
        rows.append((head, *rest))
    return Triangle(tuple(rows))


def catalan_like_numbers(p: RecursiveMatrixParams, count: int) -> Tuple[Fraction, ...]:
    if count < 1:
        raise ArgumentError(f"count must be at least 1, got {count}")
    return build_recursive_matrix(p, count).column(0)


def triangle_from_gf(sp: SeriesPair, n_rows: int) -> Triangle:
    """Column k is x^k f(x)^k g(x), by truncated series multiplication."""
    if n_rows < 1:
        raise ArgumentError(f"n_rows must be at least 1, got {n_rows}")
    if sp.truncation_order < n_rows:
        raise ArgumentError(
            f"series truncated to {sp.truncation_order} terms cannot give {n_rows} rows"
        )
    rows = [[Fraction(0)] * (n + 1) for n in range(n_rows)]
    column = list(sp.g_coeffs[:n_rows])
    for k in range(n_rows):
        for n in range(k, n_rows):
            rows[n][k] = column[n - k]
        column = series_product(column, sp.f_coeffs, n_rows - k - 1)
    return Triangle.from_rows(rows)


def extract_az(t: Triangle) -> AZPrefixes:
    """Recover the leading n_rows - 2 terms of Z and A from a numeric triangle.

    Raises NotRiordanError at the first entry the recovered A-sequence does
    not reproduce.
    """
    if t.n_rows < 3:
        raise ArgumentError(f"need at least 3 rows, got {t.n_rows}")
    z, a = [], []
    for n in range(t.n_rows - 1):
        diagonal = t.entry(n, n)
        if diagonal == 0:
            raise SingularityError(f"zero diagonal entry r_{n},{n}")
        z.append((t.entry(n + 1, 0) - sum(z[j] * t.entry(n, j) for j in range(n))) / diagonal)
        a.append((t.entry(n + 1, 1) - sum(a[j] * t.entry(n, j) for j in range(n))) / diagonal)
    for n in range(t.n_rows - 1):
        for k in range(1, n + 1):
            expected = sum(a[j] * t.entry(n, k + j) for j in range(n - k + 1))
            actual = t.entry(n + 1, k + 1)
            if expected != actual:
                raise NotRiordanError(n + 1, k + 1, expected, actual)
    m = t.n_rows - 2
    return AZPrefixes(z=tuple(z[:m]), a=tuple(a[:m]))


def step_factors(spec: RiordanSpec, n: int) -> Tuple[Matrix, Matrix]:
    """Factors whose product is the (n+2) x (n+2) window R_{n+1}.

    The first is diag(1, R_n); the second has rows (1, 0, ...) and
    (z_i, a_i, a_{i-1}, ..., a_0, 0, ...).
    """
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    window = build_triangle(spec, n + 1).to_matrix()
    z = spec.z_seq.terms(n + 1)
    a = spec.a_seq.terms(n + 1)
    first = [[1] + [0] * (n + 1)] + [[0] + list(window.row(i)) for i in range(n + 1)]
    second = [[1] + [0] * (n + 1)] + [
        [z[i]] + [a[i - j] if i >= j else 0 for j in range(n + 1)] for i in range(n + 1)
    ]
    return Matrix.from_rows(first), Matrix.from_rows(second)
