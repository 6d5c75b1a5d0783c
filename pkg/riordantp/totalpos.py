"""Total positivity checks, the Jacobi-matrix criteria and the Hankel decomposition."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple, Union

from .config import settings
from .errors import ArgumentError, DomainError, SizeCapExceeded
from .exact import (
    Matrix,
    MinorWitness,
    ScalarLike,
    as_exact,
    determinant_exact,
    first_negative_minor,
    minor,
)
from .riordan import (
    Consistency,
    RecursiveMatrixParams,
    RiordanSpec,
    build_recursive_matrix,
    build_triangle,
    catalan_like_numbers,
    coefficient_matrix,
)
from .sequences import is_log_convex, log_concavity_violation

logger = logging.getLogger(__name__)

ALL = "all"
Order = Union[int, str]


def parse_order(value: Union[int, str]) -> Order:
    """Accept a positive order or "all"."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text == ALL:
            return ALL
        if not text.isdigit():
            raise ArgumentError(f"order must be a positive integer or 'all', got {value!r}")
        value = int(text)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ArgumentError(f"order must be a positive integer or 'all', got {value!r}")
    return value


@dataclass(frozen=True)
class TPReport:
    holds: bool
    order_tested: Order
    window: int
    witness: Optional[MinorWitness] = None

    def __post_init__(self):
        if not self.holds and (self.witness is None or self.witness.value >= 0):
            raise ArgumentError("a failed TP report needs a negative witness minor")


def is_tp_r(
    m: Matrix,
    r: Order = ALL,
    *,
    force: bool = False,
    size_cap: Optional[int] = None,
) -> TPReport:
    """Enumerate minors of order <= r, stopping at the first negative one."""
    r = parse_order(r)
    if r == ALL:
        cap = settings.tp_size_cap if size_cap is None else size_cap
        if max(m.rows, m.cols) > cap and not force:
            logger.warning(f"refusing all-orders check of a {m.rows}x{m.cols} matrix (cap {cap})")
            raise SizeCapExceeded(m.rows, m.cols, cap, "pass force to lift it")
        max_order = min(m.rows, m.cols)
    else:
        max_order = r
    witness = first_negative_minor(m, max_order)
    if witness is not None:
        logger.info(
            f"negative minor {witness.value} at rows {witness.rows}, cols {witness.cols}"
        )
    return TPReport(witness is None, r, max(m.rows, m.cols), witness)


class TriangleTPReport(NamedTuple):
    triangle: TPReport
    coefficient: TPReport

    @property
    def holds(self) -> bool:
        return self.triangle.holds

    @property
    def implication_observed(self) -> bool:
        """J window TP_r implies R window TP_r on this instance."""
        return self.triangle.holds or not self.coefficient.holds


def triangle_tp_check(
    spec: RiordanSpec,
    r: Order,
    n_rows: int,
    *,
    force: bool = False,
    size_cap: Optional[int] = None,
) -> TriangleTPReport:
    triangle = build_triangle(spec, n_rows).to_matrix()
    report = TriangleTPReport(
        triangle=is_tp_r(triangle, r, force=force, size_cap=size_cap),
        coefficient=is_tp_r(coefficient_matrix(spec, n_rows), r, force=force, size_cap=size_cap),
    )
    if not report.implication_observed:
        logger.error("coefficient window is TP but the triangle window is not")
    return report


@dataclass(frozen=True)
class JacobiParams:
    a: Fraction
    b: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for field in ("a", "b", "r", "s", "t"):
            value = as_exact(getattr(self, field))
            if value < 0:
                raise DomainError(f"{field} must be nonnegative, got {value}")
            object.__setattr__(self, field, value)

    @classmethod
    def of(cls, a: ScalarLike, b: ScalarLike, r: ScalarLike, s: ScalarLike, t: ScalarLike) -> "JacobiParams":
        return cls(a, b, r, s, t)

    @classmethod
    def for_recursive_matrix(cls, p: RecursiveMatrixParams) -> "JacobiParams":
        return cls(p.a, p.b, Fraction(1), p.s, p.t)


def jacobi_tp2_criterion(p: JacobiParams) -> bool:
    return p.a * p.s >= p.b * p.r and p.s ** 2 >= p.r * p.t


def jacobi_tp_criterion(p: JacobiParams) -> bool:
    """s^2 >= 4rt and a(s + sqrt(s^2 - 4rt))/2 >= br, decided without square roots."""
    discriminant = p.s ** 2 - 4 * p.r * p.t
    if discriminant < 0:
        return False
    # remaining condition: a * sqrt(discriminant) >= 2br - as
    gap = 2 * p.b * p.r - p.a * p.s
    if gap <= 0:
        return True
    return p.a ** 2 * discriminant >= gap ** 2


def _nonnegative(**values: ScalarLike) -> List[Fraction]:
    out = []
    for name, value in values.items():
        value = as_exact(value)
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")
        out.append(value)
    return out


def d_sequence(r: ScalarLike, s: ScalarLike, t: ScalarLike, count: int) -> List[Fraction]:
    """d_0..d_{count-1} of d_n = s d_{n-1} - rt d_{n-2}, d_0 = 1, d_1 = s."""
    if count < 1:
        raise ArgumentError(f"count must be at least 1, got {count}")
    r, s, t = _nonnegative(r=r, s=s, t=t)
    d = [Fraction(1), s][:count]
    while len(d) < count:
        d.append(s * d[-1] - r * t * d[-2])
    return d


def big_d_sequence(p: JacobiParams, count: int) -> List[Fraction]:
    """D_0 = a and D_n = a d_n - br d_{n-1}."""
    d = d_sequence(p.r, p.s, p.t, count)
    return [p.a] + [p.a * d[n] - p.b * p.r * d[n - 1] for n in range(1, count)]


def tridiagonal_window(r: ScalarLike, s: ScalarLike, t: ScalarLike, n: int) -> Matrix:
    """s on the diagonal, r above it, t below it; its determinant is d_n."""
    r, s, t = _nonnegative(r=r, s=s, t=t)
    return Matrix.from_rows(
        [[s if i == j else r if j == i + 1 else t if i == j + 1 else 0 for j in range(n)]
         for i in range(n)]
    )


def jacobi_window(p: JacobiParams, n: int) -> Matrix:
    """n x n leading window of J; the (n+1) x (n+1) window has determinant D_n."""
    if n < 1:
        raise ArgumentError(f"window size must be at least 1, got {n}")
    rows = [list(row) for row in tridiagonal_window(p.r, p.s, p.t, n).to_rows()]
    rows[0][0] = p.a
    if n > 1:
        rows[1][0] = p.b
    return Matrix.from_rows(rows)


class HankelWindow(NamedTuple):
    n: int
    matrix: Matrix


def hankel_window(col0) -> HankelWindow:
    values = [as_exact(v) for v in col0]
    if not values:
        raise ArgumentError("a Hankel window needs at least one term")
    n = (len(values) + 1) // 2
    return HankelWindow(n, Matrix.from_rows([[values[i + j] for j in range(n)] for i in range(n)]))


class HankelDecompositionReport(NamedTuple):
    holds: bool
    window: int
    determinant: Fraction
    mismatch: Optional[Tuple[int, int, Fraction, Fraction]] = None


def hankel_weights(p: RecursiveMatrixParams, n: int) -> List[Fraction]:
    """Diagonal of T_n: 1, b, bt, bt^2, ...; equal to 1, t, t^2, ... when b = t."""
    return [Fraction(1)] + [p.b * p.t ** (i - 1) for i in range(1, n)]


def hankel_decomposition_check(p: RecursiveMatrixParams, n: int) -> HankelDecompositionReport:
    """Compare H_n with R_n T_n R_n' where T_n = diag(hankel_weights(p, n))."""
    if n < 1:
        raise ArgumentError(f"window size must be at least 1, got {n}")
    r_window = build_recursive_matrix(p, n).to_matrix()
    weights = Matrix.diagonal(hankel_weights(p, n))
    product = r_window @ weights @ r_window.transpose()
    hankel = hankel_window(catalan_like_numbers(p, 2 * n - 1)).matrix
    mismatch = next(
        (
            (i, j, product[i, j], hankel[i, j])
            for i in range(n)
            for j in range(n)
            if product[i, j] != hankel[i, j]
        ),
        None,
    )
    return HankelDecompositionReport(mismatch is None, n, determinant_exact(hankel), mismatch)


class HankelTPReport(NamedTuple):
    decomposition: HankelDecompositionReport
    tp: TPReport

    @property
    def holds(self) -> bool:
        return self.decomposition.holds and self.tp.holds


def hankel_tp_check(
    p: RecursiveMatrixParams,
    n: int,
    r: Order = ALL,
    *,
    force: bool = False,
    size_cap: Optional[int] = None,
) -> HankelTPReport:
    decomposition = hankel_decomposition_check(p, n)
    hankel = hankel_window(catalan_like_numbers(p, 2 * n - 1)).matrix
    return HankelTPReport(decomposition, is_tp_r(hankel, r, force=force, size_cap=size_cap))


class RecursiveMatrixGuarantees(NamedTuple):
    logconvex_guaranteed: bool
    tp_guaranteed: bool


def recursive_matrix_guarantees(p: RecursiveMatrixParams) -> RecursiveMatrixGuarantees:
    """Sufficient conditions for a log-convex column 0 and for a TP R(a,b;s,t)."""
    return RecursiveMatrixGuarantees(
        logconvex_guaranteed=p.a * p.s >= p.b and p.s ** 2 >= p.t,
        tp_guaranteed=jacobi_tp_criterion(JacobiParams.for_recursive_matrix(p)),
    )


def column0_logconvex_check(spec: RiordanSpec, n_rows: int) -> bool:
    return is_log_convex(build_triangle(spec, n_rows).column(0))


def column_pair_factors(spec: RiordanSpec, n: int) -> Tuple[Matrix, Matrix, Matrix]:
    """[r_{i,0}, r_{i+1,0}] (i < n) together with the factors R_n and [[1, z_0], [0, z_1], ...]."""
    triangle = build_triangle(spec, n + 1)
    column = triangle.column(0)
    z = spec.z_seq.terms(n)
    pairs = Matrix.from_rows([[column[i], column[i + 1]] for i in range(n)])
    weights = Matrix.from_rows([[1 if i == 0 else 0, z[i]] for i in range(n)])
    return pairs, triangle.to_matrix(n), weights


class RowsVerdict(NamedTuple):
    holds: bool
    failing_row: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None


def rows_logconcave_check(spec: RiordanSpec, n_rows: int) -> RowsVerdict:
    triangle = build_triangle(spec, n_rows)
    for n in range(n_rows):
        violation = log_concavity_violation(triangle.row(n))
        if violation is not None:
            logger.info(f"row {n} is not log-concave at {violation}")
            return RowsVerdict(False, n, violation)
    return RowsVerdict(True)


def row_step_factors(spec: RiordanSpec, n: int) -> Tuple[Matrix, Matrix, Matrix]:
    """Toeplitz-shaped factorization carrying row n of R to row n+1.

    Consistent arrays use (n+1) x (n+1) blocks, quasi-consistent ones
    (n+2) x (n+2) blocks that also reach t_0.
    """
    kind = spec.consistency
    if kind is Consistency.NEITHER:
        raise ArgumentError("row factorization needs a consistent or quasi-consistent array")
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    size = n + 2 if kind is Consistency.QUASI_CONSISTENT else n + 1
    triangle = build_triangle(spec, n + 2)
    s, t = triangle.row(n), triangle.row(n + 1)
    a = spec.a_seq.terms(size)
    lhs = Matrix.from_rows(
        [[t[n + 1 - i + j] if j <= i else 0 for j in range(size)] for i in range(size)]
    )
    s_block = Matrix.from_rows(
        [[s[n - i + j] if 0 <= n - i + j <= n else 0 for j in range(size)] for i in range(size)]
    )
    a_block = Matrix.from_rows(
        [[a[i - j] if i >= j else 0 for j in range(size)] for i in range(size)]
    )
    return lhs, s_block, a_block


def witness_value(m: Matrix, witness: MinorWitness) -> Fraction:
    """Recompute a reported witness minor."""
    return minor(m, witness.rows, witness.cols)
