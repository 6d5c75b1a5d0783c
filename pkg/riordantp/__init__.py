"""Exact-arithmetic Riordan arrays and total positivity checks."""

__version__ = "1.0.0"

from .errors import (  # noqa: E402
    ArgumentError,
    DimensionError,
    DomainError,
    NotRiordanError,
    PropernessError,
    RiordanTPError,
    SingularityError,
    SizeCapExceeded,
    UndefinedInputError,
)
from .exact import Matrix, Polynomial, count_distinct_real_roots, determinant_exact, minor  # noqa: E402
from .riordan import (  # noqa: E402
    NamedTriangle,
    RecursiveMatrixParams,
    RiordanSpec,
    SeriesPair,
    Triangle,
    build_recursive_matrix,
    build_triangle,
    catalan_like_numbers,
    extract_az,
    named_triangle,
    triangle_from_gf,
)
from .sequences import SequenceSpec, TailRule, is_log_concave, is_log_convex, is_pf_finite, is_pf_r_window  # noqa: E402
from .totalpos import ALL, JacobiParams, TPReport, is_tp_r, jacobi_tp2_criterion, jacobi_tp_criterion  # noqa: E402
