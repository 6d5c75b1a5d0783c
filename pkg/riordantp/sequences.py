"""Finite descriptions of infinite nonnegative sequences and their positivity tests."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import ArgumentError, DomainError
from .exact import (
    Matrix,
    MinorWitness,
    Polynomial,
    ScalarLike,
    as_exact,
    count_distinct_real_roots,
    first_negative_minor,
)

logger = logging.getLogger(__name__)


class TailRule(str, Enum):
    ZERO = "zero"
    REPEAT_LAST = "repeat"


@dataclass(frozen=True)
class SequenceSpec:
    prefix: Tuple[Fraction, ...]
    tail: TailRule = TailRule.ZERO

    def __post_init__(self):
        prefix = tuple(as_exact(v) for v in self.prefix)
        if any(v < 0 for v in prefix):
            raise DomainError(f"sequence terms must be nonnegative: {[str(v) for v in prefix]}")
        tail = TailRule(self.tail)
        if tail is TailRule.REPEAT_LAST and not prefix:
            raise ArgumentError("a repeat-last tail needs a nonempty prefix")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def of(cls, values: Iterable[ScalarLike], tail: Union[TailRule, str] = TailRule.ZERO) -> "SequenceSpec":
        return cls(tuple(values), TailRule(tail))

    @property
    def eventual_value(self) -> Fraction:
        if self.tail is TailRule.REPEAT_LAST:
            return self.prefix[-1]
        return Fraction(0)

    def term(self, n: int) -> Fraction:
        if n < 0:
            raise ArgumentError(f"negative index {n}")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.eventual_value

    def terms(self, count: int) -> List[Fraction]:
        return [self.term(n) for n in range(count)]

    def shifted(self, k: int = 1) -> "SequenceSpec":
        """The sequence with its first k terms dropped."""
        if len(self.prefix) > k:
            return SequenceSpec(self.prefix[k:], self.tail)
        if self.tail is TailRule.REPEAT_LAST:
            return SequenceSpec((self.prefix[-1],), self.tail)
        return SequenceSpec((), TailRule.ZERO)

    def canonical(self) -> "SequenceSpec":
        """Shortest prefix describing the same infinite sequence."""
        prefix = list(self.prefix)
        tail = self.tail
        if tail is TailRule.REPEAT_LAST and prefix[-1] == 0:
            tail = TailRule.ZERO
        if tail is TailRule.ZERO:
            while prefix and prefix[-1] == 0:
                prefix.pop()
        else:
            while len(prefix) > 1 and prefix[-2] == prefix[-1]:
                prefix.pop()
        return SequenceSpec(tuple(prefix), tail)

    def same_as(self, other: "SequenceSpec") -> bool:
        return self.canonical() == other.canonical()


def term(s: SequenceSpec, n: int) -> Fraction:
    return s.term(n)


def toeplitz_window(s: SequenceSpec, n: int) -> Matrix:
    """n x n leading block of the lower-triangular Toeplitz matrix [a_{i-j}]."""
    if n < 1:
        raise ArgumentError(f"window size must be at least 1, got {n}")
    values = s.terms(n)
    return Matrix.from_rows([[values[i - j] if i >= j else 0 for j in range(n)] for i in range(n)])


def _checked(seq: Sequence[ScalarLike]) -> List[Fraction]:
    values = [as_exact(v) for v in seq]
    negative = [i for i, v in enumerate(values) if v < 0]
    if negative:
        raise DomainError(f"negative entry at index {negative[0]}: {values[negative[0]]}")
    return values


def log_concavity_violation(seq: Sequence[ScalarLike]) -> Optional[Tuple[int, int]]:
    """First (i, j), i < j, with a_i * a_{j+1} > a_{i+1} * a_j."""
    a = _checked(seq)
    for i in range(len(a) - 1):
        for j in range(i + 1, len(a) - 1):
            if a[i] * a[j + 1] > a[i + 1] * a[j]:
                return i, j
    return None


def log_convexity_violation(seq: Sequence[ScalarLike]) -> Optional[Tuple[int, int]]:
    """First (i, j), i < j, with a_i * a_{j+1} < a_{i+1} * a_j."""
    a = _checked(seq)
    for i in range(len(a) - 1):
        for j in range(i + 1, len(a) - 1):
            if a[i] * a[j + 1] < a[i + 1] * a[j]:
                return i, j
    return None


def is_log_concave(seq: Sequence[ScalarLike]) -> bool:
    return log_concavity_violation(seq) is None


def is_log_convex(seq: Sequence[ScalarLike]) -> bool:
    return log_convexity_violation(seq) is None


def hankel_tp2_log_convex(seq: Sequence[ScalarLike]) -> bool:
    """Log-convexity read off as TP2 of the two leading Hankel columns [a_{i+j}]."""
    a = _checked(seq)
    if len(a) < 3:
        return True
    rows = [[a[i + j] for j in range(2)] for i in range(len(a) - 1)]
    return first_negative_minor(Matrix.from_rows(rows), 2) is None


class RootCountWitness(NamedTuple):
    degree: int
    real_roots: int


@dataclass(frozen=True)
class PFVerdict:
    holds: bool
    witness: Union[MinorWitness, RootCountWitness, None] = None
    order: Optional[int] = None
    window: Optional[int] = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ArgumentError("a failed verdict needs a witness")

    @property
    def label(self) -> str:
        if self.window is None:
            return "PF" if self.holds else "not PF"
        verdict = "holds" if self.holds else "fails"
        return f"PF_{self.order} {verdict}, verified to window {self.window}"


def is_pf_finite(seq: Sequence[ScalarLike]) -> PFVerdict:
    """Decide PF of a finite sequence through real-rootedness of its polynomial."""
    values = _checked(seq)
    if not any(values):
        raise DomainError("the all-zero sequence has no generating polynomial to test")
    core = Polynomial(tuple(values)).without_zero_roots().squarefree_part()
    if core.degree < 1:
        return PFVerdict(True)
    real_roots = count_distinct_real_roots(core)
    logger.debug(f"squarefree core of degree {core.degree} has {real_roots} real roots")
    if real_roots == core.degree:
        return PFVerdict(True)
    return PFVerdict(False, RootCountWitness(core.degree, real_roots))


def is_pf_r_window(s: SequenceSpec, r: int, window: int) -> PFVerdict:
    """Check TP_r of the leading window x window Toeplitz block.

    A passing verdict certifies PF_r only up to the tested window.
    """
    if r < 1:
        raise ArgumentError(f"order must be at least 1, got {r}")
    if window < r:
        raise ArgumentError(f"window {window} is smaller than the order {r}")
    witness = first_negative_minor(toeplitz_window(s, window), r)
    return PFVerdict(witness is None, witness, order=r, window=window)
