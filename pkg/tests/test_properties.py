"""Seeded randomized checks of the implications between coefficient matrices,
triangles, columns and rows."""

import random

import pytest

from riordantp.exact import Matrix
from riordantp.riordan import (
    Consistency,
    RiordanSpec,
    build_triangle,
    coefficient_matrix,
    extract_az,
    step_factors,
)
from riordantp.sequences import SequenceSpec, TailRule, is_log_concave, is_log_convex, is_pf_finite
from riordantp.totalpos import (
    ALL,
    column0_logconvex_check,
    column_pair_factors,
    is_tp_r,
    row_step_factors,
    rows_logconcave_check,
    triangle_tp_check,
)

CASES = 200
WINDOW = 6


def random_sequence(rng: random.Random, first_positive: bool = False) -> SequenceSpec:
    length = rng.randint(1, 4)
    prefix = [rng.randint(0, 3) for _ in range(length)]
    if first_positive and prefix[0] == 0:
        prefix[0] = rng.randint(1, 3)
    tail = rng.choice(list(TailRule))
    if tail is TailRule.REPEAT_LAST and rng.random() < 0.5:
        tail = TailRule.ZERO
    return SequenceSpec.of(prefix, tail)


def random_spec(rng: random.Random) -> RiordanSpec:
    return RiordanSpec(a_seq=random_sequence(rng, first_positive=True), z_seq=random_sequence(rng))


@pytest.fixture
def rng():
    return random.Random(20240607)


def test_tp2_coefficients_give_tp2_triangles(rng):
    observed = 0
    for _ in range(CASES):
        spec = random_spec(rng)
        if not is_tp_r(coefficient_matrix(spec, WINDOW), 2).holds:
            continue
        observed += 1
        assert is_tp_r(build_triangle(spec, WINDOW).to_matrix(), 2).holds, spec
    assert observed > 0


def test_tp3_coefficients_give_tp3_triangles(rng):
    for _ in range(CASES):
        spec = random_spec(rng)
        if is_tp_r(coefficient_matrix(spec, WINDOW), 3).holds:
            assert is_tp_r(build_triangle(spec, WINDOW).to_matrix(), 3).holds, spec


def test_tp2_coefficients_give_log_convex_first_columns(rng):
    for _ in range(CASES):
        spec = random_spec(rng)
        if is_tp_r(coefficient_matrix(spec, WINDOW), 2).holds:
            assert is_log_convex(build_triangle(spec, WINDOW).column(0)), spec


def test_log_concave_a_gives_log_concave_rows(rng):
    checked = 0
    for _ in range(CASES):
        a_seq = random_sequence(rng, first_positive=True)
        if rng.random() < 0.5:
            spec = RiordanSpec(a_seq=a_seq, z_seq=a_seq)
        else:
            spec = RiordanSpec(a_seq=a_seq, z_seq=a_seq.shifted(1))
        assert spec.consistency is not Consistency.NEITHER
        if not is_log_concave(a_seq.terms(WINDOW + 2)):
            continue
        checked += 1
        assert rows_logconcave_check(spec, WINDOW + 2).holds, spec
    assert checked > 0


def test_pf_a_gives_totally_positive_consistent_triangles(rng):
    checked = 0
    for _ in range(CASES):
        prefix = [rng.randint(1, 3)] + [rng.randint(0, 3) for _ in range(rng.randint(0, 3))]
        if not is_pf_finite(prefix).holds:
            continue
        a_seq = SequenceSpec.of(prefix, TailRule.ZERO)
        z_seq = a_seq if rng.random() < 0.5 else a_seq.shifted(1)
        spec = RiordanSpec(a_seq=a_seq, z_seq=z_seq)
        checked += 1
        assert triangle_tp_check(spec, ALL, WINDOW).holds, spec
        assert column0_logconvex_check(spec, WINDOW + 2), spec
    assert checked > 0


def test_factorizations_hold_for_random_specs(rng):
    for _ in range(CASES):
        spec = random_spec(rng)
        n = rng.randint(0, 4)
        first, second = step_factors(spec, n)
        assert first @ second == build_triangle(spec, n + 2).to_matrix()
        if n:
            pairs, r_window, weights = column_pair_factors(spec, n)
            assert r_window @ weights == pairs
        if spec.consistency is not Consistency.NEITHER:
            lhs, s_block, a_block = row_step_factors(spec, n)
            assert s_block @ a_block == lhs


def test_extract_az_inverts_build_triangle(rng):
    for _ in range(CASES):
        spec = random_spec(rng)
        recovered = extract_az(build_triangle(spec, WINDOW + 2))
        assert list(recovered.z) == spec.z_seq.terms(WINDOW)
        assert list(recovered.a) == spec.a_seq.terms(WINDOW)


def test_converse_of_the_tp2_implication(rng, record_property):
    """Exploratory: how often the triangle is TP2 while its coefficient matrix is not."""
    triangle_only = 0
    for _ in range(CASES):
        spec = random_spec(rng)
        triangle = is_tp_r(build_triangle(spec, WINDOW).to_matrix(), 2).holds
        coefficients = is_tp_r(coefficient_matrix(spec, WINDOW), 2).holds
        if triangle and not coefficients:
            triangle_only += 1
    record_property("triangle_tp2_without_coefficient_tp2", triangle_only)


def test_identity_window_is_totally_positive():
    assert is_tp_r(Matrix.identity(WINDOW)).holds
