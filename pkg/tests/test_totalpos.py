from fractions import Fraction
from itertools import product

import pytest

from riordantp.errors import ArgumentError, DomainError, SizeCapExceeded
from riordantp.exact import Matrix, MinorWitness, determinant_exact
from riordantp.riordan import (
    NAMED_RECURSIVE_PARAMS,
    NAMED_TRIANGLES,
    NamedTriangle,
    RecursiveMatrixParams,
    RiordanSpec,
    build_triangle,
    catalan_like_numbers,
    coefficient_matrix,
    recursive_matrix_spec,
)
from riordantp.sequences import is_log_convex, is_pf_r_window
from riordantp.totalpos import (
    ALL,
    JacobiParams,
    TPReport,
    big_d_sequence,
    column0_logconvex_check,
    column_pair_factors,
    d_sequence,
    hankel_decomposition_check,
    hankel_tp_check,
    hankel_weights,
    hankel_window,
    is_tp_r,
    jacobi_tp2_criterion,
    jacobi_tp_criterion,
    jacobi_window,
    parse_order,
    recursive_matrix_guarantees,
    row_step_factors,
    rows_logconcave_check,
    triangle_tp_check,
    tridiagonal_window,
    witness_value,
)

NOT_TP2 = RiordanSpec.of(z=[3], a=[1, 0, 1])


@pytest.mark.parametrize("value, expected", [("all", ALL), ("ALL", ALL), (3, 3), ("2", 2)])
def test_parse_order(value, expected):
    assert parse_order(value) == expected


@pytest.mark.parametrize("value", [0, -1, "x", "1.5", True])
def test_parse_order_rejects(value):
    with pytest.raises(ArgumentError):
        parse_order(value)


def test_is_tp_r_reports_the_first_negative_minor():
    report = is_tp_r(Matrix.from_rows([[1, 1], [2, 1]]), 2)
    assert not report.holds
    assert report.witness == MinorWitness((0, 1), (0, 1), Fraction(-1))
    assert is_tp_r(Matrix.from_rows([[1, 1], [2, 1]]), 1).holds


def test_is_tp_r_size_cap():
    m = Matrix.identity(3)
    with pytest.raises(SizeCapExceeded):
        is_tp_r(m, ALL, size_cap=2)
    assert is_tp_r(m, ALL, size_cap=2, force=True).holds
    assert is_tp_r(m, 3, size_cap=2).holds
    with pytest.raises(SizeCapExceeded):
        is_tp_r(Matrix.identity(13))


def test_failed_report_needs_a_negative_witness():
    with pytest.raises(ArgumentError):
        TPReport(False, 2, 3)
    with pytest.raises(ArgumentError):
        TPReport(False, 2, 3, MinorWitness((0,), (0,), Fraction(1)))


@pytest.mark.parametrize("name", [NamedTriangle.PASCAL, NamedTriangle.CATALAN])
def test_pascal_and_catalan_are_totally_positive(name):
    window = build_triangle(NAMED_TRIANGLES[name], 10).to_matrix()
    assert is_tp_r(window, ALL).holds


@pytest.mark.parametrize(
    "name", [NamedTriangle.BALLOT, NamedTriangle.SCHRODER_LARGE, NamedTriangle.SCHRODER_LITTLE]
)
def test_pf_a_sequences_give_tp3_triangles(name):
    spec = NAMED_TRIANGLES[name]
    assert is_pf_r_window(spec.a_seq, 3, 10).holds
    assert is_tp_r(build_triangle(spec, 10).to_matrix(), 3).holds


def test_motzkin_triangle_is_tp2_but_not_tp3():
    spec = NAMED_TRIANGLES[NamedTriangle.MOTZKIN]
    window = build_triangle(spec, 10).to_matrix()
    assert is_tp_r(window, 2).holds
    report = is_tp_r(window, 3)
    assert not report.holds
    assert witness_value(window, report.witness) == report.witness.value < 0
    assert not is_pf_r_window(spec.a_seq, 3, 10).holds


def test_motzkin_tp3_failure_is_a_real_minor():
    window = build_triangle(NAMED_TRIANGLES[NamedTriangle.MOTZKIN], 6).to_matrix()
    assert witness_value(window, MinorWitness((3, 4, 5), (0, 1, 2), Fraction(0))) == -6


def test_triangle_tp_check_reports_both_windows():
    report = triangle_tp_check(NOT_TP2, 2, 6)
    assert not report.coefficient.holds
    assert report.coefficient.witness == MinorWitness((1, 2), (1, 2), Fraction(-1))
    assert not report.holds
    assert report.implication_observed


def test_triangle_tp_check_on_catalan():
    report = triangle_tp_check(NAMED_TRIANGLES[NamedTriangle.CATALAN], 3, 8)
    assert report.holds and report.coefficient.holds


def test_jacobi_examples():
    assert jacobi_tp_criterion(JacobiParams.of(2, 1, 1, 2, 1))
    assert jacobi_tp2_criterion(JacobiParams.of(2, 1, 1, 2, 1))
    assert not jacobi_tp_criterion(JacobiParams.of(1, 1, 1, 1, 1))
    assert jacobi_tp2_criterion(JacobiParams.of(1, 1, 1, 1, 1))
    assert not jacobi_tp2_criterion(JacobiParams.of(1, 2, 1, 1, 0))


def test_jacobi_params_are_nonnegative():
    with pytest.raises(DomainError):
        JacobiParams.of(1, 1, -1, 1, 1)


def test_closed_form_criteria_match_brute_force():
    disagreements = []
    for a, b, r, s, t in product(range(4), repeat=5):
        p = JacobiParams.of(a, b, r, s, t)
        window = jacobi_window(p, 7)
        if jacobi_tp_criterion(p) is not is_tp_r(window, ALL).holds:
            disagreements.append(("tp", a, b, r, s, t))
        if jacobi_tp2_criterion(p) is not is_tp_r(window, 2).holds:
            disagreements.append(("tp2", a, b, r, s, t))
    assert disagreements == []


def test_jacobi_criterion_with_rational_parameters():
    # s^2 = 4rt exactly, a(s/2) = br exactly
    assert jacobi_tp_criterion(JacobiParams.of("1/2", "1/4", 1, 1, "1/4"))
    assert not jacobi_tp_criterion(JacobiParams.of("1/2", "1/3", 1, 1, "1/4"))


@pytest.mark.parametrize("r, s, t", list(product(range(4), repeat=3)))
def test_d_sequence_identities(r, s, t):
    d = d_sequence(r, s, t, 10)
    for n in range(1, 9):
        assert d[n] ** 2 - d[n - 1] * d[n + 1] == (r * t) ** n
    for n in range(9):
        assert determinant_exact(tridiagonal_window(r, s, t, n)) == d[n]


def test_big_d_matches_jacobi_determinants():
    for a, b, r, s, t in product(range(3), repeat=5):
        p = JacobiParams.of(a, b, r, s, t)
        big_d = big_d_sequence(p, 7)
        for n in range(7):
            assert determinant_exact(jacobi_window(p, n + 1)) == big_d[n]


def test_d_sequence_count():
    assert d_sequence(1, 2, 1, 1) == [1]
    with pytest.raises(ArgumentError):
        d_sequence(1, 2, 1, 0)


@pytest.mark.parametrize(
    "r, s, t, count, expected",
    [
        (1, 2, 1, 6, [1, 2, 3, 4, 5, 6]),
        (1, 1, 1, 6, [1, 1, 0, -1, -1, 0]),
        (1, 3, 2, 4, [1, 3, 7, 15]),
    ],
)
def test_d_sequence_examples(r, s, t, count, expected):
    assert d_sequence(r, s, t, count) == expected


def test_d_sequence_matches_its_closed_form():
    # s = 3, rt = 2 has roots 2 and 1, so d_n = 2^(n+1) - 1
    assert d_sequence(1, 3, 2, 13) == [2 ** (n + 1) - 1 for n in range(13)]


def test_d_ratios_are_nonincreasing():
    for r, s, t in product(range(4), repeat=3):
        if s * s < 4 * r * t:
            continue
        d = d_sequence(r, s, t, 13)
        for n in range(2, 13):
            if d[n - 2] > 0 and d[n - 1] > 0 and d[n] > 0:
                assert d[n] / d[n - 1] <= d[n - 1] / d[n - 2], (r, s, t, n)


@pytest.mark.parametrize(
    "params, count, expected",
    [
        ((2, 1, 1, 2, 1), 4, [2, 3, 4, 5]),
        ((1, 2, 1, 2, 1), 3, [1, 0, -1]),
        ((3, 0, 1, 2, 1), 4, [3, 6, 9, 12]),
    ],
)
def test_big_d_sequence_examples(params, count, expected):
    assert big_d_sequence(JacobiParams.of(*params), count) == expected


def test_jacobi_window_layout():
    assert jacobi_window(JacobiParams.of(2, 3, 1, 4, 5), 3).to_rows() == [
        (2, 1, 0),
        (3, 4, 1),
        (0, 5, 4),
    ]
    assert jacobi_window(JacobiParams.of(2, 3, 1, 4, 5), 1).to_rows() == [(2,)]


def test_recursive_matrix_coefficients_are_the_jacobi_window():
    p = NAMED_RECURSIVE_PARAMS["central-binomial"]
    assert coefficient_matrix(recursive_matrix_spec(p), 6) == jacobi_window(
        JacobiParams.for_recursive_matrix(p), 6
    )


def test_recursive_matrix_guarantees():
    catalan = recursive_matrix_guarantees(NAMED_RECURSIVE_PARAMS["catalan"])
    assert catalan.logconvex_guaranteed and catalan.tp_guaranteed
    motzkin = recursive_matrix_guarantees(NAMED_RECURSIVE_PARAMS["motzkin"])
    assert motzkin.logconvex_guaranteed and not motzkin.tp_guaranteed
    assert not recursive_matrix_guarantees(RecursiveMatrixParams.of(1, 2, 1, 1)).logconvex_guaranteed
    assert recursive_matrix_guarantees(RecursiveMatrixParams.of(0, 1, 1, 0)) == (False, False)


@pytest.mark.parametrize("name", ["catalan", "motzkin", "central-binomial", "schroder-large"])
def test_famous_columns_are_log_convex(name):
    p = NAMED_RECURSIVE_PARAMS[name]
    assert is_log_convex(catalan_like_numbers(p, 15))
    assert column0_logconvex_check(recursive_matrix_spec(p), 15)


def test_hankel_window_shape():
    window = hankel_window([1, 2, 5, 14, 42])
    assert window.n == 3
    assert window.matrix.to_rows() == [(1, 2, 5), (2, 5, 14), (5, 14, 42)]
    with pytest.raises(ArgumentError):
        hankel_window([])


def test_hankel_decomposition_over_small_parameters():
    for a, b, s, t in product(range(3), repeat=4):
        report = hankel_decomposition_check(RecursiveMatrixParams.of(a, b, s, t), 5)
        assert report.holds, (a, b, s, t, report.mismatch)
        assert report.determinant == b ** 4 * t ** 6


def test_hankel_weights():
    assert hankel_weights(RecursiveMatrixParams.of(2, 2, 3, 2), 4) == [1, 2, 4, 8]
    assert hankel_weights(RecursiveMatrixParams.of(2, 2, 2, 1), 4) == [1, 2, 2, 2]
    assert hankel_weights(RecursiveMatrixParams.of(0, 0, 0, 1), 3) == [1, 0, 0]
    assert hankel_weights(RecursiveMatrixParams.of(1, 1, 1, 1), 1) == [1]


def test_hankel_decomposition_when_b_differs_from_t():
    # central binomial numbers: det H_n = 2^(n-1)
    p = NAMED_RECURSIVE_PARAMS["central-binomial"]
    for n in range(1, 6):
        report = hankel_decomposition_check(p, n)
        assert report.holds
        assert report.determinant == 2 ** (n - 1)
    report = hankel_decomposition_check(RecursiveMatrixParams.of(0, 0, 0, 1), 3)
    assert report.holds and report.determinant == 0


@pytest.mark.parametrize("params, n, determinant", [((2, 1, 2, 1), 4, 1), ((2, 2, 3, 2), 3, 8)])
def test_hankel_decomposition_examples(params, n, determinant):
    report = hankel_decomposition_check(RecursiveMatrixParams.of(*params), n)
    assert report.holds
    assert report.determinant == determinant


def test_hankel_tp_check_for_catalan_numbers():
    report = hankel_tp_check(NAMED_RECURSIVE_PARAMS["catalan"], 5)
    assert report.holds
    assert report.decomposition.determinant == 1


def test_hankel_tp_check_can_fail():
    # R(0,1;0,1): column 0 is 1, 0, 1, 0, 2, ...; H has the 2x2 minor 0*0 - 1*1
    report = hankel_tp_check(RecursiveMatrixParams.of(0, 1, 0, 1), 4, 2)
    assert report.decomposition.holds
    assert not report.holds
    assert report.tp.witness.value < 0


@pytest.mark.parametrize("name", list(NamedTriangle))
@pytest.mark.parametrize("n", [1, 3, 6])
def test_column_pair_factorization(name, n):
    pairs, r_window, weights = column_pair_factors(NAMED_TRIANGLES[name], n)
    assert r_window @ weights == pairs


@pytest.mark.parametrize("name", list(NamedTriangle))
@pytest.mark.parametrize("n", [0, 2, 5])
def test_row_step_factorization(name, n):
    lhs, s_block, a_block = row_step_factors(NAMED_TRIANGLES[name], n)
    assert s_block @ a_block == lhs


def test_row_step_block_sizes():
    lhs, _, _ = row_step_factors(NAMED_TRIANGLES[NamedTriangle.SCHRODER_LITTLE], 3)
    assert lhs.rows == 4
    lhs, _, _ = row_step_factors(NAMED_TRIANGLES[NamedTriangle.MOTZKIN], 3)
    assert lhs.rows == 5
    with pytest.raises(ArgumentError):
        row_step_factors(NOT_TP2, 2)


@pytest.mark.parametrize("name", list(NamedTriangle))
def test_registry_rows_are_log_concave(name):
    assert rows_logconcave_check(NAMED_TRIANGLES[name], 10).holds


def test_rows_logconcave_check_reports_the_failing_row():
    verdict = rows_logconcave_check(NOT_TP2, 4)
    assert not verdict.holds
    assert (verdict.failing_row, verdict.pair) == (3, (1, 2))
