"""Command implementations shared by the CLI and the HTTP service."""

import logging
from typing import Any, Dict, List, Optional, Union

from .config import Settings, settings
from .errors import ArgumentError, SizeCapExceeded
from .exact import MinorWitness
from .riordan import (
    RecursiveMatrixParams,
    RiordanSpec,
    build_triangle,
    catalan_like_numbers,
    named_triangle,
    recursive_matrix_spec,
)
from .schemas import (
    CatalanLikeRequest,
    CheckRequest,
    CheckSubject,
    GenRequest,
    OutputDocument,
    SpecRequest,
    render_scalar,
)
from .sequences import (
    RootCountWitness,
    SequenceSpec,
    TailRule,
    is_pf_finite,
    is_pf_r_window,
    log_convexity_violation,
)
from .totalpos import (
    ALL,
    JacobiParams,
    TPReport,
    column0_logconvex_check,
    hankel_tp_check,
    is_tp_r,
    jacobi_tp2_criterion,
    jacobi_tp_criterion,
    jacobi_window,
    rows_logconcave_check,
    triangle_tp_check,
)

logger = logging.getLogger(__name__)


def _recursive_params(values) -> RecursiveMatrixParams:
    if len(values) != 4:
        raise ArgumentError(f"expected 4 parameters a,b,s,t, got {len(values)}")
    return RecursiveMatrixParams.of(*values)


def _jacobi_params(values) -> JacobiParams:
    if values is None:
        raise ArgumentError("--params is required")
    if len(values) == 4:
        return JacobiParams.for_recursive_matrix(_recursive_params(values))
    if len(values) == 5:
        return JacobiParams.of(*values)
    raise ArgumentError(f"expected parameters a,b[,r],s,t, got {len(values)} values")


def resolve_spec(request: SpecRequest) -> RiordanSpec:
    """Exactly one of a registry name, Z/A prefixes or recursive-matrix parameters."""
    given = [
        request.name is not None,
        request.z is not None or request.a is not None,
        request.params is not None,
    ]
    if sum(given) != 1:
        raise ArgumentError("give exactly one of --name, --z/--a or --params")
    if request.name is not None:
        return named_triangle(request.name)
    if request.params is not None:
        return recursive_matrix_spec(_recursive_params(request.params))
    if request.z is None or request.a is None:
        raise ArgumentError("--z and --a must be given together")
    return RiordanSpec.of(request.z, request.a, request.tail)


def _rows(request: SpecRequest, config: Settings) -> int:
    if request.rows is not None:
        return request.rows
    return request.window or config.default_window


def _minor(witness: Optional[MinorWitness]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {
        "rows": list(witness.rows),
        "cols": list(witness.cols),
        "value": render_scalar(witness.value),
    }


def _tp(report: TPReport) -> Dict[str, Any]:
    return {"holds": report.holds, "witness": _minor(report.witness)}


def _scalars(values) -> List[Union[int, str]]:
    return [render_scalar(v) for v in values]


def _document(command: str, request, result: Dict[str, Any], config: Settings) -> OutputDocument:
    return OutputDocument(
        schema_version=config.schema_version,
        command=command,
        parameters=request.model_dump(mode="json", exclude_none=True),
        result=result,
    )


def cmd_gen(request: GenRequest, config: Settings = settings) -> OutputDocument:
    spec = resolve_spec(request)
    rows = _rows(request, config)
    logger.info(f"generating {rows} rows")
    triangle = build_triangle(spec, rows)
    result = {"rows": [_scalars(row) for row in triangle.rows]}
    return _document("gen", request, result, config)


def _check_tp(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    spec = resolve_spec(request)
    rows = _rows(request, config)
    if request.subject is CheckSubject.TP2:
        order = 2
    else:
        order = ALL if request.order is None else request.order
    report = triangle_tp_check(spec, order, rows, force=request.force, size_cap=config.tp_size_cap)
    return {
        "holds": report.holds,
        "order": order,
        "window": rows,
        "triangle": _tp(report.triangle),
        "coefficient_matrix": _tp(report.coefficient),
        "implication_observed": report.implication_observed,
    }


def _check_jacobi(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    p = _jacobi_params(request.params)
    window = request.window or config.default_window
    if request.subject is CheckSubject.JACOBI_TP2:
        holds, order = jacobi_tp2_criterion(p), 2
    else:
        holds, order = jacobi_tp_criterion(p), ALL
    witness = None
    if not holds:
        # the criterion is exact; the window only supplies a certificate
        try:
            report = is_tp_r(jacobi_window(p, window), order, force=request.force, size_cap=config.tp_size_cap)
        except SizeCapExceeded:
            logger.info(f"no certificate search in the {window}x{window} window without force")
        else:
            witness = report.witness
            if witness is None:
                logger.info(f"no negative minor inside the {window}x{window} window")
    return {"holds": holds, "order": order, "window": window, "witness": _minor(witness)}


def _check_logconvex(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    spec = resolve_spec(request)
    rows = _rows(request, config)
    holds = column0_logconvex_check(spec, rows)
    column = build_triangle(spec, rows).column(0)
    witness = None
    if not holds:
        i, j = log_convexity_violation(column)
        witness = {"i": i, "j": j}
    return {"holds": holds, "rows": rows, "column": _scalars(column), "witness": witness}


def _check_logconcave(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    spec = resolve_spec(request)
    rows = _rows(request, config)
    verdict = rows_logconcave_check(spec, rows)
    witness = None
    if not verdict.holds:
        witness = {"row": verdict.failing_row, "i": verdict.pair[0], "j": verdict.pair[1]}
    return {
        "holds": verdict.holds,
        "rows": rows,
        "consistency": spec.consistency.value,
        "witness": witness,
    }


def _check_pf(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    if request.seq is None:
        raise ArgumentError("--seq is required")
    if request.order is None and request.tail is TailRule.ZERO:
        verdict = is_pf_finite(request.seq)
        method = "real-roots"
    else:
        window = request.window or config.default_window
        order = window if request.order in (None, ALL) else request.order
        verdict = is_pf_r_window(SequenceSpec.of(request.seq, request.tail), order, window)
        method = "toeplitz-minors"
    witness = verdict.witness
    if isinstance(witness, RootCountWitness):
        witness = {"degree": witness.degree, "real_roots": witness.real_roots}
    else:
        witness = _minor(witness)
    return {
        "holds": verdict.holds,
        "method": method,
        "order": verdict.order,
        "window": verdict.window,
        "label": verdict.label,
        "witness": witness,
    }


def _check_hankel(request: CheckRequest, config: Settings) -> Dict[str, Any]:
    if request.params is None:
        raise ArgumentError("--params is required")
    p = _recursive_params(request.params)
    n = _rows(request, config)
    order = ALL if request.order is None else request.order
    report = hankel_tp_check(p, n, order, force=request.force, size_cap=config.tp_size_cap)
    decomposition = report.decomposition
    mismatch = None
    if decomposition.mismatch is not None:
        i, j, product, hankel = decomposition.mismatch
        mismatch = {"i": i, "j": j, "product": render_scalar(product), "hankel": render_scalar(hankel)}
    return {
        "holds": report.holds,
        "order": order,
        "window": n,
        "decomposition_holds": decomposition.holds,
        "determinant": render_scalar(decomposition.determinant),
        "mismatch": mismatch,
        "witness": _minor(report.tp.witness),
    }


_CHECKS = {
    CheckSubject.TP: _check_tp,
    CheckSubject.TP2: _check_tp,
    CheckSubject.JACOBI_TP: _check_jacobi,
    CheckSubject.JACOBI_TP2: _check_jacobi,
    CheckSubject.LOGCONVEX_COL0: _check_logconvex,
    CheckSubject.LOGCONCAVE_ROWS: _check_logconcave,
    CheckSubject.PF: _check_pf,
    CheckSubject.HANKEL: _check_hankel,
}


def cmd_check(request: CheckRequest, config: Settings = settings) -> OutputDocument:
    """Run one property check; the verdict is ``result["holds"]``."""
    logger.info(f"checking {request.subject.value}")
    result = _CHECKS[request.subject](request, config)
    logger.info(f"{request.subject.value}: holds={result['holds']}")
    return _document("check", request, result, config)


def cmd_catalan_like(request: CatalanLikeRequest, config: Settings = settings) -> OutputDocument:
    p = _recursive_params(request.params)
    numbers = catalan_like_numbers(p, request.count)
    return _document("catalan-like", request, {"numbers": _scalars(numbers)}, config)
