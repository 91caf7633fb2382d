"""HTTP facade over the classifier.

The CLI talks to this app in process through an ASGI transport, and the
same app can be served standalone with any ASGI server. Three endpoints:

* ``POST /classify`` takes one expression and returns the report payload
  together with its text rendering.
* ``POST /batch`` takes a list of expressions and returns one report per
  entry, in order; the first bad expression aborts the whole batch with
  its line index in the error detail.
* ``GET /selfcheck`` runs the identity suite and reports each check.

Error bodies carry a machine-readable ``error`` kind that the CLI maps to
exit codes: "syntax" (HTTP 400), "unsupported_poles" (HTTP 422), and
"verification" (HTTP 500, an internal bug trap).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .errors import RatParseError, UnsupportedPolesError, VerificationError
from .grammar import parse_expression, render_poly
from .identities import verify_identities
from .report import classify, render_report, report_payload

__all__ = [
    "AffineWitnessModel",
    "BatchRequest",
    "BatchResponse",
    "CheckModel",
    "ClassifyRequest",
    "ClassifyResponse",
    "ReportModel",
    "SelfcheckResponse",
    "app",
]


class ClassifyRequest(BaseModel):
    expression: str
    var: str | None = None


class AffineWitnessModel(BaseModel):
    u: str
    r: str
    operator: list[str]


class ReportModel(BaseModel):
    input: str
    galois_class: str
    projective_image: str
    integrable_pullback: bool
    integrable_isogeny: str
    affine_subgroupoid: AffineWitnessModel | None
    minimal: str
    n_minimal_all_n: bool
    product_rigidity: bool
    acts_diagonally: bool
    rational_sym2_basis: list[str] | None


class ClassifyResponse(BaseModel):
    report: ReportModel
    text: str


class BatchRequest(BaseModel):
    expressions: list[str]


class BatchResponse(BaseModel):
    reports: list[ReportModel]


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class SelfcheckResponse(BaseModel):
    passed: bool
    checks: list[CheckModel]


app = FastAPI(
    title="kummer",
    description="Exact differential-Galois classification of projective structures",
)


def _error_detail(kind: str, message: str, **extra) -> dict:
    detail = {"error": kind, "message": message}
    detail.update(extra)
    return detail


def _classified(expression: str, var: str | None, **extra):
    try:
        value, variable = parse_expression(expression, var)
    except RatParseError as exc:
        raise HTTPException(
            status_code=400,
            detail=_error_detail(
                "syntax", exc.message, position=exc.position, **extra
            ),
        ) from exc
    try:
        return classify(value, variable)
    except UnsupportedPolesError as exc:
        factor = (
            None
            if exc.residual_factor is None
            else render_poly(exc.residual_factor, variable)
        )
        raise HTTPException(
            status_code=422,
            detail=_error_detail(
                "unsupported_poles", exc.message, residual_factor=factor, **extra
            ),
        ) from exc
    except VerificationError as exc:
        raise HTTPException(
            status_code=500,
            detail=_error_detail("verification", str(exc), **extra),
        ) from exc


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(request: ClassifyRequest) -> ClassifyResponse:
    rep = _classified(request.expression, request.var)
    return ClassifyResponse(
        report=ReportModel(**report_payload(rep)),
        text=render_report(rep, "text"),
    )


@app.post("/batch", response_model=BatchResponse)
def batch_endpoint(request: BatchRequest) -> BatchResponse:
    reports = []
    for index, expression in enumerate(request.expressions):
        rep = _classified(expression, None, line=index + 1)
        reports.append(ReportModel(**report_payload(rep)))
    return BatchResponse(reports=reports)


@app.get("/selfcheck", response_model=SelfcheckResponse)
def selfcheck_endpoint() -> SelfcheckResponse:
    results = verify_identities()
    return SelfcheckResponse(
        passed=all(r.passed for r in results),
        checks=[
            CheckModel(name=r.name, passed=r.passed, detail=r.detail)
            for r in results
        ],
    )
