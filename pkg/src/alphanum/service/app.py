"""FastAPI application exposing the library operations.

Run with ``uvicorn alphanum.service.app:app``. Endpoints mirror the CLI
subcommands one to one; expensive tables (sieves) are cached in-process, so
a long-lived service amortises them across requests.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .. import __version__
from ..classify import Order, Verdict, classify_exact, classify_rounded
from ..errors import DegenerateDenominatorError, ResourceCapError
from ..exact import factorize, sigma_k_exact
from ..hyper import parse_quaternion, sigma_general
from ..reports import audit_row_to_dict, build_manifest, record_to_dict
from ..search import (
    audit_tables,
    count_alpha,
    enumerate_alpha,
    seed_search_odd,
    verify_theorem,
)
from ..search.theorems import THEOREM_IDS
from . import models

_CLASS_NAMES = {
    "strong": Verdict.STRONG,
    "weak": Verdict.WEAK,
    "very-weak": Verdict.VERY_WEAK,
    "veryweak": Verdict.VERY_WEAK,
    "not-alpha": Verdict.NOT_ALPHA,
}


def _order_from_model(model: models.OrderModel) -> Order:
    return Order(parse_quaternion(model.under), parse_quaternion(model.upper))


def create_app() -> FastAPI:
    app = FastAPI(
        title="alphanum",
        version=__version__,
        description="Divisor sums, banded classification, bounded searches, table audits.",
    )

    @app.exception_handler(ResourceCapError)
    async def _cap_handler(_request, exc: ResourceCapError) -> JSONResponse:
        return JSONResponse(status_code=507, content={"detail": str(exc)})

    @app.get("/healthz", response_model=models.HealthResponse)
    def healthz() -> models.HealthResponse:
        return models.HealthResponse(status="ok", version=__version__)

    @app.post("/sigma", response_model=models.SigmaResponse)
    def sigma(req: models.SigmaRequest) -> models.SigmaResponse:
        n = int(req.n)
        x = parse_quaternion(req.exponent)
        f = factorize(n)
        if x.is_real and x.a >= 0 and x.a == int(x.a):
            return models.SigmaResponse(
                n=req.n, exponent=req.exponent, exact=True,
                value=str(sigma_k_exact(f, int(x.a))),
            )
        q = sigma_general(f, x)
        return models.SigmaResponse(
            n=req.n, exponent=req.exponent, exact=False,
            quaternion=models.QuaternionModel(a=q.a, b=q.b, c=q.c, d=q.d),
        )

    @app.post("/classify", response_model=models.ClassificationModel)
    def classify(req: models.ClassifyRequest) -> models.ClassificationModel:
        n = int(req.n)
        order = _order_from_model(req.order)
        f = factorize(n)
        if req.variant == "exact":
            if not order.is_exact_integer:
                raise HTTPException(
                    status_code=422,
                    detail="exact classification needs a nonnegative integer order",
                )
            cls = classify_exact(f, order)
        else:
            mode = "floor" if req.variant == "floored" else "ceiling"
            try:
                cls = classify_rounded(f, order, mode)
            except DegenerateDenominatorError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
        return models.ClassificationModel(
            n=req.n, factorization=str(f), verdict=cls.verdict.value,
            alpha1=str(cls.ratio.num), alpha2=str(cls.ratio.den),
            omega=cls.omega, tau=cls.tau, variant=cls.variant,
            boundary=cls.boundary_flag,
        )

    @app.post("/enumerate", response_model=models.EnumerateResponse)
    def enumerate_(req: models.EnumerateRequest) -> models.EnumerateResponse:
        started = time.perf_counter()
        order = _order_from_model(req.order)
        if not order.is_exact_integer:
            raise HTTPException(status_code=422, detail="enumeration needs an integer order")
        try:
            classes = frozenset(_CLASS_NAMES[c.lower()] for c in req.classes)
        except KeyError as exc:
            raise HTTPException(status_code=422, detail=f"unknown class {exc.args[0]!r}") from exc
        records = enumerate_alpha(req.bound, order, classes, req.parity)
        payload = [record_to_dict(r) for r in records]
        manifest = build_manifest(
            "enumerate",
            {"bound": req.bound, "order": str(order), "parity": req.parity},
            payload, started,
        )
        return models.EnumerateResponse(
            records=[models.RecordModel(**p) for p in payload],
            manifest=models.ManifestModel(**manifest.to_dict()),
        )

    @app.post("/count", response_model=models.CountResponse)
    def count(req: models.CountRequest) -> models.CountResponse:
        order = _order_from_model(req.order)
        if not order.is_exact_integer:
            raise HTTPException(status_code=422, detail="counting needs an integer order")
        counts = count_alpha(req.bound, order, req.parity)
        return models.CountResponse(
            bound=str(req.bound), parity=req.parity,
            strong=counts.strong, weak=counts.weak,
            very_weak=counts.very_weak, not_alpha=counts.not_alpha,
        )

    @app.post("/search-odd", response_model=models.SearchOddResponse)
    def search_odd(req: models.SearchOddRequest) -> models.SearchOddResponse:
        started = time.perf_counter()
        records = seed_search_odd(req.bound)
        agree = None
        if req.cross_check:
            sieve_records = enumerate_alpha(
                req.bound, Order.exact(1, 1), {Verdict.STRONG}, "odd"
            )
            agree = [r.n for r in records] == [r.n for r in sieve_records]
        payload = [record_to_dict(r) for r in records]
        manifest = build_manifest(
            "search-odd", {"bound": req.bound, "cross_check": req.cross_check},
            payload, started,
        )
        return models.SearchOddResponse(
            bound=str(req.bound),
            found=[models.RecordModel(**p) for p in payload],
            methods_agree=agree,
            manifest=models.ManifestModel(**manifest.to_dict()),
        )

    @app.post("/verify", response_model=models.VerifyResponse)
    def verify(req: models.VerifyRequest) -> models.VerifyResponse:
        if req.theorem not in THEOREM_IDS:
            raise HTTPException(status_code=422, detail=f"unknown theorem id {req.theorem!r}")
        report = verify_theorem(req.theorem, req.bound)
        return models.VerifyResponse(
            theorem=report.theorem_id, bound=str(report.bound),
            checked=report.checked, passed=report.passed,
            counterexample=None if report.counterexample is None else str(report.counterexample),
            detail=report.detail,
        )

    @app.post("/audit-tables", response_model=models.AuditResponse)
    def audit(bound: int = 10**5) -> models.AuditResponse:
        started = time.perf_counter()
        rows = audit_tables(bound)
        payload = [audit_row_to_dict(r) for r in rows]
        manifest = build_manifest("audit-tables", {"bound": bound}, payload, started)
        return models.AuditResponse(
            rows=[models.AuditRowModel(**p) for p in payload],
            mismatches=sum(1 for r in rows if r.status == "mismatch"),
            manifest=models.ManifestModel(**manifest.to_dict()),
        )

    return app


app = create_app()
