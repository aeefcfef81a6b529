"""FastAPI application wrapping the core package.

Error contract: malformed inputs (bad type strings, bad rationals,
nonpositive parameters) map to HTTP 400 with code "usage"; domain errors
(singular matrix where a cell label is required) map to HTTP 409 with code
"domain".  Every successful verdict carries an "ok" flag so thin clients
can derive exit codes without re-parsing.
"""
from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException

from .. import hecke, suites
from ..cartan import cartan_data_from_string
from ..tpmatrix import (
    RationalMatrix,
    SingularMatrixError,
    bruhat_label,
    eval_factorization,
    find_minor_violation,
    is_oscillatory,
    min_totally_positive_power,
)
from .models import (
    CheckRequest,
    FactorRequest,
    MgReport,
    MgRequest,
    Report,
    VerifyRequest,
)

__all__ = ["app", "create_app"]


def _usage(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": "usage", "message": message})


def _domain(message: str) -> HTTPException:
    return HTTPException(status_code=409, detail={"code": "domain", "message": message})


def _witness_dict(x: RationalMatrix, spec) -> dict | None:
    if spec is None:
        return None
    return {
        "rows": list(spec.rows),
        "cols": list(spec.cols),
        "value": str(x.minor(spec.rows, spec.cols)),
    }


def _label_dict(label) -> dict:
    from ..tpmatrix import permutation_of

    return {
        "u": list(label.u.reduced_word()),
        "v": list(label.v.reduced_word()),
        "u_one_line": list(permutation_of(label.u)),
        "v_one_line": list(permutation_of(label.v)),
    }


def create_app() -> FastAPI:
    app = FastAPI(title="tposc", description=__doc__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/mg", response_model=MgReport, response_model_exclude_none=True)
    def mg(req: MgRequest) -> MgReport:
        try:
            c = cartan_data_from_string(req.type)
        except ValueError as exc:
            raise _usage(str(exc))
        report = hecke.oscillatory_exponent(
            c,
            want_witness=req.witness,
            per_permutation=req.per_permutation,
            jobs=req.jobs,
        )
        data = report.to_json_dict()
        return MgReport(**data)

    @app.post("/check", response_model=Report)
    def check(req: CheckRequest) -> Report:
        t0 = time.monotonic()
        try:
            x = req.matrix.to_matrix()
        except ValueError as exc:
            raise _usage(str(exc))
        try:
            verdict = _run_check(x, req.mode, req.cap)
        except SingularMatrixError as exc:
            raise _domain(str(exc))
        except ValueError as exc:
            raise _usage(str(exc))
        return Report(
            command="check",
            inputs={"mode": req.mode, "matrix": x.to_json_dict(), "cap": req.cap},
            verdict=verdict,
            elapsed_ms=int((time.monotonic() - t0) * 1000),
        )

    @app.post("/factor", response_model=Report)
    def factor(req: FactorRequest) -> Report:
        t0 = time.monotonic()
        try:
            fac = req.factorization.to_factorization()
        except ValueError as exc:
            raise _usage(str(exc))
        x = eval_factorization(fac)
        label = bruhat_label(x)
        predicted = hecke.min_tp_exponent(label.u, label.v)
        verdict = {
            "ok": True,
            "matrix": x.to_json_dict(),
            "cell": _label_dict(label),
            "predicted_min_tp_power": predicted,
        }
        return Report(
            command="factor",
            inputs={"factorization": fac.to_json_dict()},
            verdict=verdict,
            elapsed_ms=int((time.monotonic() - t0) * 1000),
        )

    @app.post("/verify", response_model=Report)
    def verify(req: VerifyRequest) -> Report:
        t0 = time.monotonic()
        try:
            result = suites.run_suite(
                req.suite, seed=req.seed, trials=req.trials, jobs=req.jobs
            )
        except ValueError as exc:
            raise _usage(str(exc))
        verdict = result.to_json_dict()
        verdict["ok"] = result.passed
        return Report(
            command="verify",
            inputs={
                "suite": req.suite,
                "seed": req.seed,
                "trials": req.trials,
                "jobs": req.jobs,
            },
            verdict=verdict,
            elapsed_ms=int((time.monotonic() - t0) * 1000),
        )

    return app


def _run_check(x: RationalMatrix, mode: str, cap: int | None) -> dict:
    if mode == "tnn":
        spec = find_minor_violation(x, strict=False)
        return {
            "ok": spec is None,
            "mode": "tnn",
            "value": spec is None,
            "witness": _witness_dict(x, spec),
        }
    if mode == "tp":
        spec = find_minor_violation(x, strict=True)
        return {
            "ok": spec is None,
            "mode": "tp",
            "value": spec is None,
            "witness": _witness_dict(x, spec),
        }
    if mode == "osc":
        tnn_violation = find_minor_violation(x, strict=False)
        if tnn_violation is not None:
            return {
                "ok": False,
                "mode": "osc",
                "value": False,
                "reason": "not totally nonnegative",
                "witness": _witness_dict(x, tnn_violation),
            }
        if not is_oscillatory(x):
            return {
                "ok": False,
                "mode": "osc",
                "value": False,
                "reason": "a first off-diagonal entry vanishes",
                "witness": None,
            }
        min_power = min_totally_positive_power(x, cap=max(1, x.n - 1))
        return {
            "ok": True,
            "mode": "osc",
            "value": True,
            "min_power": min_power,
            "witness": None,
        }
    if mode == "cell":
        label = bruhat_label(x)
        return {"ok": True, "mode": "cell", "cell": _label_dict(label)}
    if mode == "minpow":
        tnn = find_minor_violation(x, strict=False) is None
        power = None
        effective_cap = cap if cap is not None else 2 * x.n
        if tnn:
            power = min_totally_positive_power(x, cap=effective_cap)
        return {
            "ok": tnn and power is not None,
            "mode": "minpow",
            "tnn": tnn,
            "min_power": power,
            "cap": effective_cap,
        }
    raise ValueError(f"unknown check mode {mode!r}")


app = create_app()
