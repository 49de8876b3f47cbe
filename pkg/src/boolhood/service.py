"""JSON-over-HTTP surface.

Stateless: every handler is a pure function of its query parameters, so
identical requests produce byte-identical bodies (walk timing fields are the
one documented exception). Validation failures map to 400 with a
machine-readable code; size-cap refusals map to 422.
"""

from fastapi import FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .core import SignStructure, true_set_size
from .errors import CapabilityError, DimensionMismatchError, ValidationError
from .neighbors import immediate_children, immediate_parents
from .oracle import count_table
from .textio import function_payload, parse_function
from .walker import WalkDirection, random_walk


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _error_body(code, message, details=None):
    return {"error": {"code": code, "message": message, "details": _jsonable(details or {})}}


def _load(f, p, signs):
    """Parse the function plus the effective sign pattern.

    An explicit `signs` query wins for set syntax; for expression syntax it
    must agree with the signs the expression itself declares.
    """
    rep, inferred = parse_function(f, p)
    if signs is None:
        return rep, inferred
    explicit = SignStructure.from_string(signs)
    if len(explicit) != p:
        raise ValidationError("sign_conflict", f"{len(explicit)} signs for p={p}",
                              signs=signs, p=p)
    from_sets = f.lstrip().startswith("{")
    if not from_sets and explicit != inferred:
        raise ValidationError(
            "sign_conflict",
            f"expression declares signs {inferred.to_string()} but query says "
            f"{explicit.to_string()}",
            expression_signs=inferred.to_string(), query_signs=explicit.to_string(),
        )
    return rep, explicit


def neighbor_payload(result, signs=None):
    return {
        "function": function_payload(result.neighbor, signs),
        "rule": result.rule.value,
        "trueSetDelta": result.true_set_delta,
    }


def neighborhood_payload(rep, signs, results, direction):
    return {
        "origin": function_payload(rep, signs),
        "direction": direction,
        "results": [neighbor_payload(r, signs) for r in results],
    }


def trace_payload(trace):
    """Full walk trace; durationMs is wall-clock and excluded from goldens."""
    steps = []
    for step in trace.steps:
        r1, r2, r3 = step.rule_counts
        steps.append({
            "from": function_payload(step.node),
            "ruleCounts": {"R1": r1, "R2": r2, "R3": r3},
            "chosen": neighbor_payload(step.chosen),
        })
    return {
        "p": trace.p,
        "direction": trace.direction.value,
        "seed": trace.seed,
        "length": trace.length,
        "start": function_payload(trace.start),
        "steps": steps,
        "end": function_payload(trace.end),
        "durationMs": trace.duration_s * 1000.0,
    }


def create_app():
    app = FastAPI(title="boolhood", docs_url=None, redoc_url=None)

    @app.exception_handler(ValidationError)
    async def _on_validation(request, exc):
        return JSONResponse(status_code=400,
                            content=_error_body(exc.code, str(exc), exc.details))

    @app.exception_handler(DimensionMismatchError)
    async def _on_dimension(request, exc):
        return JSONResponse(status_code=400,
                            content=_error_body("dimension_mismatch", str(exc)))

    @app.exception_handler(CapabilityError)
    async def _on_capability(request, exc):
        return JSONResponse(status_code=422,
                            content=_error_body("capability_exceeded", str(exc)))

    @app.exception_handler(RequestValidationError)
    async def _on_request(request, exc):
        details = {"errors": [{"param": ".".join(str(x) for x in e.get("loc", ())),
                               "message": e.get("msg", "")} for e in exc.errors()]}
        return JSONResponse(status_code=400,
                            content=_error_body("bad_request",
                                                "malformed query parameters", details))

    @app.get("/v1/function")
    def get_function(f: str, p: int, signs: str | None = None):
        rep, effective = _load(f, p, signs)
        return {
            "function": function_payload(rep, effective),
            "signs": effective.to_string(),
            "trueSetSize": true_set_size(rep),
        }

    @app.get("/v1/parents")
    def get_parents(f: str, p: int, signs: str | None = None):
        rep, effective = _load(f, p, signs)
        return neighborhood_payload(rep, effective, immediate_parents(rep), "parent")

    @app.get("/v1/children")
    def get_children(f: str, p: int, signs: str | None = None):
        rep, effective = _load(f, p, signs)
        return neighborhood_payload(rep, effective, immediate_children(rep), "child")

    @app.get("/v1/walk")
    def get_walk(p: int, dir: str = Query("up", pattern="^(up|down)$"), seed: int = 0):
        return trace_payload(random_walk(p, WalkDirection(dir), seed))

    @app.get("/v1/counts")
    def get_counts(maxp: int, long: bool = False):
        rows = count_table(maxp, long=long)
        # M and N as strings: they outgrow doubles long before p=9
        return {"rows": [{"p": r.p, "M": str(r.m), "N": str(r.n),
                          "enumerated": r.enumerated} for r in rows]}

    return app


app = create_app()
