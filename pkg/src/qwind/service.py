"""Stateless HTTP facade over the kernel, for the explorer UI.

Every endpoint is a pure function of the request body; repeated
requests give identical responses.  Schema violations are 400, semantic
violations (a family referencing a missing edge, a drawing of the wrong
size) are 422.  Interactive docs and the JSON schemas live at /docs.
"""

from __future__ import annotations

import json
import time
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, StreamingResponse

from . import bounds as bounds_mod
from . import drawings, winding
from .complexes import Face, FaceFamily
from .drawings import ParseError
from .errors import QwindError


_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_POINT = {
    "type": "array",
    "items": _RATIONAL,
    "minItems": 2,
    "maxItems": 2,
}
_DRAWING = {
    "type": "object",
    "required": ["n", "edges", "positions", "bends"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "positions": {"type": "object", "additionalProperties": _POINT},
        "bends": {"type": "object", "additionalProperties": {"type": "array", "items": _POINT}},
    },
}
_CERTIFICATE = {
    "type": "object",
    "required": ["family", "witness", "evidence"],
    "properties": {
        "family": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "witness": _POINT,
        "evidence": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {
                    "kind": {
                        "enum": ["vertex-hit", "on-edge-arc", "on-cycle-image", "winding"]
                    },
                    "winding": {"type": "integer"},
                },
            },
        },
    },
}
_GP_REPORT = {
    "type": "object",
    "required": ["ok", "violations"],
    "properties": {
        "ok": {"type": "boolean"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "involved", "location"],
                "properties": {
                    "kind": {
                        "enum": [
                            "coincident-vertices",
                            "vertex-on-disjoint-edge",
                            "disjoint-edges-overlap",
                            "triple-point-of-disjoint-edges",
                        ]
                    },
                    "involved": {
                        "type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}},
                    },
                },
            },
        },
    },
}

#: JSON schemas of every response body, served at /api/schemas.
SCHEMAS = {
    "drawing": _DRAWING,
    "gp_report": _GP_REPORT,
    "certificate": _CERTIFICATE,
    "enumerate_response": {
        "type": "object",
        "required": ["count", "certificates", "gp", "elapsed_ms"],
        "properties": {
            "count": {"type": "integer", "minimum": 0},
            "certificates": {"type": "array", "items": _CERTIFICATE},
            "gp": _GP_REPORT,
            "elapsed_ms": {"type": "number"},
        },
    },
    "check_response": {
        "type": "object",
        "required": ["certified", "certificate"],
        "properties": {
            "certified": {"type": "boolean"},
            "certificate": {"oneOf": [_CERTIFICATE, {"type": "null"}]},
        },
    },
    "hunt_step_response": {
        "type": "object",
        "required": ["drawing", "best_count", "trace"],
        "properties": {
            "drawing": _DRAWING,
            "best_count": {"type": "integer"},
            "trace": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["step", "count", "best", "accepted", "temperature"],
                    "properties": {
                        "step": {"type": "integer"},
                        "count": {"type": "integer"},
                        "best": {"type": "integer"},
                        "accepted": {"type": "boolean"},
                        "temperature": {"type": "number"},
                    },
                },
            },
        },
    },
    "bounds_response": {
        "type": "object",
        "required": [
            "d",
            "q",
            "sierksma",
            "prime_power",
            "hell_bound",
            "d2_winding_bound",
            "observed",
            "meets_hell_bound",
        ],
        "properties": {
            "d": {"type": "integer"},
            "q": {"type": "integer"},
            "sierksma": {"type": "integer"},
            "prime_power": {
                "oneOf": [
                    {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    {"type": "null"},
                ]
            },
            "hell_bound": {"oneOf": [_RATIONAL, {"type": "null"}]},
            "d2_winding_bound": {"oneOf": [_RATIONAL, {"type": "null"}]},
            "observed": {"oneOf": [{"type": "integer"}, {"type": "null"}]},
            "meets_hell_bound": {"oneOf": [{"type": "boolean"}, {"type": "null"}]},
        },
    },
}


def _drawing_from(body: dict) -> drawings.Drawing:
    if not isinstance(body, dict) or "drawing" not in body:
        raise ParseError("body must be an object with a 'drawing' field")
    return drawings.drawing_from_obj(body["drawing"])


def _q_from(body: dict) -> int:
    q = body.get("q")
    if not isinstance(q, int) or q < 2:
        raise ParseError("field 'q': expected an integer >= 2")
    return q


def _family_from(body: dict) -> FaceFamily:
    raw = body.get("family")
    if not isinstance(raw, list) or not raw:
        raise ParseError("field 'family': expected a list of faces")
    try:
        faces = [Face.of(*face) for face in raw]
        return FaceFamily.of(faces)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field 'family': {exc}") from None


def create_app(ui_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="qwind service", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def _schema_400(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(ParseError)
    async def _parse_400(request: Request, exc: ParseError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(QwindError)
    async def _semantic_422(request: Request, exc: QwindError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/api/winding/enumerate")
    async def enumerate_endpoint(request: Request, stream: bool = False):
        body = await _json_body(request)
        dr = _drawing_from(body)
        q = _q_from(body)
        jobs = body.get("jobs", 1)
        if not isinstance(jobs, int) or not 1 <= jobs <= 8:
            raise ParseError("field 'jobs': expected an integer in 1..8")
        n = 3 * q - 2
        if dr.graph.n != n or len(dr.graph.edges) != n * (n - 1) // 2:
            raise QwindError(f"drawing must be the complete graph K_{n} for q={q}")
        if stream:
            return StreamingResponse(_stream_enumerate(dr, q), media_type="application/x-ndjson")
        t0 = time.monotonic()
        certs = winding.enumerate_winding(dr, q, jobs=jobs)
        elapsed_ms = round((time.monotonic() - t0) * 1000, 3)
        return {
            "count": len(certs),
            "certificates": [winding.certificate_to_obj(c) for c in certs],
            "gp": drawings.gp_report_obj(drawings.general_position_check(dr)),
            "elapsed_ms": elapsed_ms,
        }

    @app.post("/api/winding/check")
    async def check_endpoint(request: Request):
        body = await _json_body(request)
        dr = _drawing_from(body)
        family = _family_from(body)
        cert = winding.is_winding_partition(dr, family)
        return {
            "certified": cert is not None,
            "certificate": winding.certificate_to_obj(cert) if cert else None,
        }

    @app.post("/api/gp-check")
    async def gp_endpoint(request: Request):
        body = await _json_body(request)
        dr = _drawing_from(body)
        return drawings.gp_report_obj(drawings.general_position_check(dr))

    @app.get("/api/generate/alternating")
    async def alternating_endpoint(n: int = Query(..., ge=3)):
        return drawings.drawing_to_obj(drawings.alternating_linear_drawing(n))

    @app.post("/api/hunt/step")
    async def hunt_step_endpoint(request: Request):
        body = await _json_body(request)
        dr = _drawing_from(body)
        q = _q_from(body)
        seed = body.get("seed")
        steps = body.get("steps", 1)
        if not isinstance(seed, int) or not isinstance(steps, int) or steps < 1:
            raise ParseError("fields 'seed' (int) and 'steps' (int >= 1) are required")
        temperature = float(body.get("temperature", 2.0))
        pinned = body.get("pinned", [])
        if not isinstance(pinned, list) or not all(isinstance(v, int) for v in pinned):
            raise ParseError("field 'pinned': expected a list of vertex ids")
        if not set(pinned) <= set(range(dr.graph.n)):
            raise QwindError("pinned vertices out of range")
        result = winding.anneal(
            dr, q, seed, steps, t0=temperature, pinned=frozenset(pinned)
        )
        return {
            "drawing": drawings.drawing_to_obj(result.best_drawing),
            "best_count": result.best_count,
            "trace": result.trace,
        }

    @app.get("/api/bounds")
    async def bounds_endpoint(d: int = Query(..., ge=1), q: int = Query(..., ge=2)):
        return bounds_mod.bound_report(d, q).to_obj()

    @app.get("/api/schemas")
    async def schemas_endpoint():
        return SCHEMAS

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


async def _json_body(request: Request) -> dict:
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ParseError(f"body is not valid JSON: {exc}") from None


def _stream_enumerate(dr: drawings.Drawing, q: int):
    """Chunked progress lines, then the complete result object."""
    certs = dict(winding._vertex_rooted_certs(dr, q))
    yield json.dumps({"phase": "vertex", "partial_count": len(certs)}) + "\n"
    points = winding.candidate_points(dr).sorted_points()
    chunk = max(1, len(points) // 20)
    best: dict = {}
    for start in range(0, len(points), chunk):
        part = winding._edge_rooted_scan(dr, q, points[start : start + chunk])
        for idx, cert in part:
            best.setdefault(cert.family, cert)
        done = min(start + chunk, len(points))
        yield json.dumps(
            {
                "phase": "candidates",
                "progress": round(done / max(1, len(points)), 4),
                "partial_count": len(certs) + len(best),
            }
        ) + "\n"
    for family, cert in best.items():
        certs.setdefault(family, cert)
    ordered = sorted(certs.values(), key=lambda c: c.family)
    yield json.dumps(
        {
            "done": True,
            "count": len(ordered),
            "certificates": [winding.certificate_to_obj(c) for c in ordered],
        }
    ) + "\n"


app = create_app()
