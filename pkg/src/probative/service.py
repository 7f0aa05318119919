"""HTTP facade over the library for programmatic clients and the UI.

All endpoints live under ``/api/v1``. Models are kept in an in-memory
store: the bundled fixtures are preloaded read-only, uploads get generated
ids. Every number in a response is the library result untouched; the
service performs no arithmetic of its own.

Status codes: 400 malformed body, 404 unknown model id, 409 impossible
evidence, 422 validation findings or bad node/state references.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .dsl import ModelDocument, document_payload, parse_json
from .errors import (
    ImpossibleEvidenceError,
    ModelValidationError,
    PriorOverrideError,
    SchemaError,
    StructureError,
    UnknownNodeError,
    UnknownStateError,
    ZeroOverZeroError,
)
from .fixtures import fixture_names, load_fixture
from .inference import posterior, probability_of_evidence
from .likelihood import COMPLEMENT, HypothesisQuery, lr_via_inference, override_prior
from .network import NetworkModel


@dataclass
class _Entry:
    doc: ModelDocument
    fixture: bool


class ModelStore:
    """Threadsafe id -> model registry; fixtures are undeletable."""

    def __init__(self):
        self._lock = threading.Lock()
        self._entries: dict[str, _Entry] = {}
        self._ids = itertools.count(1)
        for name in fixture_names():
            self._entries[name] = _Entry(doc=load_fixture(name), fixture=True)

    def list(self) -> list[dict[str, Any]]:
        with self._lock:
            return [
                {"id": key, "name": e.doc.model.name, "fixture": e.fixture}
                for key, e in self._entries.items()
            ]

    def get(self, model_id: str) -> _Entry | None:
        with self._lock:
            return self._entries.get(model_id)

    def add(self, doc: ModelDocument) -> str:
        with self._lock:
            model_id = f"m{next(self._ids)}"
            self._entries[model_id] = _Entry(doc=doc, fixture=False)
            return model_id

    def delete(self, model_id: str) -> bool:
        with self._lock:
            del self._entries[model_id]
            return True


def _error(status: int, detail: Any) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": detail})


def _findings_payload(report) -> list[dict[str, str]]:
    return [
        {"severity": f.severity, "code": f.code, "message": f.message, "location": f.location}
        for f in report.findings
    ]


def _parse_hypothesis(raw: Any) -> HypothesisQuery | None:
    if raw is None:
        return None
    if not isinstance(raw, dict) or not isinstance(raw.get("node"), str):
        raise SchemaError("/hypothesis", "expected an object with a node id")
    positive = raw.get("positive_state")
    if positive is not None and not isinstance(positive, str):
        raise SchemaError("/hypothesis/positive_state", "expected a string")
    negative = raw.get("negative_spec", COMPLEMENT)
    if not isinstance(negative, str):
        raise SchemaError("/hypothesis/negative_spec", "expected a string")
    return HypothesisQuery(
        node=raw["node"],
        positive_state=positive or "",
        negative_spec=negative,
    )


async def _read_json_object(request: Request) -> dict[str, Any]:
    try:
        body = await request.json()
    except Exception:
        raise SchemaError("", "not valid JSON") from None
    if not isinstance(body, dict):
        raise SchemaError("", "expected a JSON object")
    return body


def _run_query(model: NetworkModel, body: dict[str, Any]) -> dict[str, Any]:
    evidence = body.get("evidence", {})
    if not isinstance(evidence, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in evidence.items()
    ):
        raise SchemaError("/evidence", "expected an object mapping node ids to state labels")
    hypothesis = _parse_hypothesis(body.get("hypothesis"))
    prior_override = body.get("prior_override")
    if prior_override is not None and not isinstance(prior_override, (int, float)):
        raise SchemaError("/prior_override", "expected a number")
    query_nodes = body.get("query_nodes")
    if query_nodes is not None and (
        not isinstance(query_nodes, list) or not all(isinstance(q, str) for q in query_nodes)
    ):
        raise SchemaError("/query_nodes", "expected an array of node ids")

    lr_payload = None
    working = model
    if hypothesis is not None:
        if not hypothesis.positive_state:
            hypothesis = HypothesisQuery(
                node=hypothesis.node,
                positive_state=model.node(hypothesis.node).states[0],
                negative_spec=hypothesis.negative_spec,
            )
        report = lr_via_inference(
            model, evidence, hypothesis, prior_override=float(prior_override)
            if prior_override is not None else None,
        )
        lr_payload = report.as_dict()
        if prior_override is not None:
            working = override_prior(
                model, hypothesis.node, hypothesis.positive_state, float(prior_override)
            )
    elif prior_override is not None:
        raise SchemaError("/prior_override", "prior_override needs a hypothesis")

    nodes = query_nodes if query_nodes is not None else [n.id for n in working.nodes]
    posteriors = {q: posterior(working, evidence, q).distribution for q in nodes}
    priors_used = {q: posterior(working, {}, q).distribution for q in nodes}
    return {
        "posteriors": posteriors,
        "priors_used": priors_used,
        "lr_report": lr_payload,
        "p_evidence": probability_of_evidence(working, evidence),
    }


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="probative", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = ModelStore()
    app.state.store = store

    @app.get("/api/v1/models")
    def list_models():
        return store.list()

    @app.post("/api/v1/models")
    async def create_model(request: Request):
        raw = await request.body()
        try:
            doc = parse_json(raw.decode("utf-8"))
        except UnicodeDecodeError:
            return _error(400, "body is not UTF-8")
        except SchemaError as exc:
            return _error(400, str(exc))
        except ModelValidationError as exc:
            return JSONResponse(
                status_code=422,
                content={"detail": "model failed validation",
                         "findings": _findings_payload(exc.report)},
            )
        model_id = store.add(doc)
        return JSONResponse(status_code=201, content={"id": model_id})

    @app.get("/api/v1/models/{model_id}")
    def get_model(model_id: str):
        entry = store.get(model_id)
        if entry is None:
            return _error(404, f"no model {model_id!r}")
        return document_payload(entry.doc)

    @app.delete("/api/v1/models/{model_id}")
    def delete_model(model_id: str):
        entry = store.get(model_id)
        if entry is None:
            return _error(404, f"no model {model_id!r}")
        if entry.fixture:
            return _error(403, "bundled fixtures cannot be deleted")
        store.delete(model_id)
        return Response(status_code=204)

    @app.post("/api/v1/models/{model_id}/query")
    async def query_model(model_id: str, request: Request):
        entry = store.get(model_id)
        if entry is None:
            return _error(404, f"no model {model_id!r}")
        try:
            body = await _read_json_object(request)
        except SchemaError as exc:
            return _error(400, str(exc))
        try:
            return _run_query(entry.doc.model, body)
        except SchemaError as exc:
            return _error(400, str(exc))
        except (UnknownNodeError, UnknownStateError, PriorOverrideError, StructureError) as exc:
            return _error(422, str(exc))
        except (ImpossibleEvidenceError, ZeroOverZeroError) as exc:
            return _error(409, str(exc))

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
