"""HTTP API over a persisted catalog directory.

Endpoints cover faceted search, ranking, framework detail, vocabularies,
backup export, and the submission/review workflow. The catalog directory is
the source of truth; approving a submission writes the record's document
there and atomically swaps in a new snapshot. Errors are JSON objects
``{"error": code, "detail": text, "violations": [...]}``.
"""

from __future__ import annotations

import json
import threading
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .catalog import Catalog, export_backup, load_catalog
from .errors import (
    DuplicateIdError,
    InvalidFilterError,
    InvalidQueryError,
    NotFoundError,
    OutOfRangeError,
    ParseError,
    PpmlRankError,
    UnknownVocabularyError,
    ValidationError,
)
from .query import apply_filters, query_from_params, search
from .ranker import UI_SCALE_BOUND, default_weights, rank, weights_from_ui_scale
from .records import (
    FrameworkRecord,
    ResultEntry,
    ResultSource,
    ingest_record,
    record_to_document,
)
from .scoring import FACTOR_ORDER, FactorVector, factor_vector

_ERROR_CODES: dict[type, tuple[int, str]] = {
    UnknownVocabularyError: (400, "unknown_vocabulary"),
    InvalidFilterError: (400, "invalid_filter"),
    InvalidQueryError: (400, "invalid_query"),
    OutOfRangeError: (400, "out_of_range"),
    NotFoundError: (404, "not_found"),
    DuplicateIdError: (409, "duplicate_id"),
    ValidationError: (422, "validation_failed"),
    ParseError: (422, "parse_error"),
}


def _error_response(status: int, code: str, detail: str, violations=()) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": code, "detail": detail, "violations": list(violations)},
    )


class CatalogStore:
    """Owns the live catalog snapshot and the submission files.

    Reads take the current snapshot without locking; the review path is the
    single writer and serializes under a lock, swapping the snapshot only
    after the new record's document is on disk.
    """

    def __init__(self, catalog_dir: str | Path, submissions_dir: str | Path):
        self.catalog_dir = Path(catalog_dir)
        self.submissions_dir = Path(submissions_dir)
        self._snapshot = load_catalog(self.catalog_dir)
        self._write_lock = threading.Lock()

    @property
    def catalog(self) -> Catalog:
        return self._snapshot

    def approve(self, record: FrameworkRecord) -> Catalog:
        with self._write_lock:
            new_snapshot = self._snapshot.with_record(record)
            path = self.catalog_dir / f"{record.id}.json"
            path.write_text(export_backup(new_snapshot, record.id), encoding="utf-8")
            self._snapshot = new_snapshot
            return new_snapshot

    # submissions are one JSON file each, keyed by the record id

    def _submission_path(self, submission_id: str) -> Path:
        return self.submissions_dir / f"{submission_id}.json"

    def load_submission(self, submission_id: str) -> dict | None:
        path = self._submission_path(submission_id)
        if not path.is_file():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def save_submission(self, payload: dict) -> None:
        self.submissions_dir.mkdir(parents=True, exist_ok=True)
        path = self._submission_path(payload["id"])
        path.write_text(
            json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )


def _factor_vector_json(points: FactorVector) -> dict[str, float]:
    return {kind.value: points[kind] for kind in FACTOR_ORDER}


def _result_json(entry: ResultEntry) -> dict:
    return {
        "dataset": entry.dataset,
        "model": entry.model,
        "accuracy": entry.accuracy,
        "source": entry.source.value,
        "inference_time": entry.inference_time,
        "memory": entry.memory,
        "communication": entry.communication,
    }


def _rank_body_to_params(body: dict) -> tuple[list[tuple[str, str]], list[int] | None]:
    """Flatten a rank request body into query-string pairs plus weights.

    Reusing the query-string decoder keeps body and URL search semantics
    identical. Structural problems raise ParseError (422); value-level
    problems surface later from the decoder (400).
    """
    if not isinstance(body, dict):
        raise ParseError("body: expected a JSON object")
    unknown = set(body) - {"query", "filters", "ui_weights"}
    if unknown:
        raise ParseError(f"body: unknown keys {sorted(unknown)}")

    pairs: list[tuple[str, str]] = []

    def add_str(param: str, value, where: str) -> None:
        if not isinstance(value, str):
            raise ParseError(f"{where}: expected a string")
        pairs.append((param, value))

    def add_list(param: str, value, where: str) -> None:
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise ParseError(f"{where}: expected a list of strings")
        pairs.extend((param, v) for v in value)

    query = body.get("query", {})
    if not isinstance(query, dict):
        raise ParseError("query: expected an object")
    singles = {"technique": "technique", "training_status": "training_status"}
    lists = {"ml_models": "ml_model", "threat_models": "threat_model", "datasets": "dataset"}
    for key, value in query.items():
        if value is None:
            continue
        if key in singles:
            add_str(singles[key], value, f"query.{key}")
        elif key in lists:
            add_list(lists[key], value, f"query.{key}")
        elif key == "open_source":
            if not isinstance(value, bool):
                raise ParseError("query.open_source: expected a boolean")
            pairs.append(("open_source", "true" if value else "false"))
        else:
            raise ParseError(f"query: unknown key {key!r}")

    filters = body.get("filters", {})
    if not isinstance(filters, dict):
        raise ParseError("filters: expected an object")
    filter_lists = {
        "acceleration": "acceleration",
        "schemes_or_protocols": "scheme",
        "libraries": "library",
    }
    for key, value in filters.items():
        if value is None:
            continue
        if key in filter_lists:
            add_list(filter_lists[key], value, f"filters.{key}")
        elif key == "technique_specific":
            if not isinstance(value, dict):
                raise ParseError("filters.technique_specific: expected an object")
            for name, raw in value.items():
                if isinstance(raw, bool):
                    text = "true" if raw else "false"
                elif isinstance(raw, (int, str)):
                    text = str(raw)
                else:
                    raise ParseError(
                        f"filters.technique_specific.{name}: expected a scalar"
                    )
                pairs.append((f"tech.{name}", text))
        else:
            raise ParseError(f"filters: unknown key {key!r}")

    ui_weights = body.get("ui_weights")
    if ui_weights is not None and not isinstance(ui_weights, list):
        raise ParseError("ui_weights: expected a list of six integers")
    return pairs, ui_weights


def create_app(
    catalog_dir: str | Path,
    submissions_dir: str | Path | None = None,
    reviewer_token: str | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API application over one catalog directory.

    ``reviewer_token``, when set, must be presented in the
    ``X-Reviewer-Token`` header to review submissions; when unset the
    review endpoint is open (local use). ``static_dir`` optionally serves
    a built web client at the root path.
    """
    catalog_dir = Path(catalog_dir)
    if submissions_dir is None:
        submissions_dir = catalog_dir.parent / "submissions"
    store = CatalogStore(catalog_dir, submissions_dir)

    app = FastAPI(title="ppmlrank", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.exception_handler(PpmlRankError)
    async def _domain_error(request: Request, exc: PpmlRankError):
        for cls, (status, code) in _ERROR_CODES.items():
            if isinstance(exc, cls):
                violations = exc.violations if isinstance(exc, ValidationError) else ()
                return _error_response(status, code, str(exc), violations)
        return _error_response(500, "internal", str(exc))

    @app.get("/api/frameworks")
    async def list_frameworks(request: Request):
        catalog = store.catalog
        pairs = []
        limit: int | None = None
        offset = 0
        for key, value in request.query_params.multi_items():
            if key in ("limit", "offset"):
                try:
                    parsed = int(value)
                except ValueError:
                    raise InvalidQueryError(f"{key}: expected an integer") from None
                if parsed < 0:
                    raise InvalidQueryError(f"{key}: must be >= 0")
                if key == "limit":
                    limit = parsed
                else:
                    offset = parsed
            else:
                pairs.append((key, value))
        query, filters = query_from_params(pairs)
        records = apply_filters(search(catalog, query), filters)
        window = records[offset:] if limit is None else records[offset:offset + limit]
        return {
            "catalog_version": catalog.version,
            "total": len(records),
            "frameworks": [
                {
                    "id": r.id,
                    "name": r.name,
                    "technique": r.technique.value,
                    "factor_vector": _factor_vector_json(factor_vector(r, catalog)),
                }
                for r in window
            ],
        }

    @app.post("/api/rank")
    async def rank_frameworks(request: Request):
        catalog = store.catalog
        try:
            body = await request.json()
        except Exception:
            raise ParseError("body: invalid JSON") from None
        pairs, ui_weights = _rank_body_to_params(body)
        query, filters = query_from_params(pairs)
        if ui_weights is None:
            weights = default_weights()
        else:
            weights = weights_from_ui_scale(ui_weights)
        records = apply_filters(search(catalog, query), filters)
        ranking = rank(records, weights, catalog)
        return {
            "catalog_version": ranking.catalog_version,
            "weights_used": list(ranking.weights_used.as_tuple()),
            "ranking": [
                {
                    "id": entry.framework_id,
                    "score": entry.score,
                    "factor_vector": _factor_vector_json(entry.factor_vector),
                }
                for entry in ranking
            ],
        }

    @app.get("/api/frameworks/{framework_id}")
    async def framework_detail(framework_id: str):
        catalog = store.catalog
        record = catalog.get(framework_id)
        return {
            "catalog_version": catalog.version,
            "framework": record_to_document(record),
            "factor_vector": _factor_vector_json(factor_vector(record, catalog)),
            "published_results": [
                _result_json(e) for e in record.results_by_source(ResultSource.PUBLISHED)
            ],
            "verified_results": [
                _result_json(e) for e in record.results_by_source(ResultSource.VERIFIED)
            ],
            "verification_notes": record.verification_notes,
            "links": list(record.links),
        }

    @app.get("/api/frameworks/{framework_id}/backup")
    async def framework_backup(framework_id: str):
        document = export_backup(store.catalog, framework_id)
        return Response(
            content=document,
            media_type="application/json",
            headers={
                "Content-Disposition": f'attachment; filename="{framework_id}.json"'
            },
        )

    @app.get("/api/meta")
    async def meta():
        catalog = store.catalog
        vocab = catalog.vocabularies()
        return {
            "catalog_version": catalog.version,
            "factors": [kind.value for kind in FACTOR_ORDER],
            "ui_scale_bound": UI_SCALE_BOUND,
            "vocabularies": {
                "datasets": list(vocab.datasets),
                "ml_models": list(vocab.ml_models),
                "libraries": list(vocab.libraries),
                "schemes": list(vocab.schemes),
                "nonlinear_functions": list(vocab.nonlinear_functions),
            },
        }

    @app.post("/api/submissions", status_code=201)
    async def submit(request: Request):
        try:
            body = (await request.body()).decode("utf-8")
        except UnicodeDecodeError:
            raise ParseError("body: not valid UTF-8") from None
        record = ingest_record(body)
        if record.id in store.catalog:
            raise DuplicateIdError(f"{record.id} already in the catalog")
        existing = store.load_submission(record.id)
        if existing is not None and existing["status"] == "pending":
            raise DuplicateIdError(f"{record.id} already has a pending submission")
        payload = {
            "id": record.id,
            "status": "pending",
            "submitted_at": datetime.now(timezone.utc).isoformat(),
            "reviewer_note": None,
            "record": record_to_document(record),
        }
        store.save_submission(payload)
        return {"submission_id": record.id, "status": "pending"}

    @app.post("/api/submissions/{submission_id}/review")
    async def review(submission_id: str, request: Request):
        if reviewer_token is not None:
            presented = request.headers.get("X-Reviewer-Token")
            if presented != reviewer_token:
                return _error_response(401, "unauthorized", "missing or wrong reviewer token")
        try:
            body = await request.json()
        except Exception:
            raise ParseError("body: invalid JSON") from None
        if not isinstance(body, dict) or body.get("action") not in ("approve", "reject"):
            raise ParseError('body: expected {"action": "approve"|"reject", "note"?: text}')
        note = body.get("note")
        if note is not None and not isinstance(note, str):
            raise ParseError("body.note: expected a string")

        submission = store.load_submission(submission_id)
        if submission is None:
            raise NotFoundError(submission_id)
        if submission["status"] != "pending":
            return _error_response(
                409, "conflict", f"submission already {submission['status']}"
            )

        if body["action"] == "approve":
            record = ingest_record(json.dumps(submission["record"]))
            store.approve(record)
            submission["status"] = "approved"
        else:
            submission["status"] = "rejected"
        submission["reviewer_note"] = note
        store.save_submission(submission)
        return {
            "submission_id": submission_id,
            "status": submission["status"],
            "reviewer_note": note,
            "catalog_version": store.catalog.version,
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="webui")

    return app
