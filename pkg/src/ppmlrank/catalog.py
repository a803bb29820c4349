"""Immutable catalog snapshots over framework record documents.

A catalog directory is a flat directory of ``<id>.json`` record documents.
``load_catalog`` builds version 1 from such a directory; ``with_record``
derives a new snapshot with the version bumped. Snapshots are safe to share
across threads; replacing the live snapshot is the caller's atomic swap.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Iterable

from .errors import DuplicateIdError, NotFoundError, ParseError, ValidationError
from .records import (
    DpExtension,
    FlExtension,
    FrameworkRecord,
    HeExtension,
    MpcExtension,
    ResultSource,
    ingest_record,
    record_to_document,
    validate,
)


class SubmissionStatus(str, enum.Enum):
    PENDING = "pending"
    APPROVED = "approved"
    REJECTED = "rejected"


@dataclass
class Submission:
    """A community-submitted record awaiting review. Approved submissions
    enter the catalog; rejected ones never do."""

    id: str
    record: FrameworkRecord
    status: SubmissionStatus
    submitted_at: datetime
    reviewer_note: str | None = None


@dataclass(frozen=True)
class Vocabularies:
    datasets: tuple[str, ...]
    ml_models: tuple[str, ...]
    libraries: tuple[str, ...]
    schemes: tuple[str, ...]
    nonlinear_functions: tuple[str, ...]


class Catalog:
    """An id-keyed, value-immutable collection of framework records.

    Derived data (per-source dataset maxima, vocabularies) is computed once
    at construction so reads are cheap and reentrant.
    """

    def __init__(self, records: Iterable[FrameworkRecord] = (), version: int = 1):
        by_id: dict[str, FrameworkRecord] = {}
        for record in records:
            if record.id in by_id:
                raise DuplicateIdError(record.id)
            by_id[record.id] = record
        self._by_id = by_id
        self._version = version
        self._maxima = {
            source: _dataset_maxima(by_id.values(), source) for source in ResultSource
        }
        self._vocabularies = _collect_vocabularies(by_id.values())

    @property
    def version(self) -> int:
        return self._version

    @property
    def records(self) -> tuple[FrameworkRecord, ...]:
        """All records, ordered by id for deterministic listings."""
        return tuple(self._by_id[k] for k in sorted(self._by_id))

    def __len__(self) -> int:
        return len(self._by_id)

    def __contains__(self, framework_id: str) -> bool:
        return framework_id in self._by_id

    def get(self, framework_id: str) -> FrameworkRecord:
        try:
            return self._by_id[framework_id]
        except KeyError:
            raise NotFoundError(framework_id) from None

    def with_record(self, record: FrameworkRecord) -> "Catalog":
        """Return a new snapshot containing ``record``, version bumped by 1."""
        if record.id in self._by_id:
            raise DuplicateIdError(record.id)
        violations = validate(record)
        if violations:
            raise ValidationError(violations)
        return Catalog([*self._by_id.values(), record], version=self._version + 1)

    def dataset_maxima(self, source: ResultSource) -> dict[str, float]:
        """Per-dataset maximum accuracy over entries of one source category.

        Datasets with no entry of that source are absent from the map.
        """
        return dict(self._maxima[source])

    def vocabularies(self) -> Vocabularies:
        return self._vocabularies

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Catalog):
            return NotImplemented
        return self._by_id == other._by_id

    def __hash__(self):
        return hash(frozenset(self._by_id))


def _dataset_maxima(records, source: ResultSource) -> dict[str, float]:
    maxima: dict[str, float] = {}
    for record in records:
        for entry in record.results:
            if entry.source != source:
                continue
            current = maxima.get(entry.dataset)
            if current is None or entry.accuracy > current:
                maxima[entry.dataset] = entry.accuracy
    return maxima


def _collect_vocabularies(records) -> Vocabularies:
    datasets: set[str] = set()
    ml_models: set[str] = set()
    libraries: set[str] = set()
    schemes: set[str] = set()
    nonlinear: set[str] = set()
    for record in records:
        datasets.update(record.datasets)
        ml_models.update(record.ml_models)
        nonlinear.update(record.nonlinear_functions)
        ext = record.extension
        if isinstance(ext, (FlExtension, HeExtension)) and ext.library:
            libraries.add(ext.library)
        if isinstance(ext, MpcExtension):
            schemes.update(ext.schemes)
        elif isinstance(ext, (DpExtension, HeExtension)) and ext.scheme:
            schemes.add(ext.scheme)
    return Vocabularies(
        datasets=tuple(sorted(datasets)),
        ml_models=tuple(sorted(ml_models)),
        libraries=tuple(sorted(libraries)),
        schemes=tuple(sorted(schemes)),
        nonlinear_functions=tuple(sorted(nonlinear)),
    )


@dataclass(frozen=True)
class DocumentIssue:
    """A problem found while scanning a catalog directory."""

    filename: str
    messages: tuple[str, ...]


def scan_catalog_dir(location: str | Path) -> tuple[list[FrameworkRecord], list[DocumentIssue]]:
    """Read every ``*.json`` document under ``location``.

    Returns the valid records plus per-file issues (parse failures and
    validation violations), without raising: callers decide whether issues
    are fatal. Duplicate ids are reported against the later file.
    """
    location = Path(location)
    records: list[FrameworkRecord] = []
    issues: list[DocumentIssue] = []
    seen: dict[str, str] = {}
    for path in sorted(location.glob("*.json")):
        try:
            record = ingest_record(path.read_text(encoding="utf-8"))
        except ValidationError as exc:
            issues.append(DocumentIssue(path.name, tuple(exc.violations)))
            continue
        except ParseError as exc:
            issues.append(DocumentIssue(path.name, (str(exc),)))
            continue
        if record.id in seen:
            issues.append(
                DocumentIssue(path.name, (f"id: duplicate of {seen[record.id]}",))
            )
            continue
        seen[record.id] = path.name
        records.append(record)
    return records, issues


def load_catalog(location: str | Path) -> Catalog:
    """Build a version-1 catalog from a directory of record documents.

    Any parse failure, validation violation, or duplicate id is fatal here;
    use ``scan_catalog_dir`` for a non-raising per-file report.
    """
    records: list[FrameworkRecord] = []
    seen: dict[str, str] = {}
    for path in sorted(Path(location).glob("*.json")):
        try:
            record = ingest_record(path.read_text(encoding="utf-8"))
        except ParseError as exc:
            raise ParseError(f"{path.name}: {exc}") from exc
        except ValidationError as exc:
            raise ValidationError([f"{path.name}: {v}" for v in exc.violations]) from exc
        if record.id in seen:
            raise DuplicateIdError(f"{record.id} (in {seen[record.id]} and {path.name})")
        seen[record.id] = path.name
        records.append(record)
    return Catalog(records, version=1)


def export_backup(catalog: Catalog, framework_id: str) -> str:
    """Serialize one record to its backup document (JSON text).

    The output re-ingests to a record equal to the original field for
    field. Raises NotFoundError for unknown ids.
    """
    record = catalog.get(framework_id)
    return json.dumps(record_to_document(record), indent=2, ensure_ascii=False) + "\n"
