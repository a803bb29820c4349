"""Faceted search and advanced filtering over a catalog snapshot.

Search covers the six general attributes; set-valued attributes match
ANY-of within the set and AND across attributes. Filters refine a result
list by hardware acceleration, scheme/protocol, library, and
technique-specific features.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .catalog import Catalog
from .errors import InvalidFilterError, InvalidQueryError, UnknownVocabularyError
from .records import (
    Acceleration,
    DpExtension,
    FlExtension,
    FlMethodology,
    FrameworkRecord,
    HeExtension,
    MpcExtension,
    Technique,
    ThreatModel,
    TrainingSupport,
)


@dataclass(frozen=True)
class SearchQuery:
    """Six-attribute search. Unspecified attributes match everything."""

    technique: Technique | None = None
    ml_models: frozenset[str] | None = None
    threat_models: frozenset[ThreatModel] | None = None
    datasets: frozenset[str] | None = None
    training_status: TrainingSupport | None = None
    open_source: bool | None = None

    def is_empty(self) -> bool:
        return all(
            v is None
            for v in (
                self.technique,
                self.ml_models,
                self.threat_models,
                self.datasets,
                self.training_status,
                self.open_source,
            )
        )


@dataclass(frozen=True)
class FilterSet:
    """Advanced filters applied after search. ``technique_specific`` keys
    are only legal when every filtered record's technique carries the
    corresponding feature."""

    acceleration: frozenset[Acceleration] | None = None
    schemes_or_protocols: frozenset[str] | None = None
    libraries: frozenset[str] | None = None
    technique_specific: Mapping[str, str] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return (
            self.acceleration is None
            and self.schemes_or_protocols is None
            and self.libraries is None
            and not self.technique_specific
        )


def _matches_training(record: FrameworkRecord, wanted: TrainingSupport) -> bool:
    # Capability semantics: a framework covering both phases satisfies a
    # phase-specific requirement.
    if record.training_support == wanted:
        return True
    return record.training_support == TrainingSupport.BOTH and wanted in (
        TrainingSupport.INFERENCE_ONLY,
        TrainingSupport.TRAINING_ONLY,
    )


def search(catalog: Catalog, query: SearchQuery) -> list[FrameworkRecord]:
    """Return every record satisfying all specified query attributes.

    Raises UnknownVocabularyError when a queried model or dataset name is
    not known to the catalog; an empty query returns all records.
    """
    vocab = catalog.vocabularies()
    if query.ml_models:
        unknown = set(query.ml_models) - set(vocab.ml_models)
        if unknown:
            raise UnknownVocabularyError(f"unknown ml_models: {sorted(unknown)}")
    if query.datasets:
        unknown = set(query.datasets) - set(vocab.datasets)
        if unknown:
            raise UnknownVocabularyError(f"unknown datasets: {sorted(unknown)}")

    out = []
    for record in catalog.records:
        if query.technique is not None and record.technique != query.technique:
            continue
        if query.ml_models is not None and not query.ml_models & set(record.ml_models):
            continue
        if query.threat_models is not None and not query.threat_models & record.threat_models:
            continue
        if query.datasets is not None and not query.datasets & set(record.datasets):
            continue
        if query.training_status is not None and not _matches_training(
            record, query.training_status
        ):
            continue
        if query.open_source is not None and record.open_source != query.open_source:
            continue
        out.append(record)
    return out


def _record_schemes(record: FrameworkRecord) -> set[str]:
    ext = record.extension
    if isinstance(ext, MpcExtension):
        return set(ext.schemes)
    if isinstance(ext, (DpExtension, HeExtension)):
        return {ext.scheme} if ext.scheme else set()
    return set()


def _record_library(record: FrameworkRecord) -> str | None:
    ext = record.extension
    if isinstance(ext, (FlExtension, HeExtension)):
        return ext.library or None
    return None


def _record_acceleration(record: FrameworkRecord) -> set[Acceleration]:
    acceleration = getattr(record.extension, "acceleration", ())
    return set(acceleration)


# Technique-specific filter keys: which technique carries the feature and
# how a record is tested against the required value.
_TECH_FILTERS: dict[str, tuple[Technique, str]] = {
    "fl_methodology": (Technique.FL, "methodology"),
    "min_clients": (Technique.FL, "num_clients"),
    "edge_support": (Technique.TEE, "edge_support"),
    "integrity_check": (Technique.TEE, "integrity_check"),
    "min_participants": (Technique.MPC, "num_participants"),
    "bootstrapping": (Technique.HE, "bootstrapping"),
    "normalization_support": (Technique.HE, "normalization_support"),
    "min_parties": (Technique.HYBRID, "num_parties"),
}

_BOOL_TOKENS = {"true": True, "false": False}


def _parse_bool(text: str, where: str) -> bool:
    try:
        return _BOOL_TOKENS[text]
    except KeyError:
        raise InvalidQueryError(f"{where}: expected true or false, got {text!r}") from None


def _tech_filter_passes(record: FrameworkRecord, key: str, value: str) -> bool:
    technique, attr = _TECH_FILTERS[key]
    if record.technique != technique:
        raise InvalidFilterError(
            f"{key}: applies to {technique.value} records, not {record.technique.value}"
        )
    actual = getattr(record.extension, attr)
    if key.startswith("min_"):
        try:
            return actual >= int(value)
        except ValueError:
            raise InvalidFilterError(f"{key}: expected an integer, got {value!r}") from None
    if isinstance(actual, bool):
        return actual == _parse_bool(value, key)
    if key == "fl_methodology":
        try:
            wanted = FlMethodology(value)
        except ValueError:
            raise InvalidFilterError(f"{key}: unknown methodology {value!r}") from None
        return actual == wanted or actual == FlMethodology.BOTH
    return str(actual) == value


def apply_filters(records: Sequence[FrameworkRecord], filters: FilterSet) -> list[FrameworkRecord]:
    """Keep the records satisfying every specified filter, preserving order.

    Raises InvalidFilterError for unknown technique-specific keys or keys
    that do not apply to a record's technique.
    """
    for key in filters.technique_specific:
        if key not in _TECH_FILTERS:
            raise InvalidFilterError(f"unknown filter key: {key}")

    out = []
    for record in records:
        if filters.acceleration is not None and not (
            filters.acceleration & _record_acceleration(record)
        ):
            continue
        if filters.schemes_or_protocols is not None and not (
            filters.schemes_or_protocols & _record_schemes(record)
        ):
            continue
        if filters.libraries is not None:
            library = _record_library(record)
            if library is None or library not in filters.libraries:
                continue
        if not all(
            _tech_filter_passes(record, key, value)
            for key, value in filters.technique_specific.items()
        ):
            continue
        out.append(record)
    return out


# ---------------------------------------------------------------------------
# query-string decoding (service External Interfaces)

_SEARCH_PARAMS = {"technique", "ml_model", "threat_model", "dataset",
                  "training_status", "open_source"}
_FILTER_PARAMS = {"acceleration", "scheme", "library"}


def _parse_enum_param(value: str, enum_cls, where: str):
    try:
        return enum_cls(value)
    except ValueError:
        tokens = [e.value for e in enum_cls]
        raise InvalidQueryError(f"{where}: {value!r} is not one of {tokens}") from None


def query_from_params(params: Sequence[tuple[str, str]]) -> tuple[SearchQuery, FilterSet]:
    """Decode a query string (as multi-value parameter pairs) into a
    SearchQuery and FilterSet.

    Set values use repeated parameters, booleans are ``true``/``false``,
    and technique-specific filters are namespaced ``tech.<key>=<value>``.
    Unknown parameters raise InvalidQueryError.
    """
    single: dict[str, str] = {}
    multi: dict[str, list[str]] = {}
    tech: dict[str, str] = {}
    for key, value in params:
        if key.startswith("tech."):
            tech[key[len("tech."):]] = value
        elif key in ("technique", "training_status", "open_source"):
            if key in single:
                raise InvalidQueryError(f"{key}: given more than once")
            single[key] = value
        elif key in _SEARCH_PARAMS | _FILTER_PARAMS:
            multi.setdefault(key, []).append(value)
        else:
            raise InvalidQueryError(f"unknown parameter: {key}")

    def str_set(key: str) -> frozenset[str] | None:
        return frozenset(multi[key]) if key in multi else None

    query = SearchQuery(
        technique=(
            _parse_enum_param(single["technique"], Technique, "technique")
            if "technique" in single else None
        ),
        ml_models=str_set("ml_model"),
        threat_models=(
            frozenset(
                _parse_enum_param(v, ThreatModel, "threat_model")
                for v in multi["threat_model"]
            )
            if "threat_model" in multi else None
        ),
        datasets=str_set("dataset"),
        training_status=(
            _parse_enum_param(single["training_status"], TrainingSupport, "training_status")
            if "training_status" in single else None
        ),
        open_source=(
            _parse_bool(single["open_source"], "open_source")
            if "open_source" in single else None
        ),
    )
    filters = FilterSet(
        acceleration=(
            frozenset(
                _parse_enum_param(v, Acceleration, "acceleration")
                for v in multi["acceleration"]
            )
            if "acceleration" in multi else None
        ),
        schemes_or_protocols=str_set("scheme"),
        libraries=str_set("library"),
        technique_specific=tech,
    )
    return query, filters
