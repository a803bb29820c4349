"""Framework record model: enums, per-technique extensions, validation,
and JSON (de)serialization.

A record document is a UTF-8 JSON object with snake_case keys matching the
``FrameworkRecord`` fields. ``extension`` is a tagged object whose
``technique`` field selects the variant; ``results`` entries carry a
``source`` of ``"published"`` or ``"verified"``. Structural problems raise
``ParseError``; invariant violations are collected by ``validate`` and
raised as ``ValidationError`` by ``ingest_record``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, Union

from .errors import ParseError, ValidationError


class Technique(str, Enum):
    FL = "FL"
    DP = "DP"
    TEE = "TEE"
    MPC = "MPC"
    HE = "HE"
    HYBRID = "Hybrid"


class ThreatModel(str, Enum):
    MALICIOUS = "malicious"
    SEMI_HONEST = "semi-honest"
    SEMI_HONEST_TTP = "semi-honest-ttp"


class TrainingSupport(str, Enum):
    INFERENCE_ONLY = "inference-only"
    TRAINING_ONLY = "training-only"
    BOTH = "both"


class ResultSource(str, Enum):
    PUBLISHED = "published"
    VERIFIED = "verified"


class Acceleration(str, Enum):
    GPU = "GPU"
    FPGA = "FPGA"
    ASIC = "ASIC"


class FlMethodology(str, Enum):
    CENTRALIZED = "centralized"
    DECENTRALIZED = "decentralized"
    BOTH = "both"


_ID_RE = re.compile(r"^[a-z0-9][a-z0-9_-]*$")


@dataclass(frozen=True)
class ResultEntry:
    """One accuracy measurement, either from the publication or from a
    local validation run. Resource metrics are optional and are shown on
    detail pages but never enter the ranking."""

    dataset: str
    model: str
    accuracy: float
    source: ResultSource
    inference_time: float | None = None
    memory: int | None = None
    communication: int | None = None


@dataclass(frozen=True)
class FlExtension:
    num_clients: int
    num_rounds: int
    acceleration: tuple[Acceleration, ...]
    library: str
    methodology: FlMethodology
    aggregation_algorithms: tuple[str, ...]

    technique = Technique.FL


@dataclass(frozen=True)
class TeeExtension:
    hardware: str
    protected_attacks: tuple[str, ...]
    acceleration: tuple[Acceleration, ...]
    integrity_check: bool
    edge_support: bool

    technique = Technique.TEE


@dataclass(frozen=True)
class MpcExtension:
    schemes: tuple[str, ...]
    num_participants: int

    technique = Technique.MPC


@dataclass(frozen=True)
class DpExtension:
    scheme: str

    technique = Technique.DP


@dataclass(frozen=True)
class HeExtension:
    scheme: str
    normalization_support: bool
    acceleration: tuple[Acceleration, ...]
    library: str
    bootstrapping: bool

    technique = Technique.HE


@dataclass(frozen=True)
class HybridExtension:
    techniques: tuple[str, ...]
    num_parties: int
    acceleration: tuple[Acceleration, ...]

    technique = Technique.HYBRID


TechniqueExtension = Union[
    FlExtension, TeeExtension, MpcExtension, DpExtension, HeExtension, HybridExtension
]

_EXTENSION_TYPES: dict[Technique, type] = {
    Technique.FL: FlExtension,
    Technique.TEE: TeeExtension,
    Technique.MPC: MpcExtension,
    Technique.DP: DpExtension,
    Technique.HE: HeExtension,
    Technique.HYBRID: HybridExtension,
}


@dataclass(frozen=True)
class FrameworkRecord:
    """One cataloged framework. Collections are stored as tuples (threat
    models as a frozenset) so records are immutable values with plain
    equality, which the backup round-trip contract relies on."""

    id: str
    name: str
    technique: Technique
    authors: tuple[str, ...]
    abstract: str
    links: tuple[str, ...]
    threat_models: frozenset[ThreatModel]
    data_privacy: bool
    model_privacy: bool
    training_support: TrainingSupport
    open_source: bool
    verified: bool
    ml_models: tuple[str, ...]
    datasets: tuple[str, ...]
    nonlinear_functions: tuple[str, ...]
    extension: TechniqueExtension
    results: tuple[ResultEntry, ...] = field(default_factory=tuple)
    verification_notes: str | None = None

    def results_by_source(self, source: ResultSource) -> tuple[ResultEntry, ...]:
        return tuple(r for r in self.results if r.source == source)


def validate(record: FrameworkRecord) -> list[str]:
    """Check every model invariant and return the violations found.

    Violations are data, not faults: an empty list means the record is
    valid. Each message names the offending field and the rule broken.
    """
    violations: list[str] = []

    if not record.id:
        violations.append("id: must be non-empty")
    elif not _ID_RE.match(record.id):
        violations.append("id: must be a lowercase slug ([a-z0-9_-], starting alphanumeric)")
    if not record.name:
        violations.append("name: must be non-empty")
    if not record.threat_models:
        violations.append("threat_models: must be non-empty")

    if record.extension.technique != record.technique:
        violations.append(
            f"extension: tag mismatch ({record.extension.technique.value} "
            f"extension on a {record.technique.value} record)"
        )
    violations.extend(_extension_violations(record.extension))

    known_datasets = set(record.datasets)
    for i, entry in enumerate(record.results):
        where = f"results[{i}]"
        if not entry.dataset:
            violations.append(f"{where}.dataset: must be non-empty")
        elif entry.dataset not in known_datasets:
            violations.append(f"{where}.dataset: {entry.dataset!r} not listed in datasets")
        if not 0.0 < entry.accuracy <= 1.0:
            violations.append(f"{where}.accuracy: must be a fraction in (0, 1]")
        if entry.inference_time is not None and entry.inference_time <= 0:
            violations.append(f"{where}.inference_time: must be > 0 when present")
        if entry.memory is not None and entry.memory <= 0:
            violations.append(f"{where}.memory: must be > 0 when present")
        if entry.communication is not None and entry.communication <= 0:
            violations.append(f"{where}.communication: must be > 0 when present")
        if entry.source == ResultSource.VERIFIED and not record.verified:
            violations.append(f"{where}: verified-source entry on unverified framework")

    return violations


def _extension_violations(ext: TechniqueExtension) -> list[str]:
    out: list[str] = []
    if isinstance(ext, FlExtension):
        if ext.num_clients < 1:
            out.append("extension.num_clients: must be a positive integer")
        if ext.num_rounds < 1:
            out.append("extension.num_rounds: must be a positive integer")
    elif isinstance(ext, MpcExtension):
        if ext.num_participants < 2:
            out.append("extension.num_participants: must be >= 2")
    elif isinstance(ext, HybridExtension):
        if len(set(ext.techniques)) < 2:
            out.append("extension.techniques: must list >= 2 distinct techniques")
        if ext.num_parties < 1:
            out.append("extension.num_parties: must be a positive integer")
    return out


# ---------------------------------------------------------------------------
# document parsing

def _expect_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}")


def _get_str(obj: dict, key: str, where: str, default: str | None = "") -> Any:
    value = obj.get(key, default)
    if value is None and default is None:
        return None
    if not isinstance(value, str):
        raise ParseError(f"{where}.{key}: expected a string")
    return value


def _get_bool(obj: dict, key: str, where: str) -> bool:
    if key not in obj:
        raise ParseError(f"{where}.{key}: required field missing")
    value = obj[key]
    if not isinstance(value, bool):
        raise ParseError(f"{where}.{key}: expected a boolean")
    return value


def _get_int(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise ParseError(f"{where}.{key}: required field missing")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}.{key}: expected an integer")
    return value


def _get_str_list(obj: dict, key: str, where: str) -> tuple[str, ...]:
    value = obj.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{where}.{key}: expected a list of strings")
    return tuple(value)


def _get_enum(obj: dict, key: str, enum_cls: type[Enum], where: str) -> Any:
    if key not in obj:
        raise ParseError(f"{where}.{key}: required field missing")
    return _parse_enum(obj[key], enum_cls, f"{where}.{key}")


def _parse_enum(value: Any, enum_cls: type[Enum], where: str) -> Any:
    try:
        return enum_cls(value)
    except (ValueError, TypeError):
        tokens = [e.value for e in enum_cls]
        raise ParseError(f"{where}: {value!r} is not one of {tokens}") from None


def _get_acceleration(obj: dict, where: str) -> tuple[Acceleration, ...]:
    value = obj.get("acceleration", [])
    if not isinstance(value, list):
        raise ParseError(f"{where}.acceleration: expected a list")
    return tuple(_parse_enum(v, Acceleration, f"{where}.acceleration") for v in value)


def _parse_extension(obj: Any) -> TechniqueExtension:
    if not isinstance(obj, dict):
        raise ParseError("extension: expected an object")
    tag = _get_enum(obj, "technique", Technique, "extension")
    where = "extension"
    if tag == Technique.FL:
        _expect_keys(obj, {"technique", "num_clients", "num_rounds", "acceleration",
                           "library", "methodology", "aggregation_algorithms"}, where)
        return FlExtension(
            num_clients=_get_int(obj, "num_clients", where),
            num_rounds=_get_int(obj, "num_rounds", where),
            acceleration=_get_acceleration(obj, where),
            library=_get_str(obj, "library", where),
            methodology=_get_enum(obj, "methodology", FlMethodology, where),
            aggregation_algorithms=_get_str_list(obj, "aggregation_algorithms", where),
        )
    if tag == Technique.TEE:
        _expect_keys(obj, {"technique", "hardware", "protected_attacks", "acceleration",
                           "integrity_check", "edge_support"}, where)
        return TeeExtension(
            hardware=_get_str(obj, "hardware", where),
            protected_attacks=_get_str_list(obj, "protected_attacks", where),
            acceleration=_get_acceleration(obj, where),
            integrity_check=_get_bool(obj, "integrity_check", where),
            edge_support=_get_bool(obj, "edge_support", where),
        )
    if tag == Technique.MPC:
        _expect_keys(obj, {"technique", "schemes", "num_participants"}, where)
        return MpcExtension(
            schemes=_get_str_list(obj, "schemes", where),
            num_participants=_get_int(obj, "num_participants", where),
        )
    if tag == Technique.DP:
        _expect_keys(obj, {"technique", "scheme"}, where)
        return DpExtension(scheme=_get_str(obj, "scheme", where))
    if tag == Technique.HE:
        _expect_keys(obj, {"technique", "scheme", "normalization_support", "acceleration",
                           "library", "bootstrapping"}, where)
        return HeExtension(
            scheme=_get_str(obj, "scheme", where),
            normalization_support=_get_bool(obj, "normalization_support", where),
            acceleration=_get_acceleration(obj, where),
            library=_get_str(obj, "library", where),
            bootstrapping=_get_bool(obj, "bootstrapping", where),
        )
    _expect_keys(obj, {"technique", "techniques", "num_parties", "acceleration"}, where)
    return HybridExtension(
        techniques=_get_str_list(obj, "techniques", where),
        num_parties=_get_int(obj, "num_parties", where),
        acceleration=_get_acceleration(obj, where),
    )


def _parse_result(obj: Any, where: str) -> ResultEntry:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    _expect_keys(obj, {"dataset", "model", "accuracy", "source",
                       "inference_time", "memory", "communication"}, where)
    accuracy = obj.get("accuracy")
    if isinstance(accuracy, bool) or not isinstance(accuracy, (int, float)):
        raise ParseError(f"{where}.accuracy: expected a number")

    def optional_number(key: str, integral: bool) -> Any:
        value = obj.get(key)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f"{where}.{key}: expected a number or null")
        return int(value) if integral else float(value)

    return ResultEntry(
        dataset=_get_str(obj, "dataset", where),
        model=_get_str(obj, "model", where),
        accuracy=float(accuracy),
        source=_get_enum(obj, "source", ResultSource, where),
        inference_time=optional_number("inference_time", integral=False),
        memory=optional_number("memory", integral=True),
        communication=optional_number("communication", integral=True),
    )


_RECORD_KEYS = {
    "id", "name", "technique", "authors", "abstract", "links", "threat_models",
    "data_privacy", "model_privacy", "training_support", "open_source", "verified",
    "ml_models", "datasets", "nonlinear_functions", "extension", "results",
    "verification_notes",
}


def record_from_document(obj: Any) -> FrameworkRecord:
    """Build a FrameworkRecord from a decoded JSON object.

    Raises ParseError when the document cannot be mapped onto the model at
    all. Invariant checks are left to ``validate`` so that a caller can
    report every violation in one pass.
    """
    if not isinstance(obj, dict):
        raise ParseError("record: expected a JSON object")
    _expect_keys(obj, _RECORD_KEYS, "record")
    if "extension" not in obj:
        raise ParseError("record.extension: required field missing")
    results_raw = obj.get("results", [])
    if not isinstance(results_raw, list):
        raise ParseError("record.results: expected a list")
    threat_raw = obj.get("threat_models", [])
    if not isinstance(threat_raw, list):
        raise ParseError("record.threat_models: expected a list")
    return FrameworkRecord(
        id=_get_str(obj, "id", "record"),
        name=_get_str(obj, "name", "record"),
        technique=_get_enum(obj, "technique", Technique, "record"),
        authors=_get_str_list(obj, "authors", "record"),
        abstract=_get_str(obj, "abstract", "record"),
        links=_get_str_list(obj, "links", "record"),
        threat_models=frozenset(
            _parse_enum(v, ThreatModel, "record.threat_models") for v in threat_raw
        ),
        data_privacy=_get_bool(obj, "data_privacy", "record"),
        model_privacy=_get_bool(obj, "model_privacy", "record"),
        training_support=_get_enum(obj, "training_support", TrainingSupport, "record"),
        open_source=_get_bool(obj, "open_source", "record"),
        verified=_get_bool(obj, "verified", "record"),
        ml_models=_get_str_list(obj, "ml_models", "record"),
        datasets=_get_str_list(obj, "datasets", "record"),
        nonlinear_functions=_get_str_list(obj, "nonlinear_functions", "record"),
        extension=_parse_extension(obj["extension"]),
        results=tuple(
            _parse_result(r, f"record.results[{i}]") for i, r in enumerate(results_raw)
        ),
        verification_notes=_get_str(obj, "verification_notes", "record", default=None),
    )


def record_to_document(record: FrameworkRecord) -> dict:
    """Serialize a record to its JSON document form (snake_case keys,
    stable key order, threat models sorted for deterministic output)."""
    ext: dict[str, Any] = {"technique": record.extension.technique.value}
    for f in fields(record.extension):
        value = getattr(record.extension, f.name)
        if isinstance(value, tuple):
            ext[f.name] = [v.value if isinstance(v, Enum) else v for v in value]
        elif isinstance(value, Enum):
            ext[f.name] = value.value
        else:
            ext[f.name] = value
    return {
        "id": record.id,
        "name": record.name,
        "technique": record.technique.value,
        "authors": list(record.authors),
        "abstract": record.abstract,
        "links": list(record.links),
        "threat_models": sorted(m.value for m in record.threat_models),
        "data_privacy": record.data_privacy,
        "model_privacy": record.model_privacy,
        "training_support": record.training_support.value,
        "open_source": record.open_source,
        "verified": record.verified,
        "ml_models": list(record.ml_models),
        "datasets": list(record.datasets),
        "nonlinear_functions": list(record.nonlinear_functions),
        "extension": ext,
        "results": [
            {
                "dataset": r.dataset,
                "model": r.model,
                "accuracy": r.accuracy,
                "source": r.source.value,
                "inference_time": r.inference_time,
                "memory": r.memory,
                "communication": r.communication,
            }
            for r in record.results
        ],
        "verification_notes": record.verification_notes,
    }


def ingest_record(document: str) -> FrameworkRecord:
    """Parse and validate one record document (JSON text).

    Raises ParseError for malformed documents and ValidationError (with
    the full violation list) for documents that parse but break invariants.
    """
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    record = record_from_document(obj)
    violations = validate(record)
    if violations:
        raise ValidationError(violations)
    return record
