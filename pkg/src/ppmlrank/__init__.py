"""Catalog, scoring, and ranking toolkit for privacy-preserving ML frameworks.

The pipeline: record documents are ingested into an immutable ``Catalog``,
each framework is reduced to six factor points in [0, 1], and a weighted
linear score orders the candidates. Faceted search and filters narrow the
candidate set; a CLI and an HTTP service expose the same operations.
"""

from .catalog import (
    Catalog,
    Submission,
    SubmissionStatus,
    Vocabularies,
    export_backup,
    load_catalog,
    scan_catalog_dir,
)
from .errors import (
    DuplicateIdError,
    InvalidFilterError,
    InvalidQueryError,
    MissingMaximumError,
    NotFoundError,
    OutOfRangeError,
    ParseError,
    PpmlRankError,
    UnknownVocabularyError,
    ValidationError,
)
from .query import FilterSet, SearchQuery, apply_filters, query_from_params, search
from .ranker import (
    RankedList,
    ScoredFramework,
    UI_SCALE_BOUND,
    WeightVector,
    default_weights,
    rank,
    score,
    weights_from_ui_scale,
)
from .records import (
    Acceleration,
    DpExtension,
    FlExtension,
    FlMethodology,
    FrameworkRecord,
    HeExtension,
    HybridExtension,
    MpcExtension,
    ResultEntry,
    ResultSource,
    Technique,
    TeeExtension,
    ThreatModel,
    TrainingSupport,
    ingest_record,
    record_from_document,
    record_to_document,
    validate,
)
from .scoring import (
    FACTOR_ORDER,
    FactorKind,
    FactorVector,
    accuracy_point,
    factor_vector,
    open_source_point,
    privacy_point,
    threat_point,
    training_point,
    verification_point,
)

__version__ = "0.1.0"

__all__ = [
    "Acceleration",
    "Catalog",
    "DpExtension",
    "DuplicateIdError",
    "FACTOR_ORDER",
    "FactorKind",
    "FactorVector",
    "FilterSet",
    "FlExtension",
    "FlMethodology",
    "FrameworkRecord",
    "HeExtension",
    "HybridExtension",
    "InvalidFilterError",
    "InvalidQueryError",
    "MissingMaximumError",
    "MpcExtension",
    "NotFoundError",
    "OutOfRangeError",
    "ParseError",
    "PpmlRankError",
    "RankedList",
    "ResultEntry",
    "ResultSource",
    "ScoredFramework",
    "SearchQuery",
    "Submission",
    "SubmissionStatus",
    "Technique",
    "TeeExtension",
    "ThreatModel",
    "TrainingSupport",
    "UI_SCALE_BOUND",
    "UnknownVocabularyError",
    "ValidationError",
    "Vocabularies",
    "WeightVector",
    "accuracy_point",
    "apply_filters",
    "default_weights",
    "export_backup",
    "factor_vector",
    "ingest_record",
    "load_catalog",
    "open_source_point",
    "privacy_point",
    "query_from_params",
    "rank",
    "record_from_document",
    "record_to_document",
    "scan_catalog_dir",
    "score",
    "search",
    "threat_point",
    "training_point",
    "validate",
    "verification_point",
    "weights_from_ui_scale",
]
