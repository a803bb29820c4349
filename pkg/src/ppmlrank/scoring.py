"""Factor point derivation.

Each framework is reduced to six points in [0, 1]: threat model protection,
model and data privacy, published accuracy, verifiable results, open source,
and training support. Accuracy-style points normalize each result entry by
the best accuracy recorded for its dataset (within the same source category)
and average the ratios.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .catalog import Catalog
from .errors import MissingMaximumError
from .records import FrameworkRecord, ResultEntry, ResultSource, ThreatModel, TrainingSupport


class FactorKind(enum.Enum):
    """The six ranking factors, in canonical display order."""

    THREAT_MODEL = "threat_model"
    PRIVACY = "privacy"
    PUBLISHED_ACCURACY = "published_accuracy"
    VERIFIABLE_RESULTS = "verifiable_results"
    OPEN_SOURCE = "open_source"
    TRAINING_SUPPORT = "training_support"


FACTOR_ORDER: tuple[FactorKind, ...] = tuple(FactorKind)

_THREAT_POINTS = {
    ThreatModel.MALICIOUS: 1.0,
    ThreatModel.SEMI_HONEST: 0.75,
    ThreatModel.SEMI_HONEST_TTP: 0.5,
}


@dataclass(frozen=True)
class FactorVector:
    """Six factor points for one framework, all fractions in [0, 1]."""

    threat_model: float
    privacy: float
    published_accuracy: float
    verifiable_results: float
    open_source: float
    training_support: float

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (
            self.threat_model,
            self.privacy,
            self.published_accuracy,
            self.verifiable_results,
            self.open_source,
            self.training_support,
        )

    def __getitem__(self, kind: FactorKind) -> float:
        return getattr(self, kind.value)


def threat_point(models: Iterable[ThreatModel]) -> float:
    """Strongest protection level among the declared threat models."""
    return max(_THREAT_POINTS[m] for m in models)


def privacy_point(data_privacy: bool, model_privacy: bool) -> float:
    return 0.5 * data_privacy + 0.5 * model_privacy


def training_point(support: TrainingSupport) -> float:
    # Partial phase coverage scores 0.5 whichever phase it is.
    return 1.0 if support == TrainingSupport.BOTH else 0.5


def open_source_point(open_source: bool) -> float:
    return 1.0 if open_source else 0.0


def accuracy_point(entries: Iterable[ResultEntry], maxima: Mapping[str, float]) -> float:
    """Mean of per-entry accuracy ratios against the dataset maxima.

    Entries must all belong to one source category and ``maxima`` must be
    that category's map. Returns 0.0 for an empty entry list.
    """
    ratios = []
    for entry in entries:
        try:
            best = maxima[entry.dataset]
        except KeyError:
            raise MissingMaximumError(entry.dataset) from None
        ratios.append(entry.accuracy / best)
    if not ratios:
        return 0.0
    return sum(ratios) / len(ratios)


def verification_point(record: FrameworkRecord, verified_maxima: Mapping[str, float]) -> float:
    """Accuracy point over verified entries; falls back to the validated
    flag (1.0/0.0) when no verified accuracies were recorded."""
    entries = record.results_by_source(ResultSource.VERIFIED)
    if entries:
        return accuracy_point(entries, verified_maxima)
    return 1.0 if record.verified else 0.0


def factor_vector(record: FrameworkRecord, catalog: Catalog) -> FactorVector:
    """Assemble all six points for a record against its catalog snapshot."""
    return FactorVector(
        threat_model=threat_point(record.threat_models),
        privacy=privacy_point(record.data_privacy, record.model_privacy),
        published_accuracy=accuracy_point(
            record.results_by_source(ResultSource.PUBLISHED),
            catalog.dataset_maxima(ResultSource.PUBLISHED),
        ),
        verifiable_results=verification_point(
            record, catalog.dataset_maxima(ResultSource.VERIFIED)
        ),
        open_source=open_source_point(record.open_source),
        training_support=training_point(record.training_support),
    )
