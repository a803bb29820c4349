"""Weighted linear ranking engine.

A framework's score is the inner product of its six factor points with the
user's weight vector. Ranking sorts by score descending with a deterministic
tie-break (published-accuracy point descending, then id ascending), so equal
inputs always produce identical orderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .catalog import Catalog
from .errors import OutOfRangeError
from .records import FrameworkRecord
from .scoring import FactorVector, factor_vector

UI_SCALE_BOUND = 10


@dataclass(frozen=True)
class WeightVector:
    """Per-factor weights, ordered as FactorKind. The UI works on an
    integer 0..10 scale; the engine stores fractions with bound 1.0."""

    threat_model: float = 0.5
    privacy: float = 0.5
    published_accuracy: float = 0.5
    verifiable_results: float = 0.5
    open_source: float = 0.5
    training_support: float = 0.5

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (
            self.threat_model,
            self.privacy,
            self.published_accuracy,
            self.verifiable_results,
            self.open_source,
            self.training_support,
        )


@dataclass(frozen=True)
class ScoredFramework:
    framework_id: str
    factor_vector: FactorVector
    score: float


@dataclass(frozen=True)
class RankedList:
    entries: tuple[ScoredFramework, ...]
    weights_used: WeightVector
    catalog_version: int

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def default_weights() -> WeightVector:
    """The default calibration: every factor at the median weight 0.5."""
    return WeightVector()


def weights_from_ui_scale(values: Sequence[int]) -> WeightVector:
    """Convert six 0..10 slider integers into a WeightVector (value / 10).

    Raises OutOfRangeError for out-of-bound or non-integral values.
    """
    if len(values) != 6:
        raise OutOfRangeError(f"expected 6 weight values, got {len(values)}")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise OutOfRangeError(f"weight {v!r} is not an integer")
        if not 0 <= v <= UI_SCALE_BOUND:
            raise OutOfRangeError(f"weight {v} outside 0..{UI_SCALE_BOUND}")
    return WeightVector(*(v / UI_SCALE_BOUND for v in values))


def score(points: FactorVector, weights: WeightVector) -> float:
    """Inner product of factor points and weights. No normalization."""
    return sum(p * w for p, w in zip(points.as_tuple(), weights.as_tuple()))


def rank(
    frameworks: Iterable[FrameworkRecord],
    weights: WeightVector,
    catalog: Catalog,
) -> RankedList:
    """Score each framework against the catalog snapshot and order the
    result best-first.

    Ties on score fall back to the published-accuracy point (descending),
    then the framework id (ascending), so the ordering is total.
    """
    scored = []
    for record in frameworks:
        points = factor_vector(record, catalog)
        scored.append(ScoredFramework(record.id, points, score(points, weights)))
    scored.sort(
        key=lambda s: (-s.score, -s.factor_vector.published_accuracy, s.framework_id)
    )
    return RankedList(
        entries=tuple(scored),
        weights_used=weights,
        catalog_version=catalog.version,
    )
