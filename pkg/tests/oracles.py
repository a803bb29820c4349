"""Independent brute-force re-computations used as test oracles.

These deliberately re-derive points, scores, match predicates, and orderings
from raw record data in the plainest possible style, without calling the
production code paths they are checking.
"""

from __future__ import annotations

from ppmlrank.records import FrameworkRecord

THREAT_TABLE = {
    "malicious": 1.0,
    "semi-honest": 0.75,
    "semi-honest-ttp": 0.5,
}


def dataset_maxima(records) -> tuple[dict[str, float], dict[str, float]]:
    """Per-dataset maxima, one map per source category."""
    published: dict[str, float] = {}
    verified: dict[str, float] = {}
    for record in records:
        for entry in record.results:
            target = published if entry.source.value == "published" else verified
            if entry.dataset not in target or entry.accuracy > target[entry.dataset]:
                target[entry.dataset] = entry.accuracy
    return published, verified


def factor_points(
    record: FrameworkRecord,
    published_maxima: dict[str, float],
    verified_maxima: dict[str, float],
) -> tuple[float, float, float, float, float, float]:
    threat = max(THREAT_TABLE[m.value] for m in record.threat_models)

    privacy = 0.0
    if record.data_privacy:
        privacy += 0.5
    if record.model_privacy:
        privacy += 0.5

    def mean_of_ratios(source: str, maxima: dict[str, float]) -> float | None:
        ratios = [
            entry.accuracy / maxima[entry.dataset]
            for entry in record.results
            if entry.source.value == source
        ]
        if not ratios:
            return None
        return sum(ratios) / len(ratios)

    published = mean_of_ratios("published", published_maxima)
    if published is None:
        published = 0.0

    verifiable = mean_of_ratios("verified", verified_maxima)
    if verifiable is None:
        verifiable = 1.0 if record.verified else 0.0

    open_source = 1.0 if record.open_source else 0.0
    training = 1.0 if record.training_support.value == "both" else 0.5
    return (threat, privacy, published, verifiable, open_source, training)


def brute_force_rank(records, weight_tuple, published_maxima, verified_maxima):
    """Explicit six-term summation plus sort with the documented tie-break.

    Returns (id, points, score) triples, best first.
    """
    rows = []
    for record in records:
        points = factor_points(record, published_maxima, verified_maxima)
        score = sum(p * w for p, w in zip(points, weight_tuple))
        rows.append((record.id, points, score))
    rows.sort(key=lambda row: (-row[2], -row[1][2], row[0]))
    return rows
