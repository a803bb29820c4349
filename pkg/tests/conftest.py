"""Shared fixtures: the bundled catalog, a seeded random record generator,
and a service factory over a throwaway copy of the catalog directory."""

from __future__ import annotations

import random
import shutil
from pathlib import Path

import pytest

from ppmlrank.catalog import Catalog, load_catalog
from ppmlrank.records import (
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
)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data" / "catalog"

DATASET_POOL = tuple(f"DS{i}" for i in range(10))
MODEL_POOL = ("CNN", "DNN", "SVM", "Transformer", "Linear Regression", "Random Forest")
NONLINEAR_POOL = ("ReLU", "Sigmoid", "Square", "Softmax", "Maxpool")
SCHEME_POOL = ("CKKS", "BGV", "BFV", "TFHE", "Gaussian")
MPC_SCHEME_POOL = ("Secret Sharing", "Garbled Circuits", "Oblivious Transfer")
LIBRARY_POOL = ("SEAL", "OpenFHE", "HEAAN", "HElib", "PyTorch", "TensorFlow")
AGGREGATION_POOL = ("FedAvg", "FedProx", "FedSGD")
HARDWARE_POOL = ("SGX", "TrustZone", "SEV")
ATTACK_POOL = ("side-channel", "rollback", "memory-probe")


@pytest.fixture(scope="session")
def fixture_catalog() -> Catalog:
    return load_catalog(FIXTURE_DIR)


@pytest.fixture
def catalog_copy(tmp_path) -> Path:
    """A disposable copy of the bundled catalog directory, safe to mutate."""
    target = tmp_path / "catalog"
    shutil.copytree(FIXTURE_DIR, target)
    return target


def _random_acceleration(rng: random.Random) -> tuple[Acceleration, ...]:
    return tuple(rng.sample(tuple(Acceleration), rng.randint(0, 2)))


def _random_extension(rng: random.Random, technique: Technique):
    if technique is Technique.FL:
        return FlExtension(
            num_clients=rng.randint(1, 500),
            num_rounds=rng.randint(1, 100),
            acceleration=_random_acceleration(rng),
            library=rng.choice(LIBRARY_POOL),
            methodology=rng.choice(tuple(FlMethodology)),
            aggregation_algorithms=tuple(
                rng.sample(AGGREGATION_POOL, rng.randint(0, 2))
            ),
        )
    if technique is Technique.TEE:
        return TeeExtension(
            hardware=rng.choice(HARDWARE_POOL),
            protected_attacks=tuple(rng.sample(ATTACK_POOL, rng.randint(0, 3))),
            acceleration=_random_acceleration(rng),
            integrity_check=rng.random() < 0.5,
            edge_support=rng.random() < 0.5,
        )
    if technique is Technique.MPC:
        return MpcExtension(
            schemes=tuple(rng.sample(MPC_SCHEME_POOL, rng.randint(1, 2))),
            num_participants=rng.randint(2, 6),
        )
    if technique is Technique.DP:
        return DpExtension(scheme=rng.choice(SCHEME_POOL))
    if technique is Technique.HE:
        return HeExtension(
            scheme=rng.choice(SCHEME_POOL),
            normalization_support=rng.random() < 0.5,
            acceleration=_random_acceleration(rng),
            library=rng.choice(LIBRARY_POOL),
            bootstrapping=rng.random() < 0.5,
        )
    return HybridExtension(
        techniques=tuple(rng.sample(("FL", "DP", "TEE", "MPC", "HE"), 2)),
        num_parties=rng.randint(1, 6),
        acceleration=_random_acceleration(rng),
    )


def random_record(rng: random.Random, idx: int) -> FrameworkRecord:
    """One valid random record. Ids are unique per ``idx``."""
    technique = rng.choice(tuple(Technique))
    datasets = tuple(sorted(rng.sample(DATASET_POOL, rng.randint(0, 4))))
    verified = rng.random() < 0.5

    results = []
    if datasets:
        for _ in range(rng.randint(0, 3)):
            source = (
                ResultSource.VERIFIED
                if verified and rng.random() < 0.4
                else ResultSource.PUBLISHED
            )
            results.append(
                ResultEntry(
                    dataset=rng.choice(datasets),
                    model=rng.choice(MODEL_POOL),
                    accuracy=round(rng.uniform(0.05, 1.0), 4),
                    source=source,
                    inference_time=(
                        round(rng.uniform(0.001, 60.0), 3) if rng.random() < 0.3 else None
                    ),
                    memory=rng.randint(1, 2**32) if rng.random() < 0.2 else None,
                    communication=rng.randint(1, 2**32) if rng.random() < 0.2 else None,
                )
            )

    return FrameworkRecord(
        id=f"fw{idx:04d}",
        name=f"Framework {idx}",
        technique=technique,
        authors=tuple(f"Author {rng.randint(1, 40)}" for _ in range(rng.randint(0, 3))),
        abstract=f"Synthetic record {idx}.",
        links=(f"https://example.org/fw{idx}",) if rng.random() < 0.5 else (),
        threat_models=frozenset(rng.sample(tuple(ThreatModel), rng.randint(1, 3))),
        data_privacy=rng.random() < 0.8,
        model_privacy=rng.random() < 0.8,
        training_support=rng.choice(tuple(TrainingSupport)),
        open_source=rng.random() < 0.6,
        verified=verified,
        ml_models=tuple(sorted(rng.sample(MODEL_POOL, rng.randint(1, 3)))),
        datasets=datasets,
        nonlinear_functions=tuple(sorted(rng.sample(NONLINEAR_POOL, rng.randint(0, 3)))),
        extension=_random_extension(rng, technique),
        results=tuple(results),
        verification_notes="spot checked" if verified and rng.random() < 0.5 else None,
    )


def random_catalog(rng: random.Random, size: int) -> Catalog:
    return Catalog([random_record(rng, i) for i in range(size)])
