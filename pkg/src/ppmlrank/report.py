"""Radar comparison reports.

The radar report is a columnar text document: one row per framework, the
six factor points in canonical order as numeric columns. A polar-chart
rendering of the same rows can be written next to it for quick visual
comparison.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .catalog import Catalog
from .scoring import FACTOR_ORDER, FactorVector, factor_vector

AXIS_LABELS = tuple(kind.value for kind in FACTOR_ORDER)


@dataclass(frozen=True)
class RadarRow:
    framework_id: str
    name: str
    points: FactorVector


def radar_rows(catalog: Catalog, framework_ids: Sequence[str]) -> list[RadarRow]:
    """Resolve ids against the catalog and compute their factor vectors.

    Raises NotFoundError on the first unknown id.
    """
    rows = []
    for framework_id in framework_ids:
        record = catalog.get(framework_id)
        rows.append(RadarRow(record.id, record.name, factor_vector(record, catalog)))
    return rows


def write_radar_csv(rows: Iterable[RadarRow], out: TextIO) -> None:
    writer = csv.writer(out)
    writer.writerow(("id", *AXIS_LABELS))
    for row in rows:
        writer.writerow((row.framework_id, *(f"{p:.6f}" for p in row.points.as_tuple())))


def render_radar_figure(rows: Sequence[RadarRow], path: str | Path) -> None:
    """Draw the rows as an overlaid polar chart and save it to ``path``.

    The format follows the file extension (png, svg, pdf, ...).
    """
    # Object-oriented matplotlib API: no pyplot, no global backend state,
    # safe in headless environments.
    from matplotlib.figure import Figure

    angles = [2 * math.pi * i / len(AXIS_LABELS) for i in range(len(AXIS_LABELS))]
    closed_angles = angles + angles[:1]

    fig = Figure(figsize=(7, 6))
    ax = fig.add_subplot(projection="polar")
    ax.set_theta_offset(math.pi / 2)
    ax.set_theta_direction(-1)
    for row in rows:
        values = list(row.points.as_tuple())
        values += values[:1]
        ax.plot(closed_angles, values, linewidth=1.5, label=row.name)
        ax.fill(closed_angles, values, alpha=0.12)
    ax.set_xticks(angles)
    ax.set_xticklabels([label.replace("_", " ") for label in AXIS_LABELS], fontsize=8)
    ax.set_ylim(0.0, 1.0)
    ax.set_yticks((0.25, 0.5, 0.75, 1.0))
    ax.tick_params(axis="y", labelsize=7)
    ax.legend(loc="upper right", bbox_to_anchor=(1.35, 1.1), fontsize=8)
    fig.savefig(path, bbox_inches="tight", dpi=150)
