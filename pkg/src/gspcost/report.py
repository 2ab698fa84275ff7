"""Deterministic CSV/JSON report emission.

Fixed column orders, '.' decimal separator, shortest round-trip float
formatting, and no timestamps, so identical inputs produce byte-identical
bundles. Every row carries a provenance marker distinguishing values
computed by this run from ingested reference data.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

PROVENANCE_COMPUTED = "computed"
PROVENANCE_INGESTED = "ingested-paper-datum"


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row width {len(row)} does not match header {header}")
        lines.append(",".join(format_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def render_metadata(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
