"""Timeline export as canonical JSON or CSV."""

from __future__ import annotations

import csv
import io

from ..model import ALL_FEATURES, MultiwikiError, SCHEMA_VERSION, canonical_dumps, format_instant
from ..store import Store


class UnsupportedFormat(MultiwikiError):
    def __init__(self, fmt: str):
        super().__init__(f"unsupported export format: {fmt!r} (expected json or csv)")


def export_timeline(store: Store, pair_id: str, fmt: str) -> str:
    """CSV: one row per timeline point; JSON: the stored timeline document."""
    series = store.get_timeline(pair_id)
    if fmt == "json":
        return canonical_dumps({"schema_version": SCHEMA_VERSION, **series.to_json()})
    if fmt != "csv":
        raise UnsupportedFormat(fmt)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["time", "sim", "sim_text", "sim_meta", *ALL_FEATURES])
    for point in series.points:
        by_name = {s.feature: s.value for s in point.feature_scores}
        writer.writerow([
            format_instant(point.time), point.sim, point.sim_text, point.sim_meta,
            *[by_name.get(name, "") for name in ALL_FEATURES],
        ])
    return buffer.getvalue()
