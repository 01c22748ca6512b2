"""Self-contained comparison documents for the UI (one snapshot pair in full)."""

from __future__ import annotations

from bisect import bisect_right
from datetime import datetime
from typing import Any, Optional

from ..model import SCHEMA_VERSION, Snapshot, format_instant
from ..store import NotFound, Store


def floor_report_time(store: Store, pair_id: str, time: Optional[datetime]) -> datetime:
    """Greatest stored report time ≤ ``time`` (latest when time is None)."""
    times = store.list_report_times(pair_id)
    if not times:
        raise NotFound(f"no reports stored for {pair_id}")
    if time is None:
        return times[-1]
    index = bisect_right(times, time)
    if index == 0:
        raise NotFound(f"no report at or before {format_instant(time)}")
    return times[index - 1]


def _snapshot_summary(snapshot: Snapshot) -> dict[str, Any]:
    return {
        "lang": snapshot.article.lang.to_json(),
        "title": snapshot.article.title,
        "revision_id": snapshot.revision_id,
        "timestamp": format_instant(snapshot.timestamp),
        "char_count": snapshot.char_count,
        "sentence_count": len(snapshot.sentences),
    }


def _sentence_rows(snapshot: Snapshot) -> list[dict[str, Any]]:
    return [{"index": s.index, "text": s.text, "char_len": s.char_len}
            for s in snapshot.sentences]


def _location_counts(snapshot: Snapshot) -> dict[str, int]:
    counts: dict[str, int] = {}
    for editor in snapshot.editors.located():
        counts[editor.loc] = counts.get(editor.loc, 0) + 1
    return counts


def comparison_document(store: Store, pair_id: str,
                        time: Optional[datetime] = None) -> dict[str, Any]:
    """Everything the comparison view renders, resolved by floor time selection."""
    meta = store.get_meta(pair_id)
    chosen = floor_report_time(store, pair_id, time)
    report = store.get_report(pair_id, chosen)
    plan = store.get_plan(pair_id)
    entry = next((e for e in plan.targets if e.target_time == chosen), None)
    if entry is None:
        raise NotFound(f"report time {format_instant(chosen)} not in plan of {pair_id}")
    articles = meta["articles"]
    snapshot1 = store.get_snapshot(pair_id, articles[0]["lang"], entry.revision_id_1)
    snapshot2 = store.get_snapshot(pair_id, articles[1]["lang"], entry.revision_id_2)

    images = sorted(snapshot1.images | snapshot2.images)
    return {
        "schema_version": SCHEMA_VERSION,
        "pair_id": pair_id,
        "target_time": format_instant(chosen),
        "snapshots": [_snapshot_summary(snapshot1), _snapshot_summary(snapshot2)],
        "sentences1": _sentence_rows(snapshot1),
        "sentences2": _sentence_rows(snapshot2),
        "passage_pairs": [p.to_json() for p in report.passage_pairs],
        "images": [{"image": name,
                    "in1": name in snapshot1.images,
                    "in2": name in snapshot2.images} for name in images],
        "host_ranking": [h.to_json() for h in report.host_ranking],
        "editor_locations1": _location_counts(snapshot1),
        "editor_locations2": _location_counts(snapshot2),
        "feature_scores": [s.to_json() for s in report.feature_scores],
        "sim_text": report.sim_text,
        "sim_meta": report.sim_meta,
        "sim": report.sim,
    }
