"""Plain-directory JSON store for snapshots, plans, reports and timelines.

Layout (under one root): ``<pair-id>/meta.json``, ``<pair-id>/snapshots/``,
``<pair-id>/reports/``, ``<pair-id>/timeline.json``, ``<pair-id>/cache/`` plus
a root-level ``interlanguage.json`` table. Every document is canonical JSON
with a ``schema_version`` field; writes are atomic (temp file + rename) and
guarded by a per-pair lock file, reads are lock-free.
"""

from __future__ import annotations

import fcntl
import json
import logging
import re
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Mapping, Optional, Sequence

from .ingest.interlanguage import InterlanguageGroup
from .model import (
    MultiwikiError,
    SCHEMA_VERSION,
    SimilarityReport,
    Snapshot,
    TimelineSeries,
    format_instant,
    parse_instant,
)
from .timeline import SnapshotPlan
from .util import atomic_write_json, read_json, slugify

logger = logging.getLogger("multiwiki.store")

_PAIR_ID_RE = re.compile(r"^[a-z0-9][a-z0-9-]*\.[a-z]{2,3}-[a-z]{2,3}$")


class NotFound(MultiwikiError):
    pass


class CorruptDocument(MultiwikiError):
    pass


def pair_id_for(canonical_id: str, lang1: str, lang2: str) -> str:
    """Stable filesystem-safe pair id, e.g. ``codex-aureus-of-st-emmeram.de-en``."""
    return f"{slugify(canonical_id)}.{'-'.join(sorted((lang1, lang2)))}"


@dataclass(frozen=True)
class PairInfo:
    pair_id: str
    canonical_id: str
    titles: Mapping[str, str]
    langs: tuple[str, str]
    snapshot_count: int

    def to_json(self) -> dict[str, Any]:
        return {
            "pair_id": self.pair_id,
            "canonical_id": self.canonical_id,
            "titles": dict(self.titles),
            "langs": list(self.langs),
            "snapshot_count": self.snapshot_count,
        }


def _versioned(payload: Mapping[str, Any]) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, **payload}


def _report_stamp(t: datetime) -> str:
    return format_instant(t).replace("-", "").replace(":", "")


class Store:
    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    # -- layout ------------------------------------------------------------

    def pair_dir(self, pair_id: str) -> Path:
        return self.root / pair_id

    def cache_dir(self, pair_id: str) -> Path:
        return self.pair_dir(pair_id) / "cache"

    def _require_pair(self, pair_id: str) -> Path:
        directory = self.pair_dir(pair_id)
        if not directory.is_dir():
            raise NotFound(f"unknown pair: {pair_id}")
        return directory

    @contextmanager
    def _pair_lock(self, pair_id: str):
        directory = self.pair_dir(pair_id)
        directory.mkdir(parents=True, exist_ok=True)
        lock_path = directory / ".lock"
        with open(lock_path, "w") as handle:
            fcntl.flock(handle, fcntl.LOCK_EX)
            try:
                yield
            finally:
                fcntl.flock(handle, fcntl.LOCK_UN)

    def _read_document(self, path: Path, what: str) -> dict[str, Any]:
        if not path.is_file():
            raise NotFound(f"{what} not found: {path.name}")
        try:
            document = read_json(path)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise CorruptDocument(f"{what} {path}: {exc}") from exc
        if not isinstance(document, dict) or document.get("schema_version") != SCHEMA_VERSION:
            raise CorruptDocument(f"{what} {path}: bad or missing schema_version")
        return document

    # -- pair metadata -----------------------------------------------------

    def put_meta(self, pair_id: str, canonical_id: str,
                 articles: Sequence, plan: SnapshotPlan, end_time: datetime) -> Path:
        """``articles`` keeps ingestion order (plan revision ids refer to it)."""
        if len(articles) != 2:
            raise ValueError("pair metadata requires exactly two articles")
        ordered = [{"lang": str(a.lang), "title": a.title} for a in articles]
        titles = {entry["lang"]: entry["title"] for entry in ordered}
        document = _versioned({
            "pair_id": pair_id,
            "canonical_id": canonical_id,
            "articles": ordered,
            "titles": titles,
            "langs": sorted(titles),
            "plan": plan.to_json(),
            "end_time": format_instant(end_time),
        })
        path = self.pair_dir(pair_id) / "meta.json"
        with self._pair_lock(pair_id):
            atomic_write_json(path, document)
        return path

    def get_meta(self, pair_id: str) -> dict[str, Any]:
        self._require_pair(pair_id)
        return self._read_document(self.pair_dir(pair_id) / "meta.json", "pair meta")

    def get_plan(self, pair_id: str) -> SnapshotPlan:
        meta = self.get_meta(pair_id)
        try:
            return SnapshotPlan.from_json(meta["plan"])
        except (KeyError, ValueError, TypeError) as exc:
            raise CorruptDocument(f"plan of {pair_id}: {exc}") from exc

    # -- snapshots -----------------------------------------------------------

    def put_snapshot(self, pair_id: str, snapshot: Snapshot) -> Path:
        name = f"{snapshot.article.lang.code}-{snapshot.revision_id}.json"
        path = self.pair_dir(pair_id) / "snapshots" / name
        with self._pair_lock(pair_id):
            atomic_write_json(path, _versioned(snapshot.to_json()))
        return path

    def get_snapshot(self, pair_id: str, lang: str, revision_id: int) -> Snapshot:
        self._require_pair(pair_id)
        path = self.pair_dir(pair_id) / "snapshots" / f"{lang}-{revision_id}.json"
        document = self._read_document(path, "snapshot")
        try:
            return Snapshot.from_json(document)
        except (KeyError, ValueError, TypeError) as exc:
            raise CorruptDocument(f"snapshot {path}: {exc}") from exc

    def snapshot_count(self, pair_id: str) -> int:
        directory = self.pair_dir(pair_id) / "snapshots"
        return len(list(directory.glob("*.json"))) if directory.is_dir() else 0

    # -- reports -------------------------------------------------------------

    def put_report(self, pair_id: str, report: SimilarityReport) -> Path:
        path = self.pair_dir(pair_id) / "reports" / f"{_report_stamp(report.pair_time)}.json"
        with self._pair_lock(pair_id):
            atomic_write_json(path, _versioned(report.to_json()))
        return path

    def get_report(self, pair_id: str, target_time: datetime) -> SimilarityReport:
        self._require_pair(pair_id)
        path = self.pair_dir(pair_id) / "reports" / f"{_report_stamp(target_time)}.json"
        document = self._read_document(path, "report")
        try:
            return SimilarityReport.from_json(document)
        except (KeyError, ValueError, TypeError) as exc:
            raise CorruptDocument(f"report {path}: {exc}") from exc

    def list_report_times(self, pair_id: str) -> list[datetime]:
        self._require_pair(pair_id)
        directory = self.pair_dir(pair_id) / "reports"
        times = []
        if directory.is_dir():
            for path in directory.glob("*.json"):
                try:
                    times.append(parse_instant(self._read_document(path, "report")["pair_time"]))
                except (CorruptDocument, KeyError, ValueError):
                    logger.warning("skipping unreadable report %s", path)
        return sorted(times)

    # -- timelines -----------------------------------------------------------

    def put_timeline(self, pair_id: str, series: TimelineSeries) -> Path:
        path = self.pair_dir(pair_id) / "timeline.json"
        with self._pair_lock(pair_id):
            atomic_write_json(path, _versioned(series.to_json()))
        return path

    def get_timeline(self, pair_id: str) -> TimelineSeries:
        self._require_pair(pair_id)
        document = self._read_document(self.pair_dir(pair_id) / "timeline.json", "timeline")
        try:
            return TimelineSeries.from_json(document)
        except (KeyError, ValueError, TypeError) as exc:
            raise CorruptDocument(f"timeline of {pair_id}: {exc}") from exc

    # -- pair listing ----------------------------------------------------------

    def list_pairs(self) -> list[PairInfo]:
        pairs = []
        for directory in sorted(self.root.iterdir()) if self.root.is_dir() else []:
            if not directory.is_dir() or not _PAIR_ID_RE.match(directory.name):
                continue
            try:
                meta = self.get_meta(directory.name)
                langs = meta["langs"]
                pairs.append(PairInfo(
                    pair_id=meta["pair_id"],
                    canonical_id=meta["canonical_id"],
                    titles=meta["titles"],
                    langs=(langs[0], langs[1]),
                    snapshot_count=self.snapshot_count(directory.name),
                ))
            except (NotFound, CorruptDocument, KeyError, IndexError) as exc:
                logger.warning("skipping pair directory %s: %s", directory.name, exc)
        return sorted(pairs, key=lambda info: info.pair_id)

    # -- interlanguage cache -----------------------------------------------------

    def _interlanguage_path(self) -> Path:
        return self.root / "interlanguage.json"

    def put_interlanguage_links(self, group: InterlanguageGroup) -> None:
        path = self._interlanguage_path()
        table: dict[str, Any] = {}
        if path.is_file():
            table = self._read_document(path, "interlanguage table").get("groups", {})
        entry = {"titles": dict(group.titles), "canonical_id": group.canonical_id}
        for lang, title in group.titles.items():
            table[f"{lang}:{title}"] = entry
        atomic_write_json(path, _versioned({"groups": table}))

    def resolve_cached(self, lang: str, title: str,
                       fallback: Optional[Callable[[], InterlanguageGroup]] = None,
                       ) -> InterlanguageGroup:
        """Cached interlanguage lookup; ``fallback`` resolves and fills on miss."""
        path = self._interlanguage_path()
        if path.is_file():
            groups = self._read_document(path, "interlanguage table").get("groups", {})
            entry = groups.get(f"{lang}:{title}")
            if entry is not None:
                return InterlanguageGroup(titles=entry["titles"],
                                          canonical_id=entry["canonical_id"])
        if fallback is None:
            raise NotFound(f"no cached interlanguage group for {lang}:{title}")
        group = fallback()
        self.put_interlanguage_links(group)
        return group
