"""Shared domain types, configuration defaults and validation.

Every other module depends only on the types defined here. All types are
immutable value objects after construction and serialize to a canonical JSON
form (sorted keys, RFC 3339 UTC timestamps, shortest round-trip floats) that
doubles as the storage format and the HTTP API wire format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from typing import Any, Iterable, Mapping, Optional, Sequence

SCHEMA_VERSION = 1

TEXT_FEATURES = ("text_length", "text_overlap", "passage_coverage")
META_FEATURES = ("images", "annotations", "ext_links", "ext_hosts",
                 "editors", "editor_locations")
SENTENCE_FEATURES = ("cosine", "entities", "time")
ALL_FEATURES = TEXT_FEATURES + META_FEATURES

WEIGHT_SUM_TOLERANCE = 1e-12


class MultiwikiError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------------------
# canonical JSON + timestamp helpers

def canonical_dumps(payload: Any) -> str:
    """Serialize ``payload`` to the canonical JSON text form (byte-stable)."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def format_instant(dt: datetime) -> str:
    """RFC 3339 UTC string at second precision, e.g. ``2008-09-14T10:00:00Z``."""
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).replace(microsecond=0).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_instant(value: str) -> datetime:
    """Parse an RFC 3339 UTC instant; accepts a trailing Z or numeric offset."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).replace(microsecond=0)


def month_key(dt: datetime) -> str:
    """Calendar-month bin label (UTC), e.g. ``2009-01``."""
    dt = dt.astimezone(timezone.utc)
    return f"{dt.year:04d}-{dt.month:02d}"


def _sorted_str_set(values: Iterable[str]) -> frozenset[str]:
    return frozenset(str(v) for v in values)


def _counts(mapping: Mapping[str, int]) -> dict[str, int]:
    out = {}
    for key, count in mapping.items():
        count = int(count)
        if count < 0:
            raise ValueError(f"negative multiset count for {key!r}")
        if count:
            out[str(key)] = count
    return out


# ---------------------------------------------------------------------------
# articles, revisions, editors

@dataclass(frozen=True)
class LanguageEdition:
    """A Wikipedia language edition, identified by its lowercase code."""

    code: str

    def __post_init__(self) -> None:
        if not (2 <= len(self.code) <= 3) or not self.code.isascii() \
                or not self.code.isalpha() or self.code != self.code.lower():
            raise ValueError(f"invalid language code: {self.code!r}")

    def __str__(self) -> str:
        return self.code

    def to_json(self) -> str:
        return self.code

    @classmethod
    def from_json(cls, data: str) -> "LanguageEdition":
        return cls(str(data))


@dataclass(frozen=True)
class ArticleRef:
    lang: LanguageEdition
    title: str

    def __post_init__(self) -> None:
        if not self.title or self.title != self.title.strip():
            raise ValueError(f"invalid article title: {self.title!r}")

    def to_json(self) -> dict[str, Any]:
        return {"lang": self.lang.to_json(), "title": self.title}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "ArticleRef":
        return cls(lang=LanguageEdition.from_json(data["lang"]), title=data["title"])


@dataclass(frozen=True)
class EditorId:
    """Registered editors carry a username, anonymous ones an IP address."""

    kind: str
    name: Optional[str] = None
    ip: Optional[str] = None

    REGISTERED = "registered"
    ANONYMOUS = "anonymous"

    def __post_init__(self) -> None:
        if self.kind == self.REGISTERED:
            if not self.name or self.ip is not None:
                raise ValueError("registered editor requires name and no ip")
        elif self.kind == self.ANONYMOUS:
            if not self.ip or self.name is not None:
                raise ValueError("anonymous editor requires ip and no name")
        else:
            raise ValueError(f"unknown editor kind: {self.kind!r}")

    @classmethod
    def registered(cls, name: str) -> "EditorId":
        return cls(kind=cls.REGISTERED, name=name)

    @classmethod
    def anonymous(cls, ip: str) -> "EditorId":
        return cls(kind=cls.ANONYMOUS, ip=ip)

    def sort_key(self) -> tuple[str, str]:
        return (self.kind, self.name if self.name is not None else self.ip or "")

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"kind": self.kind}
        if self.name is not None:
            doc["name"] = self.name
        if self.ip is not None:
            doc["ip"] = self.ip
        return doc

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "EditorId":
        return cls(kind=data["kind"], name=data.get("name"), ip=data.get("ip"))


@dataclass(frozen=True)
class Editor:
    id: EditorId
    edit_count: int
    loc: Optional[str] = None

    def __post_init__(self) -> None:
        if self.edit_count < 1:
            raise ValueError("edit_count must be >= 1")
        if self.loc is not None:
            if self.id.kind != EditorId.ANONYMOUS:
                raise ValueError("loc is only valid for anonymous editors")
            if len(self.loc) != 2 or not self.loc.isascii() or not self.loc.isupper():
                raise ValueError(f"loc must be an ISO 3166-1 alpha-2 code: {self.loc!r}")

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"id": self.id.to_json(), "edit_count": self.edit_count}
        if self.loc is not None:
            doc["loc"] = self.loc
        return doc

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Editor":
        return cls(id=EditorId.from_json(data["id"]),
                   edit_count=int(data["edit_count"]), loc=data.get("loc"))


@dataclass(frozen=True)
class EditorSet:
    """Editors of one article, keyed by EditorId (no duplicates)."""

    editors: tuple[Editor, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.editors, key=lambda e: e.id.sort_key()))
        ids = [e.id for e in ordered]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate EditorId in EditorSet")
        object.__setattr__(self, "editors", ordered)

    def __len__(self) -> int:
        return len(self.editors)

    def __iter__(self):
        return iter(self.editors)

    def ids(self) -> frozenset[EditorId]:
        return frozenset(e.id for e in self.editors)

    def get(self, editor_id: EditorId) -> Optional[Editor]:
        for editor in self.editors:
            if editor.id == editor_id:
                return editor
        return None

    def located(self) -> tuple[Editor, ...]:
        return tuple(e for e in self.editors if e.loc is not None)

    def to_json(self) -> dict[str, Any]:
        return {"editors": [e.to_json() for e in self.editors]}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "EditorSet":
        return cls(editors=tuple(Editor.from_json(e) for e in data["editors"]))


@dataclass(frozen=True)
class RevisionMeta:
    revision_id: int
    timestamp: datetime
    editor: EditorId
    size_bytes: int

    def __post_init__(self) -> None:
        if self.revision_id < 0 or self.size_bytes < 0:
            raise ValueError("revision_id and size_bytes must be unsigned")
        object.__setattr__(self, "timestamp", parse_instant(format_instant(self.timestamp)))

    def to_json(self) -> dict[str, Any]:
        return {
            "revision_id": self.revision_id,
            "timestamp": format_instant(self.timestamp),
            "editor": self.editor.to_json(),
            "size_bytes": self.size_bytes,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "RevisionMeta":
        return cls(
            revision_id=int(data["revision_id"]),
            timestamp=parse_instant(data["timestamp"]),
            editor=EditorId.from_json(data["editor"]),
            size_bytes=int(data["size_bytes"]),
        )


# ---------------------------------------------------------------------------
# sentences and snapshots

@dataclass(frozen=True)
class TimeExpression:
    start_day: date
    end_day: date
    surface: str

    def __post_init__(self) -> None:
        if self.start_day > self.end_day:
            raise ValueError("start_day must be <= end_day")

    def days(self) -> frozenset[int]:
        """Day-granularity expansion as a set of proleptic ordinals."""
        return frozenset(range(self.start_day.toordinal(), self.end_day.toordinal() + 1))

    def to_json(self) -> dict[str, Any]:
        return {
            "start_day": self.start_day.isoformat(),
            "end_day": self.end_day.isoformat(),
            "surface": self.surface,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "TimeExpression":
        return cls(
            start_day=date.fromisoformat(data["start_day"]),
            end_day=date.fromisoformat(data["end_day"]),
            surface=data["surface"],
        )


@dataclass(frozen=True)
class SentenceRecord:
    index: int
    text: str
    char_len: int
    english_tokens: Mapping[str, int] = field(default_factory=dict)
    entities: frozenset[str] = frozenset()
    times: tuple[TimeExpression, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "english_tokens", _counts(self.english_tokens))
        object.__setattr__(self, "entities", _sorted_str_set(self.entities))
        object.__setattr__(self, "times", tuple(self.times))

    @classmethod
    def plain(cls, index: int, text: str) -> "SentenceRecord":
        """Text-only record as produced by sentence splitting."""
        return cls(index=index, text=text, char_len=len(text))

    def token_set(self) -> frozenset[str]:
        return frozenset(self.english_tokens)

    def day_set(self) -> frozenset[int]:
        out: set[int] = set()
        for expr in self.times:
            out |= expr.days()
        return frozenset(out)

    def to_json(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "text": self.text,
            "char_len": self.char_len,
            "english_tokens": dict(self.english_tokens),
            "entities": sorted(self.entities),
            "times": [t.to_json() for t in self.times],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SentenceRecord":
        return cls(
            index=int(data["index"]),
            text=data["text"],
            char_len=int(data["char_len"]),
            english_tokens=data.get("english_tokens", {}),
            entities=frozenset(data.get("entities", ())),
            times=tuple(TimeExpression.from_json(t) for t in data.get("times", ())),
        )


@dataclass(frozen=True)
class Snapshot:
    """One article's full state at a revision."""

    article: ArticleRef
    revision_id: int
    timestamp: datetime
    text: str
    sentences: tuple[SentenceRecord, ...] = ()
    images: frozenset[str] = frozenset()
    wiki_annotations: frozenset[str] = frozenset()
    ext_links: frozenset[str] = frozenset()
    ext_hosts: Mapping[str, int] = field(default_factory=dict)
    editors: EditorSet = EditorSet()

    def __post_init__(self) -> None:
        object.__setattr__(self, "timestamp", parse_instant(format_instant(self.timestamp)))
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "images", _sorted_str_set(self.images))
        object.__setattr__(self, "wiki_annotations", _sorted_str_set(self.wiki_annotations))
        object.__setattr__(self, "ext_links", _sorted_str_set(self.ext_links))
        object.__setattr__(self, "ext_hosts", _counts(self.ext_hosts))

    @property
    def char_count(self) -> int:
        return len(self.text)

    def to_json(self) -> dict[str, Any]:
        return {
            "article": self.article.to_json(),
            "revision_id": self.revision_id,
            "timestamp": format_instant(self.timestamp),
            "text": self.text,
            "sentences": [s.to_json() for s in self.sentences],
            "images": sorted(self.images),
            "wiki_annotations": sorted(self.wiki_annotations),
            "ext_links": sorted(self.ext_links),
            "ext_hosts": dict(self.ext_hosts),
            "editors": self.editors.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Snapshot":
        return cls(
            article=ArticleRef.from_json(data["article"]),
            revision_id=int(data["revision_id"]),
            timestamp=parse_instant(data["timestamp"]),
            text=data["text"],
            sentences=tuple(SentenceRecord.from_json(s) for s in data.get("sentences", ())),
            images=frozenset(data.get("images", ())),
            wiki_annotations=frozenset(data.get("wiki_annotations", ())),
            ext_links=frozenset(data.get("ext_links", ())),
            ext_hosts=data.get("ext_hosts", {}),
            editors=EditorSet.from_json(data.get("editors", {"editors": []})),
        )


def validate_snapshot(snapshot: Snapshot) -> list[str]:
    """Check cross-field Snapshot invariants; returns violated invariant names."""
    violations = []
    indices = [s.index for s in snapshot.sentences]
    if indices != list(range(len(indices))):
        violations.append("sentence_index_contiguity")
    if any(s.char_len != len(s.text) for s in snapshot.sentences):
        violations.append("sentence_char_len")
    if sum(s.char_len for s in snapshot.sentences) > len(snapshot.text):
        violations.append("sentence_total_char_len")
    return violations


# ---------------------------------------------------------------------------
# configuration

@dataclass(frozen=True)
class SimilarityConfig:
    text_weights: Mapping[str, float]
    meta_weights: Mapping[str, float]
    alpha: float
    sentence_threshold: float
    merge_gap: int
    snapshot_count: int
    sentence_feature_weights: Mapping[str, float]

    def __post_init__(self) -> None:
        for name, mapping, expected in (
            ("text_weights", self.text_weights, TEXT_FEATURES),
            ("meta_weights", self.meta_weights, META_FEATURES),
            ("sentence_feature_weights", self.sentence_feature_weights, SENTENCE_FEATURES),
        ):
            if set(mapping) != set(expected):
                raise ValueError(f"{name} must have exactly the keys {expected}")
            object.__setattr__(self, name, {k: float(mapping[k]) for k in expected})

    def to_json(self) -> dict[str, Any]:
        return {
            "text_weights": dict(self.text_weights),
            "meta_weights": dict(self.meta_weights),
            "alpha": self.alpha,
            "sentence_threshold": self.sentence_threshold,
            "merge_gap": self.merge_gap,
            "snapshot_count": self.snapshot_count,
            "sentence_feature_weights": dict(self.sentence_feature_weights),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SimilarityConfig":
        base = default_config()
        return cls(
            text_weights=data.get("text_weights", base.text_weights),
            meta_weights=data.get("meta_weights", base.meta_weights),
            alpha=float(data.get("alpha", base.alpha)),
            sentence_threshold=float(data.get("sentence_threshold", base.sentence_threshold)),
            merge_gap=int(data.get("merge_gap", base.merge_gap)),
            snapshot_count=int(data.get("snapshot_count", base.snapshot_count)),
            sentence_feature_weights=data.get("sentence_feature_weights",
                                              base.sentence_feature_weights),
        )


def default_config() -> SimilarityConfig:
    """Shipped defaults: equal text weights, meta weights 1/4,1/4 and 1/8s, alpha 0.5."""
    return SimilarityConfig(
        text_weights={"text_length": 1 / 3, "text_overlap": 1 / 3, "passage_coverage": 1 / 3},
        meta_weights={
            "images": 1 / 4,
            "annotations": 1 / 4,
            "ext_links": 1 / 8,
            "ext_hosts": 1 / 8,
            "editors": 1 / 8,
            "editor_locations": 1 / 8,
        },
        alpha=0.5,
        sentence_threshold=0.4,
        merge_gap=2,
        snapshot_count=8,
        sentence_feature_weights={"cosine": 1 / 3, "entities": 1 / 3, "time": 1 / 3},
    )


@dataclass(frozen=True)
class WeightSumViolation:
    group: str
    total: float

    def __str__(self) -> str:
        return f"{self.group} weights sum to {self.total!r}, expected 1"


@dataclass(frozen=True)
class RangeViolation:
    field: str

    def __str__(self) -> str:
        return f"{self.field} out of range"


class ConfigViolationError(MultiwikiError):
    """Raised by validate_config; carries the full list of violations."""

    def __init__(self, violations: Sequence[Any]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def validate_config(config: SimilarityConfig) -> SimilarityConfig:
    """Return ``config`` unchanged iff all weight sums and scalar ranges hold."""
    violations: list[Any] = []
    for group, mapping in (("text", config.text_weights),
                           ("meta", config.meta_weights),
                           ("sentence", config.sentence_feature_weights)):
        total = sum(mapping.values())
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            violations.append(WeightSumViolation(group, total))
        for feature, weight in mapping.items():
            if not 0.0 <= weight <= 1.0:
                violations.append(RangeViolation(f"{group}_weights.{feature}"))
    if not 0.0 <= config.alpha <= 1.0:
        violations.append(RangeViolation("alpha"))
    if not 0.0 <= config.sentence_threshold <= 1.0:
        violations.append(RangeViolation("sentence_threshold"))
    if config.merge_gap < 0:
        violations.append(RangeViolation("merge_gap"))
    if config.snapshot_count < 2:
        violations.append(RangeViolation("snapshot_count"))
    if violations:
        raise ConfigViolationError(violations)
    return config


# ---------------------------------------------------------------------------
# scores, passages, reports, timelines

@dataclass(frozen=True)
class FeatureScore:
    feature: str
    value: float
    defined: bool = True

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"feature score out of [0,1]: {self.feature}={self.value!r}")

    def to_json(self) -> dict[str, Any]:
        return {"feature": self.feature, "value": self.value, "defined": self.defined}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FeatureScore":
        return cls(feature=data["feature"], value=float(data["value"]),
                   defined=bool(data["defined"]))


@dataclass(frozen=True)
class SentenceRange:
    """Inclusive, contiguous sentence index interval."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid sentence range [{self.start}, {self.end}]")

    def __len__(self) -> int:
        return self.end - self.start + 1

    def indices(self) -> range:
        return range(self.start, self.end + 1)

    def to_json(self) -> dict[str, Any]:
        return {"start": self.start, "end": self.end}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SentenceRange":
        return cls(start=int(data["start"]), end=int(data["end"]))


@dataclass(frozen=True)
class PassagePair:
    range1: SentenceRange
    range2: SentenceRange
    score: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError("passage score out of [0,1]")

    def to_json(self) -> dict[str, Any]:
        return {"range1": self.range1.to_json(), "range2": self.range2.to_json(),
                "score": self.score}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PassagePair":
        return cls(range1=SentenceRange.from_json(data["range1"]),
                   range2=SentenceRange.from_json(data["range2"]),
                   score=float(data["score"]))


@dataclass(frozen=True)
class HostRankEntry:
    """One row of the host ranking; two-sided rows carry the min count."""

    host: str
    count: int
    two_sided: bool

    def to_json(self) -> dict[str, Any]:
        return {"host": self.host, "count": self.count, "two_sided": self.two_sided}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "HostRankEntry":
        return cls(host=data["host"], count=int(data["count"]),
                   two_sided=bool(data["two_sided"]))


@dataclass(frozen=True)
class SimilarityReport:
    pair_time: datetime
    feature_scores: tuple[FeatureScore, ...]
    sim_text: float
    sim_meta: float
    sim: float
    passage_pairs: tuple[PassagePair, ...] = ()
    host_ranking: tuple[HostRankEntry, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pair_time", parse_instant(format_instant(self.pair_time)))
        object.__setattr__(self, "feature_scores", tuple(self.feature_scores))
        object.__setattr__(self, "passage_pairs", tuple(self.passage_pairs))
        object.__setattr__(self, "host_ranking", tuple(self.host_ranking))

    def score_of(self, feature: str) -> FeatureScore:
        for score in self.feature_scores:
            if score.feature == feature:
                return score
        raise KeyError(feature)

    def to_json(self) -> dict[str, Any]:
        return {
            "pair_time": format_instant(self.pair_time),
            "feature_scores": [s.to_json() for s in self.feature_scores],
            "sim_text": self.sim_text,
            "sim_meta": self.sim_meta,
            "sim": self.sim,
            "passage_pairs": [p.to_json() for p in self.passage_pairs],
            "host_ranking": [h.to_json() for h in self.host_ranking],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SimilarityReport":
        return cls(
            pair_time=parse_instant(data["pair_time"]),
            feature_scores=tuple(FeatureScore.from_json(s) for s in data["feature_scores"]),
            sim_text=float(data["sim_text"]),
            sim_meta=float(data["sim_meta"]),
            sim=float(data["sim"]),
            passage_pairs=tuple(PassagePair.from_json(p) for p in data.get("passage_pairs", ())),
            host_ranking=tuple(HostRankEntry.from_json(h) for h in data.get("host_ranking", ())),
        )


@dataclass(frozen=True)
class TimelinePoint:
    """Summary of one snapshot-pair report on the timeline."""

    time: datetime
    sim: float
    sim_text: float
    sim_meta: float
    feature_scores: tuple[FeatureScore, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "time", parse_instant(format_instant(self.time)))
        object.__setattr__(self, "feature_scores", tuple(self.feature_scores))

    def to_json(self) -> dict[str, Any]:
        return {
            "time": format_instant(self.time),
            "sim": self.sim,
            "sim_text": self.sim_text,
            "sim_meta": self.sim_meta,
            "feature_scores": [s.to_json() for s in self.feature_scores],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "TimelinePoint":
        return cls(
            time=parse_instant(data["time"]),
            sim=float(data["sim"]),
            sim_text=float(data["sim_text"]),
            sim_meta=float(data["sim_meta"]),
            feature_scores=tuple(FeatureScore.from_json(s)
                                 for s in data.get("feature_scores", ())),
        )


@dataclass(frozen=True)
class TimelineSeries:
    pair_id: str
    points: tuple[TimelinePoint, ...]
    edits1: Mapping[str, int] = field(default_factory=dict)
    edits2: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        times = [p.time for p in self.points]
        if any(a >= b for a, b in zip(times, times[1:])):
            raise ValueError("timeline points must be strictly increasing in time")
        object.__setattr__(self, "edits1", _counts(self.edits1))
        object.__setattr__(self, "edits2", _counts(self.edits2))

    def to_json(self) -> dict[str, Any]:
        return {
            "pair_id": self.pair_id,
            "points": [p.to_json() for p in self.points],
            "edits1": dict(self.edits1),
            "edits2": dict(self.edits2),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "TimelineSeries":
        return cls(
            pair_id=data["pair_id"],
            points=tuple(TimelinePoint.from_json(p) for p in data["points"]),
            edits1=data.get("edits1", {}),
            edits2=data.get("edits2", {}),
        )
