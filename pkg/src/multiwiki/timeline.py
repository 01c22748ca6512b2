"""Co-existing snapshot pair selection and timeline series assembly.

Target times are spread evenly between the later article's creation and the
analysis end time; each target maps to the revision of each article that was
live at that instant, so both snapshots of a pair were online simultaneously.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Any, Mapping, Optional, Sequence

from .model import (
    MultiwikiError,
    RevisionMeta,
    SimilarityConfig,
    SimilarityReport,
    TimelinePoint,
    TimelineSeries,
    format_instant,
    month_key,
    parse_instant,
)


class NoCommonLifetime(MultiwikiError):
    pass


class BeforeCreation(MultiwikiError):
    pass


class ReportCountMismatch(MultiwikiError):
    pass


@dataclass(frozen=True)
class PlanEntry:
    target_time: datetime
    revision_id_1: int
    revision_id_2: int

    def to_json(self) -> dict[str, Any]:
        return {
            "target_time": format_instant(self.target_time),
            "revision_id_1": self.revision_id_1,
            "revision_id_2": self.revision_id_2,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PlanEntry":
        return cls(target_time=parse_instant(data["target_time"]),
                   revision_id_1=int(data["revision_id_1"]),
                   revision_id_2=int(data["revision_id_2"]))


@dataclass(frozen=True)
class SnapshotPlan:
    targets: tuple[PlanEntry, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        times = [entry.target_time for entry in self.targets]
        if any(a >= b for a, b in zip(times, times[1:])):
            raise ValueError("plan target times must be strictly increasing")

    def to_json(self) -> list[dict[str, Any]]:
        return [entry.to_json() for entry in self.targets]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, Any]]) -> "SnapshotPlan":
        return cls(targets=tuple(PlanEntry.from_json(entry) for entry in data))


def select_snapshot_times(h1: Sequence[RevisionMeta], h2: Sequence[RevisionMeta],
                          n: int, end_time: datetime) -> list[datetime]:
    """N target times evenly spread over the common lifetime (second-rounded)."""
    if not h1 or not h2:
        raise NoCommonLifetime("a history is empty")
    start = max(h1[0].timestamp, h2[0].timestamp)
    if start > end_time:
        raise NoCommonLifetime(
            f"common lifetime starts {format_instant(start)}, "
            f"after end time {format_instant(end_time)}")
    span = (end_time - start).total_seconds()
    times = []
    for i in range(n):
        offset = round(i * span / (n - 1)) if n > 1 else 0
        t = start + timedelta(seconds=offset)
        if not times or t > times[-1]:
            times.append(t)
    return times


def revision_at(history: Sequence[RevisionMeta], t: datetime) -> RevisionMeta:
    """The revision live at ``t``: greatest timestamp ≤ t."""
    stamps = [rev.timestamp for rev in history]
    index = bisect_right(stamps, t)
    if index == 0:
        raise BeforeCreation(f"{format_instant(t)} precedes the first revision")
    return history[index - 1]


def plan_snapshots(h1: Sequence[RevisionMeta], h2: Sequence[RevisionMeta],
                   config: SimilarityConfig, end_time: datetime) -> SnapshotPlan:
    """Map each target time to the live revision pair, collapsing repeats."""
    times = select_snapshot_times(h1, h2, config.snapshot_count, end_time)
    entries: list[PlanEntry] = []
    for t in times:
        entry = PlanEntry(target_time=t,
                          revision_id_1=revision_at(h1, t).revision_id,
                          revision_id_2=revision_at(h2, t).revision_id)
        if entries and (entries[-1].revision_id_1, entries[-1].revision_id_2) == \
                (entry.revision_id_1, entry.revision_id_2):
            continue
        entries.append(entry)
    return SnapshotPlan(targets=tuple(entries))


def _month_bins(history: Sequence[RevisionMeta], end_time: datetime) -> dict[str, int]:
    bins: Counter[str] = Counter()
    for revision in history:
        if revision.timestamp <= end_time:
            bins[month_key(revision.timestamp)] += 1
    return dict(bins)


def build_timeline(pair_id: str, plan: SnapshotPlan,
                   reports: Sequence[SimilarityReport],
                   h1: Sequence[RevisionMeta], h2: Sequence[RevisionMeta],
                   end_time: Optional[datetime] = None) -> TimelineSeries:
    """One point per plan entry plus per-month edit counts for both articles."""
    if len(reports) != len(plan.targets):
        raise ReportCountMismatch(
            f"{len(reports)} reports for {len(plan.targets)} plan entries")
    points = []
    for entry, report in zip(plan.targets, reports):
        points.append(TimelinePoint(
            time=entry.target_time,
            sim=report.sim,
            sim_text=report.sim_text,
            sim_meta=report.sim_meta,
            feature_scores=report.feature_scores,
        ))
    if end_time is None:
        end_time = plan.targets[-1].target_time if plan.targets else datetime.min
    return TimelineSeries(
        pair_id=pair_id,
        points=tuple(points),
        edits1=_month_bins(h1, end_time),
        edits2=_month_bins(h2, end_time),
    )
