import random
from datetime import timedelta

import pytest

from multiwiki.model import EditorId, FeatureScore, SimilarityReport, default_config
from multiwiki.timeline import (
    BeforeCreation,
    NoCommonLifetime,
    PlanEntry,
    ReportCountMismatch,
    SnapshotPlan,
    build_timeline,
    plan_snapshots,
    revision_at,
    select_snapshot_times,
)

from conftest import rev, utc

ALICE = EditorId.registered("alice")
BOB = EditorId.registered("bob")
CONFIG = default_config()


def history(*stamps, editor=ALICE, start_id=1):
    return [rev(start_id + i, t, editor) for i, t in enumerate(stamps)]


def day(n):
    return utc(2009, 1, 1) + timedelta(days=n)


class TestSelectTimes:
    def test_even_spread(self):
        h1 = history(day(0))
        h2 = history(day(0))
        times = select_snapshot_times(h1, h2, 4, day(300))
        assert times == [day(0), day(100), day(200), day(300)]

    def test_two_points_are_endpoints(self):
        h1, h2 = history(day(0)), history(day(10))
        times = select_snapshot_times(h1, h2, 2, day(300))
        assert times == [day(10), day(300)]

    def test_created_after_end(self):
        h1 = history(day(0))
        h2 = history(day(400))
        with pytest.raises(NoCommonLifetime):
            select_snapshot_times(h1, h2, 4, day(300))

    def test_start_is_later_creation(self):
        # Codex-shaped: article B created ~5 years after A
        h1 = history(day(0))
        h2 = history(day(1700))
        times = select_snapshot_times(h1, h2, 3, day(2000))
        assert times[0] == day(1700)

    def test_spacing_within_one_second(self):
        h1, h2 = history(day(0)), history(day(0))
        times = select_snapshot_times(h1, h2, 7, day(100))
        gaps = [(b - a).total_seconds() for a, b in zip(times, times[1:])]
        assert max(gaps) - min(gaps) <= 2.0  # 1 s rounding at each endpoint


class TestRevisionAt:
    HISTORY = history(day(10), day(20), day(30))

    def test_between_revisions(self):
        assert revision_at(self.HISTORY, day(25)).timestamp == day(20)

    def test_exact_timestamp_inclusive(self):
        assert revision_at(self.HISTORY, day(10)).timestamp == day(10)

    def test_before_creation(self):
        with pytest.raises(BeforeCreation):
            revision_at(self.HISTORY, day(5))


class TestPlanSnapshots:
    def test_collapses_static_periods(self):
        h1 = history(day(0))
        h2 = history(day(0), start_id=100)
        plan = plan_snapshots(h1, h2, CONFIG, day(300))
        assert len(plan.targets) == 1
        assert plan.targets[0].target_time == day(0)

    def test_at_most_n_entries_strictly_increasing(self):
        h1 = history(*[day(30 * i) for i in range(12)])
        h2 = history(*[day(20 * i + 5) for i in range(12)], start_id=100)
        plan = plan_snapshots(h1, h2, CONFIG, day(400))
        assert len(plan.targets) <= CONFIG.snapshot_count
        times = [e.target_time for e in plan.targets]
        assert times == sorted(set(times))

    def test_coexistence_by_construction(self):
        rng = random.Random(4)
        for _ in range(50):
            h1 = history(*sorted(day(rng.randint(0, 500)) for _ in range(rng.randint(1, 10))))
            h2 = history(*sorted(day(rng.randint(0, 500)) for _ in range(rng.randint(1, 10))),
                         start_id=100)
            try:
                plan = plan_snapshots(h1, h2, CONFIG, day(600))
            except NoCommonLifetime:
                continue
            by_id1 = {r.revision_id: r for r in h1}
            by_id2 = {r.revision_id: r for r in h2}
            for entry in plan.targets:
                assert by_id1[entry.revision_id_1].timestamp <= entry.target_time
                assert by_id2[entry.revision_id_2].timestamp <= entry.target_time

    def test_plan_round_trip(self):
        plan = SnapshotPlan((PlanEntry(day(1), 1, 100), PlanEntry(day(2), 2, 100)))
        assert SnapshotPlan.from_json(plan.to_json()) == plan


def report_at(t, sim=0.5):
    return SimilarityReport(
        pair_time=t,
        feature_scores=(FeatureScore("images", sim),),
        sim_text=sim, sim_meta=sim, sim=sim,
    )


class TestBuildTimeline:
    def test_monthly_edit_bins(self):
        h1 = history(utc(2009, 1, 3), utc(2009, 1, 10), utc(2009, 1, 20), utc(2009, 2, 1))
        h2 = history(utc(2009, 1, 5), start_id=100)
        plan = plan_snapshots(h1, h2, CONFIG, utc(2009, 3, 1))
        reports = [report_at(e.target_time) for e in plan.targets]
        series = build_timeline("pair", plan, reports, h1, h2, end_time=utc(2009, 3, 1))
        assert series.edits1 == {"2009-01": 3, "2009-02": 1}
        assert series.edits2 == {"2009-01": 1}

    def test_bin_totals_match_window(self):
        h1 = history(day(0), day(50), day(100), day(400))
        h2 = history(day(10), start_id=100)
        end = day(300)
        plan = plan_snapshots(h1, h2, CONFIG, end)
        reports = [report_at(e.target_time) for e in plan.targets]
        series = build_timeline("pair", plan, reports, h1, h2, end_time=end)
        assert sum(series.edits1.values()) == sum(1 for r in h1 if r.timestamp <= end)
        assert sum(series.edits2.values()) == 1

    def test_report_count_mismatch(self):
        h1, h2 = history(day(0)), history(day(0), start_id=100)
        plan = plan_snapshots(h1, h2, CONFIG, day(300))
        with pytest.raises(ReportCountMismatch):
            build_timeline("pair", plan, [], h1, h2)

    def test_points_one_to_one_with_plan(self):
        h1 = history(day(0), day(100), day(200))
        h2 = history(day(5), day(110), start_id=100)
        plan = plan_snapshots(h1, h2, CONFIG, day(250))
        reports = [report_at(e.target_time, sim=0.1 * i)
                   for i, e in enumerate(plan.targets)]
        series = build_timeline("pair", plan, reports, h1, h2)
        assert len(series.points) == len(plan.targets)
        assert [p.time for p in series.points] == [e.target_time for e in plan.targets]
