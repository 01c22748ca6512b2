"""End-to-end drivers: ingest a pair into the store, analyze it offline."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Optional, Sequence

from ..align import align_passages
from ..annotate import AnnotationClients, build_snapshot, fallback_resolver
from ..ingest import (
    ArticleNotFound,
    CachingSource,
    ContentSource,
    SourceUnavailable,
    fetch_revisions,
    resolve_interlanguage,
)
from ..model import (
    ArticleRef,
    LanguageEdition,
    RevisionMeta,
    SimilarityConfig,
    SimilarityReport,
    Snapshot,
    TimelineSeries,
    parse_instant,
)
from ..similarity import aggregate_similarity, feature_scores, rank_hosts
from ..store import NotFound, Store, pair_id_for
from ..timeline import plan_snapshots
from ..timeline import build_timeline as assemble_timeline

logger = logging.getLogger("multiwiki.app")


class OfflineSource:
    """Source that refuses all fetches; backs cache-only replay."""

    kind = "offline"

    def _refuse(self, *args):
        raise SourceUnavailable("offline analysis requires a populated cache")

    revisions = _refuse
    wikitext = _refuse
    langlinks = _refuse


def compare_snapshots(a1: Snapshot, a2: Snapshot, config: SimilarityConfig,
                      pair_time: datetime) -> SimilarityReport:
    """Full report for one snapshot pair: passages, nine features, aggregates."""
    pairs = align_passages(a1.sentences, a2.sentences, config)
    scores = feature_scores(a1, a2, pairs)
    aggregate = aggregate_similarity(scores, config)
    return SimilarityReport(
        pair_time=pair_time,
        feature_scores=scores,
        sim_text=aggregate.sim_text,
        sim_meta=aggregate.sim_meta,
        sim=aggregate.sim,
        passage_pairs=tuple(pairs),
        host_ranking=rank_hosts(a1, a2),
    )


def _revision_by_id(history: Sequence[RevisionMeta], revision_id: int) -> RevisionMeta:
    for revision in history:
        if revision.revision_id == revision_id:
            return revision
    raise NotFound(f"revision {revision_id} missing from cached history")


def _store_backed_resolver(store: Store, source: ContentSource):
    def resolve(lang_code: str, title: str) -> str:
        def fallback():
            return resolve_interlanguage(
                ArticleRef(LanguageEdition(lang_code), title), source)

        try:
            return store.resolve_cached(lang_code, title, fallback).canonical_id
        except (ArticleNotFound, SourceUnavailable, NotFound):
            return fallback_resolver(lang_code, title)

    return resolve


def default_end_time(source: ContentSource,
                     histories: Sequence[Sequence[RevisionMeta]]) -> datetime:
    """Live sources analyze up to now; fixtures up to their latest revision."""
    if source.kind == "live":
        return datetime.now(tz=timezone.utc).replace(microsecond=0)
    return max(history[-1].timestamp for history in histories if history)


def ingest_pair(store: Store, source: ContentSource,
                article1: ArticleRef, article2: ArticleRef,
                config: SimilarityConfig, clients: AnnotationClients,
                end_time: Optional[datetime] = None) -> str:
    """Plan and build all snapshot pairs; returns the pair id."""
    group = store.resolve_cached(
        article1.lang.code, article1.title,
        fallback=lambda: resolve_interlanguage(article1, source))
    pair_id = pair_id_for(group.canonical_id, article1.lang.code, article2.lang.code)
    logger.info("ingesting %s", pair_id)

    cached = CachingSource(source, store.cache_dir(pair_id))
    h1 = fetch_revisions(article1, cached)
    h2 = fetch_revisions(article2, cached)
    if end_time is None:
        end_time = default_end_time(source, (h1, h2))
    plan = plan_snapshots(h1, h2, config, end_time)
    store.put_meta(pair_id, group.canonical_id, (article1, article2), plan, end_time)

    resolver = _store_backed_resolver(store, cached)
    built: set[tuple[str, int]] = set()
    for entry in plan.targets:
        for article, history, revision_id in (
            (article1, h1, entry.revision_id_1),
            (article2, h2, entry.revision_id_2),
        ):
            key = (article.lang.code, revision_id)
            if key in built:
                continue
            built.add(key)
            revision = _revision_by_id(history, revision_id)
            snapshot = build_snapshot(article, revision, cached, clients, resolver)
            store.put_snapshot(pair_id, snapshot)
    logger.info("ingested %s: %d plan entries, %d snapshots",
                pair_id, len(plan.targets), len(built))
    return pair_id


def analyze_pair(store: Store, pair_id: str, config: SimilarityConfig) -> TimelineSeries:
    """Compute one report per plan entry plus the timeline, all from the store."""
    meta = store.get_meta(pair_id)
    plan = store.get_plan(pair_id)
    articles = [ArticleRef(LanguageEdition(a["lang"]), a["title"])
                for a in meta["articles"]]
    cache = CachingSource(OfflineSource(), store.cache_dir(pair_id))
    h1 = fetch_revisions(articles[0], cache)
    h2 = fetch_revisions(articles[1], cache)

    reports = []
    for entry in plan.targets:
        a1 = store.get_snapshot(pair_id, articles[0].lang.code, entry.revision_id_1)
        a2 = store.get_snapshot(pair_id, articles[1].lang.code, entry.revision_id_2)
        report = compare_snapshots(a1, a2, config, entry.target_time)
        store.put_report(pair_id, report)
        reports.append(report)

    series = assemble_timeline(pair_id, plan, reports, h1, h2,
                               end_time=parse_instant(meta["end_time"]))
    store.put_timeline(pair_id, series)
    logger.info("analyzed %s: %d reports", pair_id, len(reports))
    return series
