"""Per-snapshot annotation pipeline: fetch → editors → split → features."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

from ..ingest.sources import ContentSource, collect_editors, fetch_revisions, fetch_wikitext
from ..ingest.wikitext import DEFAULT_PREFIXES, PrefixTable, extract_document
from ..model import ArticleRef, RevisionMeta, SentenceRecord, Snapshot, validate_snapshot
from .entities import EntityAnnotatorClient, EntityResolver, annotate_entities, fallback_resolver
from .geo import GeoClient, geolocate_editors
from .sentences import split_sentences
from .tables import StubTables
from .temporal import extract_temporal
from .translate import TranslatorClient, translate_tokens

logger = logging.getLogger("multiwiki.annotate")


@dataclass(frozen=True)
class AnnotationClients:
    translator: TranslatorClient
    annotator: EntityAnnotatorClient
    geo: GeoClient
    tables: Optional[StubTables] = None


@contextmanager
def _stage(name: str, article: ArticleRef, revision_id: int):
    logger.info("pipeline stage %s (%s:%s rev %s)",
                name, article.lang, article.title, revision_id)
    try:
        yield
    except Exception as exc:
        if not hasattr(exc, "stage"):
            exc.stage = name
        raise


def build_snapshot(article: ArticleRef, revision: RevisionMeta, source: ContentSource,
                   clients: AnnotationClients,
                   resolver: Optional[EntityResolver] = None,
                   prefixes: PrefixTable = DEFAULT_PREFIXES) -> Snapshot:
    """Compose the full annotation pipeline into a validated Snapshot."""
    tables = clients.tables
    with _stage("fetch", article, revision.revision_id):
        wikitext = fetch_wikitext(article, revision.revision_id, source)
        doc = extract_document(wikitext, prefixes)

    with _stage("editors", article, revision.revision_id):
        history = fetch_revisions(article, source)
        editors = collect_editors(history, revision.timestamp)
        editors = geolocate_editors(editors, clients.geo)

    with _stage("split", article, revision.revision_id):
        plain_records = split_sentences(
            doc.plain_text, article.lang,
            abbreviations=tables.abbreviations if tables else None)

    with _stage("features", article, revision.revision_id):
        sentences = []
        for record in plain_records:
            tokens = translate_tokens(record.text, article.lang, clients.translator)
            entities = annotate_entities(record.text, article.lang, doc.wiki_links,
                                         clients.annotator, resolver)
            times = extract_temporal(record.text, article.lang,
                                     patterns=tables.temporal_patterns if tables else None)
            sentences.append(SentenceRecord(
                index=record.index, text=record.text, char_len=record.char_len,
                english_tokens=tokens, entities=entities, times=tuple(times)))

        resolve = resolver or fallback_resolver
        annotations = {resolve(article.lang.code, title) for title in doc.wiki_links}
        for record in sentences:
            annotations.update(record.entities)

        snapshot = Snapshot(
            article=article,
            revision_id=revision.revision_id,
            timestamp=revision.timestamp,
            text=doc.plain_text,
            sentences=tuple(sentences),
            images=doc.images,
            wiki_annotations=frozenset(annotations),
            ext_links=doc.ext_links,
            ext_hosts=doc.ext_hosts,
            editors=editors,
        )
        violations = validate_snapshot(snapshot)
        if violations:
            raise AssertionError(f"pipeline produced invalid snapshot: {violations}")
    return snapshot
