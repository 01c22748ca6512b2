"""Acquisition of revision histories, wikitext and interlanguage links."""

from .interlanguage import InterlanguageGroup, canonical_entity_id, resolve_interlanguage
from .sources import (
    ArticleNotFound,
    CachingSource,
    ContentSource,
    FixtureSource,
    LiveSource,
    RevisionNotFound,
    SourceError,
    SourceUnavailable,
    collect_editors,
    fetch_revisions,
    fetch_wikitext,
)
from .wikitext import DEFAULT_PREFIXES, ExtractedDoc, PrefixTable, extract_document, normalize_url

__all__ = [
    "ArticleNotFound",
    "CachingSource",
    "ContentSource",
    "DEFAULT_PREFIXES",
    "ExtractedDoc",
    "FixtureSource",
    "InterlanguageGroup",
    "LiveSource",
    "PrefixTable",
    "RevisionNotFound",
    "SourceError",
    "SourceUnavailable",
    "canonical_entity_id",
    "collect_editors",
    "extract_document",
    "fetch_revisions",
    "fetch_wikitext",
    "normalize_url",
    "resolve_interlanguage",
]
