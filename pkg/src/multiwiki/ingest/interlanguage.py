"""Interlanguage link group resolution and entity-id canonicalization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..model import ArticleRef, LanguageEdition
from .sources import ArticleNotFound, ContentSource

# Transitive closure guard; real link groups close after one or two hops.
_MAX_CLOSURE_NODES = 16


@dataclass(frozen=True)
class InterlanguageGroup:
    titles: Mapping[str, str]
    canonical_id: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "titles", dict(self.titles))


def canonical_entity_id(titles: Mapping[str, str]) -> str:
    """English member's title when present, else smallest ``lang:title`` key."""
    if "en" in titles:
        return titles["en"]
    lang, title = min(titles.items())
    return f"{lang}:{title}"


def resolve_interlanguage(article: ArticleRef, source: ContentSource) -> InterlanguageGroup:
    """Union closure of the article's interlanguage link group."""
    titles = {article.lang.code: article.title}
    queue = [article]
    visited = {(article.lang.code, article.title)}
    expanded = 0
    while queue and expanded < _MAX_CLOSURE_NODES:
        current = queue.pop(0)
        expanded += 1
        try:
            links = source.langlinks(current)
        except ArticleNotFound:
            if current is article:
                raise
            continue
        for lang_code, title in sorted(links.items()):
            key = (lang_code, title)
            if key in visited:
                continue
            visited.add(key)
            if lang_code in titles:
                continue
            titles[lang_code] = title
            queue.append(ArticleRef(LanguageEdition(lang_code), title))
    return InterlanguageGroup(titles=titles, canonical_id=canonical_entity_id(titles))
