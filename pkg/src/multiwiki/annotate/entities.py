"""Entity annotation: explicit wiki links plus a gazetteer stub or remote tool."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Protocol
from urllib.parse import unquote

import requests

from ..model import LanguageEdition, MultiwikiError

# (lang code, lang-local title) -> canonical entity id
EntityResolver = Callable[[str, str], str]


class AnnotatorUnavailable(MultiwikiError):
    pass


class EntityAnnotatorClient(Protocol):
    kind: str

    def annotate(self, text: str, lang: LanguageEdition) -> set[str]: ...


def fallback_resolver(lang_code: str, title: str) -> str:
    """Canonicalization without an interlanguage table: en titles stand alone."""
    return title if lang_code == "en" else f"{lang_code}:{title}"


def _surface_occurs(surface: str, text_lower: str) -> bool:
    return re.search(rf"(?<![^\W_]){re.escape(surface.lower())}(?![^\W_])",
                     text_lower) is not None


@dataclass(frozen=True)
class GazetteerAnnotator:
    """Offline stub: per-language surface→title table, longest surface first."""

    gazetteer: Mapping[str, Mapping[str, str]]
    kind: str = "gazetteer-stub"

    def annotate(self, text: str, lang: LanguageEdition) -> set[str]:
        entries = self.gazetteer.get(lang.code, {})
        text_lower = text.lower()
        found: set[str] = set()
        consumed: list[tuple[int, int]] = []
        for surface in sorted(entries, key=len, reverse=True):
            pattern = rf"(?<![^\W_]){re.escape(surface.lower())}(?![^\W_])"
            for match in re.finditer(pattern, text_lower):
                span = (match.start(), match.end())
                if any(span[0] < c[1] and c[0] < span[1] for c in consumed):
                    continue
                consumed.append(span)
                found.add(entries[surface])
        return found


@dataclass(frozen=True)
class RemoteAnnotator:
    """POST {text, confidence} -> {annotations: [{surface, uri, offset}]}."""

    endpoint: str
    confidence: float = 0.5
    timeout: float = 30.0
    session: Optional[requests.Session] = None
    kind: str = "remote"

    def annotate(self, text: str, lang: LanguageEdition) -> set[str]:
        session = self.session or requests
        try:
            response = session.post(self.endpoint,
                                    json={"text": text, "confidence": self.confidence},
                                    timeout=self.timeout)
            response.raise_for_status()
            annotations = response.json()["annotations"]
        except (requests.RequestException, ValueError, KeyError) as exc:
            raise AnnotatorUnavailable(f"annotator at {self.endpoint}: {exc}") from exc
        titles = set()
        for entry in annotations:
            title = unquote(entry["uri"].rstrip("/").rsplit("/", 1)[-1])
            titles.add(title.replace("_", " "))
        return titles


def annotate_entities(sentence_text: str, lang: LanguageEdition,
                      explicit_links: Iterable[str],
                      client: EntityAnnotatorClient,
                      resolver: Optional[EntityResolver] = None) -> frozenset[str]:
    """Canonical entity ids for one sentence: matching explicit links ∪ annotations."""
    resolve = resolver or fallback_resolver
    text_lower = sentence_text.lower()
    entities = {resolve(lang.code, title) for title in explicit_links
                if _surface_occurs(title, text_lower)}
    entities.update(resolve(lang.code, title)
                    for title in client.annotate(sentence_text, lang))
    return frozenset(entities)
