"""Rule-based sentence splitting with per-language abbreviation suppression.

The splitter only ever removes whitespace: concatenating the emitted sentence
texts and stripping whitespace reproduces the non-whitespace input exactly.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Optional

from ..model import LanguageEdition, SentenceRecord
from .tables import load_stub_tables

_BOUNDARY_RE = re.compile(r"[.!?…]+[\"'”’)\]]*\s+")
_PARAGRAPH_RE = re.compile(r"\n\s*\n")
_LAST_WORD_RE = re.compile(r"(\S+)$")

_DEFAULT_ABBREVIATIONS: Mapping[str, list[str]] | None = None


def _default_abbreviations() -> Mapping[str, list[str]]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_stub_tables().abbreviations
    return _DEFAULT_ABBREVIATIONS


def _suppress(paragraph: str, match: re.Match, abbreviations: frozenset[str]) -> bool:
    terminator = paragraph[match.start():match.end()].lstrip()
    if not terminator.startswith("."):
        return False
    word = _LAST_WORD_RE.search(paragraph[:match.start()])
    token = word.group(1).strip("(\"'“‘[").lower() if word else ""
    if token in abbreviations:
        return True
    # short numeric ordinals ("am 3. Oktober", list numbering) never end a sentence
    if token.isdigit() and len(token) <= 2:
        return True
    rest = paragraph[match.end():]
    return bool(rest) and rest[0].islower()


def _split_paragraph(paragraph: str, abbreviations: frozenset[str]) -> Iterable[str]:
    start = 0
    for match in _BOUNDARY_RE.finditer(paragraph):
        if match.start() < start:
            continue
        if _suppress(paragraph, match, abbreviations):
            continue
        segment = paragraph[start:match.end()].strip()
        if segment:
            yield segment
        start = match.end()
    tail = paragraph[start:].strip()
    if tail:
        yield tail


def split_sentences(text: str, lang: LanguageEdition,
                    abbreviations: Optional[Mapping[str, list[str]]] = None) -> list[SentenceRecord]:
    """Split ``text`` into text-only SentenceRecords with contiguous indices."""
    table = abbreviations if abbreviations is not None else _default_abbreviations()
    abbrev = frozenset(a.lower() for a in table.get(lang.code, ()))
    sentences: list[str] = []
    for paragraph in _PARAGRAPH_RE.split(text):
        sentences.extend(_split_paragraph(paragraph, abbrev))
    return [SentenceRecord.plain(index, sentence)
            for index, sentence in enumerate(sentences)]
