"""Translation to English token space: remote client plus dictionary stub.

All token comparison downstream happens in English, so tokens are lowercased,
punctuation-stripped and filtered against an English stopword list here.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional, Protocol

import requests

from ..model import LanguageEdition, MultiwikiError

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

ENGLISH_STOPWORDS = frozenset("""
a about above after again all also an and any are as at be because been before
being below between both but by could did do does down during each few for from
further had has have he her here hers him his how i if in into is it its itself
just me more most my no nor not of off on once only or other our ours out over
own same she should so some such than that the their theirs them then there
these they this those through to too under until up very was we were what when
where which while who whom why will with you your yours
""".split())


class TranslatorUnavailable(MultiwikiError):
    pass


class TranslatorClient(Protocol):
    kind: str

    def translate_text(self, text: str, lang: LanguageEdition) -> str: ...


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens, punctuation stripped."""
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class DictionaryTranslator:
    """Pure offline stub backed by a per-language source→English token table.

    English input passes through unchanged; for other languages, tokens absent
    from the dictionary are dropped so only known vocabulary reaches the
    English token space.
    """

    table: Mapping[str, Mapping[str, str]]
    kind: str = "dictionary-stub"

    def translate_text(self, text: str, lang: LanguageEdition) -> str:
        entries = self.table.get(lang.code, {})
        is_english = lang.code == "en"
        translated = []
        for token in tokenize(text):
            if token in entries:
                translated.append(entries[token])
            elif is_english:
                translated.append(token)
        return " ".join(translated)


@dataclass(frozen=True)
class RemoteTranslator:
    """POST {text, source_lang} -> {english_text}."""

    endpoint: str
    timeout: float = 30.0
    session: Optional[requests.Session] = None
    kind: str = "remote"

    def translate_text(self, text: str, lang: LanguageEdition) -> str:
        session = self.session or requests
        try:
            response = session.post(self.endpoint,
                                    json={"text": text, "source_lang": lang.code},
                                    timeout=self.timeout)
            response.raise_for_status()
            return response.json()["english_text"]
        except (requests.RequestException, ValueError, KeyError) as exc:
            raise TranslatorUnavailable(f"translator at {self.endpoint}: {exc}") from exc


def translate_tokens(sentence_text: str, lang: LanguageEdition,
                     client: TranslatorClient) -> Counter[str]:
    """English token multiset of one sentence (stopwords removed)."""
    english = client.translate_text(sentence_text, lang)
    return Counter(token for token in tokenize(english)
                   if token not in ENGLISH_STOPWORDS)
