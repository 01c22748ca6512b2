"""Content sources: offline fixture directories and the live MediaWiki API.

Both expose the same three lookups (revisions, wikitext, langlinks) so the
rest of the pipeline never knows which one it is talking to. The live client
rate-limits, retries with exponential backoff and sends an explicit UA.
"""

from __future__ import annotations

import json
import threading
import time
from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Optional, Protocol

import requests

from .. import __version__
from ..model import ArticleRef, Editor, EditorId, EditorSet, MultiwikiError, RevisionMeta
from ..util import atomic_write_json, atomic_write_text, read_json, slugify

USER_AGENT = f"multiwiki/{__version__} (article-pair analysis; offline-capable)"


class SourceError(MultiwikiError):
    pass


class ArticleNotFound(SourceError):
    def __init__(self, article: ArticleRef):
        self.article = article
        super().__init__(f"article not found: {article.lang}:{article.title}")


class RevisionNotFound(SourceError):
    def __init__(self, article: ArticleRef, revision_id: int):
        self.article = article
        self.revision_id = revision_id
        super().__init__(f"revision {revision_id} not found for {article.lang}:{article.title}")


class SourceUnavailable(SourceError):
    pass


class ContentSource(Protocol):
    kind: str

    def revisions(self, article: ArticleRef) -> list[RevisionMeta]: ...

    def wikitext(self, article: ArticleRef, revision_id: int) -> str: ...

    def langlinks(self, article: ArticleRef) -> dict[str, str]: ...


class FixtureSource:
    """Reads the on-disk fixture layout: <lang>/<title-slug>/{history.json,rev-*.wikitext,langlinks.json}."""

    kind = "fixture"

    def __init__(self, fixture_path: Path | str):
        self.fixture_path = Path(fixture_path)
        if not self.fixture_path.is_dir():
            raise SourceUnavailable(f"fixture path is not a directory: {self.fixture_path}")

    def _article_dir(self, article: ArticleRef) -> Path:
        return self.fixture_path / article.lang.code / slugify(article.title)

    def _require_dir(self, article: ArticleRef) -> Path:
        directory = self._article_dir(article)
        if not directory.is_dir():
            raise ArticleNotFound(article)
        return directory

    def revisions(self, article: ArticleRef) -> list[RevisionMeta]:
        path = self._require_dir(article) / "history.json"
        try:
            data = read_json(path)
            return [RevisionMeta.from_json(entry) for entry in data]
        except FileNotFoundError:
            raise ArticleNotFound(article) from None
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
            raise SourceUnavailable(f"corrupt fixture history {path}: {exc}") from exc

    def wikitext(self, article: ArticleRef, revision_id: int) -> str:
        directory = self._require_dir(article)
        path = directory / f"rev-{revision_id}.wikitext"
        if not path.is_file():
            raise RevisionNotFound(article, revision_id)
        return path.read_text(encoding="utf-8")

    def langlinks(self, article: ArticleRef) -> dict[str, str]:
        directory = self._require_dir(article)
        path = directory / "langlinks.json"
        if not path.is_file():
            return {}
        try:
            data = read_json(path)
            return {str(lang): str(title) for lang, title in data.items()}
        except (json.JSONDecodeError, AttributeError) as exc:
            raise SourceUnavailable(f"corrupt fixture langlinks {path}: {exc}") from exc


class _RateGate:
    """Shared gate enforcing a minimum interval between outbound requests."""

    def __init__(self, min_interval: float):
        self.min_interval = min_interval
        self._lock = threading.Lock()
        self._last = 0.0

    def wait(self) -> None:
        with self._lock:
            now = time.monotonic()
            delay = self._last + self.min_interval - now
            if delay > 0:
                time.sleep(delay)
                now = time.monotonic()
            self._last = now


class LiveSource:
    """MediaWiki Action API client (query prop=revisions / langlinks)."""

    kind = "live"

    def __init__(self, api_url: str = "https://{lang}.wikipedia.org/w/api.php",
                 session: Optional[requests.Session] = None,
                 min_interval: float = 0.2, max_retries: int = 3,
                 timeout: float = 30.0):
        self.api_url = api_url
        self.session = session or requests.Session()
        self.max_retries = max_retries
        self.timeout = timeout
        self._gate = _RateGate(min_interval)

    def _get(self, lang: str, params: dict) -> dict:
        url = self.api_url.format(lang=lang)
        query = {"format": "json", "formatversion": "2", **params}
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                time.sleep(0.5 * 2 ** (attempt - 1))
            self._gate.wait()
            try:
                response = self.session.get(url, params=query, timeout=self.timeout,
                                            headers={"User-Agent": USER_AGENT})
                response.raise_for_status()
                payload = response.json()
            except (requests.RequestException, ValueError) as exc:
                last_error = exc
                continue
            if "error" in payload:
                raise SourceUnavailable(f"API error: {payload['error']}")
            return payload
        raise SourceUnavailable(f"request failed after {self.max_retries} retries: {last_error}")

    @staticmethod
    def _single_page(payload: dict, article: ArticleRef) -> dict:
        pages = payload.get("query", {}).get("pages", [])
        if not pages or pages[0].get("missing"):
            raise ArticleNotFound(article)
        return pages[0]

    def revisions(self, article: ArticleRef) -> list[RevisionMeta]:
        revisions: list[RevisionMeta] = []
        params = {
            "action": "query",
            "prop": "revisions",
            "titles": article.title,
            "rvprop": "ids|timestamp|user|size|flags",
            "rvlimit": "max",
            "rvdir": "newer",
        }
        while True:
            payload = self._get(article.lang.code, params)
            page = self._single_page(payload, article)
            for rev in page.get("revisions", ()):
                user = rev.get("user") or "(hidden)"
                editor = EditorId.anonymous(user) if rev.get("anon") \
                    else EditorId.registered(user)
                revisions.append(RevisionMeta(
                    revision_id=int(rev["revid"]),
                    timestamp=_parse_api_timestamp(rev["timestamp"]),
                    editor=editor,
                    size_bytes=int(rev.get("size") or 0),
                ))
            cont = payload.get("continue")
            if not cont:
                return revisions
            params = {**params, **cont}

    def wikitext(self, article: ArticleRef, revision_id: int) -> str:
        payload = self._get(article.lang.code, {
            "action": "query",
            "prop": "revisions",
            "revids": str(revision_id),
            "rvprop": "ids|content",
            "rvslots": "main",
        })
        if payload.get("query", {}).get("badrevids"):
            raise RevisionNotFound(article, revision_id)
        page = self._single_page(payload, article)
        revs = page.get("revisions", ())
        if not revs:
            raise RevisionNotFound(article, revision_id)
        return revs[0]["slots"]["main"].get("content", "")

    def langlinks(self, article: ArticleRef) -> dict[str, str]:
        links: dict[str, str] = {}
        params = {
            "action": "query",
            "prop": "langlinks",
            "titles": article.title,
            "lllimit": "max",
        }
        while True:
            payload = self._get(article.lang.code, params)
            page = self._single_page(payload, article)
            for link in page.get("langlinks", ()):
                links[link["lang"]] = link.get("title") or link.get("*", "")
            cont = payload.get("continue")
            if not cont:
                return links
            params = {**params, **cont}


class CachingSource:
    """Write-through cache wrapper; a warm cache replays all fetches offline."""

    def __init__(self, inner: ContentSource, cache_dir: Path):
        self.inner = inner
        self.cache_dir = Path(cache_dir)

    @property
    def kind(self) -> str:
        return self.inner.kind

    def revisions(self, article: ArticleRef) -> list[RevisionMeta]:
        path = self.cache_dir / f"history-{article.lang.code}-{slugify(article.title)}.json"
        if path.is_file():
            return [RevisionMeta.from_json(entry) for entry in read_json(path)]
        revisions = self.inner.revisions(article)
        atomic_write_json(path, [rev.to_json() for rev in revisions])
        return revisions

    def wikitext(self, article: ArticleRef, revision_id: int) -> str:
        path = self.cache_dir / f"wikitext-{article.lang.code}-{revision_id}.wikitext"
        if path.is_file():
            return path.read_text(encoding="utf-8")
        text = self.inner.wikitext(article, revision_id)
        atomic_write_text(path, text)
        return text

    def langlinks(self, article: ArticleRef) -> dict[str, str]:
        path = self.cache_dir / f"langlinks-{article.lang.code}-{slugify(article.title)}.json"
        if path.is_file():
            return dict(read_json(path))
        links = self.inner.langlinks(article)
        atomic_write_json(path, links)
        return links


def _parse_api_timestamp(value: str) -> datetime:
    from ..model import parse_instant

    return parse_instant(value)


def fetch_revisions(article: ArticleRef, source: ContentSource) -> list[RevisionMeta]:
    """Complete revision history, sorted ascending by (timestamp, revision_id)."""
    revisions = source.revisions(article)
    return sorted(revisions, key=lambda rev: (rev.timestamp, rev.revision_id))


def fetch_wikitext(article: ArticleRef, revision_id: int, source: ContentSource) -> str:
    """Exact stored wikitext of one revision."""
    return source.wikitext(article, revision_id)


def collect_editors(history: list[RevisionMeta], cutoff: datetime) -> EditorSet:
    """Editors of all revisions up to and including ``cutoff``, with edit counts."""
    counts: Counter[EditorId] = Counter()
    for revision in history:
        if revision.timestamp <= cutoff:
            counts[revision.editor] += 1
    return EditorSet(tuple(Editor(id=editor_id, edit_count=count)
                           for editor_id, count in counts.items()))
