"""Plain-text, image, link and footnote-URL extraction from raw wikitext.

The extractor is deterministic and total: malformed markup degrades to literal
text, it never raises. Templates, tables and comments are dropped (no
transclusion), footnote URLs are taken from ``<ref>`` elements only.
"""

from __future__ import annotations

import html
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional
from urllib.parse import urlsplit, urlunsplit


@dataclass(frozen=True)
class PrefixTable:
    """Localized namespace prefixes recognized in link targets (lowercase)."""

    image: frozenset[str]
    category: frozenset[str]


# Covers en/de/nl/pt plus the canonical aliases used across editions.
DEFAULT_PREFIXES = PrefixTable(
    image=frozenset({"file", "image", "datei", "bild", "bestand", "ficheiro", "imagem"}),
    category=frozenset({"category", "kategorie", "categorie", "categoria"}),
)


@dataclass(frozen=True)
class ExtractedDoc:
    plain_text: str
    images: frozenset[str] = frozenset()
    wiki_links: frozenset[str] = frozenset()
    ext_links: frozenset[str] = frozenset()
    ext_hosts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", frozenset(self.images))
        object.__setattr__(self, "wiki_links", frozenset(self.wiki_links))
        object.__setattr__(self, "ext_links", frozenset(self.ext_links))
        object.__setattr__(self, "ext_hosts", dict(self.ext_hosts))


_COMMENT_RE = re.compile(r"<!--.*?(?:-->|$)", re.DOTALL)
_REF_BODY_RE = re.compile(r"<ref\b[^>/]*>(.*?)</ref\s*>", re.DOTALL | re.IGNORECASE)
_REF_EMPTY_RE = re.compile(r"<ref\b[^>]*/>", re.IGNORECASE)
_URL_RE = re.compile(r"https?://[^\s<>\[\]\"{}|']+", re.IGNORECASE)
_DROP_ELEMENT_TAGS = ("gallery", "timeline", "math", "score", "syntaxhighlight",
                      "source", "pre", "imagemap", "references")
_TAG_RE = re.compile(r"</?[a-zA-Z][^>\n]*/?>")
_MAGIC_WORD_RE = re.compile(r"__[A-Z_]+?__")
_HEADING_RE = re.compile(r"^\s*(={1,6})\s*(.*?)\s*\1\s*$")
_LIST_MARKER_RE = re.compile(r"^[*#:;]+\s*")
_EXT_BRACKET_LABELED_RE = re.compile(r"\[(?:https?|ftp)://[^\s\]]+\s+([^\]]*)\]",
                                     re.IGNORECASE)
_EXT_BRACKET_BARE_RE = re.compile(r"\[(?:https?|ftp)://[^\s\]]*\]", re.IGNORECASE)
_PCT_RE = re.compile(r"%([0-9a-fA-F]{2})")
_UNRESERVED = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-._~")


def normalize_url(raw: str) -> Optional[str]:
    """Canonical URL form: lowercase scheme+host, no www., no fragment, kept query."""
    raw = raw.strip().rstrip(".,;:!?'\")]}")
    try:
        parts = urlsplit(raw)
    except ValueError:
        return None
    if parts.scheme.lower() not in ("http", "https") or not parts.hostname:
        return None
    host = parts.hostname.lower()
    if host.startswith("www."):
        host = host[4:]
    if not host:
        return None
    netloc = host if parts.port is None else f"{host}:{parts.port}"
    path = _normalize_percent(parts.path)
    query = _normalize_percent(parts.query)
    return urlunsplit((parts.scheme.lower(), netloc, path, query, ""))


def host_of(url: str) -> str:
    return urlsplit(url).hostname or ""


def _normalize_percent(component: str) -> str:
    # RFC 3986 §6.2.2: decode unreserved escapes, uppercase remaining hex.
    def repl(match: re.Match) -> str:
        char = chr(int(match.group(1), 16))
        return char if char in _UNRESERVED else f"%{match.group(1).upper()}"

    return _PCT_RE.sub(repl, component)


def _strip_comments(text: str) -> str:
    return _COMMENT_RE.sub("", text)


def _take_footnote_urls(text: str) -> tuple[str, list[str]]:
    urls: list[str] = []

    def collect(match: re.Match) -> str:
        urls.extend(_URL_RE.findall(match.group(1)))
        return " "

    text = _REF_BODY_RE.sub(collect, text)
    text = _REF_EMPTY_RE.sub(" ", text)
    return text, urls


def _strip_balanced(text: str, opener: str, closer: str) -> str:
    out: list[str] = []
    depth = 0
    outer_start = 0
    i, n = 0, len(text)
    while i < n:
        if text.startswith(opener, i):
            if depth == 0:
                outer_start = i
            depth += 1
            i += len(opener)
        elif depth and text.startswith(closer, i):
            depth -= 1
            i += len(closer)
        else:
            if depth == 0:
                out.append(text[i])
            i += 1
    if depth:
        # Unclosed construct: degrade to literal text from the outermost opener.
        out.append(text[outer_start:])
    return "".join(out)


def _drop_elements(text: str) -> str:
    for tag in _DROP_ELEMENT_TAGS:
        text = re.sub(rf"<{tag}\b[^>]*>.*?</{tag}\s*>", " ", text,
                      flags=re.DOTALL | re.IGNORECASE)
    return text


def _match_link_end(text: str, start: int) -> int:
    depth = 0
    i, n = start, len(text)
    while i < n:
        if text.startswith("[[", i):
            depth += 1
            i += 2
        elif text.startswith("]]", i):
            depth -= 1
            i += 2
            if depth == 0:
                return i
        else:
            i += 1
    return -1


def _canonical_title(target: str) -> str:
    title = target.split("#", 1)[0].replace("_", " ").strip()
    if title:
        title = title[0].upper() + title[1:]
    return title


_LANG_PREFIX_RE = re.compile(r"^[a-z]{2,3}$")


def _take_links(text: str, prefixes: PrefixTable) -> tuple[str, set[str], set[str]]:
    images: set[str] = set()
    links: set[str] = set()
    out: list[str] = []
    i, n = 0, len(text)
    while i < n:
        if not text.startswith("[[", i):
            out.append(text[i])
            i += 1
            continue
        end = _match_link_end(text, i)
        if end == -1:
            out.append(text[i:])
            break
        inner = text[i + 2:end - 2]
        i = end
        target, piped, label = inner.partition("|")
        stripped = target.strip()
        if ":" in stripped:
            prefix = stripped.split(":", 1)[0].strip().lower()
            name = stripped.split(":", 1)[1]
            if prefix in prefixes.image:
                name = name.split("#", 1)[0].replace("_", " ").strip()
                if name:
                    images.add(name)
                continue
            if prefix in prefixes.category or _LANG_PREFIX_RE.match(prefix):
                continue
        title = _canonical_title(target)
        if title:
            links.add(title)
        display = label.strip() if piped and label.strip() else \
            target.split("#", 1)[0].replace("_", " ").strip() or target.strip()
        out.append(display)
    return "".join(out), images, links


def _strip_inline(text: str) -> str:
    text = _MAGIC_WORD_RE.sub("", text)
    text = _EXT_BRACKET_LABELED_RE.sub(lambda m: m.group(1), text)
    text = _EXT_BRACKET_BARE_RE.sub("", text)
    text = text.replace("'''", "").replace("''", "")
    lines: list[str] = []
    for line in text.split("\n"):
        heading = _HEADING_RE.match(line)
        if heading:
            lines.extend(["", heading.group(2), ""])
            continue
        delisted = _LIST_MARKER_RE.sub("", line)
        if delisted != line:
            lines.extend([delisted, ""])
            continue
        lines.append(line)
    return "\n".join(lines)


def _normalize_whitespace(text: str) -> str:
    text = html.unescape(text).replace(" ", " ")
    paragraphs = []
    for block in re.split(r"\n\s*\n", text):
        collapsed = " ".join(block.split())
        if collapsed:
            paragraphs.append(collapsed)
    return "\n\n".join(paragraphs)


def extract_document(wikitext: str, prefixes: PrefixTable = DEFAULT_PREFIXES) -> ExtractedDoc:
    """Extract plain text, images, wiki links and footnote URLs from wikitext."""
    text = _strip_comments(wikitext)
    text, raw_urls = _take_footnote_urls(text)
    text = _strip_balanced(text, "{{", "}}")
    text = _strip_balanced(text, "{|", "|}")
    text = _drop_elements(text)
    text, images, links = _take_links(text, prefixes)
    text = _TAG_RE.sub(" ", text)
    text = _strip_inline(text)
    plain_text = _normalize_whitespace(text)

    ext_links: set[str] = set()
    ext_hosts: Counter[str] = Counter()
    for raw in raw_urls:
        url = normalize_url(raw)
        if url is None:
            continue
        ext_links.add(url)
        ext_hosts[host_of(url)] += 1
    return ExtractedDoc(plain_text=plain_text, images=frozenset(images),
                        wiki_links=frozenset(links), ext_links=frozenset(ext_links),
                        ext_hosts=dict(ext_hosts))
