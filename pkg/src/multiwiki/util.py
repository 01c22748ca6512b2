"""Small shared helpers: slugs and atomic file writes."""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import unicodedata
from pathlib import Path
from typing import Any

from .model import canonical_dumps


def slugify(text: str) -> str:
    """Filesystem-safe, stable slug: ASCII-folded, lowercase, hyphen-separated."""
    folded = unicodedata.normalize("NFKD", text)
    folded = "".join(ch for ch in folded if not unicodedata.combining(ch))
    slug = re.sub(r"[^a-z0-9]+", "-", folded.lower()).strip("-")
    if not slug:
        slug = hashlib.sha1(text.encode("utf-8")).hexdigest()[:10]
    return slug


def atomic_write_bytes(path: Path, payload: bytes) -> None:
    """Write via a same-directory temp file + rename; never leaves partial files."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def atomic_write_text(path: Path, payload: str) -> None:
    atomic_write_bytes(path, payload.encode("utf-8"))


def atomic_write_json(path: Path, payload: Any) -> None:
    """Persist ``payload`` as canonical JSON (sorted keys, byte-stable)."""
    atomic_write_text(path, canonical_dumps(payload))


def read_json(path: Path) -> Any:
    return json.loads(path.read_text(encoding="utf-8"))
