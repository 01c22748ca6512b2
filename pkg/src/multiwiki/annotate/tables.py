"""Loading of the offline stub tables (bundled defaults + per-corpus overrides)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Mapping, Optional

STUB_FILES = ("dictionary.json", "gazetteer.json", "geo.json",
              "abbreviations.json", "temporal-patterns.json")


@dataclass(frozen=True)
class StubTables:
    """All stub data keyed by file; see each client for the per-file shape."""

    dictionary: Mapping[str, Mapping[str, str]] = field(default_factory=dict)
    gazetteer: Mapping[str, Mapping[str, str]] = field(default_factory=dict)
    geo: Mapping[str, str] = field(default_factory=dict)
    abbreviations: Mapping[str, list[str]] = field(default_factory=dict)
    temporal_patterns: Mapping[str, Any] = field(default_factory=dict)


def _bundled(name: str) -> Any:
    ref = resources.files("multiwiki.annotate") / "stubs" / name
    return json.loads(ref.read_text(encoding="utf-8"))


def load_stub_tables(stubs_dir: Optional[Path | str] = None) -> StubTables:
    """Bundled defaults, with any file present in ``stubs_dir`` taking precedence."""
    data = {}
    for name in STUB_FILES:
        override = Path(stubs_dir) / name if stubs_dir else None
        if override is not None and override.is_file():
            data[name] = json.loads(override.read_text(encoding="utf-8"))
        else:
            data[name] = _bundled(name)
    return StubTables(
        dictionary=data["dictionary.json"],
        gazetteer=data["gazetteer.json"],
        geo=data["geo.json"],
        abbreviations=data["abbreviations.json"],
        temporal_patterns=data["temporal-patterns.json"],
    )
