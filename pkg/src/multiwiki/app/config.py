"""Config file loading (TOML or JSON, mirroring the similarity configuration)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from ..annotate import (
    AnnotationClients,
    RemoteAnnotator,
    RemoteGeoClient,
    RemoteTranslator,
    StubTables,
    stub_clients,
)
from ..model import SimilarityConfig, default_config, validate_config


@dataclass(frozen=True)
class AppConfig:
    similarity: SimilarityConfig
    translator_endpoint: Optional[str] = None
    annotator_endpoint: Optional[str] = None
    geo_endpoint: Optional[str] = None


def load_config_file(path: Optional[Path | str]) -> AppConfig:
    """Defaults when ``path`` is None; otherwise parse and validate the file."""
    if path is None:
        return AppConfig(similarity=validate_config(default_config()))
    path = Path(path)
    if path.suffix.lower() == ".json":
        data: dict[str, Any] = json.loads(path.read_text(encoding="utf-8"))
    else:
        with open(path, "rb") as handle:
            data = tomllib.load(handle)
    clients = data.get("clients", {})
    return AppConfig(
        similarity=validate_config(SimilarityConfig.from_json(data)),
        translator_endpoint=clients.get("translator_endpoint"),
        annotator_endpoint=clients.get("annotator_endpoint"),
        geo_endpoint=clients.get("geo_endpoint"),
    )


def build_clients(app_config: AppConfig, tables: StubTables) -> AnnotationClients:
    """Stub clients by default; any configured remote endpoint replaces its stub."""
    clients = stub_clients(tables)
    translator = clients.translator
    annotator = clients.annotator
    geo = clients.geo
    if app_config.translator_endpoint:
        translator = RemoteTranslator(app_config.translator_endpoint)
    if app_config.annotator_endpoint:
        annotator = RemoteAnnotator(app_config.annotator_endpoint)
    if app_config.geo_endpoint:
        geo = RemoteGeoClient(app_config.geo_endpoint)
    return AnnotationClients(translator=translator, annotator=annotator,
                             geo=geo, tables=tables)
