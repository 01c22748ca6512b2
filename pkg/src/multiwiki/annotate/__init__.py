"""Snapshot annotation: sentences, English tokens, entities, dates, geolocation."""

from .entities import (
    AnnotatorUnavailable,
    EntityAnnotatorClient,
    EntityResolver,
    GazetteerAnnotator,
    RemoteAnnotator,
    annotate_entities,
    fallback_resolver,
)
from .geo import GeoClient, GeoUnavailable, RemoteGeoClient, TableGeoClient, geolocate_editors
from .pipeline import AnnotationClients, build_snapshot
from .sentences import split_sentences
from .tables import STUB_FILES, StubTables, load_stub_tables
from .temporal import extract_temporal
from .translate import (
    ENGLISH_STOPWORDS,
    DictionaryTranslator,
    RemoteTranslator,
    TranslatorClient,
    TranslatorUnavailable,
    tokenize,
    translate_tokens,
)

__all__ = [
    "ENGLISH_STOPWORDS",
    "STUB_FILES",
    "AnnotationClients",
    "AnnotatorUnavailable",
    "DictionaryTranslator",
    "EntityAnnotatorClient",
    "EntityResolver",
    "GazetteerAnnotator",
    "GeoClient",
    "GeoUnavailable",
    "RemoteAnnotator",
    "RemoteGeoClient",
    "RemoteTranslator",
    "StubTables",
    "TableGeoClient",
    "TranslatorClient",
    "TranslatorUnavailable",
    "annotate_entities",
    "build_snapshot",
    "extract_temporal",
    "fallback_resolver",
    "geolocate_editors",
    "load_stub_tables",
    "split_sentences",
    "tokenize",
    "translate_tokens",
]


def stub_clients(tables: StubTables) -> AnnotationClients:
    """Offline client bundle backed entirely by stub tables."""
    return AnnotationClients(
        translator=DictionaryTranslator(tables.dictionary),
        annotator=GazetteerAnnotator(tables.gazetteer),
        geo=TableGeoClient(tables.geo),
        tables=tables,
    )
