import json
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path

import pytest

from multiwiki.model import EditorId, RevisionMeta, canonical_dumps, format_instant
from multiwiki.util import slugify

UTC = timezone.utc

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def schema_validator(name: str):
    """Validator for one published schema, with all bundled schemas resolvable."""
    import jsonschema
    from referencing import Registry, Resource

    schemas = {}
    for ref in resources.files("multiwiki.schemas").iterdir():
        if ref.name.endswith(".schema.json"):
            schemas[ref.name] = json.loads(ref.read_text(encoding="utf-8"))
    registry = Registry().with_resources(
        (doc["$id"], Resource.from_contents(doc)) for doc in schemas.values())
    return jsonschema.Draft202012Validator(schemas[f"{name}.schema.json"],
                                           registry=registry)


def utc(*args) -> datetime:
    return datetime(*args, tzinfo=UTC)


def rev(revision_id, timestamp, editor, size_bytes=100) -> RevisionMeta:
    return RevisionMeta(revision_id=revision_id, timestamp=timestamp,
                        editor=editor, size_bytes=size_bytes)


def write_fixture_article(root: Path, lang: str, title: str,
                          revisions: list[RevisionMeta],
                          wikitexts: dict[int, str],
                          langlinks: dict[str, str] | None = None) -> Path:
    """Materialize one article in the on-disk fixture layout."""
    directory = root / lang / slugify(title)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "history.json").write_text(
        canonical_dumps([r.to_json() for r in revisions]), encoding="utf-8")
    for revision_id, text in wikitexts.items():
        (directory / f"rev-{revision_id}.wikitext").write_text(text, encoding="utf-8")
    if langlinks is not None:
        (directory / "langlinks.json").write_text(
            canonical_dumps(langlinks), encoding="utf-8")
    return directory


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[ACCEPTANCE] {name}: {outcome}", flush=True)
