"""The ``multiwiki`` command line: ingest, analyze, serve, export.

Exit codes: 0 success, 1 internal error, 2 user-input error, 3 environment
error (unreachable source, port in use).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from ..annotate import load_stub_tables
from ..ingest import ArticleNotFound, FixtureSource, LiveSource, RevisionNotFound, SourceUnavailable
from ..model import ArticleRef, ConfigViolationError, LanguageEdition, parse_instant
from ..store import CorruptDocument, NotFound, Store
from ..timeline import BeforeCreation, NoCommonLifetime
from .analysis import analyze_pair, ingest_pair
from .config import build_clients, load_config_file
from .export import UnsupportedFormat, export_timeline
from .service import ServiceConfig, serve

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_ENV = 3

_USER_ERRORS = (ArticleNotFound, RevisionNotFound, NotFound, NoCommonLifetime,
                BeforeCreation, ConfigViolationError, UnsupportedFormat, ValueError)
_ENV_ERRORS = (SourceUnavailable, OSError)

logger = logging.getLogger("multiwiki.cli")


def _parse_article(spec: str) -> ArticleRef:
    lang, sep, title = spec.partition(":")
    if not sep or not title.strip():
        raise ValueError(f"pair spec must look like lang:Title, got {spec!r}")
    return ArticleRef(LanguageEdition(lang.strip()), title.strip())


def _data_dir(args: argparse.Namespace) -> Path:
    if args.data:
        return Path(args.data)
    return Path(os.environ.get("MULTIWIKI_DATA", "data"))


def _make_source(value: str, api_url: Optional[str]):
    if value == "live":
        return LiveSource(api_url=api_url or "https://{lang}.wikipedia.org/w/api.php")
    return FixtureSource(Path(value))


def _stub_dir(args: argparse.Namespace) -> Optional[Path]:
    if args.stubs:
        return Path(args.stubs)
    if args.source and args.source != "live":
        candidate = Path(args.source) / "stubs"
        if candidate.is_dir():
            return candidate
    return None


def cmd_ingest(args: argparse.Namespace) -> int:
    app_config = load_config_file(args.config)
    config = app_config.similarity
    if args.snapshots is not None:
        from ..model import SimilarityConfig, validate_config

        config = validate_config(SimilarityConfig.from_json(
            {**config.to_json(), "snapshot_count": args.snapshots}))
    article1, article2 = (_parse_article(spec) for spec in args.pair)
    source = _make_source(args.source, args.api_url)
    clients = build_clients(app_config, load_stub_tables(_stub_dir(args)))
    end_time = parse_instant(args.end_time) if args.end_time else None
    store = Store(_data_dir(args))
    pair_id = ingest_pair(store, source, article1, article2, config, clients,
                          end_time=end_time)
    print(pair_id)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    config = load_config_file(args.config).similarity
    store = Store(_data_dir(args))
    series = analyze_pair(store, args.pair_id, config)
    print(f"{args.pair_id}: {len(series.points)} timeline points")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    port = args.port if args.port is not None else \
        int(os.environ.get("MULTIWIKI_PORT", "8400"))
    service_config = ServiceConfig(
        host=args.host,
        port=port,
        data_dir=_data_dir(args),
        assets_dir=Path(args.assets) if args.assets else None,
        cors_origins=tuple(args.cors or ()),
    )
    serve(service_config)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    store = Store(_data_dir(args))
    payload = export_timeline(store, args.pair_id, args.format)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiwiki",
        description="Temporal similarity analysis of interlingual Wikipedia article pairs.")
    parser.add_argument("--data", help="store directory (or $MULTIWIKI_DATA, default ./data)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    ingest = subparsers.add_parser("ingest", help="fetch and annotate one article pair")
    ingest.add_argument("--pair", nargs=2, required=True, metavar="LANG:TITLE",
                        help="the two articles, e.g. en:'General Post Office' nl:'...'")
    ingest.add_argument("--source", required=True,
                        help="fixture directory, or 'live' for the MediaWiki API")
    ingest.add_argument("--snapshots", type=int, default=None,
                        help="number of snapshot pairs to plan (>= 2)")
    ingest.add_argument("--config", help="TOML/JSON similarity configuration file")
    ingest.add_argument("--end-time", help="analysis end time (RFC 3339), default: auto")
    ingest.add_argument("--stubs", help="stub table directory (default: <source>/stubs)")
    ingest.add_argument("--api-url", help="MediaWiki API URL template with {lang}")
    ingest.set_defaults(func=cmd_ingest)

    analyze = subparsers.add_parser("analyze", help="score all snapshot pairs of a stored pair")
    analyze.add_argument("pair_id")
    analyze.add_argument("--config", help="TOML/JSON similarity configuration file")
    analyze.set_defaults(func=cmd_analyze)

    serve_cmd = subparsers.add_parser("serve", help="run the read-only HTTP service")
    serve_cmd.add_argument("--host", default="127.0.0.1")
    serve_cmd.add_argument("--port", type=int, default=None,
                           help="listen port (or $MULTIWIKI_PORT, default 8400)")
    serve_cmd.add_argument("--assets", help="static assets directory for the web UI")
    serve_cmd.add_argument("--cors", action="append", help="allowed CORS origin (repeatable)")
    serve_cmd.set_defaults(func=cmd_serve)

    export = subparsers.add_parser("export", help="export a stored timeline")
    export.add_argument("pair_id")
    export.add_argument("--format", default="json", help="json or csv")
    export.add_argument("--output", help="output file (default: stdout)")
    export.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        stage = getattr(exc, "stage", None)
        prefix = f"[{stage}] " if stage else ""
        print(f"error: {prefix}{exc}", file=sys.stderr)
        return EXIT_USAGE
    except CorruptDocument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _ENV_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        logger.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
