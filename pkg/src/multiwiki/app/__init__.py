"""CLI and HTTP service driving ingestion, analysis and the comparison API."""

from .analysis import analyze_pair, compare_snapshots, ingest_pair
from .comparison import comparison_document, floor_report_time
from .config import AppConfig, build_clients, load_config_file
from .export import UnsupportedFormat, export_timeline
from .service import ServiceConfig, create_app, serve

__all__ = [
    "AppConfig",
    "ServiceConfig",
    "UnsupportedFormat",
    "analyze_pair",
    "build_clients",
    "compare_snapshots",
    "comparison_document",
    "create_app",
    "export_timeline",
    "floor_report_time",
    "ingest_pair",
    "load_config_file",
    "serve",
]
