"""Graph file formats and report serialization."""

from .graph_formats import (
    format_graph,
    infer_format,
    load_graph,
    load_graph_file,
    write_graph,
    write_graph_file,
)
from .report_writer import dumps_report, read_report, to_report, write_report

__all__ = [
    "dumps_report",
    "format_graph",
    "infer_format",
    "load_graph",
    "load_graph_file",
    "read_report",
    "to_report",
    "write_graph",
    "write_graph_file",
    "write_report",
]
