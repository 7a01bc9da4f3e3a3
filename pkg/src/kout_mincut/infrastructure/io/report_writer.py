"""Machine-readable JSON reports.

Every report is one UTF-8 JSON object with the keys ``format``, ``version``,
``kind`` and ``payload``, in that order. See README.md for the payload keys
of each kind.
"""

import io
import json
import math
from collections.abc import Mapping
from typing import Any, BinaryIO, TextIO

from kout_mincut.domain.exceptions import ReportError, ReportSerializationError, ReportWriteError
from kout_mincut.domain.models.contraction_models import CertificateForests
from kout_mincut.domain.models.experiment_models import ConfirmationReport, TrialBatch
from kout_mincut.domain.models.graph_models import Cut, MultiGraph
from kout_mincut.domain.models.result_models import MinCutResult

REPORT_FORMAT = "kout-mincut-report"
REPORT_VERSION = 1
REPORT_KINDS = ("cut", "mincut", "contraction", "certificate", "trial_batch", "confirmation")

Reportable = Cut | MinCutResult | MultiGraph | CertificateForests | TrialBatch | ConfirmationReport


def contraction_payload(mg: MultiGraph) -> dict[str, Any]:
    return {
        "supernode_count": mg.supernode_count,
        "vertex_map": mg.vertex_map.tolist(),
        "edges": [[e.u, e.v, e.edge_id] for e in sorted(mg.edges, key=lambda e: e.edge_id)],
    }


def certificate_payload(forests: CertificateForests) -> dict[str, Any]:
    return {
        "k": forests.k,
        "retained_edge_ids": list(forests.retained_edge_ids),
        "forest_index": {str(e): i for e, i in sorted(forests.forest_index.items())},
    }


def to_report(record: Reportable) -> dict[str, Any]:
    """Wrap a result object in the report envelope."""
    if isinstance(record, Cut):
        kind, payload = "cut", record.to_record()
    elif isinstance(record, MinCutResult):
        kind, payload = "mincut", record.to_record()
    elif isinstance(record, MultiGraph):
        kind, payload = "contraction", contraction_payload(record)
    elif isinstance(record, CertificateForests):
        kind, payload = "certificate", certificate_payload(record)
    elif isinstance(record, TrialBatch):
        kind, payload = "trial_batch", record.to_record()
    elif isinstance(record, ConfirmationReport):
        kind, payload = "confirmation", record.to_record()
    else:
        raise ReportSerializationError(f"cannot report a {type(record).__name__}")
    return {"format": REPORT_FORMAT, "version": REPORT_VERSION, "kind": kind, "payload": payload}


def _check_finite(value: Any, path: str) -> None:
    if isinstance(value, float) and not math.isfinite(value):
        raise ReportSerializationError(f"non-finite value {value} at {path}", details={"path": path})
    if isinstance(value, Mapping):
        for key, item in value.items():
            _check_finite(item, f"{path}.{key}")
    elif isinstance(value, list | tuple):
        for index, item in enumerate(value):
            _check_finite(item, f"{path}[{index}]")


def dumps_report(record: Reportable | Mapping[str, Any]) -> str:
    report = dict(record) if isinstance(record, Mapping) else to_report(record)
    _check_finite(report, "$")
    try:
        return json.dumps(report, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    except (TypeError, ValueError) as e:
        raise ReportSerializationError(f"report is not serializable: {e}") from e


def write_report(record: Reportable | Mapping[str, Any], sink: BinaryIO | TextIO) -> None:
    """
    Serialize one record to ``sink``.

    Raises:
        ReportSerializationError: If the record holds a non-finite number or an unknown type
        ReportWriteError: If the sink rejects the write
    """
    text = dumps_report(record)
    try:
        if isinstance(sink, io.TextIOBase):
            sink.write(text)
        else:
            sink.write(text.encode("utf-8"))
        sink.flush()
    except (OSError, ValueError) as e:
        raise ReportWriteError(f"failed to write report: {e}") from e


def read_report(source: BinaryIO | TextIO) -> dict[str, Any]:
    """Parse a report written by :func:`write_report` and check its envelope."""
    data = source.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ReportError(f"report is not UTF-8: {e}") from e
    try:
        report = json.loads(data)
    except json.JSONDecodeError as e:
        raise ReportError(f"report is not valid JSON: {e}") from e
    if not isinstance(report, dict) or report.get("format") != REPORT_FORMAT:
        raise ReportError("not a kout-mincut report")
    if report.get("version") != REPORT_VERSION:
        raise ReportError(f"unsupported report version {report.get('version')}")
    if report.get("kind") not in REPORT_KINDS:
        raise ReportError(f"unknown report kind {report.get('kind')}")
    return report
