"""Machine-readable output: canonical JSON, fixed-column CSV, run manifests.

Canonical JSON sorts keys, uses compact separators, and serializes every
arbitrary-precision integer as a decimal string so downstream consumers
never truncate past 53 bits. Identical inputs produce identical bytes,
which is what the result digest is computed over.
"""

from __future__ import annotations

import hashlib
import io
import json
import time
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from . import __version__
from .classify import Classification, Order, Verdict
from .exact import Factorization, ReducedRatio
from .hyper import format_quaternion, parse_quaternion
from .search.audit import AuditRow
from .search.enumeration import AlphaRecord

ReportFormat = Literal["table", "json", "csv"]

CSV_COLUMNS = ("n", "factorization", "sigma", "alpha1", "alpha2",
               "omega", "tau", "verdict", "variant")
AUDIT_CSV_COLUMNS = ("table", "row", "status", "discrepancy")


def record_to_dict(rec: AlphaRecord) -> dict:
    cls = rec.classification
    return {
        "n": str(rec.n),
        "factorization": [[str(p), e] for p, e in rec.factorization.parts],
        "sigma": str(rec.sigma),
        "alpha1": str(rec.ratio.num),
        "alpha2": str(rec.ratio.den),
        "omega": cls.omega,
        "tau": cls.tau,
        "verdict": cls.verdict.value,
        "variant": rec.variant,
        "boundary": cls.boundary_flag,
        "order": {
            "under": format_quaternion(rec.order.under),
            "upper": format_quaternion(rec.order.upper),
        },
    }


def record_from_dict(data: dict) -> AlphaRecord:
    """Rebuild a record from its canonical JSON form (round-trip inverse)."""
    parts = tuple((int(p), int(e)) for p, e in data["factorization"])
    n = int(data["n"])
    f = Factorization(n, parts)
    ratio = ReducedRatio(int(data["alpha1"]), int(data["alpha2"]))
    order = Order(
        parse_quaternion(data["order"]["under"]),
        parse_quaternion(data["order"]["upper"]),
    )
    cls = Classification(
        Verdict(data["verdict"]), ratio, int(data["omega"]), int(data["tau"]),
        data["variant"], bool(data["boundary"]),
    )
    return AlphaRecord(n, f, int(data["sigma"]), ratio, cls, order, data["variant"])


def audit_row_to_dict(row: AuditRow) -> dict:
    return {
        "table": row.table_id,
        "row": row.row_key,
        "status": row.status,
        "claimed": dict(row.claimed),
        "computed": dict(row.computed),
        "discrepancy": row.discrepancy,
    }


def canonical_json_bytes(payload) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def result_digest(payload) -> str:
    return hashlib.sha256(canonical_json_bytes(payload)).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility sidecar: what ran, with what, and what came out."""

    command: str
    parameters: dict[str, str]
    tool_version: str
    duration_ms: int
    result_digest: str

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": dict(self.parameters),
            "tool_version": self.tool_version,
            "duration_ms": self.duration_ms,
            "result_digest": self.result_digest,
        }


def build_manifest(command: str, parameters: dict, payload, started: float) -> RunManifest:
    """Digest covers only the payload, so timing never disturbs it."""
    return RunManifest(
        command=command,
        parameters={k: str(v) for k, v in parameters.items()},
        tool_version=__version__,
        duration_ms=int((time.perf_counter() - started) * 1000),
        result_digest=result_digest(payload),
    )


def _csv_escape(value: str) -> str:
    if any(ch in value for ch in ",\"\n"):
        return '"' + value.replace('"', '""') + '"'
    return value


def _records_csv(records: Sequence[AlphaRecord]) -> bytes:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        cls = rec.classification
        lines.append(",".join([
            str(rec.n), str(rec.factorization), str(rec.sigma),
            str(rec.ratio.num), str(rec.ratio.den),
            str(cls.omega), str(cls.tau), cls.verdict.value, rec.variant,
        ]))
    return ("\n".join(lines) + "\n").encode()


def _audit_csv(rows: Sequence[AuditRow]) -> bytes:
    lines = [",".join(AUDIT_CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join([
            _csv_escape(row.table_id), _csv_escape(row.row_key),
            row.status, _csv_escape(row.discrepancy),
        ]))
    return ("\n".join(lines) + "\n").encode()


def _records_table(records: Sequence[AlphaRecord]) -> bytes:
    header = list(CSV_COLUMNS)
    grid = [header]
    for rec in records:
        cls = rec.classification
        grid.append([
            str(rec.n), str(rec.factorization), str(rec.sigma),
            str(rec.ratio.num), str(rec.ratio.den),
            str(cls.omega), str(cls.tau), cls.verdict.value, rec.variant,
        ])
    return _align(grid)


def _audit_table(rows: Sequence[AuditRow]) -> bytes:
    grid = [list(AUDIT_CSV_COLUMNS)]
    for row in rows:
        grid.append([row.table_id, row.row_key, row.status, row.discrepancy])
    return _align(grid)


def _align(grid: list[list[str]]) -> bytes:
    widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
    out = io.StringIO()
    for row in grid:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        out.write("\n")
    return out.getvalue().encode()


def emit_report(
    items: Iterable[AlphaRecord] | Iterable[AuditRow],
    fmt: ReportFormat = "table",
) -> bytes:
    """Serialize a homogeneous list of records or audit rows.

    JSON output is canonical and byte-stable; CSV carries the fixed column
    set; the table format is for human eyes only.
    """
    items = list(items)
    kinds = {type(item) for item in items}
    if len(kinds) > 1:
        raise ValueError("emit_report requires a homogeneous list")
    is_audit = bool(items) and isinstance(items[0], AuditRow)
    if fmt == "json":
        payload = [audit_row_to_dict(i) if is_audit else record_to_dict(i) for i in items]
        return canonical_json_bytes(payload)
    if fmt == "csv":
        return _audit_csv(items) if is_audit else _records_csv(items)
    if fmt == "table":
        if not items:
            return b"(no rows)\n"
        return _audit_table(items) if is_audit else _records_table(items)
    raise ValueError(f"unknown format {fmt!r}")


def parse_records(payload_bytes: bytes) -> list[AlphaRecord]:
    """Parse canonical JSON record output back into records."""
    return [record_from_dict(d) for d in json.loads(payload_bytes)]
