"""Rendering of verification reports as JSON, CSV or text, and atomic file output."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Sequence

from .verify import VerificationReport

FORMATS = ("json", "csv", "text")


def to_json(reports: Sequence[VerificationReport]) -> str:
    if len(reports) == 1:
        payload: Any = reports[0].to_dict()
    else:
        payload = {"passed": all(r.passed for r in reports), "reports": [r.to_dict() for r in reports]}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> list[VerificationReport]:
    payload = json.loads(text)
    if "reports" in payload:
        return [VerificationReport.from_dict(d) for d in payload["reports"]]
    return [VerificationReport.from_dict(payload)]


def to_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "a", "status", "elapsed_ms", "data"])
    for rep in reports:
        for row in rep.rows():
            writer.writerow(
                [row["claim"], row["a"], row["status"], row["elapsed_ms"], json.dumps(row["data"], ensure_ascii=False)]
            )
    return buf.getvalue()


def to_text(reports: Sequence[VerificationReport]) -> str:
    lines = []
    for rep in reports:
        verdict = "PASS" if rep.passed else "FAIL"
        lo_hi = f"{rep.a_range[0]}..{rep.a_range[1]}" if rep.a_range else "-"
        lines.append(f"{rep.claim} [{lo_hi}]: {verdict}")
        for r in rep.results:
            lines.append(f"  a={r.a:<4} {r.status:<5} {r.elapsed_ms:10.1f} ms")
    return "\n".join(lines) + "\n"


def render(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return to_json(reports)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "text":
        return to_text(reports)
    raise ValueError(f"unknown format {fmt!r}")


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
