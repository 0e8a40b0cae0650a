"""Claim report rendering: canonical JSON, CSV rows, markdown summaries.

Rendering is a pure function of the report, with fixed key order and
fixed line endings, so identical suite runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json

from .claims import ClaimInstanceResult, ClaimReport, Witness
from .graph import GraphError

_CSV_HEADER = (
    "claim", "params", "claimed", "computed", "verdict",
    "witness_graph6", "witness_graph6_b", "witness_kind", "witness_vertices",
)


def _witness_dict(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "graph6": w.graph6,
        "graph6_b": w.graph6_b,
        "set_kind": w.set_kind,
        "vertices": list(w.vertices),
    }


def _row_dict(row: ClaimInstanceResult) -> dict:
    return {
        "claim": row.claim_id,
        "params": row.params,
        "claimed": row.claimed,
        "computed": row.computed,
        "verdict": row.verdict,
        "witness": _witness_dict(row.witness),
    }


def render_report(report: ClaimReport, fmt: str) -> str:
    """Render a report as 'json' (canonical), 'csv' or 'markdown' text."""
    if fmt == "json":
        payload = {
            "meta": report.meta,
            "results": [_row_dict(r) for r in report.results],
            "summary": [
                {
                    "claim": s.claim_id,
                    "instances": s.instances,
                    "pass": s.passed,
                    "fail": s.failed,
                    "skipped": s.skipped,
                    "first_counterexample": s.first_counterexample,
                }
                for s in report.summaries
            ],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_HEADER)
        for r in report.results:
            w = r.witness
            writer.writerow([
                r.claim_id, r.params, r.claimed, r.computed, r.verdict,
                w.graph6 if w else "",
                (w.graph6_b or "") if w else "",
                w.set_kind if w else "",
                " ".join(str(v) for v in w.vertices) if w else "",
            ])
        return buf.getvalue()

    if fmt == "markdown":
        lines = ["# 2-domination stability claim report", ""]
        for key in ("max_n", "seed", "corpus"):
            if key in report.meta:
                lines.append(f"- {key}: {report.meta[key]}")
        if "pair_panel" in report.meta:
            lines.append(f"- pair panel: {', '.join(report.meta['pair_panel'])}")
        if "budget" in report.meta:
            budget = ", ".join(f"{k}={v}" for k, v in report.meta["budget"].items())
            lines.append(f"- budget: {budget}")
        if "conventions" in report.meta:
            lines.append("- conventions:")
            for note in report.meta["conventions"]:
                lines.append(f"  - {note}")
        lines.append("")
        by_id = {s.claim_id: s for s in report.summaries}
        claims_meta = {r.claim_id for r in report.results} | set(by_id)
        for claim_id in sorted(claims_meta):
            s = by_id.get(claim_id)
            lines.append(f"## {claim_id}")
            lines.append("")
            lines.append("| instances | pass | fail | skipped |")
            lines.append("| --- | --- | --- | --- |")
            if s is None:
                lines.append("| 0 | 0 | 0 | 0 |")
            else:
                lines.append(
                    f"| {s.instances} | {s.passed} | {s.failed} | {s.skipped} |"
                )
            lines.append("")
            first = s.first_counterexample if s else None
            shown = first.replace("|", "\\|") if first else "none"
            lines.append(f"first counterexample: {shown}")
            lines.append("")
        return "\n".join(lines)

    raise GraphError(f"unknown report format {fmt!r}")
