"""DOT, JSON and CSV writers for interval graphs and reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .analysis import CSV_COLUMNS, IntervalReport, SweepSummary
from .moment_graph import EdgeSet, IntervalGraph

WITNESS_COLOR = "red"


def _root_label(label) -> str:
    return "(" + ",".join(str(c) for c in label) + ")"


def graph_to_dot(graph: IntervalGraph, witness: EdgeSet | None = None, name: str = "interval") -> str:
    """Undirected DOT; Hasse edges solid, long edges dashed, witness coloured.

    Vertices of equal length share a rank so the drawing reads bottom-up.
    """
    W = graph.system
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_len: dict[int, list[int]] = {}
    for i, ell in enumerate(graph.lengths):
        by_len.setdefault(ell, []).append(i)
    for i, w in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{W.format_word(w)}"];')
    for ell in sorted(by_len):
        lines.append("  { rank=same; " + " ".join(f"v{i};" for i in by_len[ell]) + " }")
    for k, e in enumerate(graph.edges):
        attrs = [f'label="{_root_label(e.label)}"', f"style={'solid' if e.is_hasse else 'dashed'}"]
        if witness is not None and k in witness:
            attrs.append(f"color={WITNESS_COLOR}")
            attrs.append("penwidth=2")
        lines.append(f"  v{e.u} -- v{e.v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: IntervalGraph, witness: EdgeSet | None = None) -> str:
    W = graph.system
    payload = {
        "group": str(W.spec),
        "x": W.format_word(graph.x),
        "y": W.format_word(graph.y),
        "vertices": [
            {"id": i, "word": W.format_word(w), "length": graph.lengths[i]}
            for i, w in enumerate(graph.vertices)
        ],
        "edges": [
            {"id": k, "u": e.u, "v": e.v, "label": list(e.label), "hasse": e.is_hasse}
            for k, e in enumerate(graph.edges)
        ],
        "witness": sorted(witness) if witness is not None else None,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reports_to_csv(reports: Iterable[IntervalReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(rep.csv_row())
    return buf.getvalue()


def reports_to_json(reports: Iterable[IntervalReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def summary_dict(summary: SweepSummary) -> dict:
    return {
        "group": summary.group,
        "total": summary.total,
        "failures": summary.failures,
        "errors": summary.errors,
        "budget_exceeded": summary.budget_exceeded,
    }
