"""JSON, DOT and CSV serialization.

Every JSON document carries ``"format": 1``. Parsers reject other versions.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .graphs import Graph, GraphError, VertexRef
from .labeling import EdgeLabeling, LabelingError, TotalLabeling

FORMAT = 1


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _version(data: Any, what: str) -> dict:
    if not isinstance(data, dict):
        raise FormatError(f"{what}: expected a JSON object")
    if data.get("format") != FORMAT:
        raise FormatError(f"{what}: unsupported format {data.get('format')!r}")
    return data


def graph_to_json(g: Graph) -> dict:
    return {
        "format": FORMAT,
        "family": g.family,
        "params": dict(g.params),
        "vertices": [v.to_json() for v in g.vertices],
        "edges": [list(e) for e in g.edges],
    }


def graph_from_json(data: Any) -> Graph:
    data = _version(data, "graph")
    try:
        verts = tuple(VertexRef.from_json(v) for v in data["vertices"])
        edges = tuple((int(a), int(b)) for a, b in data["edges"])
        params = tuple((str(k), int(v)) for k, v in data.get("params", {}).items())
        return Graph(verts, edges, str(data.get("family", "custom")), params)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise FormatError(f"graph: {exc}") from exc
        raise FormatError(f"graph: malformed document ({exc})") from exc


def labeling_to_json(lab: EdgeLabeling | TotalLabeling) -> dict:
    g = lab.graph
    out: dict[str, Any] = {
        "format": FORMAT,
        "graph": {"family": g.family, "params": dict(g.params)},
        "kind": lab.kind,
        "claimed_colors": lab.claimed_colors,
    }
    if isinstance(lab, TotalLabeling):
        out["vertex_labels"] = [[i, x] for i, x in enumerate(lab.vertex_labels)]
        out["edge_labels"] = [[i, x] for i, x in enumerate(lab.edge_labels)]
    else:
        out["labels"] = [[i, x] for i, x in enumerate(lab.labels)]
    return out


def _indexed(pairs: Any, n: int, what: str) -> tuple[int, ...]:
    vals: list[int | None] = [None] * n
    for item in pairs:
        i, x = int(item[0]), int(item[1])
        if not 0 <= i < n:
            raise FormatError(f"{what}: index {i} out of range")
        if vals[i] is not None:
            raise FormatError(f"{what}: index {i} given twice")
        vals[i] = x
    if any(v is None for v in vals):
        raise FormatError(f"{what}: {sum(v is None for v in vals)} entries missing")
    return tuple(vals)  # type: ignore[arg-type]


def labeling_from_json(data: Any, g: Graph) -> EdgeLabeling | TotalLabeling:
    data = _version(data, "labeling")
    claimed = data.get("claimed_colors")
    try:
        if data.get("kind") == "total":
            return TotalLabeling(
                g,
                _indexed(data["vertex_labels"], g.order, "vertex_labels"),
                _indexed(data["edge_labels"], g.size, "edge_labels"),
                claimed,
            )
        if data.get("kind") == "edge":
            return EdgeLabeling(g, _indexed(data["labels"], g.size, "labels"), claimed)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        if isinstance(exc, LabelingError):
            raise FormatError(f"labeling: {exc}") from exc
        raise FormatError(f"labeling: malformed document ({exc})") from exc
    raise FormatError(f"labeling: unknown kind {data.get('kind')!r}")


def to_dot(g: Graph, lab: EdgeLabeling | TotalLabeling | None = None) -> str:
    lines = ["graph G {"]
    for i, v in enumerate(g.vertices):
        text = str(v)
        if isinstance(lab, TotalLabeling):
            text += f" [{lab.vertex_labels[i]}]"
        lines.append(f'  n{i} [label="{text}"];')
    for e, (a, b) in enumerate(g.edges):
        attr = ""
        if lab is not None:
            x = lab.edge_labels[e] if isinstance(lab, TotalLabeling) else lab.labels[e]
            attr = f' [label="{x}"]'
        lines.append(f"  n{a} -- n{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def csv_text(header: list[str], rows: list[tuple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def parse_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))
