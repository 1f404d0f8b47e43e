"""Edge and total labelings stored as sequences aligned with the graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graphs import Graph, VertexRef


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeLabeling:
    """f: E -> [1, m]; ``labels[e]`` is the label of edge index e."""

    graph: Graph
    labels: tuple[int, ...]
    claimed_colors: int | None = None

    kind = "edge"

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.size:
            raise LabelingError(
                f"{len(self.labels)} labels for {self.graph.size} edges"
            )

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Mapping[tuple[VertexRef, VertexRef], int],
                   claimed_colors: int | None = None) -> "EdgeLabeling":
        """Build from a map keyed by edge endpoints (in either order)."""
        labels: list[int | None] = [None] * g.size
        for (a, b), lab in pairs.items():
            e = g.edge_between(a, b)
            if labels[e] is not None:
                raise LabelingError(f"edge {a}-{b} labeled twice")
            labels[e] = lab
        missing = [g.edges[e] for e, x in enumerate(labels) if x is None]
        if missing:
            a, b = missing[0]
            raise LabelingError(
                f"{len(missing)} unlabeled edges, e.g. {g.vertices[a]}-{g.vertices[b]}"
            )
        return cls(g, tuple(labels), claimed_colors)  # type: ignore[arg-type]

    def label_of(self, a: VertexRef, b: VertexRef) -> int:
        return self.labels[self.graph.edge_between(a, b)]

    def replace(self, edge: int, label: int) -> "EdgeLabeling":
        labs = list(self.labels)
        labs[edge] = label
        return EdgeLabeling(self.graph, tuple(labs), self.claimed_colors)


@dataclass(frozen=True)
class TotalLabeling:
    """g: V ∪ E -> [1, n+m], split into per-vertex and per-edge sequences."""

    graph: Graph
    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]
    claimed_colors: int | None = None

    kind = "total"

    def __post_init__(self) -> None:
        if len(self.vertex_labels) != self.graph.order:
            raise LabelingError("vertex label count does not match the graph")
        if len(self.edge_labels) != self.graph.size:
            raise LabelingError("edge label count does not match the graph")

    @classmethod
    def from_maps(cls, g: Graph, vertex_map: Mapping[VertexRef, int],
                  edge_map: Mapping[tuple[VertexRef, VertexRef], int],
                  claimed_colors: int | None = None) -> "TotalLabeling":
        edges = EdgeLabeling.from_pairs(g, edge_map).labels
        missing = [v for v in g.vertices if v not in vertex_map]
        if missing:
            raise LabelingError(f"{len(missing)} unlabeled vertices, e.g. {missing[0]}")
        extra = set(vertex_map) - set(g.vertices)
        if extra:
            raise LabelingError(f"labels for unknown vertices: {sorted(map(str, extra))[:3]}")
        verts = tuple(vertex_map[v] for v in g.vertices)
        return cls(g, verts, edges, claimed_colors)

    def vertex_label(self, v: VertexRef) -> int:
        return self.vertex_labels[self.graph.index[v]]

    def label_of(self, a: VertexRef, b: VertexRef) -> int:
        return self.edge_labels[self.graph.edge_between(a, b)]


Labeling = EdgeLabeling | TotalLabeling
