"""Weights, certification reports and lower bounds.

``check`` never raises on a bad labeling. Every problem is listed in the
report so a failing construction can be traced to specific indices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph
from .labeling import EdgeLabeling, Labeling, TotalLabeling

EXIT_OK = 0
EXIT_BIJECTION = 1
EXIT_PROPER = 2

CLIQUE_CAP = 5


def weights_edge(g: Graph, f: EdgeLabeling) -> tuple[int, ...]:
    """ω(u): sum of labels on edges incident to u, indexed by vertex."""
    if f.graph is not g and f.graph != g:
        raise ValueError("labeling belongs to a different graph")
    return tuple(sum(f.labels[e] for e in inc) for inc in g.incidence)


def weights_total(g: Graph, t: TotalLabeling) -> tuple[int, ...]:
    """ω_t(u) = g(u) + sum of incident edge labels."""
    if t.graph is not g and t.graph != g:
        raise ValueError("labeling belongs to a different graph")
    return tuple(
        t.vertex_labels[v] + sum(t.edge_labels[e] for e in inc)
        for v, inc in enumerate(g.incidence)
    )


def weights(labeling: Labeling) -> tuple[int, ...]:
    if isinstance(labeling, TotalLabeling):
        return weights_total(labeling.graph, labeling)
    return weights_edge(labeling.graph, labeling)


def leaf_lower_bound(g: Graph) -> int | None:
    """Number of leaves plus one for a tree; None when g is not a tree."""
    if not g.is_tree() or g.order < 3:
        return None
    return sum(1 for inc in g.incidence if len(inc) == 1) + 1


def clique_lower_bound(g: Graph, cap: int = CLIQUE_CAP) -> int:
    """Largest clique size found, searching up to ``cap`` vertices."""
    if g.order == 0:
        return 0
    best = 1 if g.size == 0 else 2
    nb = g.neighbors

    def grow(clique: list[int], cand: list[int]) -> None:
        nonlocal best
        if len(clique) > best:
            best = len(clique)
        if best >= cap or len(clique) + len(cand) <= best:
            return
        for pos, v in enumerate(cand):
            if best >= cap:
                return
            grow(clique + [v], [w for w in cand[pos + 1:] if w in nb[v]])

    for v in range(g.order):
        if best >= cap:
            break
        grow([v], [w for w in nb[v] if w > v])
    return min(best, cap)


@dataclass(frozen=True)
class Violation:
    kind: str  # "shape" | "range" | "duplicate" | "missing" | "adjacent"
    detail: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": list(self.detail)}


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    bijection_ok: bool
    proper_ok: bool
    weights: tuple[int, ...]
    color_classes: dict[int, tuple[int, ...]]
    leaf_bound: int | None
    clique_bound: int
    violations: tuple[Violation, ...] = field(default=())

    @property
    def color_count(self) -> int:
        return len(self.color_classes)

    @property
    def certified(self) -> bool:
        return self.bijection_ok and self.proper_ok

    @property
    def exit_code(self) -> int:
        if not self.bijection_ok:
            return EXIT_BIJECTION
        if not self.proper_ok:
            return EXIT_PROPER
        return EXIT_OK

    def class_id(self) -> dict[int, int]:
        """Weight -> class number, numbered by increasing weight."""
        return {w: c for c, w in enumerate(sorted(self.color_classes))}

    def to_json(self, g: Graph) -> dict:
        return {
            "format": 1,
            "kind": self.kind,
            "bijection_ok": self.bijection_ok,
            "proper_ok": self.proper_ok,
            "certified": self.certified,
            "color_count": self.color_count,
            "colors": sorted(self.color_classes),
            "weights": [[g.vertices[v].to_json(), w] for v, w in enumerate(self.weights)],
            "lower_bounds": {"leaf_bound": self.leaf_bound, "clique_bound": self.clique_bound},
            "violations": [x.to_json() for x in self.violations],
        }

    def csv_rows(self, g: Graph) -> list[tuple[str, int, int]]:
        ids = self.class_id()
        return [(str(g.vertices[v]), w, ids[w]) for v, w in enumerate(self.weights)]


def _label_violations(labels: list[int], top: int) -> list[Violation]:
    out: list[Violation] = []
    bad = sorted({x for x in labels if not isinstance(x, int) or not 1 <= x <= top})
    if bad:
        out.append(Violation("range", tuple(bad)))
    counts = Counter(labels)
    dup = sorted(x for x, c in counts.items() if c > 1)
    if dup:
        out.append(Violation("duplicate", tuple(dup)))
    missing = sorted(set(range(1, top + 1)) - set(counts))
    if missing:
        out.append(Violation("missing", tuple(missing)))
    return out


def check(g: Graph, labeling: Labeling) -> VerificationReport:
    if isinstance(labeling, TotalLabeling):
        kind = "total"
        labels = list(labeling.vertex_labels) + list(labeling.edge_labels)
        shape_ok = (len(labeling.vertex_labels) == g.order
                    and len(labeling.edge_labels) == g.size)
        top = g.order + g.size
    else:
        kind = "edge"
        labels = list(labeling.labels)
        shape_ok = len(labels) == g.size
        top = g.size
    if not shape_ok:
        return VerificationReport(
            kind, False, False, (), {}, leaf_lower_bound(g), clique_lower_bound(g),
            (Violation("shape", (len(labels), top)),),
        )
    violations = _label_violations(labels, top)
    bijection_ok = not violations
    w = weights_total(g, labeling) if kind == "total" else weights_edge(g, labeling)
    for a, b in g.edges:
        if w[a] == w[b]:
            violations.append(Violation("adjacent", (a, b, w[a])))
    proper_ok = not any(x.kind == "adjacent" for x in violations)
    classes: dict[int, list[int]] = {}
    for v, x in enumerate(w):
        classes.setdefault(x, []).append(v)
    return VerificationReport(
        kind,
        bijection_ok,
        proper_ok,
        w,
        {x: tuple(vs) for x, vs in sorted(classes.items())},
        leaf_lower_bound(g),
        clique_lower_bound(g),
        tuple(violations),
    )


def has_clique(g: Graph, size: int) -> bool:
    """Brute-force clique test, used only to cross-check the bounded search."""
    return any(
        all(b in g.neighbors[a] for a, b in combinations(c, 2))
        for c in combinations(range(g.order), size)
    )
