"""Exact search for χ_la and χ_lat on small graphs.

The search assigns labels to a fixed sequence of elements (edges, plus
vertices for total labelings) in increasing label order, so the first witness
found at the optimal color count is the lexicographically smallest one in
that sequence. Pruning never discards a labeling that could still improve on
the incumbent:

* a vertex whose incident elements are all labeled has a fixed weight; a
  clash with a finished neighbor kills the branch
* once the distinct finished weights reach the incumbent's count, every
  unfinished vertex must still be able to hit one of those weights
* on regular graphs the complement x -> N + 1 - x maps labelings to
  labelings with the same color count, so the first element only takes
  labels up to (N + 1) / 2
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Literal, Sequence

from .graphs import Graph
from .labeling import EdgeLabeling, TotalLabeling
from .verify import check, clique_lower_bound

Kind = Literal["edge", "total"]
DEFAULT_GUARD = 12

EXHAUSTED = "exhausted"
INFEASIBLE = "infeasible"
IMPOSSIBLE = "impossible"


class GuardExceeded(ValueError):
    """The instance is too large for exhaustive search."""


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 200_000_000
    wall_clock_limit: float = 60.0
    mode: Literal["exhaustive", "first-witness"] = "exhaustive"

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.wall_clock_limit <= 0:
            raise ValueError("search budget limits must be positive")
        if self.mode not in ("exhaustive", "first-witness"):
            raise ValueError(f"unknown search mode {self.mode!r}")


@dataclass(frozen=True)
class OracleResult:
    value: int | str
    witness: EdgeLabeling | TotalLabeling | None
    explored: int
    elapsed_ms: int

    @property
    def definite(self) -> bool:
        return isinstance(self.value, int)

    def to_json(self) -> dict:
        from .formats import labeling_to_json

        return {
            "format": 1,
            "value": self.value,
            "witness": labeling_to_json(self.witness) if self.witness else None,
            "explored": self.explored,
            "elapsed_ms": self.elapsed_ms,
        }


class _OutOfBudget(Exception):
    pass


def _guard(g: Graph, kind: Kind, guard: int) -> None:
    n = g.size if kind == "edge" else g.size + g.order
    if n > guard:
        what = "|E|" if kind == "edge" else "|V|+|E|"
        raise GuardExceeded(f"{what} = {n} exceeds the search guard {guard}")


def _elements(g: Graph, kind: Kind) -> tuple[list[tuple[int, ...]], list[int]]:
    """Element sequence and the vertices each element touches.

    Elements are emitted vertex by vertex, starting with the vertex that has
    the fewest incident elements, so that weights get fixed early.
    """
    owned: list[list[tuple[str, int]]] = []
    for v in range(g.order):
        own = [("e", e) for e in g.incidence[v]]
        if kind == "total":
            own.append(("v", v))
        owned.append(own)
    placed: set[tuple[str, int]] = set()
    order: list[tuple[str, int]] = []
    done = [False] * g.order
    for _ in range(g.order):
        best = min(
            (v for v in range(g.order) if not done[v]),
            key=lambda v: (sum(1 for x in owned[v] if x not in placed), -g.degree(v), v),
        )
        done[best] = True
        for x in owned[best]:
            if x not in placed:
                placed.add(x)
                order.append(x)
    touches = []
    for typ, i in order:
        touches.append(g.edges[i] if typ == "e" else (i,))
    return order, touches  # type: ignore[return-value]


class _Search:
    def __init__(self, g: Graph, kind: Kind, budget: SearchBudget):
        self.g = g
        self.kind = kind
        self.budget = budget
        self.order, self.touches = _elements(g, kind)
        self.N = len(self.order)
        self.nodes = 0
        self.t0 = time.monotonic()
        self.rem = [len(g.incidence[v]) + (kind == "total") for v in range(g.order)]
        self.partial = [0] * g.order
        self.weight: list[int | None] = [None] * g.order
        self.color_use: dict[int, int] = {}
        self.used = [False] * (self.N + 1)
        self.assign = [0] * self.N
        self.sym = g.is_regular()

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes >= self.budget.max_nodes:
            raise _OutOfBudget
        if self.nodes & 0xFFF == 0 and time.monotonic() - self.t0 > self.budget.wall_clock_limit:
            raise _OutOfBudget

    def _reachable(self, cap: int) -> bool:
        """With cap colors already in use, can every open vertex land on one?"""
        if len(self.color_use) < cap:
            return True
        free = [x for x in range(1, self.N + 1) if not self.used[x]]
        colors = sorted(self.color_use)
        for v in range(self.g.order):
            r = self.rem[v]
            if r == 0:
                continue
            lo = self.partial[v] + sum(free[:r])
            hi = self.partial[v] + sum(free[-r:])
            if not any(lo <= c <= hi for c in colors):
                return False
        return True

    def run(self, cap: int, exact: bool, minimize: bool):
        """Search for a labeling with at most ``cap`` colors.

        With ``minimize`` the cap tightens after every hit and the best
        labeling found is returned. Returns (colors, labels) or None.
        """
        self.best: tuple[int, list[int]] | None = None
        self.cap = cap
        self.exact = exact
        self.minimize = minimize
        self._rec(0)
        return self.best

    def _rec(self, pos: int) -> bool:
        if pos == self.N:
            k = len(self.color_use)
            if self.exact and k != self.cap:
                return False
            self.best = (k, list(self.assign))
            if self.minimize:
                self.cap = k - 1
                return self.cap < self.floor
            return True
        self._tick()
        top = self.N
        if pos == 0 and self.sym:
            top = (self.N + 1) // 2
        touched = self.touches[pos]
        for lab in range(1, top + 1):
            if self.used[lab]:
                continue
            self.used[lab] = True
            self.assign[pos] = lab
            finished = []
            ok = True
            for v in touched:
                self.partial[v] += lab
                self.rem[v] -= 1
                if self.rem[v] == 0:
                    w = self.partial[v]
                    self.weight[v] = w
                    finished.append(v)
                    self.color_use[w] = self.color_use.get(w, 0) + 1
                    if any(self.weight[u] == w for u in self.g.neighbors[v]):
                        ok = False
            if ok and len(self.color_use) > self.cap:
                ok = False
            if ok and not self._reachable(self.cap):
                ok = False
            if ok and self._rec(pos + 1):
                stop = True
            else:
                stop = False
            for v in finished:
                w = self.partial[v]
                self.weight[v] = None
                c = self.color_use[w] - 1
                if c:
                    self.color_use[w] = c
                else:
                    del self.color_use[w]
            for v in touched:
                self.partial[v] -= lab
                self.rem[v] += 1
            self.used[lab] = False
            if stop:
                return True
        return False

    def labeling(self, labels: Sequence[int], claimed: int):
        g = self.g
        edge = [0] * g.size
        vert = [0] * g.order
        for (typ, i), lab in zip(self.order, labels):
            if typ == "e":
                edge[i] = lab
            else:
                vert[i] = lab
        if self.kind == "edge":
            return EdgeLabeling(g, tuple(edge), claimed)
        return TotalLabeling(g, tuple(vert), tuple(edge), claimed)


def _floor(g: Graph) -> int:
    return max(1, clique_lower_bound(g))


def _exact(g: Graph, kind: Kind, budget: SearchBudget | None, guard: int,
           incumbent: int | None) -> OracleResult:
    _guard(g, kind, guard)
    budget = budget or SearchBudget()
    s = _Search(g, kind, budget)
    s.floor = _floor(g)
    start = incumbent if incumbent is not None else g.order
    try:
        found = s.run(start, exact=False, minimize=True)
    except _OutOfBudget:
        found = None
        elapsed = int((time.monotonic() - s.t0) * 1000)
        best = s.best
        return OracleResult(EXHAUSTED, s.labeling(best[1], best[0]) if best else None,
                            s.nodes, elapsed)
    elapsed = int((time.monotonic() - s.t0) * 1000)
    if found is None:
        return OracleResult(INFEASIBLE, None, s.nodes, elapsed)
    k, labels = found
    return OracleResult(k, s.labeling(labels, k), s.nodes, elapsed)


def exact_chi_la(g: Graph, budget: SearchBudget | None = None, guard: int = DEFAULT_GUARD,
                 incumbent: int | None = None) -> OracleResult:
    """Minimum color count over local antimagic edge labelings of g."""
    return _exact(g, "edge", budget, guard, incumbent)


def exact_chi_lat(g: Graph, budget: SearchBudget | None = None, guard: int = DEFAULT_GUARD,
                  incumbent: int | None = None) -> OracleResult:
    """Minimum color count over local antimagic total labelings of g."""
    return _exact(g, "total", budget, guard, incumbent)


def exists_with_colors(g: Graph, c: int, kind: Kind = "edge",
                       budget: SearchBudget | None = None,
                       guard: int = DEFAULT_GUARD) -> OracleResult:
    """First labeling (in search order) with exactly c colors."""
    _guard(g, kind, guard)
    budget = budget or SearchBudget(mode="first-witness")
    s = _Search(g, kind, budget)
    s.floor = 0
    try:
        found = s.run(c, exact=True, minimize=False)
    except _OutOfBudget:
        return OracleResult(EXHAUSTED, None, s.nodes, int((time.monotonic() - s.t0) * 1000))
    elapsed = int((time.monotonic() - s.t0) * 1000)
    if found is None:
        return OracleResult(IMPOSSIBLE, None, s.nodes, elapsed)
    return OracleResult(c, s.labeling(found[1], c), s.nodes, elapsed)


def brute_force_chi(g: Graph, kind: Kind = "edge") -> int | None:
    """Plain enumeration of every bijection; only for cross-checking tiny cases."""
    n_el = g.size + (g.order if kind == "total" else 0)
    best = None
    for perm in permutations(range(1, n_el + 1)):
        if kind == "edge":
            lab = EdgeLabeling(g, perm)
        else:
            lab = TotalLabeling(g, perm[g.size:], perm[:g.size])
        rep = check(g, lab)
        if rep.proper_ok and (best is None or rep.color_count < best):
            best = rep.color_count
    return best


def search_prescribed_total(g: Graph, targets: Sequence[int],
                            budget: SearchBudget | None = None) -> TotalLabeling | None:
    """A total labeling whose weight at every vertex v equals ``targets[v]``.

    Vertices are processed in graph order. At each vertex the unlabeled
    incident edges are tried in increasing label order and the vertex's own
    label is then forced by its target.
    """
    budget = budget or SearchBudget(mode="first-witness")
    N = g.order + g.size
    used = [False] * (N + 1)
    edge = [0] * g.size
    vert = [0] * g.order
    t0 = time.monotonic()
    nodes = 0

    def rec(v: int) -> bool:
        nonlocal nodes
        if v == g.order:
            return True
        nodes += 1
        if nodes >= budget.max_nodes or (
                nodes & 0xFFF == 0 and time.monotonic() - t0 > budget.wall_clock_limit):
            raise _OutOfBudget
        free = [e for e in g.incidence[v] if edge[e] == 0]
        base = sum(edge[e] for e in g.incidence[v] if edge[e])
        return fill(v, free, 0, base)

    def fill(v: int, free: list[int], pos: int, acc: int) -> bool:
        if pos == len(free):
            own = targets[v] - acc
            if not 1 <= own <= N or used[own]:
                return False
            used[own] = True
            vert[v] = own
            if rec(v + 1):
                return True
            used[own] = False
            vert[v] = 0
            return False
        for lab in range(1, N + 1):
            if used[lab] or acc + lab >= targets[v]:
                continue
            used[lab] = True
            edge[free[pos]] = lab
            if fill(v, free, pos + 1, acc + lab):
                return True
            edge[free[pos]] = 0
            used[lab] = False
        return False

    try:
        ok = rec(0)
    except _OutOfBudget:
        return None
    return TotalLabeling(g, tuple(vert), tuple(edge), None) if ok else None
