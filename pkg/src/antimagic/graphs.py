"""Graph families and products with role-tagged vertices.

Every constructor is deterministic: the same parameters always give the same
vertex order and edge order, so a labeling can be stored as a plain sequence
indexed by edge position.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid parameters or a malformed graph."""


@dataclass(frozen=True, order=True)
class VertexRef:
    """A vertex identified by a structural role and 1-based indices.

    Roles used by the built-in families:

    ``center`` (i)          star center u_i of a firecracker
    ``link`` (i)            spine vertex v_{i,1}
    ``leaf`` (i, j)         pendant vertex v_{i,j}, j >= 2
    ``hub`` (tag)           star center; tag 0 for S_k, 1/2 for the double star
    ``hub_leaf`` (i)        leaf v_i of a star or double star
    ``copy`` (i, j, s)      vertex of the copy of H attached to host edge i
    ``path`` (i)            path vertex
    ``iso`` (j)             isolated vertex of an empty graph
    ``k2`` (j, s)           endpoint s of the j-th edge of rK_2
    ``apex`` (1)            join vertex
    ``node`` (i)            vertex of a user-supplied graph
    """

    role: str
    idx: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.role}({','.join(map(str, self.idx))})"

    def to_json(self) -> list:
        return [self.role, *self.idx]

    @classmethod
    def from_json(cls, data: Sequence) -> "VertexRef":
        if not data or not isinstance(data[0], str):
            raise GraphError(f"bad vertex role tuple: {data!r}")
        idx = tuple(int(x) for x in data[1:])
        return cls(data[0], idx)


def vref(role: str, *idx: int) -> VertexRef:
    return VertexRef(role, tuple(idx))


def fc_vertex(i: int, j: int) -> VertexRef:
    """v_{i,j} of a firecracker: the spine link for j == 1, a pendant otherwise."""
    return vref("link", i) if j == 1 else vref("leaf", i, j)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[VertexRef, ...]
    edges: tuple[tuple[int, int], ...]
    family: str = "custom"
    params: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise GraphError("duplicate vertex roles")
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a},{b}) out of range")
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @cached_property
    def index(self) -> dict[VertexRef, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in self.vertices]
        for e, (a, b) in enumerate(self.edges):
            inc[a].append(e)
            inc[b].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(x) for x in nb)

    @cached_property
    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        return {(min(a, b), max(a, b)): e for e, (a, b) in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def edge_between(self, u: VertexRef | int, v: VertexRef | int) -> int:
        a = u if isinstance(u, int) else self.index[u]
        b = v if isinstance(v, int) else self.index[v]
        try:
            return self._edge_lookup[(min(a, b), max(a, b))]
        except KeyError:
            raise GraphError(f"no edge between {self.vertices[a]} and {self.vertices[b]}") from None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {0}
        todo = deque([0])
        while todo:
            x = todo.popleft()
            for y in self.neighbors[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == self.order

    def is_tree(self) -> bool:
        return self.size == self.order - 1 and self.is_connected()

    def is_regular(self) -> bool:
        return len({len(x) for x in self.incidence}) <= 1

    def bipartition(self) -> tuple[int, ...] | None:
        """Side (0/1) of every vertex, or None if the graph has an odd cycle."""
        side = [-1] * self.order
        for s in range(self.order):
            if side[s] >= 0:
                continue
            side[s] = 0
            todo = deque([s])
            while todo:
                x = todo.popleft()
                for y in self.neighbors[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        todo.append(y)
                    elif side[y] == side[x]:
                        return None
        return tuple(side)

    def describe(self) -> str:
        p = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({p})"


def _check_pos(**kw: int) -> None:
    for name, val in kw.items():
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise GraphError(f"{name} must be a positive integer, got {val!r}")


def _build(vertices: Iterable[VertexRef], edges: Iterable[tuple[VertexRef, VertexRef]],
           family: str, params: dict[str, int]) -> Graph:
    vs = tuple(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    es = tuple((pos[a], pos[b]) for a, b in edges)
    return Graph(vs, es, family, tuple(params.items()))


def make_star(k: int) -> Graph:
    """S_k: order c, v_1..v_k."""
    _check_pos(k=k)
    c = vref("hub", 0)
    leaves = [vref("hub_leaf", i) for i in range(1, k + 1)]
    return _build([c, *leaves], [(c, v) for v in leaves], "star", {"k": k})


def make_double_star(k1: int, k2: int) -> Graph:
    """S_{k1,k2}: order c_1, c_2, v_1..v_{k1+k2}; edge 1 is c_1c_2.

    Leaves v_1..v_{k1} hang on c_1 and the rest on c_2.
    """
    _check_pos(k1=k1, k2=k2)
    if k1 > k2:
        raise GraphError(f"double star needs k1 <= k2, got ({k1},{k2})")
    c1, c2 = vref("hub", 1), vref("hub", 2)
    leaves = [vref("hub_leaf", i) for i in range(1, k1 + k2 + 1)]
    edges = [(c1, c2)]
    edges += [(c1, v) for v in leaves[:k1]]
    edges += [(c2, v) for v in leaves[k1:]]
    return _build([c1, c2, *leaves], edges, "double_star", {"k1": k1, "k2": k2})


def make_firecracker(n: int, k: int) -> Graph:
    """F_{n,k}: per i the block u_i, v_{i,1}..v_{i,k}.

    Edge order per i: u_i v_{i,1}..u_i v_{i,k}, then the spine edge
    v_{i,1}v_{i+1,1} when i < n.
    """
    _check_pos(n=n, k=k)
    verts: list[VertexRef] = []
    edges: list[tuple[VertexRef, VertexRef]] = []
    for i in range(1, n + 1):
        u = vref("center", i)
        verts.append(u)
        for j in range(1, k + 1):
            verts.append(fc_vertex(i, j))
            edges.append((u, fc_vertex(i, j)))
        if i < n:
            edges.append((fc_vertex(i, 1), fc_vertex(i + 1, 1)))
    return _build(verts, edges, "firecracker", {"n": n, "k": k})


def make_path(n: int) -> Graph:
    _check_pos(n=n)
    vs = [vref("path", i) for i in range(1, n + 1)]
    return _build(vs, zip(vs, vs[1:]), "path", {"n": n})


def make_empty(r: int) -> Graph:
    """The edgeless graph on r vertices (only meaningful as an H argument)."""
    _check_pos(r=r)
    return _build([vref("iso", j) for j in range(1, r + 1)], [], "empty", {"r": r})


def disjoint_copies_k2(r: int) -> Graph:
    """rK_2 with vertex order (j=1,s=1), (j=2,s=1), ..., then all s=2 ends."""
    _check_pos(r=r)
    vs = [vref("k2", j, s) for s in (1, 2) for j in range(1, r + 1)]
    edges = [(vref("k2", j, 1), vref("k2", j, 2)) for j in range(1, r + 1)]
    return _build(vs, edges, "copies_k2", {"r": r})


def make_complete_two() -> Graph:
    g = disjoint_copies_k2(1)
    return Graph(g.vertices, g.edges, "k2", ())


def _copy_key(h: Graph, p: int) -> tuple[int, int]:
    v = h.vertices[p]
    if v.role == "iso":
        return v.idx[0], 0
    if v.role == "k2":
        return v.idx[0], v.idx[1]
    return p + 1, 0


def edge_corona(g: Graph, h: Graph) -> Graph:
    """G ◇ H: one copy of H per edge of G, joined to both ends of that edge.

    The copy vertex for host edge i (1-based) and H vertex (j, s) is
    ``copy(i, j, s)``. Copy vertices are ordered by (s, j, i), which is the
    row order of the printed labeling matrices.
    """
    if g.size == 0:
        raise GraphError("edge corona needs a host graph with at least one edge")
    if not g.is_connected():
        raise GraphError("edge corona host graph must be connected")
    keys = [_copy_key(h, p) for p in range(h.order)]
    copies = sorted(
        ((s, j, i) for i in range(1, g.size + 1) for (j, s) in keys),
    )
    verts = list(g.vertices) + [vref("copy", i, j, s) for s, j, i in copies]
    edges: list[tuple[VertexRef, VertexRef]] = [
        (g.vertices[a], g.vertices[b]) for a, b in g.edges
    ]
    for s, j, i in copies:
        a, b = g.edges[i - 1]
        x = vref("copy", i, j, s)
        edges.append((g.vertices[a], x))
        edges.append((g.vertices[b], x))
    for i in range(1, g.size + 1):
        for a, b in h.edges:
            ja, sa = keys[a]
            jb, sb = keys[b]
            edges.append((vref("copy", i, ja, sa), vref("copy", i, jb, sb)))
    params = {f"g_{k}": v for k, v in g.params} | {f"h_{k}": v for k, v in h.params}
    return _build(verts, edges, f"corona[{g.family},{h.family}]", params)


def join_with_single_vertex(g: Graph) -> Graph:
    """G ∨ K_1: a new apex adjacent to every vertex, appended last."""
    apex = vref("apex", 1)
    if apex in g.index:
        raise GraphError("graph already has an apex vertex")
    verts = [*g.vertices, apex]
    edges = [(g.vertices[a], g.vertices[b]) for a, b in g.edges]
    edges += [(v, apex) for v in g.vertices]
    return _build(verts, edges, f"join[{g.family}]", dict(g.params))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """A plain graph on vertices node(1..n) from 0-based index pairs."""
    vs = tuple(vref("node", i) for i in range(1, n + 1))
    return Graph(vs, tuple((int(a), int(b)) for a, b in edges), "custom", ())


@dataclass(frozen=True)
class FamilySpec:
    """A named family with integer parameters, parseable from ``name:a,b``."""

    family: str
    params: tuple[int, ...] = ()

    _ARITY = {
        "star": ("k",),
        "double_star": ("k1", "k2"),
        "firecracker": ("n", "k"),
        "path": ("n",),
        "empty": ("r",),
        "k2": (),
        "copies_k2": ("r",),
    }
    _ALIASES = {
        "dstar": "double_star", "double-star": "double_star", "fc": "firecracker",
        "copies-k2": "copies_k2", "rk2": "copies_k2", "complete-two": "k2",
    }

    def __post_init__(self) -> None:
        if self.family not in self._ARITY:
            raise GraphError(f"unknown family {self.family!r}")
        if len(self.params) != len(self._ARITY[self.family]):
            raise GraphError(
                f"{self.family} takes {len(self._ARITY[self.family])} parameter(s)"
            )

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, rest = text.partition(":")
        name = cls._ALIASES.get(name.strip(), name.strip())
        try:
            params = tuple(int(x) for x in rest.split(",") if x.strip())
        except ValueError:
            raise GraphError(f"bad parameters in {text!r}") from None
        return cls(name, params)

    def build(self) -> Graph:
        p = self.params
        match self.family:
            case "star":
                return make_star(*p)
            case "double_star":
                return make_double_star(*p)
            case "firecracker":
                return make_firecracker(*p)
            case "path":
                return make_path(*p)
            case "empty":
                return make_empty(*p)
            case "k2":
                return make_complete_two()
            case _:
                return disjoint_copies_k2(*p)

    def to_json(self) -> dict:
        return {"family": self.family, "params": dict(zip(self._ARITY[self.family], self.params))}
