"""Labeling matrices for the edge-corona products G ◇ K̄_r and G ◇ rK_2.

G is a star S_k or a double star S_{k1,k2}. A double star is handled as a
star with t = k1 + k2 + 1 host edges: host edge 1 is c_1c_2, then the
c_1 v_i edges, then the c_2 v_i edges, exactly the edge order of
:func:`antimagic.graphs.make_double_star`.

A *plan* stores, for every host edge i and copy j, the label toward the
first endpoint of edge i (``top``, the hub row of the matrix) and toward the
second endpoint (``side``, the diagonal blocks). For rK_2 there are two such
layers plus the ``pair`` labels on the K_2 edges themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graphs import (
    Graph, GraphError, VertexRef, disjoint_copies_k2, edge_corona, make_double_star,
    make_empty, make_star, vref,
)
from .labeling import EdgeLabeling

LabelVector = tuple[int, ...]
STAR = "★"


class MatrixError(ValueError):
    pass


class AssemblyFailure(MatrixError):
    """An assembled matrix induces an improper coloring."""


@dataclass(frozen=True)
class DiagBlock:
    diagonal: LabelVector

    @property
    def dimension(self) -> int:
        return len(self.diagonal)


@dataclass(frozen=True)
class VectorTriple:
    head: int
    mid: LabelVector
    tail: LabelVector

    def concat(self) -> LabelVector:
        return (self.head, *self.mid, *self.tail)


def reverse(v: Sequence[int]) -> LabelVector:
    return tuple(reversed(v))


def split3(v: Sequence[int], k1: int, k2: int) -> VectorTriple:
    if k1 < 1 or k2 < 1:
        raise MatrixError("split3 needs k1, k2 >= 1")
    if len(v) != 1 + k1 + k2:
        raise MatrixError(f"vector of length {len(v)} cannot split as 1+{k1}+{k2}")
    return VectorTriple(v[0], tuple(v[1:1 + k1]), tuple(v[1 + k1:]))


# -- S_k ◇ K̄_r ----------------------------------------------------------------

def star_empty_vectors(k: int, r: int, j: int) -> tuple[LabelVector, DiagBlock]:
    """(a_j, A_j); j = 0 gives (a_0, Ω) with a_0 = Ω = (1..k)."""
    if not 0 <= j <= r:
        raise MatrixError(f"copy index {j} outside [0, {r}]")
    a0 = tuple(range(1, k + 1))
    if j == 0:
        return a0, DiagBlock(a0)
    if j % 2:
        return (tuple(2 * j * k - k + x for x in a0),
                DiagBlock(tuple(2 * j * k + k + 1 - x for x in a0)))
    return (tuple(2 * j * k + 1 - x for x in a0),
            DiagBlock(tuple(2 * j * k + x for x in a0)))


def even_r_adjust(b: dict[int, LabelVector], A: dict[int, LabelVector],
                  a: dict[int, LabelVector], k: int, r: int
                  ) -> tuple[dict[int, LabelVector], dict[int, LabelVector]]:
    """Even-r repair of the reversed vectors b_j and the diagonals A_j.

    b_{r/2+1} becomes (rk+2, ..., rk+2k) and A_{r/2} becomes
    (rk+2k-1, ..., rk+1). When r/2 is even, b_{r/2+2} is restored to
    a_{r/2+2} and A_{r/2-1} is reversed.
    """
    if r % 2:
        raise MatrixError("even_r_adjust applies to even r only")
    h = r // 2
    b2, A2 = dict(b), dict(A)
    b2[h + 1] = tuple(r * k + 2 * i for i in range(1, k + 1))
    A2[h] = tuple(r * k + 2 * k + 1 - 2 * i for i in range(1, k + 1))
    if h % 2 == 0:
        b2[h + 2] = a[h + 2]
        A2[h - 1] = reverse(A[h - 1])
    return b2, A2


@dataclass(frozen=True)
class EmptyPlan:
    base: LabelVector
    top: tuple[LabelVector, ...]   # per copy j
    side: tuple[LabelVector, ...]  # per copy j


def sk_empty_plan(k: int, r: int) -> EmptyPlan:
    a: dict[int, LabelVector] = {}
    A: dict[int, LabelVector] = {}
    for j in range(1, r + 1):
        a[j], blk = star_empty_vectors(k, r, j)
        A[j] = blk.diagonal
    base = tuple(range(1, k + 1))
    if r % 2:
        top = tuple(a[j] for j in range(1, r + 1))
        side = tuple(A[r + 1 - j] for j in range(1, r + 1))
        return EmptyPlan(base, top, side)
    b = {j: reverse(a[j]) for j in a}
    b, A = even_r_adjust(b, A, a, k, r)
    top = tuple(b[j] for j in range(1, r + 1))
    side = tuple(A[r + 1 - j] for j in range(1, r + 1))
    return EmptyPlan(base, top, side)


# -- S_k ◇ rK_2 ----------------------------------------------------------------

def sk2_vectors(k: int, r: int) -> dict[str, dict[int, LabelVector]]:
    """a_j, A_j, b_j (1 <= j <= r) and B_j (1 <= j <= 2r); index 0 is the base."""
    a0 = tuple(range(1, k + 1))
    A0 = tuple(2 * k + 1 - 2 * i for i in range(1, k + 1))
    a = {0: a0}
    A = {0: A0}
    b = {0: A0}
    B: dict[int, LabelVector] = {}
    for j in range(1, r + 1):
        if j % 2:
            a[j] = tuple(j * k + x for x in a0)
            A[j] = tuple((r + 2 * j - 1) * k + x for x in A0)
            b[j] = tuple(r * k + 2 * j * k - k + 1 + x for x in A0)
            B[j] = tuple(3 * r * k + j * k + x for x in a0)
        else:
            a[j] = tuple(j * k + k + 1 - x for x in a0)
            A[j] = tuple((r + 2 * j + 1) * k - x for x in A0)
            b[j] = tuple(r * k + 2 * j * k + k + 1 - x for x in A0)
            B[j] = tuple(3 * r * k + j * k + k + 1 - x for x in a0)
    for j in range(1, r + 1):
        B[r + j] = tuple(r * k + x for x in B[j])
    return {"a": a, "A": A, "b": b, "B": B}


@dataclass(frozen=True)
class K2Plan:
    base: LabelVector
    top1: tuple[LabelVector, ...]
    side1: tuple[LabelVector, ...]
    top2: tuple[LabelVector, ...]
    side2: tuple[LabelVector, ...]
    pair: tuple[LabelVector, ...]


def sk2_plan(k: int, r: int) -> K2Plan:
    vec = sk2_vectors(k, r)
    a, A, b, B = vec["a"], vec["A"], vec["b"], vec["B"]
    js = range(1, r + 1)
    if r % 2:
        return K2Plan(
            a[0],
            tuple(a[j] for j in js),
            tuple(A[r + 1 - j] for j in js),
            tuple(b[r + 1 - j] for j in js),
            tuple(B[j] for j in js),
            tuple(B[r + j] for j in js),
        )
    top1 = {j: a[j] for j in js}
    side1 = {j: reverse(A[r + 1 - j]) for j in js}
    top2 = {j: reverse(b[r + 1 - j]) for j in js}
    side2 = {j: B[j] for j in js}
    pair = {j: B[r + j] for j in js}
    # copy 1 keeps A_r and takes the reversed a_1; copy r swaps in A_1 reversed
    top1[1], side1[1] = reverse(a[1]), A[r]
    top1[r], side1[r] = reverse(A[1]), a[r]
    top2[1], side2[1], pair[1] = b[r], reverse(B[1]), reverse(B[r + 1])
    return K2Plan(
        a[0],
        *(tuple(d[j] for j in js) for d in (top1, side1, top2, side2, pair)),
    )


# -- matrices --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LabelingMatrix:
    """Symmetric vertex-indexed matrix; absent entries are not stored."""

    order: tuple[VertexRef, ...]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (i, j) in self.entries:
            if not 0 <= i < j < len(self.order):
                raise MatrixError(f"entry ({i},{j}) is not in the upper triangle")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LabelingMatrix) and self.order == other.order
                and self.entries == other.entries)

    @property
    def dimension(self) -> int:
        return len(self.order)

    def entry(self, i: int, j: int) -> int | None:
        return self.entries.get((min(i, j), max(i, j)))

    def row_sums(self) -> tuple[int, ...]:
        sums = [0] * self.dimension
        for (i, j), x in self.entries.items():
            sums[i] += x
            sums[j] += x
        return tuple(sums)

    def upper_labels(self) -> list[int]:
        return sorted(self.entries.values())

    def is_label_permutation(self) -> bool:
        return self.upper_labels() == list(range(1, len(self.entries) + 1))

    def diff(self, other: "LabelingMatrix") -> list[tuple[int, int, int | None, int | None]]:
        """Entries (i, j, mine, theirs) where the two matrices disagree."""
        keys = sorted(set(self.entries) | set(other.entries))
        return [(i, j, self.entries.get((i, j)), other.entries.get((i, j)))
                for i, j in keys if self.entries.get((i, j)) != other.entries.get((i, j))]

    def render(self) -> str:
        n = self.dimension
        width = max([len(STAR)] + [len(str(x)) for x in self.entries.values()])
        rows = []
        for i in range(n):
            cells = []
            for j in range(n):
                x = self.entry(i, j)
                cell = "*" if i == j else (STAR if x is None else str(x))
                cells.append(cell.rjust(width))
            rows.append(" ".join(cells))
        return "\n".join(rows) + "\n"

    def to_json(self) -> dict:
        return {
            "format": 1,
            "order": [v.to_json() for v in self.order],
            "entries": [[i, j, x] for (i, j), x in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabelingMatrix":
        if data.get("format") != 1:
            raise MatrixError(f"unsupported matrix format {data.get('format')!r}")
        order = tuple(VertexRef.from_json(v) for v in data["order"])
        entries = {}
        for i, j, x in data["entries"]:
            key = (min(int(i), int(j)), max(int(i), int(j)))
            if key in entries:
                raise MatrixError(f"entry {key} given twice")
            entries[key] = int(x)
        return cls(order, entries)


def matrix_of_labeling(f: EdgeLabeling) -> LabelingMatrix:
    g = f.graph
    return LabelingMatrix(g.vertices, {
        (min(a, b), max(a, b)): f.labels[e] for e, (a, b) in enumerate(g.edges)
    })


def matrix_to_labeling(m: LabelingMatrix, g: Graph) -> EdgeLabeling:
    if m.order != g.vertices:
        raise MatrixError("matrix row order differs from the graph's vertex order")
    support = set(m.entries)
    adj = {(min(a, b), max(a, b)) for a, b in g.edges}
    if support != adj:
        extra, missing = len(support - adj), len(adj - support)
        raise MatrixError(f"support mismatch: {extra} extra, {missing} missing entries")
    labels = tuple(m.entries[(min(a, b), max(a, b))] for a, b in g.edges)
    if len(set(labels)) != len(labels):
        raise MatrixError("duplicate label in the upper triangle")
    return EdgeLabeling(g, labels)


def place_empty(host: Graph, plan: EmptyPlan) -> tuple[Graph, LabelingMatrix]:
    r = len(plan.top)
    g = edge_corona(host, make_empty(r))
    pos = g.index
    ent: dict[tuple[int, int], int] = {}

    def put(x: VertexRef, y: VertexRef, lab: int) -> None:
        i, j = pos[x], pos[y]
        ent[(min(i, j), max(i, j))] = lab

    for i, (a, b) in enumerate(host.edges, start=1):
        va, vb = host.vertices[a], host.vertices[b]
        put(va, vb, plan.base[i - 1])
        for j in range(1, r + 1):
            cv = vref("copy", i, j, 0)
            put(va, cv, plan.top[j - 1][i - 1])
            put(vb, cv, plan.side[j - 1][i - 1])
    return g, LabelingMatrix(g.vertices, ent)


def place_k2(host: Graph, plan: K2Plan) -> tuple[Graph, LabelingMatrix]:
    r = len(plan.top1)
    g = edge_corona(host, disjoint_copies_k2(r))
    pos = g.index
    ent: dict[tuple[int, int], int] = {}

    def put(x: VertexRef, y: VertexRef, lab: int) -> None:
        i, j = pos[x], pos[y]
        ent[(min(i, j), max(i, j))] = lab

    for i, (a, b) in enumerate(host.edges, start=1):
        va, vb = host.vertices[a], host.vertices[b]
        put(va, vb, plan.base[i - 1])
        for j in range(1, r + 1):
            x1, x2 = vref("copy", i, j, 1), vref("copy", i, j, 2)
            put(va, x1, plan.top1[j - 1][i - 1])
            put(vb, x1, plan.side1[j - 1][i - 1])
            put(va, x2, plan.top2[j - 1][i - 1])
            put(vb, x2, plan.side2[j - 1][i - 1])
            put(x1, x2, plan.pair[j - 1][i - 1])
    return g, LabelingMatrix(g.vertices, ent)


def _check_params(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise GraphError(f"{name} must be a positive integer, got {v!r}")


def _proper(g: Graph, m: LabelingMatrix) -> bool:
    w = m.row_sums()
    return all(w[a] != w[b] for a, b in g.edges)


def _permute_columns(plan, perm: Sequence[int]):
    """Same plan with host edge i taking column perm[i]."""
    def pick(v: LabelVector) -> LabelVector:
        return tuple(v[c] for c in perm)

    fields = [pick(plan.base)]
    for name in plan.__dataclass_fields__:
        if name != "base":
            fields.append(tuple(pick(v) for v in getattr(plan, name)))
    return type(plan)(*fields)


def swapped_columns(k1: int, k2: int) -> tuple[int, ...]:
    """c_2's leaves take the first k2 leaf columns, c_1's leaves the last k1."""
    t = k1 + k2 + 1
    return (0, *range(1 + k2, t), *range(1, 1 + k2))


def _finish(g: Graph, m: LabelingMatrix, what: str) -> LabelingMatrix:
    if not _proper(g, m):
        raise AssemblyFailure(f"{what}: adjacent vertices share a row sum")
    return m


def assemble_sk_empty(k: int, r: int) -> LabelingMatrix:
    _check_params(k=k, r=r)
    g, m = place_empty(make_star(k), sk_empty_plan(k, r))
    return _finish(g, m, f"sk-empty({k},{r})")


def dstar_empty_swaps(k1: int, k2: int, r: int) -> bool:
    """Whether the block layout for S_{k1,k2} ◇ K̄_r needs the column swap."""
    _check_params(k1=k1, k2=k2, r=r)
    g, m = place_empty(make_double_star(k1, k2), sk_empty_plan(k1 + k2 + 1, r))
    return not _proper(g, m)


def assemble_dstar_empty(k1: int, k2: int, r: int) -> LabelingMatrix:
    """Block layout; if that collides, the leaf columns of the two hubs swap."""
    _check_params(k1=k1, k2=k2, r=r)
    host = make_double_star(k1, k2)
    plan = sk_empty_plan(k1 + k2 + 1, r)
    g, m = place_empty(host, plan)
    if not _proper(g, m):
        g, m = place_empty(host, _permute_columns(plan, swapped_columns(k1, k2)))
    return _finish(g, m, f"dstar-empty({k1},{k2},{r})")


def assemble_sk_k2(k: int, r: int) -> LabelingMatrix:
    _check_params(k=k, r=r)
    g, m = place_k2(make_star(k), sk2_plan(k, r))
    return _finish(g, m, f"sk-k2({k},{r})")


def assemble_dstar_k2(k1: int, k2: int, r: int) -> LabelingMatrix:
    _check_params(k1=k1, k2=k2, r=r)
    g, m = place_k2(make_double_star(k1, k2), sk2_plan(k1 + k2 + 1, r))
    return _finish(g, m, f"dstar-k2({k1},{k2},{r})")


CONSTRUCTIONS = {
    # name: (assembler, host parameters, claimed colors)
    "sk-empty": (assemble_sk_empty, ("k",), 3),
    "dstar-empty": (assemble_dstar_empty, ("k1", "k2"), 4),
    "sk-k2": (assemble_sk_k2, ("k",), 4),
    "dstar-k2": (assemble_dstar_k2, ("k1", "k2"), 5),
}


def construction_graph(name: str, *params: int) -> Graph:
    """The product graph a construction labels, e.g. ("dstar-k2", 3, 4, 6)."""
    *host, r = params
    g = make_star(*host) if name.startswith("sk") else make_double_star(*host)
    h = make_empty(r) if name.endswith("empty") else disjoint_copies_k2(r)
    return edge_corona(g, h)


def assemble(name: str, *params: int) -> tuple[Graph, LabelingMatrix, EdgeLabeling]:
    if name not in CONSTRUCTIONS:
        raise MatrixError(f"unknown construction {name!r}")
    fn, host_params, claimed = CONSTRUCTIONS[name]
    if len(params) != len(host_params) + 1:
        raise MatrixError(f"{name} takes {len(host_params) + 1} parameters")
    m = fn(*params)
    g = construction_graph(name, *params)
    f = matrix_to_labeling(m, g)
    return g, m, EdgeLabeling(g, f.labels, claimed)


# -- gold fixtures -----------------------------------------------------------------

def _flat(block) -> LabelVector:
    if isinstance(block[0], int) and len(block) == 3 and not isinstance(block[1], int):
        return VectorTriple(block[0], tuple(block[1]), tuple(block[2])).concat()
    return tuple(block)


def appendix_fixture(ident: str) -> LabelingMatrix:
    """The printed appendix matrix A, B or C."""
    from . import fixtures

    if ident == "A":
        d = fixtures.APPENDIX_A
        plan = EmptyPlan(_flat(d["base"]), tuple(map(_flat, d["top"])),
                         tuple(map(_flat, d["side"])))
        return place_empty(make_double_star(d["k1"], d["k2"]), plan)[1]
    if ident == "B":
        d = fixtures.APPENDIX_B
        host = make_star(d["k"])
    elif ident == "C":
        d = fixtures.APPENDIX_C
        host = make_double_star(d["k1"], d["k2"])
    else:
        raise MatrixError(f"unknown appendix {ident!r}")
    plan = K2Plan(_flat(d["base"]), *(tuple(map(_flat, d[key])) for key in
                                       ("top1", "side1", "top2", "side2", "pair")))
    return place_k2(host, plan)[1]


FIXTURE_PARAMS = {"A": ("dstar-empty", 4, 5, 4), "B": ("sk-k2", 7, 5), "C": ("dstar-k2", 3, 4, 6)}


def class_row_sums(m: LabelingMatrix) -> dict[str, list[int]]:
    """Distinct row sums grouped by vertex kind (hubs, hub leaves, copy layers)."""
    sums = m.row_sums()
    out: dict[str, set[int]] = {}
    for v, s in zip(m.order, sums):
        if v.role == "hub":
            key = "c" if v.idx[0] == 0 else f"c{v.idx[0]}"
        elif v.role == "hub_leaf":
            key = "v"
        else:
            key = "u" if v.idx[2] == 0 else f"u{v.idx[2]}"
        out.setdefault(key, set()).add(s)
    return {k: sorted(v) for k, v in out.items()}
