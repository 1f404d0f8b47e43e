"""Local antimagic total labelings of firecracker graphs, and the join transfer.

Edge keys follow :mod:`antimagic.construct_la`; vertex keys are ``("u", i)``
for u_i and ``("v", i, j)`` for v_{i,j}.
"""

from __future__ import annotations

from .construct_la import ConstructionError, LabelMap, firecracker_edge_labeling
from .graphs import fc_vertex, join_with_single_vertex, make_firecracker, vref
from .labeling import EdgeLabeling, TotalLabeling
from .verify import check

LAT_BOUND = 3

# Labelings of F_{n,1} found by oracle.search_prescribed_total with weight
# 5n on the side of v_{1,1} for odd n and 5n-1 for even n. n = 6 is not
# covered by the closed forms; n = 3 and 4 give the classes {5n-1, 5n}
# instead of the two-class examples used by default.
# per i: (u_i v_{i,1}, u_i, v_{i,1} v_{i+1,1}, v_{i,1})
SEARCHED_FN1 = {
    3: {1: (3, 11, 2, 10), 2: (7, 8, 4, 1), 3: (5, 9, None, 6)},
    4: {1: (7, 13, 2, 10), 2: (4, 15, 6, 8), 3: (9, 11, 3, 1), 4: (5, 14, None, 12)},
    6: {
        1: (7, 23, 2, 20),
        2: (17, 12, 6, 5),
        3: (8, 22, 1, 14),
        4: (10, 19, 3, 16),
        5: (9, 21, 4, 13),
        6: (11, 18, None, 15),
    },
}


def _to_total(n: int, k: int, f: LabelMap, vl: LabelMap,
              claimed: int | None) -> TotalLabeling:
    g = make_firecracker(n, k)
    edges = firecracker_edge_labeling(n, k, f, g=g).labels
    vmap = {}
    for key, lab in vl.items():
        vmap[vref("center", key[1]) if key[0] == "u" else fc_vertex(key[1], key[2])] = lab
    verts = tuple(vmap[v] for v in g.vertices)
    return TotalLabeling(g, verts, edges, claimed)


def _certify(t: TotalLabeling, what: str, exact: int | None, bound: int | None = None):
    rep = check(t.graph, t)
    ok = rep.certified
    if exact is not None:
        ok = ok and rep.color_count == exact
    if bound is not None:
        ok = ok and rep.color_count <= bound
    if not ok:
        raise ConstructionError(
            f"{what}: certified={rep.certified}, colors={rep.color_count}"
        )
    return t


# -- F_{n,1} -----------------------------------------------------------------

def fn1_classes(n: int) -> tuple[int, int]:
    return 5 * n - 1, 5 * n


def _fn1_n3() -> tuple[LabelMap, LabelMap]:
    f = {("e", 1, 1): 4, ("e", 2, 1): 6, ("e", 3, 1): 5, ("s", 1): 1, ("s", 2): 2}
    vl = {("u", 1): 8, ("u", 2): 10, ("u", 3): 7,
          ("v", 1, 1): 11, ("v", 2, 1): 3, ("v", 3, 1): 9}
    return f, vl


def _fn1_n4() -> tuple[LabelMap, LabelMap]:
    f = {("s", 1): 1, ("s", 2): 3, ("s", 3): 2, ("e", 1, 1): 4, ("e", 2, 1): 8,
         ("e", 3, 1): 5, ("e", 4, 1): 9}
    vl = {("v", 1, 1): 15, ("v", 2, 1): 6, ("v", 3, 1): 10, ("v", 4, 1): 7,
          ("u", 1): 14, ("u", 2): 12, ("u", 3): 13, ("u", 4): 11}
    return f, vl


def _fn1_odd(n: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    for i in range(1, n):
        if i == n - 1:
            f["s", i] = (3 * n + 1) // 2
        elif i % 2:
            f["s", i] = (n + i) // 2
        else:
            f["s", i] = i // 2
    for i in range(1, n + 1):
        if i == 1:
            e, v, u = n + 1, (7 * n - 3) // 2, 4 * n - 2
        elif i == n:
            e, v, u = n, (6 * n - 1 - i) // 2, 4 * n - 1
        elif i % 2:
            e, v, u = (3 * n + 2 - i) // 2, (6 * n - 1 - i) // 2, (7 * n - 4 + i) // 2
        elif i in (n - 3, n - 1):
            e, u = (5 * n - 1 - i) // 2, (5 * n + 1 + i) // 2
            v = (3 * n + 3) // 2 if i == n - 3 else (n - 1) // 2
        else:
            e, v, u = (4 * n - i) // 2, (5 * n - 1 - i) // 2, (6 * n + i) // 2
        f["e", i, 1] = e
        vl["v", i, 1] = v
        vl["u", i] = u
    return f, vl


def _fn1_even(n: int) -> tuple[LabelMap, LabelMap]:
    # valid for n >= 8; branch precedence is i = 2, i = n-5, i = n-1, parity
    f: LabelMap = {}
    vl: LabelMap = {}
    for i in range(1, n):
        if i == n - 1:
            f["s", i] = 3 * n // 2
        elif i % 2:
            f["s", i] = (i + 1) // 2
        else:
            f["s", i] = (n + i) // 2
    for i in range(1, n + 1):
        odd = i % 2 == 1
        if i == 2:
            e, v, u = n, (7 * n - 4) // 2, 4 * n - 1
        elif i == n - 5:
            e, v, u = 2 * n + 2, (3 * n + 4) // 2, 3 * n - 2
        elif i == n - 1:
            e, v, u = 2 * n, n // 2, 3 * n
        elif odd:
            e = (4 * n - 1 - i) // 2
            v = 3 * n - 1 if i == 1 else (5 * n - 1 - i) // 2
            u = (6 * n + 1 + i) // 2
        else:
            e, v, u = (3 * n + 2 - i) // 2, (6 * n - 2 - i) // 2, (7 * n - 4 + i) // 2
        f["e", i, 1] = e
        vl["v", i, 1] = v
        vl["u", i] = u
    return f, vl


def _fn1_searched(n: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    for i, (e, u, s, v) in SEARCHED_FN1[n].items():
        f["e", i, 1] = e
        vl["u", i] = u
        vl["v", i, 1] = v
        if s is not None:
            f["s", i] = s
    return f, vl


def fn1_maps(n: int, uniform: bool = False) -> tuple[LabelMap, LabelMap]:
    if n < 3:
        raise ValueError(f"F_{{n,1}} total labeling needs n >= 3, got {n}")
    if n == 6 or (uniform and n in SEARCHED_FN1):
        return _fn1_searched(n)
    if n == 3:
        return _fn1_n3()
    if n == 4:
        return _fn1_n4()
    return _fn1_odd(n) if n % 2 else _fn1_even(n)


def total_label_fn1(n: int, verify: bool = True, uniform: bool = False) -> TotalLabeling:
    """Two-color total labeling of F_{n,1}.

    The classes are {5n-1, 5n} for n >= 5. For n = 3 and 4 the default
    labelings give {12, 16} and {18, 20}; ``uniform=True`` switches to
    labelings with {5n-1, 5n} there too.
    """
    f, vl = fn1_maps(n, uniform)
    t = _to_total(n, 1, f, vl, 2)
    return _certify(t, f"F_{{{n},1}}", 2) if verify else t


# -- F_{2,k} -----------------------------------------------------------------

def f2k_classes(k: int) -> tuple[int, int, int]:
    if k % 2:
        return 4 * k + 5, 4 * k + 7, (2 * k * k + 7 * k + 5) // 2
    return 4 * k + 5, 4 * k + 4, (2 * k * k + 7 * k + 8) // 2


def f2k_maps(k: int) -> tuple[LabelMap, LabelMap]:
    if k < 3:
        raise ValueError(f"F_{{2,k}} total labeling needs k >= 3, got {k}")
    f: LabelMap = {("s", 1): 1}
    vl: LabelMap = {}
    for i in (1, 2):
        f["e", i, 1] = 2 * k - 1 + i
        for j in range(2, k + 1):
            if j % 2 == 0:
                f["e", i, j] = 2 * j - 3 + i
                vl["v", i, j] = 4 * k + 8 - 2 * j - i
            else:
                f["e", i, j] = 2 * j - i
                vl["v", i, j] = 4 * k + 5 - 2 * j + i
        if k % 2:
            vl["u", i] = 2 * k + 4 - i
            vl["v", i, 1] = 2 * k + 3 + i
        else:
            vl["u", i] = 2 * k + 7 - 2 * i
            vl["v", i, 1] = 2 * k + 6 - 2 * i
    return f, vl


def total_label_f2k(k: int, verify: bool = True) -> TotalLabeling:
    """Three-color total labeling of F_{2,k}, k >= 3."""
    f, vl = f2k_maps(k)
    t = _to_total(2, k, f, vl, 3)
    return _certify(t, f"F_{{2,{k}}}", 3) if verify else t


# -- F_{n,k}, n >= 3, k >= 2 -------------------------------------------------

def _rest(f: LabelMap, vl: LabelMap, n: int, k: int, start: int, odd_first: bool) -> None:
    """Labels of u_i v_{i,j} and v_{i,j} for j >= start, from the reservoir set.

    ``odd_first`` selects which parity of j takes the n(j-1)-1+i branch.
    """
    for i in range(1, n + 1):
        for j in range(start, k + 1):
            if (j % 2 == 1) == odd_first:
                f["e", i, j] = n * j - n - 1 + i
                vl["v", i, j] = 2 * n * k + 4 * n - n * j - i
            else:
                f["e", i, j] = n * j - i
                vl["v", i, j] = 2 * n * k + 3 * n - 1 - n * j + i


def _k_even_n3(k: int) -> tuple[LabelMap, LabelMap]:
    f = {("s", 1): 1, ("s", 2): 2, ("e", 1, 2): 3, ("e", 2, 2): 4, ("e", 3, 2): 5,
         ("e", 1, 1): 3 * k + 5, ("e", 2, 1): 3 * k + 3, ("e", 3, 1): 3 * k + 6}
    # the repeated vertex keys of the third row are v_{3,1} and v_{3,2}
    vl = {("u", 1): 3 * k + 7, ("u", 2): 3 * k + 8, ("u", 3): 3 * k + 4,
          ("v", 1, 1): 3 * k + 2, ("v", 2, 1): 3 * k + 1, ("v", 3, 1): 3 * k,
          ("v", 1, 2): 6 * k + 5, ("v", 2, 2): 6 * k + 4, ("v", 3, 2): 6 * k + 3}
    _rest(f, vl, 3, k, 3, True)
    return f, vl


def _k_even_n_odd(n: int, k: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    nk = n * k
    for i in range(1, n):
        f["s", i] = i if i % 2 else n + 1 - i
    for i in range(1, n + 1):
        if i == 1:
            e1, e2 = nk + 2 * n - 1, n
            u, v1, v2 = (2 * nk + 5 * n - 1) // 2, nk + n - 1, 2 * nk + 2 * n - 1
        elif i == n:
            e1, e2 = (2 * nk + 5 * n - 3) // 2, n + 2
            u, v1, v2 = nk + 2 * n - 2, (2 * nk - 3 + i) // 2, 2 * nk + 2 * n - 3
        elif i % 2:
            e1, e2 = (2 * nk + 4 * n - 3 - i) // 2, n + 1 + i
            u, v1, v2 = (2 * nk + 5 * n - 2 - i) // 2, (2 * nk - 3 + i) // 2, 2 * nk + 2 * n - 2 - i
        else:
            e1, e2 = (2 * nk + 3 * n - 1 - i) // 2, n - 1 + i
            u, v1, v2 = (2 * nk + 6 * n - i) // 2, (2 * nk + n - 3 + i) // 2, 2 * nk + 2 * n - i
        f["e", i, 1], f["e", i, 2] = e1, e2
        vl["u", i], vl["v", i, 1], vl["v", i, 2] = u, v1, v2
    _rest(f, vl, n, k, 3, True)
    return f, vl


def _k_even_n_even(n: int, k: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    nk = n * k
    for i in range(1, n):
        f["s", i] = (i + 1) // 2 if i % 2 else (n + i) // 2
    for i in range(1, n + 1):
        low = i <= n - 2
        odd = i % 2 == 1
        if low and odd:
            e1, e2 = nk + n - (i + 1) // 2, (3 * n - 3 - i) // 2
        elif low:
            e1, e2 = nk - 1 + (n - i) // 2, (4 * n - 2 - i) // 2
        elif i == n - 1:
            e1, e2 = nk + n, (3 * n - 2) // 2
        else:
            e1, e2 = nk - 1 + n // 2, 2 * n - 1
        u = nk + 2 * n + 1 + i if low else nk + n + 1 + i
        if i == 1:
            v1 = nk + 2 * n - 1
        elif low and odd:
            v1 = nk - 1 + (3 * n - i + 1) // 2
        elif low:
            v1 = nk + 2 * n - 2 - i // 2
        elif i == n - 1:
            v1 = nk + n // 2
        else:
            v1 = nk + 2 * n - 2
        if low and odd:
            v2 = 2 * nk + (3 * n + 1 + i) // 2
        elif low:
            v2 = 2 * nk + n + i // 2
        elif i == n - 1:
            v2 = 2 * nk + 3 * n // 2
        else:
            v2 = 2 * nk + n
        f["e", i, 1], f["e", i, 2] = e1, e2
        vl["u", i], vl["v", i, 1], vl["v", i, 2] = u, v1, v2
    _rest(f, vl, n, k, 3, True)
    return f, vl


def _k_odd_n3(k: int) -> tuple[LabelMap, LabelMap]:
    f = {("s", 1): 1, ("s", 2): 2,
         ("e", 1, 1): 3 * k + 7, ("e", 2, 1): 3 * k + 8, ("e", 3, 1): 3 * k + 5}
    vl = {("v", 1, 1): 3 * k, ("v", 2, 1): 3 * k + 2, ("v", 3, 1): 3 * k + 1,
          ("u", 1): 3 * k + 4, ("u", 2): 3 * k + 3, ("u", 3): 3 * k + 6}
    _rest(f, vl, 3, k, 2, False)
    return f, vl


def _k_odd_n_odd(n: int, k: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    nk = n * k
    for i in range(1, n):
        f["s", i] = (2 * n - 1 - i) // 2 if i % 2 else i // 2
    for i in range(1, n + 1):
        if i == n:
            e, v, u = (2 * nk + 5 * n - 1) // 2, nk, (2 * nk + 3 * n - 1) // 2
        elif i % 2:
            e, v, u = (2 * nk + 4 * n - 1 - i) // 2, (2 * nk + 1 + i) // 2, (2 * nk + 4 * n - 1 + i) // 2
        else:
            e, v, u = (2 * nk + 6 * n - i) // 2, (2 * nk + n - 1 + i) // 2, (2 * nk + 2 * n - 2 + i) // 2
        f["e", i, 1] = e
        vl["v", i, 1] = v
        vl["u", i] = u
    _rest(f, vl, n, k, 2, False)
    return f, vl


def _k_odd_n_even(n: int, k: int) -> tuple[LabelMap, LabelMap]:
    f: LabelMap = {}
    vl: LabelMap = {}
    nk = n * k
    for i in range(1, n):
        f["s", i] = (2 * n - 1 - i) // 2 if i % 2 else i // 2
    for i in range(1, n + 1):
        if i % 2:
            e, u = (2 * nk + 3 * n - 1 - i) // 2, (2 * nk + 5 * n - 1 + i) // 2
        else:
            e, u = (2 * nk + 4 * n - i) // 2, (2 * nk + 4 * n - 2 + i) // 2
        if i == n:
            v = nk + n - 1
        elif i % 2:
            v = (2 * nk + n - 3 + i) // 2
        else:
            v = (2 * nk - 2 + i) // 2
        f["e", i, 1] = e
        vl["v", i, 1] = v
        vl["u", i] = u
    _rest(f, vl, n, k, 2, False)
    return f, vl


def firecracker_total_maps(n: int, k: int) -> tuple[LabelMap, LabelMap]:
    if n < 3 or k < 2:
        raise ValueError(f"F_{{n,k}} total labeling needs n >= 3, k >= 2, got ({n},{k})")
    if k % 2 == 0:
        if n == 3:
            return _k_even_n3(k)
        return _k_even_n_odd(n, k) if n % 2 else _k_even_n_even(n, k)
    if n == 3:
        return _k_odd_n3(k)
    return _k_odd_n_odd(n, k) if n % 2 else _k_odd_n_even(n, k)


def total_label_firecracker(n: int, k: int, verify: bool = True) -> TotalLabeling:
    """Total labeling of F_{n,k} with at most three colors."""
    f, vl = firecracker_total_maps(n, k)
    t = _to_total(n, k, f, vl, None)
    return _certify(t, f"F_{{{n},{k}}}", None, LAT_BOUND) if verify else t


# -- join ----------------------------------------------------------------------

def join_transfer(t: TotalLabeling) -> EdgeLabeling:
    """Edge labeling of G ∨ K_1: the apex edge to x carries x's vertex label."""
    g = t.graph
    joined = join_with_single_vertex(g)
    labels = list(t.edge_labels) + list(t.vertex_labels)
    claimed = t.claimed_colors + 1 if t.claimed_colors is not None else None
    return EdgeLabeling(joined, tuple(labels), claimed)
