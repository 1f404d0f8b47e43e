"""Command-line front end: gen / label / verify / search / sweep / export.

Exit codes: 0 ok, 1 bijection failure, 2 properness failure (or an
uncertified sweep row), 3 parse or parameter error, 4 refused (search guard,
cited-only regime, budget exhausted).

Files go to ``--out``, else ``$ANTIMAGIC_OUT``, else the working directory.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Sequence

from . import construct_la as cla
from . import construct_lat as clt
from . import errata, matrixlab
from .formats import (
    FormatError, csv_text, dumps, graph_from_json, graph_to_json, labeling_from_json,
    labeling_to_json, to_dot,
)
from .graphs import (
    FamilySpec, Graph, GraphError, edge_corona, join_with_single_vertex,
)
from .labeling import EdgeLabeling, LabelingError, TotalLabeling
from .oracle import (
    DEFAULT_GUARD, GuardExceeded, SearchBudget, exact_chi_la, exact_chi_lat, exists_with_colors,
)
from .verify import EXIT_OK, EXIT_PROPER, check

EXIT_PARSE = 3
EXIT_REFUSED = 4
OUT_ENV = "ANTIMAGIC_OUT"


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means "improper"
        self.print_usage(sys.stderr)
        raise CliError(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any]
    out_dir: str
    grid: dict[str, list[int]] = field(default_factory=dict)
    budget: dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        for name, values in self.grid.items():
            if any(not isinstance(v, int) for v in values):
                raise CliError(f"grid axis {name} must hold integers")

    def to_json(self) -> dict:
        return {"format": 1, **asdict(self)}


# -- helpers -----------------------------------------------------------------------------

def out_dir(args) -> Path:
    d = Path(args.out or os.environ.get(OUT_ENV) or ".")
    d.mkdir(parents=True, exist_ok=True)
    return d


def stem_of(g: Graph) -> str:
    order = FamilySpec._ARITY.get(g.family)
    p = g.param_dict
    vals = "_".join(str(p[k]) for k in order) if order and set(order) == set(p) else \
        "_".join(str(v) for _, v in g.params)
    s = f"{g.family}_{vals}" if vals else g.family
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", s).strip("_")


def write(path: Path, text: str) -> Path:
    path.write_text(text)
    return path


def read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def load_graph(path: str) -> Graph:
    try:
        return graph_from_json(read_json(path))
    except FormatError as exc:
        raise CliError(str(exc)) from exc


def load_labeling(path: str, g: Graph) -> EdgeLabeling | TotalLabeling:
    try:
        return labeling_from_json(read_json(path), g)
    except FormatError as exc:
        raise CliError(str(exc)) from exc


def parse_range(text: str) -> list[int]:
    """``a:b`` inclusive, ``a`` alone, or ``a,b,c``; ``a:b`` with a > b is empty."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad range {text!r}") from None


def emit_labeling(d: Path, stem: str, lab: EdgeLabeling | TotalLabeling,
                  extra: dict[str, str] | None = None) -> int:
    g = lab.graph
    rep = check(g, lab)
    write(d / f"{stem}.graph.json", dumps(graph_to_json(g)))
    write(d / f"{stem}.labeling.json", dumps(labeling_to_json(lab)))
    write(d / f"{stem}.report.json", dumps(rep.to_json(g)))
    write(d / f"{stem}.weights.csv", csv_text(["vertex", "weight", "class"], rep.csv_rows(g)))
    for name, text in (extra or {}).items():
        write(d / f"{stem}.{name}", text)
    status = "certified" if rep.certified else "NOT certified"
    print(f"{stem}: {status}, {rep.color_count} colors, colors={sorted(rep.color_classes)}")
    if lab.claimed_colors is not None and rep.certified and rep.color_count != lab.claimed_colors:
        print(f"{stem}: claimed {lab.claimed_colors} colors, achieved {rep.color_count}")
    return rep.exit_code


# -- gen --------------------------------------------------------------------------------

GEN_FAMILIES = ("star", "double-star", "firecracker", "path", "empty", "copies-k2", "k2",
                "edge-corona", "join")


def build_graph(args) -> Graph:
    fam = args.family
    if fam == "edge-corona":
        if not (args.g and args.h):
            raise CliError("edge-corona needs --g and --h")
        return edge_corona(FamilySpec.parse(args.g).build(), FamilySpec.parse(args.h).build())
    if fam == "join":
        if not args.g:
            raise CliError("join needs --g")
        return join_with_single_vertex(FamilySpec.parse(args.g).build())
    names = {"star": ("k",), "double-star": ("k1", "k2"), "firecracker": ("n", "k"),
             "path": ("n",), "empty": ("r",), "copies-k2": ("r",), "k2": ()}[fam]
    vals = []
    for nm in names:
        v = getattr(args, nm)
        if v is None:
            raise CliError(f"{fam} needs --{nm}")
        vals.append(v)
    return FamilySpec.parse(f"{fam}:{','.join(map(str, vals))}").build()


def cmd_gen(args) -> int:
    g = build_graph(args)
    d = out_dir(args)
    stem = args.stem or stem_of(g)
    p = write(d / f"{stem}.graph.json", dumps(graph_to_json(g)))
    if args.dot:
        write(d / f"{stem}.dot", to_dot(g))
    print(f"{p}: {g.describe()}")
    return EXIT_OK


# -- label ------------------------------------------------------------------------------

def _need(args, *names: str) -> list[int]:
    out = []
    for nm in names:
        v = getattr(args, nm)
        if v is None:
            raise CliError(f"label {args.kind} needs --{nm}")
        out.append(v)
    return out


def build_labeling(args) -> tuple[str, EdgeLabeling | TotalLabeling, dict[str, str]]:
    kind = args.kind
    if kind == "la":
        n, k = _need(args, "n", "k")
        if n == 1 or k == 1:
            try:
                cla.label_firecracker(n, k)
            except cla.CitedOnly as exc:
                raise CliError(str(exc), EXIT_REFUSED) from exc
        return f"firecracker_{n}_{k}.la", cla.label_firecracker(n, k, verify=False), {}
    if kind == "lat":
        n, k = _need(args, "n", "k")
        if k == 1:
            t = clt.total_label_fn1(n, verify=False, uniform=args.uniform)
        elif n == 2:
            t = clt.total_label_f2k(k, verify=False)
        else:
            t = clt.total_label_firecracker(n, k, verify=False)
        return f"firecracker_{n}_{k}.lat", t, {}
    if kind == "join":
        (n,) = _need(args, "n")
        lab = clt.join_transfer(clt.total_label_fn1(n, uniform=args.uniform))
        return f"join_firecracker_{n}_1.la", lab, {}
    # matrix
    if args.fixture:
        m = matrixlab.appendix_fixture(args.fixture)
        name, *p = matrixlab.FIXTURE_PARAMS[args.fixture]
        g = matrixlab.construction_graph(name, *p)
        lab = matrixlab.matrix_to_labeling(m, g)
        stem = f"appendix_{args.fixture}"
    else:
        if not args.construction:
            raise CliError("label matrix needs --construction or --fixture")
        host = ("k",) if args.construction.startswith("sk") else ("k1", "k2")
        p = _need(args, *host, "r")
        g, m, lab = matrixlab.assemble(args.construction, *p)
        stem = f"{args.construction}_{'_'.join(map(str, p))}"
    extra = {"matrix.json": dumps(m.to_json()), "matrix.txt": m.render()}
    return stem, lab, extra


def cmd_label(args) -> int:
    stem, lab, extra = build_labeling(args)
    return emit_labeling(out_dir(args), args.stem or stem, lab, extra)


# -- verify -----------------------------------------------------------------------------

def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    lab = load_labeling(args.labeling, g)
    rep = check(g, lab)
    d = out_dir(args)
    stem = args.stem or Path(args.labeling).name.removesuffix(".json").removesuffix(".labeling")
    write(d / f"{stem}.report.json", dumps(rep.to_json(g)))
    for v in rep.violations:
        print(f"violation: {v.kind} {list(v.detail)}")
    print(f"{stem}: exit {rep.exit_code}, {rep.color_count} colors")
    return rep.exit_code


# -- search -----------------------------------------------------------------------------

def cmd_search(args) -> int:
    if bool(args.graph) == bool(args.family):
        raise CliError("search needs exactly one of GRAPH or --family")
    g = load_graph(args.graph) if args.graph else FamilySpec.parse(args.family).build()
    budget = SearchBudget(args.max_nodes, args.time_limit,
                          "first-witness" if args.colors is not None else "exhaustive")
    kind = "edge" if args.kind == "la" else "total"
    try:
        if args.colors is not None:
            res = exists_with_colors(g, args.colors, kind, budget, args.guard)
        elif kind == "edge":
            res = exact_chi_la(g, budget, args.guard)
        else:
            res = exact_chi_lat(g, budget, args.guard)
    except GuardExceeded as exc:
        raise CliError(f"refused: {exc}", EXIT_REFUSED) from exc
    d = out_dir(args)
    stem = args.stem or f"{stem_of(g)}.{args.kind}"
    write(d / f"{stem}.oracle.json", dumps(res.to_json()))
    print(f"{stem}: value={res.value} explored={res.explored} elapsed_ms={res.elapsed_ms}")
    if res.witness is not None:
        rep = check(g, res.witness)
        if not rep.certified:
            return rep.exit_code
    return EXIT_OK if res.definite or res.value in ("infeasible", "impossible") else EXIT_REFUSED


# -- sweep ------------------------------------------------------------------------------

def _sweep_items(args) -> tuple[list[str], list[tuple[tuple[int, ...], Callable[[], Any]]]]:
    fam = args.family
    ax = {nm: parse_range(getattr(args, nm)) for nm in ("n", "k", "k1", "k2", "r")
          if getattr(args, nm) is not None}

    def grid(*names: str) -> list[tuple[int, ...]]:
        for nm in names:
            if nm not in ax:
                raise CliError(f"sweep {fam} needs --{nm}")
        pts: list[tuple[int, ...]] = [()]
        for nm in names:
            pts = [p + (v,) for p in pts for v in ax[nm]]
        if fam.startswith("dstar"):
            pts = [p for p in pts if p[0] <= p[1]]
        return pts

    if fam == "la":
        names = ["n", "k"]
        return names, [(p, lambda p=p: cla.label_firecracker(*p, verify=False)) for p in grid(*names)]
    if fam == "lat":
        names = ["n", "k"]
        return names, [(p, lambda p=p: clt.total_label_firecracker(*p, verify=False))
                       for p in grid(*names)]
    if fam == "fn1":
        return ["n"], [(p, lambda p=p: clt.total_label_fn1(p[0], verify=False,
                                                          uniform=args.uniform))
                       for p in grid("n")]
    if fam == "f2k":
        return ["k"], [(p, lambda p=p: clt.total_label_f2k(p[0], verify=False))
                       for p in grid("k")]
    if fam == "join":
        return ["n"], [(p, lambda p=p: clt.join_transfer(clt.total_label_fn1(p[0])))
                       for p in grid("n")]
    names = ["k", "r"] if fam.startswith("sk") else ["k1", "k2", "r"]
    return names, [(p, lambda p=p: matrixlab.assemble(fam, *p)[2]) for p in grid(*names)]


SWEEP_FAMILIES = ("la", "lat", "fn1", "f2k", "join", *matrixlab.CONSTRUCTIONS)


def cmd_sweep(args) -> int:
    names, items = _sweep_items(args)
    d = out_dir(args)
    cfg = RunConfig("sweep", {"family": args.family, "uniform": args.uniform}, str(d),
                    {nm: parse_range(getattr(args, nm)) for nm in names})
    cfg.validate()
    rows = []
    bad = 0
    for p, make in items:
        t0 = time.monotonic()
        try:
            lab = make()
            rep = check(lab.graph, lab)
            claimed, achieved, ok = lab.claimed_colors, rep.color_count, rep.certified
        except (ValueError, RuntimeError) as exc:
            print(f"{args.family}{p}: {exc}", file=sys.stderr)
            claimed, achieved, ok = None, None, False
        ms = int((time.monotonic() - t0) * 1000)
        bad += not ok
        rows.append((*p, "" if claimed is None else claimed,
                     "" if achieved is None else achieved, str(ok).lower(), ms))
    stem = args.stem or f"sweep_{args.family}"
    write(d / f"{stem}.csv", csv_text([*names, "claimed", "achieved", "certified", "elapsed_ms"], rows))
    write(d / f"{stem}.config.json", dumps(cfg.to_json()))
    print(f"{stem}: {len(rows)} rows, {len(rows) - bad} certified")
    if args.ledger:
        text = errata.ledger_text()
        path = Path(args.ledger)
        old = path.read_text() if path.exists() else None
        if old != text:
            write(path, text)
            print(f"{path}: ledger updated")
        else:
            print(f"{path}: ledger unchanged")
    return EXIT_PROPER if bad else EXIT_OK


# -- export -----------------------------------------------------------------------------

def cmd_export(args) -> int:
    d = out_dir(args)
    what = args.what
    if what == "dot":
        if not args.graph:
            raise CliError("export dot needs --graph")
        g = load_graph(args.graph)
        lab = load_labeling(args.labeling, g) if args.labeling else None
        p = write(d / f"{args.stem or stem_of(g)}.dot", to_dot(g, lab))
    elif what == "csv":
        if not (args.graph and args.labeling):
            raise CliError("export csv needs --graph and --labeling")
        g = load_graph(args.graph)
        rep = check(g, load_labeling(args.labeling, g))
        p = write(d / f"{args.stem or stem_of(g)}.weights.csv",
                  csv_text(["vertex", "weight", "class"], rep.csv_rows(g)))
    elif what == "fixture":
        if args.fixture is None:
            raise CliError("export fixture needs --fixture")
        m = matrixlab.appendix_fixture(args.fixture)
        write(d / f"appendix_{args.fixture}.matrix.txt", m.render())
        p = write(d / f"appendix_{args.fixture}.matrix.json", dumps(m.to_json()))
    else:
        p = write(d / (args.stem or "errata.json"), errata.ledger_text())
    print(p)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------

def _pos_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="antimagic", description=__doc__.splitlines()[0])
    p.add_argument("--out", help=f"output directory (default ${OUT_ENV} or .)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--out", default=argparse.SUPPRESS, help="output directory")
        sp.add_argument("--stem", help="output file stem")

    def params(sp):
        for nm in ("n", "k", "k1", "k2", "r"):
            sp.add_argument(f"--{nm}", type=_pos_int)

    g = sub.add_parser("gen", help="write a graph")
    g.add_argument("family", choices=GEN_FAMILIES)
    params(g)
    g.add_argument("--g", help="host family spec, e.g. star:3")
    g.add_argument("--h", help="second family spec, e.g. empty:6")
    g.add_argument("--dot", action="store_true", help="also write DOT")
    common(g)
    g.set_defaults(func=cmd_gen)

    lab = sub.add_parser("label", help="construct, verify and write a labeling")
    lab.add_argument("kind", choices=("la", "lat", "join", "matrix"))
    params(lab)
    lab.add_argument("--construction", choices=tuple(matrixlab.CONSTRUCTIONS))
    lab.add_argument("--fixture", choices=("A", "B", "C"))
    lab.add_argument("--uniform", action="store_true",
                     help="F_{n,1}: classes {5n-1, 5n} also for n = 3, 4")
    common(lab)
    lab.set_defaults(func=cmd_label)

    v = sub.add_parser("verify", help="check a labeling against a graph")
    v.add_argument("graph")
    v.add_argument("labeling")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exact chi_la / chi_lat by exhaustive search")
    s.add_argument("graph", nargs="?")
    s.add_argument("--family", help="family spec instead of a graph file, e.g. path:6")
    s.add_argument("--kind", choices=("la", "lat"), default="la")
    s.add_argument("--colors", type=_pos_int, help="find a labeling with exactly this many colors")
    s.add_argument("--max-nodes", type=_pos_int, default=SearchBudget.max_nodes)
    s.add_argument("--time-limit", type=float, default=SearchBudget.wall_clock_limit)
    s.add_argument("--guard", type=_pos_int, default=DEFAULT_GUARD)
    common(s)
    s.set_defaults(func=cmd_search)

    w = sub.add_parser("sweep", help="label and verify over a parameter grid")
    w.add_argument("family", choices=SWEEP_FAMILIES)
    for nm in ("n", "k", "k1", "k2", "r"):
        w.add_argument(f"--{nm}", help="range a:b (inclusive) or list a,b,c")
    w.add_argument("--uniform", action="store_true")
    w.add_argument("--ledger", help="rebuild the erratum ledger into this file")
    common(w)
    w.set_defaults(func=cmd_sweep)

    e = sub.add_parser("export", help="DOT, CSV, appendix fixtures, erratum ledger")
    e.add_argument("what", choices=("dot", "csv", "fixture", "errata"))
    e.add_argument("--graph")
    e.add_argument("--labeling")
    e.add_argument("--fixture", choices=("A", "B", "C"))
    common(e)
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, LabelingError, FormatError, matrixlab.MatrixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (cla.ConstructionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPER


if __name__ == "__main__":
    sys.exit(main())
