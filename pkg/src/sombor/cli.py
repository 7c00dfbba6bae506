"""Command-line entry point: ``sombor {index,enumerate,family,verify,fit,dataset}``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .enumeration import ClassConstraints, select
from .families import FAMILIES, FamilyError, build_family
from .graph import GraphError
from .invariants import INDEX_ORDER, index_vector
from .io import parse_graph, write_edge_list, write_graph6

HEADER = [k.value for k in INDEX_ORDER]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics through run()'s error stream instead of argparse's usage dump
    def error(self, message):
        raise UsageError(message)


def _num(value: float, full: bool) -> str:
    if float(value).is_integer() and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.17g}" if full else f"{value:.6g}"


def _at_precision(value: float, printed: str) -> str:
    from .chem import decimals_of
    return f"{value:.{decimals_of(printed)}f}"


def _read_graphs(path: str | None):
    try:
        text = sys.stdin.read() if path in (None, "-") else open(path, encoding="ascii").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not ASCII text") from None
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no graphs on input")
    graphs = []
    for number, line in enumerate(lines, start=1):
        try:
            graphs.append(parse_graph(line))
        except GraphError as exc:
            raise UsageError(f"line {number}: {exc}") from None
    return graphs


def _emit_graphs(graphs, fmt: str, out) -> None:
    if fmt == "graph6":
        for g in graphs:
            out.write(write_graph6(g) + "\n")
    elif fmt == "edges":
        for g in graphs:
            out.write(write_edge_list(g) + "\n")
    elif fmt == "json":
        json.dump([{"graph6": write_graph6(g), "order": g.order, "edges": g.edge_list()} for g in graphs], out)
        out.write("\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["graph6"] + HEADER)
        for g in graphs:
            writer.writerow([write_graph6(g)] + [_num(v, False) for v in index_vector(g).as_tuple()])


def cmd_index(args, out) -> int:
    graphs = _read_graphs(args.input)
    if args.format == "json":
        rows = []
        for g in graphs:
            vec = index_vector(g)
            rows.append({"graph6": write_graph6(g), **{k: vec[k] for k in HEADER}, "SO1_doubled": vec.exact_so1_doubled})
        json.dump(rows, out)
        out.write("\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for g in graphs:
        writer.writerow([_num(v, args.full) for v in index_vector(g).as_tuple()])
    return 0


def _constraint(value):
    if value is None:
        return None
    if ".." in value:
        lo, hi = value.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return int(value)


def cmd_enumerate(args, out) -> int:
    max_deg = None if args.max_degree is None else range(0, args.max_degree + 1)
    try:
        c = ClassConstraints(
            n=args.n,
            kind=args.kind,
            diameter=_constraint(args.diameter),
            matching_number=_constraint(args.matching),
            pendent_count=_constraint(args.pendents),
            branching_count=_constraint(args.branching),
            max_degree=max_deg,
            second_max_degree=_constraint(args.second_max_degree),
            girth=_constraint(args.girth),
        )
        graphs = list(select(c))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_graphs(graphs, args.format, out)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def cmd_family(args, out) -> int:
    params = {}
    for name in ("n", "d", "i", "beta", "p", "delta", "delta2", "g", "b", "k", "t", "m"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    for name in ("legs", "legs_a", "legs_b"):
        value = getattr(args, name)
        if value is not None:
            params[name] = _int_list(value)
    try:
        g = build_family(args.family, **params)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    _emit_graphs([g], args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    from .verify import ALL_IDS, check_conjecture, check_structural_lemmas, verify

    ids = args.id or list(ALL_IDS) + ["structural", "C7.10"]
    known = set(ALL_IDS) | {"structural", "C7.10"}
    unknown = [i for i in ids if i not in known]
    if unknown:
        raise UsageError(f"unknown check id {unknown[0]!r}; known: {', '.join(sorted(known))}")
    failed = False
    documents = []
    for cid in ids:
        if cid == "C7.10":
            rep = check_conjecture(args.n_max if args.n_max is not None else 7)
            doc = rep.to_dict()
            failed |= not rep.structure_ok
            line = f"C7.10: {rep.verdict}; degree structure {'holds' if rep.structure_ok else 'VIOLATED'}"
        else:
            rep = check_structural_lemmas(args.n_max or 12) if cid == "structural" else verify(cid, args.n_max)
            doc = rep.to_dict()
            failed |= rep.verdict == "fail"
            line = rep.summary()
        documents.append(doc)
        if args.format != "json":
            out.write(line + "\n")
            if args.format == "text" and cid != "C7.10":
                for c in rep.combos:
                    if c.status in ("fail", "discrepancy"):
                        out.write(
                            f"  {c.status} {c.params}: achieved {c.achieved}, bound {c.bound}; "
                            f"missing {c.missing}, unexpected {c.unexpected}\n"
                        )
    if args.format == "json":
        json.dump(documents, out)
        out.write("\n")
    return 1 if failed else 0


def cmd_fit(args, out) -> int:
    from . import chem_data
    from .chem import OCTANE_PROPERTIES, bp_models, matches_printed, octane_models

    def show(value: float, printed: str) -> str:
        return _at_precision(value, printed) if args.paper_precision else _num(value, args.full)

    models = bp_models(args.source)
    octane = octane_models(args.source)
    if args.format == "json":
        doc = {
            "bp": {k.value: vars(f) for k, f in models.items()},
            "octane": {f"{p.value}~{k.value}": vars(f) for (p, k), f in octane.items()},
        }
        json.dump(doc, out)
        out.write("\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["dataset", "property", "index", "slope", "intercept", "r", "printed_slope",
                     "printed_intercept", "printed_r", "match"])
    for k, f in models.items():
        ps, pi, pr = chem_data.BP_MODELS[k.value]
        ok = matches_printed(f.slope, ps) and matches_printed(f.intercept, pi) and matches_printed(abs(f.r), pr)
        writer.writerow(["benzenoid", "BP", k.value, show(f.slope, ps), show(f.intercept, pi),
                         show(f.r, pr), ps, pi, pr, "yes" if ok else "no"])
    for (p, k), f in octane.items():
        ps, pi = chem_data.OCTANE_MODELS[(p.value, k.value)]
        pr = chem_data.CORRELATION_TABLE[p.value][INDEX_ORDER.index(k)]
        ok = matches_printed(f.slope, ps) and matches_printed(f.intercept, pi) and matches_printed(abs(f.r), pr)
        writer.writerow(["octane", p.value, k.value, show(f.slope, ps), show(f.intercept, pi),
                         show(f.r, pr), ps, pi, pr, "yes" if ok else "no"])
    out.write("\n")
    writer.writerow(["property"] + HEADER)
    for p in OCTANE_PROPERTIES:
        printed = chem_data.CORRELATION_TABLE[p.value]
        writer.writerow([p.value] + [show(abs(octane[(p, k)].r), pr) for k, pr in zip(INDEX_ORDER, printed)])
    return 0


def cmd_dataset(args, out) -> int:
    from .chem import BENZENOID_PAIRS, OCTANE_PAIRS, load_dataset
    from .invariants import indices_from_distribution

    data = load_dataset(args.kind)
    if args.format == "graph6":
        for c in data:
            if c.graph is not None:
                out.write(write_graph6(c.graph) + "\n")
        return 0
    pairs = OCTANE_PAIRS if args.kind == "octane" else BENZENOID_PAIRS
    props = list(data[0].properties)
    if args.format == "json":
        json.dump([
            {
                "row": c.row,
                "name": c.name,
                "properties": {p.value: v for p, v in c.properties.items()},
                "indices": dict(zip(HEADER, indices_from_distribution(c.edge_distribution).as_tuple())),
                "edge_distribution": {f"{i},{j}": m for (i, j), m in sorted(c.edge_distribution.items())},
                "graph6": write_graph6(c.graph) if c.graph is not None else None,
            }
            for c in data
        ], out)
        out.write("\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["row", "name"] + [p.value for p in props] + HEADER
                    + [f"m{i}{j}" for i, j in pairs] + ["graph6"])
    for c in data:
        values = indices_from_distribution(c.edge_distribution).as_tuple()
        if args.paper_precision:
            shown = [_at_precision(v, str(t)) for v, t in zip(values, c.table_indices)]
        else:
            shown = [_num(v, args.full) for v in values]
        writer.writerow(
            [c.row, c.name or ""] + [repr(c.properties[p]) for p in props] + shown
            + [c.edge_distribution.get(pr, 0) for pr in pairs]
            + [write_graph6(c.graph) if c.graph is not None else ""]
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sombor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="print the seven indices of each input graph")
    p.add_argument("input", nargs="?", help="file of graph6 or edge-list lines (default: stdin)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--full", action="store_true", help="17 significant digits")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("enumerate", help="list one graph per isomorphism class")
    p.add_argument("--kind", choices=["tree", "unicyclic", "connected"], default="tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter")
    p.add_argument("--matching")
    p.add_argument("--pendents")
    p.add_argument("--branching")
    p.add_argument("--max-degree", type=int, help="upper bound on the maximum degree")
    p.add_argument("--second-max-degree")
    p.add_argument("--girth")
    p.add_argument("--format", choices=["graph6", "edges", "csv", "json"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="construct one member of a named family")
    p.add_argument("family", choices=sorted(FAMILIES))
    for name in ("n", "d", "i", "beta", "p", "delta", "delta2", "g", "b", "k", "t", "m"):
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int)
    p.add_argument("--legs", help="comma-separated leg lengths")
    p.add_argument("--legs-a", dest="legs_a")
    p.add_argument("--legs-b", dest="legs_b")
    p.add_argument("--format", choices=["graph6", "edges", "csv", "json"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="brute-force the extremal results")
    p.add_argument("--id", action="append", help="check id (repeatable; default: all)")
    p.add_argument("--n-max", type=int)
    p.add_argument("--format", choices=["text", "summary", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="regression models and the correlation matrix")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--source", choices=["recomputed", "table"], default="recomputed",
                   help="fit on indices recomputed from m_ij or on the printed columns")
    p.add_argument("--paper-precision", action="store_true")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("dataset", help="dump an embedded dataset")
    p.add_argument("--kind", choices=["octane", "benzenoid"], default="octane")
    p.add_argument("--format", choices=["csv", "graph6", "json"], default="csv")
    p.add_argument("--paper-precision", action="store_true")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_dataset)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:     # --help
            return int(exc.code or 0)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"sombor: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
