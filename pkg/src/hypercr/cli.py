"""Command-line front end: ``hypercr {cr,hom,enumerate,verify,dag,fmt}``.

Data goes to standard output (or ``--out``), diagnostics to standard error.
Exit status is 0 on success, 1 when a check fails and 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import digraphs, enumeration, verify
from .canon import canonical
from .homcount import KINDS, count, count_hom_cgraph, count_hom_cgraph_brute
from .hypercore import ColoredGraph, Digraph, Hypergraph, InstanceError, loads
from .refine import distinguishes_cgraphs, distinguishes_hypergraphs


class UsageError(Exception):
    pass


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"bound must be non-negative, got {v}")
    return v


def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return loads(text)
    except InstanceError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _read_as(path: str, cls):
    x = _read(path)
    if not isinstance(x, cls):
        raise UsageError(f"{path}: expected a {cls.__name__}, got {type(x).__name__}")
    return x


def _line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


# -- subcommands ----------------------------------------------------------------

def cmd_cr(args, out) -> int:
    G, H = _read(args.first), _read(args.second)
    if type(G) is not type(H) or isinstance(G, Digraph):
        raise UsageError("cr compares two hypergraphs or two cgraphs")
    if isinstance(G, Hypergraph):
        verdict = distinguishes_hypergraphs(G, H, args.rounds)
    else:
        verdict = distinguishes_cgraphs(G, H, args.own_color == "on", args.rounds)
    if verdict.distinguished:
        print(f"distinguished at round {verdict.round}", file=out)
    else:
        print("not distinguished", file=out)
    return 0


def cmd_hom(args, out) -> int:
    F, G = _read(args.pattern), _read(args.target)
    if type(F) is not type(G):
        raise UsageError("pattern and target must have the same instance type")
    if isinstance(F, Hypergraph):
        value = count(KINDS[args.kind], F, G)
    elif args.kind != "hom":
        raise UsageError(f"--kind {args.kind} only applies to hypergraphs")
    elif isinstance(F, ColoredGraph):
        value = count_hom_cgraph(F, G) if F.is_connected() else count_hom_cgraph_brute(F, G)
    else:
        value = digraphs.count_dihom(F, G)
    print(value, file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    fam = args.family
    if fam == "ba":
        items = enumeration.enum_ba(args.max_weight)
    elif fam == "ba-m-n":
        if args.n < 1:
            raise UsageError("ba-m-n needs --n >= 1")
        items = enumeration.enum_ba_m_n(args.m, args.n)
    elif fam == "hypergraphs":
        items = enumeration.enum_hypergraphs(args.max_v, args.max_e, args.max_edge_size,
                                             args.simple, args.connected)
    elif fam == "connected":
        items = enumeration.enum_connected(args.m, args.max_edge_size, args.max_v)
    elif fam == "digraphs":
        items = enumeration.enum_digraphs(args.max_v)
    elif fam == "dags-a3":
        items = enumeration.enum_dags_A3(args.max_v)
    elif fam == "cgraphs":
        items = enumeration.enum_cgraphs(args.max_v, args.colors)
    else:
        items = enumeration.enum_colored_trees(args.max_v, args.colors)
    for x in items:
        print(_line(x.to_json()), file=out)
    print(f"{len(items)} instances", file=sys.stderr)
    return 0


def _named_check(args):
    name, files = args.check, args.instances
    need = {"decomposition-inhom": 2, "decomposition-hom": 2, "decomposition-loinj": 2,
            "hom-witness": 2, "inhom-witness": 2, "simple-hom-witness": 2, "recover": 1, "b-rs": 2,
            "degree-interpolation": 2, "leaf-adding-slice": 1, "triangularity": 0}[name]
    if len(files) != need:
        raise UsageError(f"check {name} takes {need} instance file(s), got {len(files)}")
    hs = [_read_as(p, Hypergraph) for p in files]
    try:
        if name == "decomposition-inhom":
            return [verify.check_decomposition_inhom(*hs)]
        if name == "decomposition-hom":
            return [verify.check_decomposition_hom(*hs)]
        if name == "decomposition-loinj":
            return [verify.check_decomposition_loinj(*hs)]
        if name == "hom-witness":
            return [verify.check_theorem1(*hs, args.budget)]
        if name == "inhom-witness":
            return [verify.check_lemma2(*hs, args.budget)]
        if name == "simple-hom-witness":
            return [verify.check_corollary_sba(*hs, args.budget)]
        if name == "recover":
            G = hs[0]
            counts, m = verify.recover_edge_size_counts(verify.inhom_single_edges(G), G.n)
            ok = counts == verify.edge_size_histogram(G) and m == G.m
            return [verify.CheckReport("recover_edge_size_counts", (G,), ok, detail={"counts": counts, "m": m})]
        if name == "b-rs":
            return [verify.check_b_rs_formula(hs[0], args.u, hs[1], args.r, args.s)]
        if name == "degree-interpolation":
            return [verify.check_degree_interpolation(hs[0], args.u, hs[1])]
        if name == "leaf-adding-slice":
            return [verify.check_lemma6_restriction(args.m, hs[0].n, hs[0])]
        fam = enumeration.enum_ba(args.max_weight)
        return [verify.check_triangularity(fam, KINDS[k]) for k in ("lomehom", "leafaddinhom")]
    except InstanceError as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify(args, out) -> int:
    if args.suite:
        if args.check:
            raise UsageError("give either --suite or a check name, not both")
        reports = verify.run_suite(verify.SUITES[args.suite], args.workers, args.seed)
    elif args.sweep:
        reports = verify.run_suite(args.sweep, args.workers, args.seed)
    elif args.check:
        reports = [r.to_json() for r in _named_check(args)]
    else:
        raise UsageError("verify needs --suite, --sweep or a check name")
    for r in reports:
        print(_line(r), file=out)
    failed = [r["check"] for r in reports if not r["ok"]]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=sys.stderr)
    for name in failed:
        print(f"FAILED {name}", file=sys.stderr)
    return 1 if failed else 0


def cmd_dag(args, out) -> int:
    op = args.op
    if op == "tournament":
        if len(args.instances) != 0:
            raise UsageError("tournament takes no instance files")
        print(_line(digraphs.transitive_tournament(args.n).to_json()), file=out)
        return 0
    ds = [_read_as(p, Digraph) for p in args.instances]
    arity = {"tensor": 2, "hom": 2, "a3-distinguish": 2, "in-a": 1}[op]
    if len(ds) != arity:
        raise UsageError(f"dag {op} takes {arity} instance file(s)")
    if op == "tensor":
        print(_line(digraphs.tensor_product(*ds).to_json()), file=out)
    elif op == "hom":
        print(digraphs.count_dihom(*ds), file=out)
    elif op == "in-a":
        print(_line({"in_A_n": digraphs.in_A_n(ds[0], args.n), "n": args.n}), file=out)
    else:
        rep = digraphs.distinguish_by_A3(*ds, args.max_v)
        print(_line({"isomorphic": rep.isomorphic, "status": rep.status, "ok": rep.ok,
                     "witness": rep.witness.to_json() if rep.witness else None,
                     "counts": list(rep.counts) if rep.counts else None}), file=out)
        return 0 if rep.ok else 1
    return 0


def cmd_fmt(args, out) -> int:
    for path in args.instances:
        x = _read(path)
        if args.canonical:
            x = canonical(x)
        print(_line(x.to_json()), file=out)
    return 0


# -- parser -----------------------------------------------------------------------

CHECKS = ("decomposition-inhom", "decomposition-hom", "decomposition-loinj", "triangularity",
          "hom-witness", "inhom-witness", "simple-hom-witness", "recover", "b-rs", "degree-interpolation",
          "leaf-adding-slice")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypercr", description="Hypergraph color refinement and homomorphism counts.")
    p.add_argument("--out", help="write data output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cr", help="refine two instances and report whether they are told apart")
    c.add_argument("first")
    c.add_argument("second")
    c.add_argument("--own-color", choices=("on", "off"), default="on",
                   help="keep a vertex's own color in its signature (cgraphs only)")
    c.add_argument("--rounds", type=_non_negative, help="round budget (default: max(n)+1)")
    c.set_defaults(func=cmd_cr)

    h = sub.add_parser("hom", help="count mappings of one species between two instances")
    h.add_argument("pattern")
    h.add_argument("target")
    h.add_argument("--kind", choices=sorted(KINDS), default="hom")
    h.set_defaults(func=cmd_hom)

    e = sub.add_parser("enumerate", help="print an isomorph-free family as JSON lines")
    e.add_argument("family", choices=("ba", "ba-m-n", "hypergraphs", "connected", "digraphs",
                                       "dags-a3", "cgraphs", "colored-trees"))
    e.add_argument("--max-weight", type=_non_negative, default=4)
    e.add_argument("--max-v", type=_non_negative, default=3)
    e.add_argument("--max-e", type=_non_negative, default=2)
    e.add_argument("--max-edge-size", type=_non_negative, default=3)
    e.add_argument("--m", type=_non_negative, default=1)
    e.add_argument("--n", type=_non_negative, default=2)
    e.add_argument("--colors", type=_non_negative, default=1)
    e.add_argument("--simple", action="store_true")
    e.add_argument("--connected", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a named check or a sweep suite; JSON-lines report")
    v.add_argument("check", nargs="?", choices=CHECKS)
    v.add_argument("instances", nargs="*")
    v.add_argument("--suite", choices=sorted(verify.SUITES))
    v.add_argument("--sweep", action="append", choices=sorted(verify.SWEEPS),
                   help="run only this sweep (repeatable)")
    v.add_argument("--budget", type=_non_negative, help="witness search weight budget")
    v.add_argument("--max-weight", type=_non_negative, default=5)
    v.add_argument("--u", type=_non_negative, default=1)
    v.add_argument("--r", type=_non_negative, default=1)
    v.add_argument("--s", type=_non_negative, default=1)
    v.add_argument("--m", type=_non_negative, default=1)
    v.add_argument("--workers", type=_non_negative, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dag", help="digraph tools: tensor products, tournaments, A_3 witnesses")
    d.add_argument("op", choices=("tensor", "tournament", "hom", "in-a", "a3-distinguish"))
    d.add_argument("instances", nargs="*")
    d.add_argument("--n", type=_non_negative, default=3)
    d.add_argument("--max-v", type=_non_negative, default=4)
    d.set_defaults(func=cmd_dag)

    f = sub.add_parser("fmt", help="validate instance files and print them normalized")
    f.add_argument("instances", nargs="+")
    f.add_argument("--canonical", action="store_true", help="print the canonical representative")
    f.set_defaults(func=cmd_fmt)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except UsageError as exc:
        print(f"hypercr {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hypercr: cannot write output: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
