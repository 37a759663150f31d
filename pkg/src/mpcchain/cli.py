"""Command-line entry point: ``mpcchain <subcommand> ...``."""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .anchors import AnchorParams, find_anchors
from .bench import CorpusSpec, bench
from .chaining import Anchor, chain_dag_mpc, chain_dag_naive, chain_dag_with_overlaps
from .graph import GraphError, parse_dag, parse_graph, serialize_dag, generate_dag
from .lcs import lcs_dag_sequence
from .lis import lis_dag
from .mpc import minimum_path_cover
from .reach import ReachIndex, cover_and_links


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_dag(path: str):
    dag, renumber = parse_dag(_read(path))
    original = [0] * (dag.node_count + 1)
    for old, new in renumber.items():
        original[new] = old
    return dag, renumber, original


def parse_sequence(text: str) -> list[int]:
    """Whitespace-separated non-negative integer symbol codes; ``#`` starts a comment line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise ValueError(f"sequence line {lineno}: bad symbol {tok!r}") from None
            if x < 0:
                raise ValueError(f"sequence line {lineno}: symbols must be non-negative")
            out.append(x)
    return out


def parse_anchors(text: str) -> list[Anchor]:
    """TSV lines ``v1,v2,...<TAB>c<TAB>d``."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 3:
            raise ValueError(f"anchor line {lineno}: expected 3 tab-separated fields")
        try:
            path = tuple(int(v) for v in parts[0].split(","))
            out.append(Anchor(path, int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise ValueError(f"anchor line {lineno}: {exc}") from None
    return out


def format_anchor(a: Anchor, original=None) -> str:
    ids = a.path if original is None else [original[v] for v in a.path]
    return f"{','.join(map(str, ids))}\t{a.c}\t{a.d}"


def cmd_mpc(args, out):
    dag, _, original = _load_dag(args.graph)
    cover = minimum_path_cover(dag)
    print(cover.K, file=out)
    for p in cover.paths:
        print(" ".join(str(original[v]) for v in p), file=out)


def cmd_reach(args, out):
    n, edges, _ = parse_graph(_read(args.graph))
    index = ReachIndex(n, edges)
    for lineno, line in enumerate(_read(args.pairs).splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"pairs line {lineno}: expected 'x y'")
        print(1 if index.reaches(int(parts[0]), int(parts[1])) else 0, file=out)


def cmd_lis(args, out):
    dag, _, original = _load_dag(args.graph)
    res = lis_dag(dag)
    print(res.length, file=out)
    print(" ".join(str(original[v]) for v, _ in res.witness), file=out)


def cmd_lcs(args, out):
    dag, _, original = _load_dag(args.graph)
    S = parse_sequence(_read(args.sequence))
    res = lcs_dag_sequence(dag, S)
    print(res.length, file=out)
    print(" ".join(f"{original[v]}:{j}" for v, j in res.witness), file=out)


def cmd_anchors(args, out):
    dag, _, original = _load_dag(args.graph)
    R = parse_sequence(_read(args.sequence))
    for a in find_anchors(dag, R, AnchorParams(args.min_len, args.max_anchors)):
        print(format_anchor(a, original), file=out)


METHODS = {
    "naive": lambda dag, M, cover, links: chain_dag_naive(dag, M),
    "mpc": chain_dag_mpc,
    "overlap": chain_dag_with_overlaps,
}


def cmd_chain(args, out):
    dag, renumber, original = _load_dag(args.graph)
    M = []
    for a in parse_anchors(_read(args.anchors)):
        try:
            M.append(Anchor(tuple(renumber[v] for v in a.path), a.c, a.d))
        except KeyError as exc:
            raise GraphError(f"anchor references unknown node {exc.args[0]}") from None
    cover, links = None, None
    if args.method != "naive":
        cover, _, links = cover_and_links(dag)
    res = METHODS[args.method](dag, M, cover, links)
    print(f"coverage\t{res.coverage}", file=out)
    print(f"best_index\t{'' if res.best_index is None else res.best_index}", file=out)
    if args.trace:
        for j in res.chain:
            print(f"chain\t{j}\t{format_anchor(M[j], original)}", file=out)


def cmd_bench(args, out):
    spec = CorpusSpec(seed=args.seed, min_length=args.min_len, repeats=args.repeats)
    if args.quick:
        spec = replace(spec, nodes=(2000, 3000), widths=(2, 5), anchor_ranges=((2, 10), (101, 300)))
    if args.widths:
        spec = replace(spec, widths=tuple(args.widths))
    if args.instances:
        spec = replace(spec, instances_per_cell=args.instances)
    progress = None
    if args.verbose:
        progress = lambda r: print(
            f"|V|={r.nodes} k={r.k} N={r.N} naive={r.naive_ms:.1f}ms mpc={r.mpc_ms:.1f}ms",
            file=sys.stderr,
        )
    report = bench(spec, progress)
    if args.out:
        Path(args.out).write_text(report.to_jsonl())
    out.write(report.to_json() + "\n" if args.format == "json" else report.render_text())


def cmd_generate(args, out):
    dag = generate_dag(args.nodes, args.width, args.alphabet, args.seed, cross_edges=args.cross_edges)
    out.write(serialize_dag(dag))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mpcchain", description="Path-cover dynamic programming on DAGs.")
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    s = sub.add_parser("mpc", help="minimum path cover")
    s.add_argument("graph")
    s.set_defaults(func=cmd_mpc)

    s = sub.add_parser("reach", help="reachability queries (cycles allowed)")
    s.add_argument("graph")
    s.add_argument("--pairs", required=True, help="file of 'x y' lines")
    s.set_defaults(func=cmd_reach)

    s = sub.add_parser("lis", help="longest increasing subsequence over path labels")
    s.add_argument("graph")
    s.set_defaults(func=cmd_lis)

    s = sub.add_parser("lcs", help="longest common subsequence with a sequence")
    s.add_argument("graph")
    s.add_argument("sequence")
    s.set_defaults(func=cmd_lcs)

    s = sub.add_parser("anchors", help="exact-match anchors of a read (TSV)")
    s.add_argument("graph")
    s.add_argument("sequence")
    s.add_argument("--min-len", type=int, default=1)
    s.add_argument("--max-anchors", type=int, default=None)
    s.set_defaults(func=cmd_anchors)

    s = sub.add_parser("chain", help="co-linear chaining of anchors")
    s.add_argument("graph")
    s.add_argument("anchors")
    s.add_argument("--method", choices=sorted(METHODS), default="mpc")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("bench", help="naive vs path-cover chaining benchmark")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-len", type=int, default=3)
    s.add_argument("--repeats", type=int, default=1)
    s.add_argument("--widths", type=int, nargs="*")
    s.add_argument("--instances", type=int, default=None, help="instances per (width, N range) cell")
    s.add_argument("--quick", action="store_true", help="small graphs, for a smoke run")
    s.add_argument("--out", help="write raw per-instance records as JSON lines")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("generate", help="print a random DAG in the graph file format")
    s.add_argument("--nodes", type=int, required=True)
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--alphabet", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cross-edges", type=int, default=None)
    s.set_defaults(func=cmd_generate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (GraphError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"mpcchain {args.command}: error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
