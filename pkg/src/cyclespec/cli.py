"""Command-line interface: ``cyclespec <command> ...``.

Graph inputs are a graph6 file (one graph per line), an edge-list file, a
literal graph6 string, or ``-`` for standard input.  Results are printed as
one JSON object per input graph.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import catalog as catalog_mod
from . import coloring, cycles, decomposition, families, verify
from .graph import (
    GraphFormatError,
    SizeLimitExceeded,
    encode_graph6,
    format_edge_list,
    iter_graph6_lines,
    parse_edge_list,
    parse_graph6,
)

log = logging.getLogger("cyclespec")


def _read_inputs(source: str, fmt: str):
    """Yield ``(label, graph)`` pairs; raises GraphFormatError on bad input."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source, encoding="ascii", errors="replace") as fh:
            text = fh.read()
    elif fmt == "graph6":
        text = source
    else:
        raise FileNotFoundError(source)
    if fmt == "edgelist":
        yield source, parse_edge_list(text)
        return
    for lineno, line in iter_graph6_lines(text):
        try:
            yield line, parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(exc.message, offset=exc.offset, line=lineno) from None


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_spectrum(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        report = cycles.cycle_spectrum_mod(g, args.mod, limit=args.limit)
        _emit({"graph": label, "n": g.n, "m": g.m, **report.to_json()})
    return 0


def cmd_opposite_pair(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        pair = cycles.find_opposite_pair(g, limit=args.limit)
        _emit({"graph": label, "opposite_pair": pair.to_json() if pair else None})
    return 0


def cmd_blocks(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        tree = decomposition.block_cut_tree(g)
        out = {
            "graph": label,
            "blocks": [sorted(b) for b in tree.blocks],
            "cut_vertices": sorted(tree.cut_vertices),
            "end_blocks": [sorted(tree.blocks[i]) for i in tree.end_blocks()],
            "two_connected": decomposition.is_two_connected(g),
        }
        if decomposition.is_connected(g):
            part = decomposition.good_bad_partition(g)
            out["good"], out["bad"] = sorted(part.good), sorted(part.bad)
        _emit(out)
    return 0


def cmd_layers(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        lay = decomposition.bfs_layering(g, args.root)
        _emit({"graph": label, "root": args.root, "layers": [sorted(L) for L in lay.layers], "parent": lay.parent})
    return 0


def cmd_color(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        out = {"graph": label, "mode": args.mode}
        if args.mode == "chi":
            chi, col = coloring.chromatic_number(g, args.limit)
            out.update(chi=chi, coloring=col.to_list())
        else:
            if args.mode == "layered5":
                res = coloring.layered_five_coloring(g, args.root)
                out["root"] = args.root
            else:
                res = coloring.constrained_three_coloring(g)
            if isinstance(res, coloring.ConflictWitness):
                out["conflict"] = res.to_json()
            else:
                out["coloring"] = res.to_list()
        _emit(out)
    return 0


def cmd_critical(args) -> int:
    for label, g in _read_inputs(args.input, args.format):
        res = coloring.is_k_critical(g, args.k, args.limit)
        _emit({
            "graph": label,
            "k": args.k,
            "critical": res.verdict,
            "chi": res.chi,
            "coloring": res.chi_coloring.to_list(),
            "failing_edge": list(res.failing_edge) if res.failing_edge else None,
            "edge_colorings": {f"{u}-{v}": c.to_list() for (u, v), c in res.edge_colorings.items()},
        })
    return 0


def _write_graph(g, fmt: str) -> None:
    sys.stdout.write((encode_graph6(g) + "\n") if fmt == "graph6" else format_edge_list(g))


def cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, tuple(args.params))
    _write_graph(families.generate(spec), args.format)
    return 0


def cmd_catalog(args) -> int:
    count = 0
    for g in catalog_mod.catalog(args.n_max, n_min=args.n_min, min_degree=args.min_degree, triangle_free=args.triangle_free):
        if args.connected and not decomposition.is_connected(g):
            continue
        if args.two_connected and not decomposition.is_two_connected(g):
            continue
        if args.non_bipartite and decomposition.is_bipartite(g):
            continue
        if args.with_triangle and not verify.has_triangle(g):
            continue
        print(encode_graph6(g))
        count += 1
    log.info("wrote %d graphs", count)
    return 0


def cmd_verify(args) -> int:
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.check == "ab_paths":
        params.update(samples=args.samples, seed=args.seed)
    report = verify.run_corpus(args.corpus, [args.check], parallelism=args.jobs, limit=args.limit, **params)
    text = report.dumps(indent=args.indent)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclespec", description="Cycle lengths modulo k, colouring, and theorem checks on small graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="graph6/edge-list file, literal graph6 string, or '-'")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        sp.add_argument("--limit", type=int, default=None, help="exactness limit on vertex count")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("spectrum", cmd_spectrum, "cycle-length residues mod K with witnesses")
    sp.add_argument("--mod", type=int, required=True, metavar="K")
    graph_cmd("opposite-pair", cmd_opposite_pair, "find an odd/even cycle pair sharing one vertex")
    graph_cmd("blocks", cmd_blocks, "blocks, cut vertices and good/bad vertices")
    sp = graph_cmd("layers", cmd_layers, "BFS layering from a root")
    sp.add_argument("--root", type=int, default=0)
    sp = graph_cmd("color", cmd_color, "chromatic number or layered colourings")
    sp.add_argument("--mode", choices=("chi", "layered5", "constrained3"), default="chi")
    sp.add_argument("--root", type=int, default=0, help="root for layered5")
    sp = graph_cmd("critical", cmd_critical, "k-criticality certificate")
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("gen", help="generate a named family member")
    sp.add_argument("family", choices=families.FAMILIES)
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("catalog", help="write an isomorph-free graph6 catalog")
    sp.add_argument("n_max", type=int)
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--min-degree", type=int, default=0)
    sp.add_argument("--triangle-free", action="store_true")
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--two-connected", action="store_true")
    sp.add_argument("--non-bipartite", action="store_true")
    sp.add_argument("--with-triangle", action="store_true")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="run a theorem check over a graph6 corpus")
    sp.add_argument("check", choices=tuple(verify.CHECKS))
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--limit", type=int, default=None, metavar="NMAX")
    sp.add_argument("--k", type=int, default=None, help="parameter for longcycle/consecutive")
    sp.add_argument("--samples", type=int, default=3, help="partitions per graph for ab_paths")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", default=None, help="write the JSON report here instead of stdout")
    sp.add_argument("--indent", type=int, default=None)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
