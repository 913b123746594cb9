"""Command-line front end.

Exit status: 0 when a question is decided or an object constructed, 2 when a
budget ran out before a decision, 1 on bad input.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import io
from .errors import BudgetExceeded, ResourceLimit, SubshiftError
from .graphs import (
    DEFAULT_VERTEX_BUDGET, CayleyGraph, FiniteGraph, NoPromise, OneEnd, TwoEnds, bfs_ball,
    end_count_estimate,
)
from .groups import parse_word

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _Out:
    def __init__(self, stream):
        self.stream = stream

    def line(self, text=""):
        self.stream.write(f"{text}\n")

    def json(self, obj):
        self.line(io.dumps(obj))


def _fmt_float(x: float) -> str:
    return f"{x:.12f}"


def _emit_presentation(args, out, pres):
    text = io.dumps(pres.to_dict())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        out.line(f"wrote {args.output}: {len(pres.alphabet)} symbols, {len(pres.forbidden)} forbidden patterns")
    else:
        out.line(text)
    return EXIT_OK


def _parse_vertex(G, text):
    if isinstance(G, FiniteGraph):
        v = int(text)
    else:
        v = G.group.evaluate(parse_word(text))
    G.check_vertex(v)
    return v


def _vertex_out(G, v):
    return G.format_vertex(v)


def _promise(args):
    if args.promise == "one":
        return OneEnd()
    if args.promise == "two":
        return TwoEnds(())
    return NoPromise()


# sft ------------------------------------------------------------------------

def _sft_check_empty(args, out):
    from .sft import check_empty

    X = io.load_presentation(args.file)
    cert = check_empty(X, args.max_radius, args.max_lookahead, args.max_patterns)
    if args.format == "json":
        out.json(cert.to_json())
    else:
        out.line(cert.describe())
    return EXIT_OK if cert.decided else EXIT_UNKNOWN


def _sft_fixed_point(args, out):
    from .sft import fixed_points

    X = io.load_presentation(args.file)
    syms = fixed_points(X)
    if args.format == "json":
        out.json({"fixed_point": bool(syms), "symbols": list(syms)})
    elif syms:
        out.line(f"yes: symbol {syms[0]}")
    else:
        out.line("no")
    return EXIT_OK


def _sft_binary(op):
    def run(args, out):
        return _emit_presentation(args, out, op(io.load_presentation(args.left), io.load_presentation(args.right)))
    return run


def _sft_pullback(args, out):
    from .sft import pullback_to_free

    return _emit_presentation(args, out, pullback_to_free(io.load_presentation(args.file), args.relator_length))


def _sft_extend_free(args, out):
    from .sft import free_extension

    X = io.load_presentation(args.file)
    G = io.load_group(args.group)
    emb = io.load_json(args.embedding) if args.embedding else None
    return _emit_presentation(args, out, free_extension(X, G, emb))


def _sft_entropy_bound(args, out):
    from .sft import entropy_upper_bound

    X = io.load_presentation(args.file)
    h = entropy_upper_bound(X, args.n, args.lookahead, args.max_patterns)
    if args.format == "json":
        out.json({"n": args.n, "lookahead": args.lookahead, "bound": h})
    else:
        out.line(f"entropy <= {_fmt_float(h)}  (n={args.n}, lookahead={args.lookahead})")
    return EXIT_OK


def _sft_z_decide(args, out):
    from .sft import z_decide

    X = io.load_presentation(args.file)
    z = z_decide(X)
    report = {
        "empty": z.empty,
        "entropy": None if z.empty else z.entropy,
        "window": z.window,
        "vertices": len(z.vertices),
        "period": list(z.periodic_word()),
    }
    if args.language is not None:
        report["language_radius"] = args.language
        report["language"] = [list(w) for w in z.language(args.language)]
    if args.format == "json":
        out.json(report)
        return EXIT_OK
    out.line(f"empty: {'yes' if z.empty else 'no'}")
    if not z.empty:
        out.line(f"entropy: {_fmt_float(z.entropy)}")
        out.line(f"periodic point: ({' '.join(map(str, report['period']))})^inf")
    out.line(f"window: {z.window}, graph vertices: {len(z.vertices)}")
    if args.language is not None:
        words = report["language"]
        out.line(f"L_{args.language}: {len(words)} words")
        for w in words:
            out.line(" ".join(map(str, w)))
    return EXIT_OK


def _sft_distance(args, out):
    from .sft import subshift_distance

    D = subshift_distance(io.load_presentation(args.left), io.load_presentation(args.right))
    if args.format == "json":
        out.json({"distance": D})
    else:
        out.line(f"D = {D!r}")
        if D == 2:
            out.line("note: the languages already differ on the ball of radius 0; reported as 2 by convention")
    return EXIT_OK


def _sft_reduce(args, out):
    from .sft import rice_reduction

    X = rice_reduction(io.load_presentation(args.plus), io.load_presentation(args.minus), io.load_presentation(args.file))
    return _emit_presentation(args, out, X)


def _sft_sofic_reduce(args, out):
    from .sft import sofic_reduction

    Y = sofic_reduction(io.load_presentation(args.sofic), io.load_presentation(args.file))
    return _emit_presentation(args, out, Y)


def _sft_greedy_free(args, out):
    from .sft import Empty, greedy_free_configuration

    X = io.load_presentation(args.file)
    p = greedy_free_configuration(X, args.radius)
    if p is Empty:
        if args.format == "json":
            out.json({"verdict": "empty"})
        else:
            out.line("EMPTY")
        return EXIT_OK
    G = X.group
    if args.format == "json":
        out.json({"verdict": "configuration", "radius": args.radius, "cells": p.to_json()})
    else:
        for g, v in p.cells:
            out.line(f"{G.format_element(g)}\t{v}")
    return EXIT_OK


# graph ----------------------------------------------------------------------

def _graph_ball(args, out):
    G = io.load_graph(args.graph)
    c = G.default_center() if args.center is None else _parse_vertex(G, args.center)
    dist = bfs_ball(G, c, args.radius, args.max_vertices)
    verts = G.sorted_vertices(dist)
    edges = sum(1 for u in verts for w in G.neighbors(u) if w in dist) // 2
    if args.format == "json":
        out.json({"vertices": len(verts), "edges": edges,
                  "ball": [[G.vertex_to_json(v), dist[v]] for v in verts]})
        return EXIT_OK
    out.line(f"vertices: {len(verts)}")
    out.line(f"edges: {edges}")
    for v in verts:
        out.line(f"{dist[v]}\t{_vertex_out(G, v)}")
    return EXIT_OK


def _graph_ends(args, out):
    G = io.load_graph(args.graph)
    c = None if args.center is None else _parse_vertex(G, args.center)
    k = end_count_estimate(G, args.inner, args.outer, c, args.max_vertices)
    if args.format == "json":
        out.json({"inner": args.inner, "outer": args.outer, "infinite_components": k})
    else:
        out.line(f"ends estimate: {k}  (inner {args.inner}, outer {args.outer})")
    return EXIT_OK


def _path_report(G, path, **kw):
    from .threepath import jump_lengths, path_violations

    vs = list(path.vertices)
    viol = path_violations(G, path, **kw)
    return {
        "start": path.start,
        "length": len(vs),
        "max_jump": max(jump_lengths(G, vs), default=0),
        "valid": not viol,
        "violations": [str(v) for v in viol],
    }


def _emit_path(args, out, G, path, report):
    if args.format == "json":
        out.json({"path": [[i, G.vertex_to_json(v)] for i, v in path.items()], "validation": report})
        return
    for i, v in path.items():
        out.line(f"{i}\t{_vertex_out(G, v)}")
    out.line(f"# validation {json.dumps(report, ensure_ascii=False, sort_keys=True)}")


def _graph_threepath_finite(args, out):
    from .threepath import finite_hamiltonian

    G = io.load_graph(args.graph)
    if not isinstance(G, FiniteGraph):
        raise ValueError("threepath-finite needs a finite graph file")
    u, v = _parse_vertex(G, args.source), _parse_vertex(G, args.target)
    path = finite_hamiltonian(G, u, v)
    report = _path_report(G, path, hamiltonian_on=G.vertex_list, endpoints=(u, v), strict_ends=True)
    _emit_path(args, out, G, path, report)
    return EXIT_OK if report["valid"] else EXIT_INPUT


def _load_seed(G, source):
    from .threepath import ThreePath

    d = io.load_json(source)
    if isinstance(G, CayleyGraph):
        verts = [G.group.evaluate(parse_word(w)) if isinstance(w, str) else G.group.element_from_json(w)
                 for w in d["vertices"]]
    else:
        verts = [int(w) for w in d["vertices"]]
    return ThreePath(int(d.get("start", 0)), tuple(verts))


def _generator(args, G):
    from .threepath import PathGenerator

    if isinstance(G, FiniteGraph):
        raise ValueError("streaming paths need an infinite Cayley graph")
    seed = _load_seed(G, args.seed) if args.seed else None
    return PathGenerator(G, seed, _promise(args), args.max_vertices)


def _graph_threepath_stream(args, out):
    G = io.load_graph(args.graph)
    gen = _generator(args, G)
    path = gen.run(args.steps)
    report = _path_report(G, path)
    report["targets_processed"] = gen.processed
    _emit_path(args, out, G, path, report)
    return EXIT_OK if report["valid"] else EXIT_INPUT


def _graph_tla(args, out):
    from .threepath import TranslationAction

    G = io.load_graph(args.graph)
    act = TranslationAction(_generator(args, G)).act
    rows = []
    for v in itertools.islice(G.vertices(), args.steps):
        rows.append((v, act(v, 1), act(v, -1)))
    jumps = [G.distance(v, f) for v, f, _ in rows]
    ok = all(j is not None and 1 <= j <= 3 for j in jumps) and all(act(f, -1) == v for v, f, _ in rows)
    report = {"rows": len(rows), "max_jump": max(jumps, default=0), "valid": ok}
    if args.format == "json":
        out.json({"action": [[G.vertex_to_json(x) for x in r] for r in rows], "validation": report})
    else:
        out.line("v\tv*1\tv*-1")
        for r in rows:
            out.line("\t".join(_vertex_out(G, x) for x in r))
        out.line(f"# validation {json.dumps(report, sort_keys=True)}")
    return EXIT_OK if ok else EXIT_INPUT


def _graph_orbits(args, out):
    from .threepath import orbit_partition

    G = io.load_graph(args.graph)
    frags = orbit_partition(G, args.radius, _promise(args), args.max_vertices)
    if args.format == "json":
        out.json({"fragments": [[G.vertex_to_json(v) for v in f.vertices] for f in frags]})
        return EXIT_OK
    out.line(f"fragments: {len(frags)}")
    for k, f in enumerate(frags):
        out.line(f"{k}\t" + " | ".join(_vertex_out(G, v) for v in f.vertices))
    return EXIT_OK


# tx -------------------------------------------------------------------------

def _load_h(source):
    from .bounded_actions import HPresentation

    d = io.load_json(source)
    if "generators" in d and "kind" not in d:
        return HPresentation.from_dict(d)
    return HPresentation.from_group(io.load_group(d))


def _tx_build_t(args, out):
    from .bounded_actions import build_T

    G = io.load_group(args.group)
    H = _load_h(args.h)
    F = [G.evaluate(parse_word(w)) for w in args.F.split(",")]
    return _emit_presentation(args, out, build_T(G, H, F))


def _tx_build_tx(args, out):
    from .bounded_actions import ArrowSft, build_TX

    T = io.load_presentation(args.t)
    if not isinstance(T, ArrowSft):
        raise ValueError(f"{args.t} is not an arrow presentation")
    return _emit_presentation(args, out, build_TX(T, io.load_presentation(args.x), args.radius_cap))


def _tx_validate(args, out):
    from .bounded_actions import validate_window

    pres = io.load_presentation(args.file)
    window = io.load_window(args.window, pres.group)
    ok = validate_window(pres, window)
    if args.format == "json":
        out.json({"valid": ok, "cells": len(window.cells)})
    else:
        out.line("valid" if ok else "invalid")
    return EXIT_OK


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .sft import disjoint_union, product

    p = _Parser(prog="subshifts", description="Subshifts on finitely generated groups.")
    top = p.add_subparsers(dest="area", required=True, parser_class=_Parser)

    def cmd(sub, name, func, help_, *, report=True, output=False):
        q = sub.add_parser(name, help=help_)
        if report:
            q.add_argument("--format", choices=("text", "json"), default="text")
        if output:
            q.add_argument("-o", "--output", help="write the presentation here instead of stdout")
        q.set_defaults(func=func)
        return q

    def lang_budget(q):
        q.add_argument("--max-patterns", type=_positive, default=10**6)

    def vertex_budget(q):
        q.add_argument("--max-vertices", type=_positive, default=DEFAULT_VERTEX_BUDGET)

    sft = top.add_parser("sft", help="shifts of finite type").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = cmd(sft, "check-empty", _sft_check_empty, "emptiness certificate")
    q.add_argument("file")
    q.add_argument("--max-radius", type=_nonneg, default=6)
    q.add_argument("--max-lookahead", type=_nonneg, default=2)
    lang_budget(q)
    cmd(sft, "fixed-point", _sft_fixed_point, "constant configurations").add_argument("file")
    for name, op in (("product", product), ("union", disjoint_union)):
        q = cmd(sft, name, _sft_binary(op), f"{name} of two SFTs", report=False, output=True)
        q.add_argument("left")
        q.add_argument("right")
    q = cmd(sft, "pullback", _sft_pullback, "pull back to a free group", report=False, output=True)
    q.add_argument("file")
    q.add_argument("--relator-length", type=_positive, default=4)
    q = cmd(sft, "extend-free", _sft_extend_free, "free extension to a supergroup", report=False, output=True)
    q.add_argument("file")
    q.add_argument("--group", required=True)
    q.add_argument("--embedding", help="JSON map from each small-group generator to a big-group generator")
    q = cmd(sft, "entropy-bound", _sft_entropy_bound, "entropy upper bound on a box")
    q.add_argument("file")
    q.add_argument("--n", type=_positive, default=8)
    q.add_argument("--lookahead", "-m", type=_nonneg, default=0)
    lang_budget(q)
    q = cmd(sft, "z-decide", _sft_z_decide, "exact analysis over Z")
    q.add_argument("file")
    q.add_argument("--language", type=_nonneg, help="also list the language on this radius")
    q = cmd(sft, "distance", _sft_distance, "language distance of two SFTs over Z")
    q.add_argument("left")
    q.add_argument("right")
    q = cmd(sft, "reduce", _sft_reduce, "product-or-union reduction", report=False, output=True)
    q.add_argument("file")
    q.add_argument("--plus", required=True)
    q.add_argument("--minus", required=True)
    q = cmd(sft, "sofic-reduce", _sft_sofic_reduce, "sofic reduction", report=False, output=True)
    q.add_argument("sofic")
    q.add_argument("file")
    q = cmd(sft, "greedy-free", _sft_greedy_free, "greedy configuration on a free group ball")
    q.add_argument("file")
    q.add_argument("--radius", type=_nonneg, default=3)

    graph = top.add_parser("graph", help="graphs and 3-paths").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = cmd(graph, "ball", _graph_ball, "ball around a vertex")
    q.add_argument("--graph", required=True)
    q.add_argument("--center")
    q.add_argument("--radius", type=_nonneg, required=True)
    vertex_budget(q)
    q = cmd(graph, "ends", _graph_ends, "infinite components outside a ball")
    q.add_argument("--graph", required=True)
    q.add_argument("--center")
    q.add_argument("--inner", type=_nonneg, required=True)
    q.add_argument("--outer", type=_nonneg, required=True)
    vertex_budget(q)
    q = cmd(graph, "threepath-finite", _graph_threepath_finite, "Hamiltonian path in the cube of a finite graph")
    q.add_argument("--graph", required=True)
    q.add_argument("--from", dest="source", required=True)
    q.add_argument("--to", dest="target", required=True)
    for name, func, help_ in (
        ("threepath-stream", _graph_threepath_stream, "grow a bi-infinite 3-path"),
        ("tla", _graph_tla, "translation-like action table"),
    ):
        q = cmd(graph, name, func, help_)
        q.add_argument("--graph", required=True)
        q.add_argument("--steps", type=_nonneg, default=100)
        q.add_argument("--promise", choices=("one", "two", "none"), default="one")
        q.add_argument("--seed", help="JSON seed path {\"start\": i, \"vertices\": [...]}")
        vertex_budget(q)
    q = cmd(graph, "orbits", _graph_orbits, "disjoint orbit fragments covering a ball")
    q.add_argument("--graph", required=True)
    q.add_argument("--radius", type=_nonneg, default=2)
    q.add_argument("--promise", choices=("one", "two", "none"), default="none")
    q.add_argument("--max-vertices", type=_positive, default=5000)

    tx = top.add_parser("tx", help="bounded actions").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = cmd(tx, "build-t", _tx_build_t, "arrow SFT of bounded actions", report=False, output=True)
    q.add_argument("--group", required=True)
    q.add_argument("--h", required=True, help="acting group spec or presentation")
    q.add_argument("--F", required=True, help="comma-separated words of the arrow range")
    q = cmd(tx, "build-tx", _tx_build_tx, "overlay a subshift on the arrows", report=False, output=True)
    q.add_argument("t")
    q.add_argument("x")
    q.add_argument("--radius-cap", type=_positive, default=4)
    q = cmd(tx, "validate", _tx_validate, "check a finite window")
    q.add_argument("file")
    q.add_argument("window")
    return p


def _positive(s):
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonneg(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        stderr.write(f"{e}\n")
        return EXIT_INPUT
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_INPUT
    out = _Out(stdout)
    try:
        return args.func(args, out)
    except (BudgetExceeded, ResourceLimit) as e:
        stderr.write(f"unknown: budget exhausted: {e}\n")
        return EXIT_UNKNOWN
    except (SubshiftError, ValueError, KeyError, TypeError, OSError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT


def main(argv=None) -> int:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
