"""Command-line interface.

Outputs are byte-identical across runs for identical inputs and flags:
JSON is emitted with sorted keys and no timestamps, and every underlying
computation is deterministic.  Exit codes: 0 all checks pass, 2 a theorem
check failed (a library bug either way, so it must surface), 3 the sweep
found a counterexample to the concluding equality (reported as a finding,
not a failure), 1 for usage errors or a failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bounds_report, planar_formula_check
from .constructions import (chordal_realizer, hall_certificate, rebuild_star,
                            verify_effective_cover)
from .ecc import make_cover, min_edge_clique_cover, theta_e
from .graph import Digraph, Graph, competition_graph
from .io import (FormatError, parse_edge_list, parse_graph6,
                 parse_graph6_lines, serialize_edge_list, serialize_graph6)
from .realizer import (certify_realization, competition_number,
                       max_predators_with, primary_predator_index,
                       realization_json_dict)
from .smallgraphs import enumerate_small_graphs
from .sweep import ALL_CHECKS, sweep


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read(path)
    if fmt == "g6":
        return parse_graph6(text)
    value = parse_edge_list(text)
    if fmt == "edges":
        if not isinstance(value, Graph):
            raise CliError("expected an undirected edge list, found arcs")
        return value
    raise CliError("this subcommand needs an undirected graph")


def _load_digraph(path: str, fmt: str) -> Digraph:
    if fmt == "g6":
        raise CliError("graph6 encodes undirected graphs; use the arc-list "
                       "format for digraph input")
    value = parse_edge_list(_read(path))
    if not isinstance(value, Digraph):
        raise CliError("expected an arc list (lines 'u > v')")
    return value


def _load_cover(graph: Graph, path: str):
    data = json.loads(_read(path))
    if not isinstance(data, dict) or "cliques" not in data:
        raise CliError(f"{path}: cover JSON needs a 'cliques' list")
    return make_cover(graph, data["cliques"])


def _emit(payload, as_json: bool, text: str | None = None) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text if text is not None else
              json.dumps(payload, indent=2, sort_keys=True))


def _add_input_flags(sub, formats=("g6", "edges", "arcs")) -> None:
    sub.add_argument("--in", dest="infile", required=True,
                     help="input file, or - for stdin")
    sub.add_argument("--format", choices=formats, default="edges")
    sub.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compnum",
        description="Exact competition numbers, predator indices, edge "
                    "clique covers, effective-cover certificates, bounds "
                    "and exhaustive sweeps.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("compete", help="competition graph of a digraph")
    _add_input_flags(sub)

    for name, help_text in (("theta", "edge clique cover number"),
                            ("knumber", "competition number with witness"),
                            ("pindex", "primary predator index with witness"),
                            ("cover", "minimum edge clique cover")):
        sub = subs.add_parser(name, help=help_text)
        _add_input_flags(sub, formats=("g6", "edges"))
        sub.add_argument("--witness", action="store_true")

    sub = subs.add_parser("realize", help="decide realizability with k isolates")
    _add_input_flags(sub, formats=("g6", "edges"))
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--witness", action="store_true")

    sub = subs.add_parser("chordal-build",
                          help="effective cover construction for chordal input")
    _add_input_flags(sub, formats=("g6", "edges"))

    sub = subs.add_parser("rebuild-star",
                          help="rewire a realization to exactly theta_e prey")
    _add_input_flags(sub, formats=("g6", "edges"))
    sub.add_argument("--digraph", help="optional arc-list realization; "
                                       "computed exactly when omitted")

    sub = subs.add_parser("verify-effective",
                          help="verify an effective competition cover triple")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--format", choices=("g6", "edges"), default="edges")
    sub.add_argument("--cover", required=True, help="cover JSON file")
    sub.add_argument("--digraph", required=True, help="arc-list digraph file")
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("hall-cert",
                          help="saturating prey matching for a cover")
    sub.add_argument("--graph", required=True)
    sub.add_argument("--format", choices=("g6", "edges"), default="edges")
    sub.add_argument("--cover", help="cover JSON; minimum cover when omitted")
    sub.add_argument("--digraph", help="arc-list digraph; exact witness "
                                       "when omitted")
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("bounds", help="all bounds for a graph")
    _add_input_flags(sub, formats=("g6", "edges"))

    sub = subs.add_parser("planar-check",
                          help="face-count formula for connected diamond-free "
                               "plane graphs")
    _add_input_flags(sub, formats=("g6", "edges"))

    sub = subs.add_parser("sweep", help="exhaustive theorem sweep")
    sub.add_argument("--n", type=int, help="enumerate all graphs on n vertices")
    sub.add_argument("--in", dest="infile",
                     help="graph6 stream instead of built-in enumeration")
    sub.add_argument("--connected", action="store_true")
    sub.add_argument("--checks", default="all",
                     choices=("all",) + ALL_CHECKS)
    sub.add_argument("--out", help="write the full JSON report here")
    sub.add_argument("--threads", type=int, default=None)
    return parser


def _cmd_compete(args) -> int:
    digraph = _load_digraph(args.infile, args.format)
    graph = competition_graph(digraph)
    payload = {"n": graph.n, "edges": [[u, v] for u, v in graph.edges()],
               "graph6": serialize_graph6(graph)}
    _emit(payload, args.json, serialize_edge_list(graph).rstrip("\n"))
    return 0


def _cmd_theta(args) -> int:
    graph = _load_graph(args.infile, args.format)
    payload = {"theta_e": theta_e(graph)}
    if args.witness:
        payload["cliques"] = [list(c) for c in min_edge_clique_cover(graph).cliques]
    _emit(payload, args.json, f"theta_e = {payload['theta_e']}")
    return 0


def _cmd_cover(args) -> int:
    graph = _load_graph(args.infile, args.format)
    cover = min_edge_clique_cover(graph)
    _emit(cover.to_json_dict(), args.json,
          "\n".join(" ".join(map(str, c)) for c in cover.cliques) or "(empty)")
    return 0


def _knumber_payload(graph: Graph) -> dict:
    k, _ = competition_number(graph)
    p, witness = primary_predator_index(graph)
    return realization_json_dict(k, p, witness.prey_count, witness)


def _cmd_knumber(args) -> int:
    graph = _load_graph(args.infile, args.format)
    payload = _knumber_payload(graph)
    if not args.witness:
        payload.pop("witness_arcs")
    _emit(payload, args.json, f"k = {payload['k']}")
    return 0


def _cmd_pindex(args) -> int:
    graph = _load_graph(args.infile, args.format)
    payload = _knumber_payload(graph)
    if not args.witness:
        payload.pop("witness_arcs")
    _emit(payload, args.json, f"p = {payload['p']}")
    return 0


def _cmd_realize(args) -> int:
    graph = _load_graph(args.infile, args.format)
    if args.k < 0:
        raise CliError("--k must be nonnegative")
    result = max_predators_with(graph, args.k)
    if result is None:
        _emit({"realizable": False, "k": args.k}, args.json,
              f"not realizable with {args.k} isolates")
        return 0
    predators, witness = result
    payload = {"realizable": True, "k": args.k, "max_predators": predators,
               "prey": witness.prey_count}
    if args.witness:
        payload["witness_arcs"] = witness.witness_arcs()
    _emit(payload, args.json,
          f"realizable with {args.k} isolates; max predators {predators}")
    return 0


def _realization_payload(realization, cover=None) -> dict:
    payload = {
        "k": realization.k,
        "prey": realization.prey_count,
        "predators": realization.predator_count,
        "witness_arcs": realization.witness_arcs(),
        "sink_map": None if realization.sink_map is None
        else [[i, w] for i, w in realization.sink_map],
    }
    if cover is not None:
        payload["cover"] = cover.to_json_dict()
    return payload


def _cmd_chordal_build(args) -> int:
    graph = _load_graph(args.infile, args.format)
    realization, cover = chordal_realizer(graph)
    _emit(_realization_payload(realization, cover), args.json)
    return 0


def _cmd_rebuild_star(args) -> int:
    graph = _load_graph(args.infile, args.format)
    if args.digraph:
        digraph = _load_digraph(args.digraph, "arcs")
        base = certify_realization(graph, digraph, digraph.n - graph.n)
    else:
        _, base = competition_number(graph)
    rebuilt = rebuild_star(graph, base)
    _emit(_realization_payload(rebuilt), args.json)
    return 0


def _cmd_verify_effective(args) -> int:
    graph = _load_graph(args.graph, args.format)
    cover = _load_cover(graph, args.cover)
    digraph = _load_digraph(args.digraph, "arcs")
    cert = verify_effective_cover(graph, cover, digraph)
    _emit(cert.to_json_dict(), args.json,
          "valid" if cert.valid else f"invalid: {cert.failure}")
    return 0 if cert.valid else 1


def _cmd_hall_cert(args) -> int:
    graph = _load_graph(args.graph, args.format)
    cover = (_load_cover(graph, args.cover) if args.cover
             else min_edge_clique_cover(graph))
    if args.digraph:
        digraph = _load_digraph(args.digraph, "arcs")
    else:
        _, witness = competition_number(graph)
        digraph = witness.digraph
    cert = hall_certificate(graph, cover, digraph)
    _emit(cert.to_json_dict(), args.json)
    return 0


def _cmd_bounds(args) -> int:
    graph = _load_graph(args.infile, args.format)
    _emit(bounds_report(graph).to_json_dict(), args.json)
    return 0


def _cmd_planar_check(args) -> int:
    graph = _load_graph(args.infile, args.format)
    p, _ = primary_predator_index(graph)
    result = planar_formula_check(graph, p)
    payload = {"faces": result.faces, "p": p,
               "k_formula": result.k_formula, "k_exact": result.k_exact,
               "theta_from_census": result.theta_from_census,
               "consistent": result.consistent}
    _emit(payload, args.json)
    return 0 if result.consistent else 2


def _cmd_sweep(args) -> int:
    if (args.n is None) == (args.infile is None):
        raise CliError("give exactly one of --n or --in")
    if args.infile is not None:
        graphs = parse_graph6_lines(_read(args.infile))
        if args.connected:
            graphs = [g for g in graphs if g.is_connected()]
    else:
        graphs = list(enumerate_small_graphs(args.n, args.connected))
    checks = ALL_CHECKS if args.checks == "all" else (args.checks,)
    report = sweep(graphs, checks, threads=args.threads)
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(report.to_json())
            handle.write("\n")
    print(json.dumps(report.summary, indent=2, sort_keys=True))
    if report.violations:
        return 2
    if report.counterexamples:
        return 3
    return 0


_HANDLERS = {
    "compete": _cmd_compete,
    "theta": _cmd_theta,
    "knumber": _cmd_knumber,
    "pindex": _cmd_pindex,
    "cover": _cmd_cover,
    "realize": _cmd_realize,
    "chordal-build": _cmd_chordal_build,
    "rebuild-star": _cmd_rebuild_star,
    "verify-effective": _cmd_verify_effective,
    "hall-cert": _cmd_hall_cert,
    "bounds": _cmd_bounds,
    "planar-check": _cmd_planar_check,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (CliError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
