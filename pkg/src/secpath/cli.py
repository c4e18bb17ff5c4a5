"""Command line front end.

Subcommands: solve, oracle, verify, reduce, compose.  Decision commands
exit 0 on yes/accept, 1 on no/reject; anything unusable (bad flags,
unreadable files, malformed input, unsupported solver choice) exits 2.

File formats, all plain text:
  graph     'n m' header, one 'u v' edge line per edge with u < v,
            '#' comment lines allowed
  instance  key=value lines: variant, k, l, and s, t for terminal pairs
  cert      the path's vertices on one space-separated line
  groups    one 'name: v1 v2 ...' line per named vertex group
  stats     key=value work counters (--stats sidecar)
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .graph import (
    GraphFormatError,
    Graph,
    InvalidGraphError,
    InvalidInstanceError,
    PathCertificate,
    ProblemInstance,
    Variant,
    VertexSet,
    parse_graph_file,
    serialize_graph,
    verify_certificate,
)
from .oracle import Answer, OracleStats, oracle_decide
from .reductions import (
    ReductionOutput,
    clique_to_ssp,
    or_compose,
    pchc_to_st_variant,
    pchp_to_variant,
    rbds_to_sup,
    reduce_to_st,
)
from .solvers import SolverStats, free_variant_decide, st_ssp_decide, st_sup_decide


def serialize_instance(inst: ProblemInstance) -> str:
    lines = [f"variant={inst.variant.value}", f"k={inst.k}", f"l={inst.l}"]
    if inst.st_mode:
        lines.append(f"s={inst.s}")
        lines.append(f"t={inst.t}")
    return "\n".join(lines) + "\n"


def parse_instance_file(text: str, graph: Graph) -> ProblemInstance:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InvalidInstanceError(f"expected key=value, got {line!r}")
        fields[key.strip()] = value.strip()
    unknown = set(fields) - {"variant", "k", "l", "s", "t"}
    if unknown:
        raise InvalidInstanceError(f"unknown instance keys: {sorted(unknown)}")
    try:
        variant = Variant(fields["variant"])
        k = int(fields["k"])
        l = int(fields["l"])
    except KeyError as exc:
        raise InvalidInstanceError(f"missing instance key {exc.args[0]!r}") from None
    except ValueError:
        raise InvalidInstanceError("variant, k, and l must be well formed") from None
    if ("s" in fields) != ("t" in fields):
        raise InvalidInstanceError("s and t must be given together")
    if "s" in fields:
        return ProblemInstance(graph, variant, k, l, int(fields["s"]), int(fields["t"]))
    return ProblemInstance(graph, variant, k, l)


def serialize_groups(groups: dict[str, VertexSet]) -> str:
    return "".join(
        f"{name}: {' '.join(str(v) for v in vs)}\n" for name, vs in groups.items()
    )


def _read_graph(path: str) -> Graph:
    return parse_graph_file(Path(path).read_text())


def _instance_from_args(args: argparse.Namespace, graph: Graph) -> ProblemInstance:
    if (args.s is None) != (args.t is None):
        raise InvalidInstanceError("--s and --t must be given together")
    return ProblemInstance(graph, Variant(args.variant), args.k, args.l, args.s, args.t)


def _write_stats(path: str | None, answer: Answer) -> None:
    if path is None:
        return
    lines = []
    if isinstance(answer.stats, OracleStats):
        lines.append(f"paths_enumerated={answer.stats.paths_enumerated}")
    elif isinstance(answer.stats, SolverStats):
        lines.append(f"branch_nodes_explored={answer.stats.branch_nodes_explored}")
        lines.append(f"flow_calls={answer.stats.flow_calls}")
        lines.append(f"candidate_pairs_tried={answer.stats.candidate_pairs_tried}")
    Path(path).write_text("\n".join(lines) + "\n")


def _print_answer(answer: Answer) -> int:
    if not answer.decision:
        print("NO")
        return 1
    print("YES")
    assert answer.witness is not None
    vertices = answer.witness.vertices
    if vertices[0] > vertices[-1]:
        vertices = tuple(reversed(vertices))
    print(" ".join(str(v) for v in vertices))
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    inst = _instance_from_args(args, graph)
    algo = getattr(args, "algo", "oracle")
    if algo == "oracle":
        answer = oracle_decide(inst)
    else:
        if inst.variant in (Variant.LSP, Variant.LUP):
            print(
                f"error: no parameterized solver for {inst.variant.value}; "
                "use --algo oracle",
                file=sys.stderr,
            )
            return 2
        pair_solver = st_ssp_decide if inst.variant is Variant.SSP else st_sup_decide
        answer = pair_solver(inst) if inst.st_mode else free_variant_decide(inst)
    _write_stats(args.stats, answer)
    return _print_answer(answer)


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    inst = _instance_from_args(args, graph)
    tokens = Path(args.cert).read_text().split()
    try:
        vertices = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise InvalidInstanceError("certificate must be whitespace-separated integers")
    if not vertices:
        raise InvalidInstanceError("certificate file is empty")
    report = verify_certificate(inst, PathCertificate(vertices))
    measured = f"size={report.size} neighbors={report.neighbor_count}"
    if report.accepted:
        print(f"ACCEPT {measured}")
        return 0
    print(f"REJECT {report.reason} ({measured})")
    return 1


def _parse_vertex_list(text: str) -> VertexSet:
    tokens = text.replace(",", " ").split()
    try:
        return VertexSet.of(int(tok) for tok in tokens)
    except ValueError:
        raise InvalidInstanceError(f"expected a vertex list, got {text!r}") from None


def _write_reduction(out: ReductionOutput, prefix: str) -> None:
    Path(f"{prefix}.graph").write_text(serialize_graph(out.instance.graph))
    Path(f"{prefix}.inst").write_text(serialize_instance(out.instance))
    Path(f"{prefix}.groups").write_text(serialize_groups(out.groups))
    g = out.instance.graph
    print(f"wrote {prefix}.graph {prefix}.inst {prefix}.groups")
    print(f"output graph: {g.n} vertices, {g.m} edges")


def _run_transform(args: argparse.Namespace) -> ReductionOutput:
    source = args.source
    if source == "to-st":
        graph = _read_graph(args.graph)
        free = ProblemInstance(graph, Variant(args.variant), args.k, args.l)
        return reduce_to_st(free)
    if source == "pchp":
        return pchp_to_variant(_read_graph(args.graph), args.target)
    if source == "pchc":
        return pchc_to_st_variant(
            _read_graph(args.graph),
            args.x,
            args.y,
            args.z,
            args.target,
            args.c,
            args.long_k,
        )
    if source == "clique":
        return clique_to_ssp(_read_graph(args.graph), args.k)
    graph = _read_graph(args.graph)
    red = _parse_vertex_list(args.red)
    blue = _parse_vertex_list(args.blue)
    return rbds_to_sup(graph, red, blue, args.k, args.l_formula)


def _cmd_reduce(args: argparse.Namespace) -> int:
    required = {
        "to-st": ("variant", "k", "l"),
        "pchp": ("target",),
        "pchc": ("target", "x", "y", "z", "c"),
        "clique": ("k",),
        "rbds": ("red", "blue", "k"),
    }
    missing = [
        f"--{name.replace('_', '-')}"
        for name in required[args.source]
        if getattr(args, name, None) is None
    ]
    if missing:
        print(
            f"error: --from {args.source} needs {' '.join(missing)}", file=sys.stderr
        )
        return 2
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        out = _run_transform(args)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _write_reduction(out, args.out)
    return 0


def _cmd_compose(args: argparse.Namespace) -> int:
    if len(args.inputs) % 2 or not args.inputs:
        print(
            "error: --inputs takes graph/instance file pairs", file=sys.stderr
        )
        return 2
    instances = []
    for gpath, ipath in zip(args.inputs[::2], args.inputs[1::2]):
        graph = _read_graph(gpath)
        instances.append(parse_instance_file(Path(ipath).read_text(), graph))
    out = or_compose(instances)
    _write_reduction(out, args.out)
    return 0


def _add_instance_flags(p: argparse.ArgumentParser, with_st: bool = True) -> None:
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    p.add_argument("--k", required=True, type=int, help="size bound")
    p.add_argument("--l", required=True, type=int, help="neighborhood bound")
    if with_st:
        p.add_argument("--s", type=int, default=None, help="first terminal")
        p.add_argument("--t", type=int, default=None, help="second terminal")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secpath",
        description="Length- and neighborhood-constrained path problems: "
        "solvers, certificate checking, and instance transformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide an instance")
    _add_instance_flags(solve)
    solve.add_argument("--algo", choices=["fpt", "oracle"], default="fpt")
    solve.add_argument("--stats", default=None, help="write work counters here")
    solve.add_argument("--seed", type=int, default=0, help="reserved; accepted for reproducibility")
    solve.set_defaults(func=_cmd_solve)

    oracle = sub.add_parser("oracle", help="decide by exhaustive enumeration")
    _add_instance_flags(oracle)
    oracle.add_argument("--stats", default=None, help="write work counters here")
    oracle.add_argument("--seed", type=int, default=0, help="reserved; accepted for reproducibility")
    oracle.set_defaults(func=_cmd_solve, algo="oracle")

    verify = sub.add_parser("verify", help="check a certificate")
    _add_instance_flags(verify)
    verify.add_argument("--cert", required=True, help="certificate file")
    verify.set_defaults(func=_cmd_verify)

    reduce = sub.add_parser("reduce", help="transform a source problem")
    reduce.add_argument(
        "--from",
        dest="source",
        required=True,
        choices=["to-st", "pchp", "pchc", "clique", "rbds"],
    )
    reduce.add_argument("--graph", required=True, help="source graph file")
    reduce.add_argument("--out", required=True, help="output file prefix")
    reduce.add_argument("--variant", choices=[v.value for v in Variant])
    reduce.add_argument("--k", type=int)
    reduce.add_argument("--l", type=int)
    reduce.add_argument(
        "--target", choices=["ssp", "lsp", "sup", "lup-a", "lup-d"]
    )
    reduce.add_argument("--x", type=int)
    reduce.add_argument("--y", type=int)
    reduce.add_argument("--z", type=int)
    reduce.add_argument("--c", type=int)
    reduce.add_argument("--long-k", dest="long_k", type=int, default=2)
    reduce.add_argument("--red", help="red side vertex list")
    reduce.add_argument("--blue", help="blue side vertex list")
    reduce.add_argument(
        "--l-formula",
        dest="l_formula",
        choices=["all-hubs", "k-hubs"],
        default="all-hubs",
    )
    reduce.set_defaults(func=_cmd_reduce)

    compose = sub.add_parser("compose", help="disjoin terminal-pair instances")
    compose.add_argument("--out", required=True, help="output file prefix")
    compose.add_argument(
        "--inputs", nargs="+", required=True, help="graph/instance file pairs"
    )
    compose.set_defaults(func=_cmd_compose)
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (InvalidGraphError, GraphFormatError, InvalidInstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
