"""Command-line interface.

Subcommands: count, enumerate, verify, witness, generate, catalan.  Graphs
and netflows travel as JSON; counts are emitted as decimal strings so that
consumers never overflow.  Exit codes are the verdict channel:

    0  success / identity verified
    1  identity violated
    2  input error (bad flags, malformed JSON, missing files)
    3  hypothesis or domain constraint not met (check skipped)
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence

from .errors import HypothesisUnmet, KPFlowsError
from .counting import brute_force_count, count, enumerate_flows
from .graphs import GraphKind, SignedMultigraph, Theorem
from .identities import generate_bv_family, report_json_dict, verify_identity_a, verify_identity_c
from .partial_flows import count_via_partial, enumerate_partial_flows, materialize_fiber
from .catalan import catalan_graph, catalan_netflow, catalan_product


class _InputError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpflows",
        description="Exact flow counts on signed multigraphs and their divisibility identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_and_netflow(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", required=True, help="path to graph JSON")
        p.add_argument("--a", help="netflow as an inline JSON array, e.g. \"[1,0,-1]\"")
        p.add_argument("--a-file", help="path to netflow JSON {\"a\": [...]}")

    p_count = sub.add_parser("count", help="print the flow count as a decimal string")
    add_graph_and_netflow(p_count)
    p_count.add_argument(
        "--backend", choices=("dp", "brute", "partial"), default="dp",
        help="counting algorithm (default dp)",
    )
    p_count.add_argument("-o", "--output", help="write output here instead of stdout")

    p_enum = sub.add_parser("enumerate", help="list flows in lexicographic order")
    add_graph_and_netflow(p_enum)
    p_enum.add_argument("--limit", type=int, help="stop after this many flows")
    p_enum.add_argument("-o", "--output")

    p_verify = sub.add_parser("verify", help="check a divisibility identity")
    p_verify.add_argument(
        "--theorem", required=True, choices=("a", "c31", "c32"),
        help="identity variant",
    )
    p_verify.add_argument("--graph", help="path to graph JSON")
    p_verify.add_argument("--a", help="netflow as an inline JSON array")
    p_verify.add_argument("--a-file", help="path to netflow JSON")
    p_verify.add_argument(
        "--campaign", type=int, metavar="SEEDS",
        help="batch mode: verify generated instances for seeds 0..SEEDS-1",
    )
    p_verify.add_argument("--n-plus-1", type=int, default=4, help="campaign graph size")
    p_verify.add_argument("--max-mult", type=int, default=2, help="campaign multiplicity cap")
    p_verify.add_argument("--netflows-per-seed", type=int, default=3)
    p_verify.add_argument("--a-max", type=int, default=3, help="campaign supply cap")
    p_verify.add_argument("-o", "--output")

    p_wit = sub.add_parser("witness", help="dump the partial-flow fibration")
    add_graph_and_netflow(p_wit)
    p_wit.add_argument("-o", "--output")

    p_gen = sub.add_parser("generate", help="emit a random hypothesis-satisfying graph")
    p_gen.add_argument("--n-plus-1", type=int, required=True)
    p_gen.add_argument("--theorem", required=True, choices=("a", "c31", "c32"))
    p_gen.add_argument("--kind", choices=("A", "C", "a", "c"),
                       help="graph kind; defaults to the theorem's kind")
    p_gen.add_argument("--max-mult", type=int, default=2)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output")

    p_cat = sub.add_parser(
        "catalan", help="compare the staircase count on the complete graph to the Catalan product"
    )
    p_cat.add_argument("--n", type=int, required=True)
    p_cat.add_argument("-o", "--output")

    return parser


def _load_json_file(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise _InputError(f"{path}: file not found")
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: malformed JSON ({exc})")


def _load_graph(path: str) -> SignedMultigraph:
    obj = _load_json_file(path)
    try:
        return SignedMultigraph.from_json_dict(obj)
    except (ValueError, KPFlowsError) as exc:
        raise _InputError(f"{path}: {exc}")


def _netflow_entries(raw: object, source: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in raw
    ):
        raise _InputError(f"{source}: netflow must be a JSON array of integers")
    return tuple(raw)


def _load_netflow(args: argparse.Namespace, graph: SignedMultigraph) -> tuple[int, ...]:
    inline = getattr(args, "a", None)
    from_file = getattr(args, "a_file", None)
    if inline is not None and from_file is not None:
        raise _InputError("give the netflow either inline (--a) or as a file (--a-file), not both")
    if inline is not None:
        try:
            raw = json.loads(inline)
        except json.JSONDecodeError as exc:
            raise _InputError(f"--a: malformed JSON ({exc})")
        a = _netflow_entries(raw, "--a")
    elif from_file is not None:
        obj = _load_json_file(from_file)
        if not isinstance(obj, dict) or "a" not in obj:
            raise _InputError(f"{from_file}: netflow JSON must be an object with field 'a'")
        a = _netflow_entries(obj["a"], f"{from_file}: field 'a'")
    else:
        raise _InputError("a netflow is required (--a or --a-file)")
    if len(a) != graph.n_plus_1:
        raise _InputError(
            f"netflow has length {len(a)} but the graph has {graph.n_plus_1} vertices"
        )
    return a


def _emit(args: argparse.Namespace, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


_THEOREMS = {
    "a": Theorem.TYPE_A,
    "c31": Theorem.TYPE_C_NEGATIVE,
    "c32": Theorem.TYPE_C_MIXED,
}


def _cmd_count(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    a = _load_netflow(args, graph)
    if args.backend == "dp":
        value = count(graph, a)
    elif args.backend == "brute":
        value = brute_force_count(graph, a)
    else:
        value = count_via_partial(graph, a).total
    _emit(args, str(value))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    a = _load_netflow(args, graph)
    limit = args.limit
    if limit is not None and limit < 1:
        raise _InputError("--limit must be a positive integer")
    probe = limit + 1 if limit is not None else None
    flows = enumerate_flows(graph, a, limit=probe)
    truncated = limit is not None and len(flows) > limit
    if truncated:
        flows = flows[:limit]
    payload = {
        "returned": len(flows),
        "truncated": truncated,
        "flows": [list(f) for f in flows],
    }
    _emit(args, json.dumps(payload))
    return 0


def _verify_one(
    graph: SignedMultigraph, a: Sequence[int], theorem: Theorem
) -> tuple[dict, int]:
    if theorem is Theorem.TYPE_A:
        report = verify_identity_a(graph, a)
    else:
        report = verify_identity_c(graph, a, theorem)
    payload = report_json_dict(report)
    if report.skipped:
        code = 3
    else:
        code = 0 if report.verdict else 1
    return payload, code


def _campaign_netflows(
    kind: GraphKind, n: int, per_seed: int, a_max: int, seed: int
) -> list[tuple[int, ...]]:
    rng = random.Random(1_000_003 * seed + 17)
    out = []
    for _ in range(per_seed):
        head = [rng.randint(0, a_max) for _ in range(n)]
        if kind is GraphKind.TYPE_A:
            out.append(tuple(head) + (-sum(head),))
        else:
            y = rng.randint(0, a_max)
            out.append(tuple(head) + (2 * y - sum(head),))
    return out


def _cmd_verify(args: argparse.Namespace) -> int:
    theorem = _THEOREMS[args.theorem]
    if args.campaign is None:
        if args.graph is None:
            raise _InputError("verify needs --graph (or --campaign)")
        graph = _load_graph(args.graph)
        a = _load_netflow(args, graph)
        payload, code = _verify_one(graph, a, theorem)
        _emit(args, json.dumps(payload))
        return code
    if args.graph is not None or args.a is not None or args.a_file is not None:
        raise _InputError("--campaign does not take --graph/--a/--a-file")
    if args.campaign < 1:
        raise _InputError("--campaign needs a positive seed count")
    kind = GraphKind.TYPE_A if theorem is Theorem.TYPE_A else GraphKind.TYPE_C
    lines = []
    n_true = n_false = n_skip = 0
    for seed in range(args.campaign):
        graph = generate_bv_family(args.n_plus_1, kind, theorem, args.max_mult, seed)
        for a in _campaign_netflows(kind, graph.n, args.netflows_per_seed, args.a_max, seed):
            payload, code = _verify_one(graph, a, theorem)
            lines.append(json.dumps({"seed": seed, "a": list(a), **payload}))
            if code == 3:
                n_skip += 1
            elif code == 0:
                n_true += 1
            else:
                n_false += 1
    summary = {
        "instances": n_true + n_false + n_skip,
        "verified": n_true,
        "violated": n_false,
        "skipped": n_skip,
    }
    _emit(args, "\n".join(lines + [json.dumps(summary)]))
    return 1 if n_false else 0


def _cmd_witness(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    a = _load_netflow(args, graph)
    certificates = []
    for pf in enumerate_partial_flows(graph, a):
        fiber = materialize_fiber(graph, pf, a)
        certificates.append(
            {
                "partial_flow": list(pf.values),
                "Y": list(pf.inflows),
                "fiber_size": len(fiber),
                "fiber": [list(f) for f in fiber],
            }
        )
    _emit(args, json.dumps(certificates))
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    theorem = _THEOREMS[args.theorem]
    expected = GraphKind.TYPE_A if theorem is Theorem.TYPE_A else GraphKind.TYPE_C
    if args.kind is not None and GraphKind(args.kind.upper()) is not expected:
        raise _InputError(f"--kind {args.kind} conflicts with --theorem {args.theorem}")
    try:
        graph = generate_bv_family(args.n_plus_1, expected, theorem, args.max_mult, args.seed)
    except KPFlowsError as exc:
        raise _InputError(str(exc))
    _emit(args, json.dumps(graph.to_json_dict()))
    return 0


def _cmd_catalan(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise _InputError("--n must be at least 1")
    value = count(catalan_graph(args.n), catalan_netflow(args.n))
    product = catalan_product(args.n)
    payload = {
        "n": args.n,
        "count": str(value),
        "catalan_product": str(product),
        "match": value == product,
    }
    _emit(args, json.dumps(payload))
    return 0 if value == product else 1


_DISPATCH = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
    "generate": _cmd_generate,
    "catalan": _cmd_catalan,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisUnmet as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return 3
    except KPFlowsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
