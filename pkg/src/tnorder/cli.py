"""Command-line interface.

Subcommands: ``gen`` (random tree network), ``order`` (compute a plan),
``cost`` (price an existing plan), ``bench`` (timed sweeps to CSV).
Exact costs go to stdout as decimal integers; diagnostics and traces go
to stderr. Exit codes: 0 success, 2 validation error, 3 size bound
exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .bench import format_summary, render_chart, run_benchmark, summarize, write_csv
from .cost import evaluate_linear, evaluate_tree
from .generate import generate_random_tree_network
from .heuristics import order_arbitrary
from .iks import iks_order, linearize_root, linearized_chain
from .network import TensorNetwork, ValidationError, id_key, parse_network
from .oracles import (
    SizeBoundError,
    dp_general_optimal,
    dp_linear_optimal,
    linearized_dp,
)
from .plans import LinearPlan, TreePlan, parse_plan
from .precedence import build_precedence_graph, format_precedence

__all__ = ["main"]


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    net = generate_random_tree_network(args.n, args.seed, args.dim_lo, args.dim_hi)
    _write(args.output, net.to_json() + "\n")
    return 0


def _emit_trace(net: TensorNetwork, stream) -> None:
    for root in sorted(net.nodes, key=id_key):
        pg = build_precedence_graph(net, root)
        chain = linearized_chain(pg)
        order, cost = linearize_root(pg)
        print(f"== root {root}: cost {cost}", file=stream)
        print(format_precedence(pg), file=stream)
        print("chain:", file=stream)
        for entry in chain:
            names = ",".join(str(v) for v in entry.members)
            print(
                f"  ({names})  T={entry.T} C={entry.C} rank={entry.rank}",
                file=stream,
            )
        print("order: " + " ".join(str(v) for v in order), file=stream)


def _cmd_order(args: argparse.Namespace) -> int:
    net = parse_network(_read(args.network))
    algorithm = args.algorithm
    if args.trace and algorithm not in ("iks", "mst-iks"):
        print("note: --trace applies to iks and mst-iks only", file=sys.stderr)

    plan: LinearPlan | TreePlan
    if algorithm == "iks":
        if args.trace:
            _emit_trace(net, sys.stderr)
        order, cost = iks_order(net)
        plan = LinearPlan(order)
    elif algorithm == "dp-linear":
        order, cost = dp_linear_optimal(net)
        plan = LinearPlan(order)
    elif algorithm == "dp-general":
        tree, cost = dp_general_optimal(net)
        plan = TreePlan(tree)
    elif algorithm == "lin-dp":
        if args.order is not None:
            base = parse_plan(_read(args.order))
            if not isinstance(base, LinearPlan):
                raise ValidationError("lin-dp needs a linear plan as its base order")
            base_order = base.order
        elif net.is_tree:
            base_order, _ = iks_order(net)
        else:
            base_order, _ = order_arbitrary(net)
        tree, cost = linearized_dp(net, base_order)
        plan = TreePlan(tree)
    else:  # mst-iks
        from .heuristics import max_spanning_tree

        if args.trace:
            _emit_trace(max_spanning_tree(net), sys.stderr)
        order, cost = order_arbitrary(net)
        plan = LinearPlan(order)

    _write(args.output, plan.to_json() + "\n")
    print(cost)
    return 0


def _cmd_cost(args: argparse.Namespace) -> int:
    net = parse_network(_read(args.network))
    plan = parse_plan(_read(args.plan))
    if isinstance(plan, LinearPlan):
        report = evaluate_linear(net, plan)
        if not report.outer_product_free:
            print("note: plan contains outer products", file=sys.stderr)
        cost = report.cost
    else:
        cost = evaluate_tree(net, plan)
    print(cost)
    return 0


def _parse_sizes(text: str) -> list[int]:
    sizes: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if ":" in token:
                lo_s, hi_s = token.split(":", 1)
                lo, hi = int(lo_s), int(hi_s)
                if lo > hi:
                    raise ValueError
                sizes.extend(range(lo, hi + 1))
            else:
                sizes.append(int(token))
        except ValueError:
            raise ValidationError(
                f"bad size token {token!r}; use N, LO:HI, or a comma list"
            ) from None
    if not sizes:
        raise ValidationError("no benchmark sizes given")
    return sizes


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = _parse_sizes(args.sizes)
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    records = run_benchmark(
        sizes,
        args.instances,
        args.timeout_ms,
        algorithms,
        master_seed=args.master_seed,
        dim_lo=args.dim_lo,
        dim_hi=args.dim_hi,
        workers=args.workers,
    )
    if args.output is None:
        write_csv(records, sys.stdout)
        summary_stream = sys.stderr
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
        summary_stream = sys.stdout
    if args.chart is not None:
        _write(args.chart, render_chart(records))
    print(format_summary(summarize(records)), file=summary_stream)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tnorder",
        description="Contraction-order optimization for tensor networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random tree network")
    gen.add_argument("--n", type=int, required=True, help="number of tensors (>= 2)")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    gen.add_argument("--dim-lo", type=int, default=2, help="smallest edge size")
    gen.add_argument("--dim-hi", type=int, default=10, help="largest edge size")
    gen.add_argument("-o", "--output", help="network file (default stdout)")
    gen.set_defaults(func=_cmd_gen)

    order = sub.add_parser("order", help="compute a contraction plan")
    order.add_argument(
        "--algorithm",
        required=True,
        choices=["iks", "dp-linear", "dp-general", "lin-dp", "mst-iks"],
    )
    order.add_argument("--network", required=True, help="network file")
    order.add_argument(
        "--order",
        help="linear plan file used as the base order for lin-dp "
        "(default: the tree optimizer's order)",
    )
    order.add_argument("-o", "--output", help="plan file (default stdout)")
    order.add_argument(
        "--trace",
        action="store_true",
        help="emit per-root rank tables and linearizations to stderr",
    )
    order.set_defaults(func=_cmd_order)

    cost = sub.add_parser("cost", help="evaluate a plan's exact cost")
    cost.add_argument("--network", required=True, help="network file")
    cost.add_argument("--plan", required=True, help="plan file")
    cost.set_defaults(func=_cmd_cost)

    bench = sub.add_parser("bench", help="run timed sweeps and emit CSV")
    bench.add_argument(
        "--sizes", required=True, help="sizes as N, LO:HI, or a comma list"
    )
    bench.add_argument("--instances", type=int, default=100)
    bench.add_argument("--timeout-ms", type=int, default=10_000)
    bench.add_argument("--algorithms", default="iks,dp-linear")
    bench.add_argument("--master-seed", type=int, default=0)
    bench.add_argument("--dim-lo", type=int, default=2)
    bench.add_argument("--dim-hi", type=int, default=10)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("-o", "--output", help="CSV file (default stdout)")
    bench.add_argument("--chart", help="also write a two-panel SVG chart")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
