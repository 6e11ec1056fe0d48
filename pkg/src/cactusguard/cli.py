"""Command-line entry point.

Subcommands: compute, oracle, decompose, strategy, crosscheck, generate,
bench, serve. Exit codes: 0 all checks pass, 1 a relation or verification
was violated, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .crosscheck import bench, crosscheck, doubling_ratios
from .decomposition import cactus_upper_bound, christmas_decomposition, color_red
from .generator import GeneratorSpec, generate
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    NotCactusError,
    parse_graph,
    serialize_graph,
)
from .oracle import Attack, GameVariant, OracleBudgetError, exact_number, solve_safety
from .reduction import meden_christmas_cactus
from .strategy import StrategyError, synthesize, verify_strategy

INPUT_ERRORS = (GraphFormatError, DisconnectedGraphError, NotCactusError, OracleBudgetError, FileNotFoundError, ValueError)


def _load_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text()
    if fmt == "json":
        doc = json.loads(text)
        return Graph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]])
    return parse_graph(text)


def _dump_graph(g: Graph, fmt: str, labels=None) -> str:
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"
    return serialize_graph(g, labels=labels)


def _trace_json(trace) -> dict:
    return {
        "total": trace.total,
        "input_n": trace.input_n,
        "steps": [
            {
                "kind": s.kind,
                "removed_vertices": list(s.removed_vertices),
                "anchor": s.anchor,
                "guard_increment": s.guard_increment,
                "detail": {k: (list(v) if isinstance(v, tuple) else v) for k, v in s.detail.items()},
            }
            for s in trace.steps
        ],
    }


def cmd_compute(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.trace:
        guards, trace = meden_christmas_cactus(g)
        Path(args.trace).write_text(json.dumps(_trace_json(trace), indent=2) + "\n")
    else:
        guards, _ = meden_christmas_cactus(g, want_trace=False)
    print(guards)
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph, args.format)
    variant = GameVariant(args.variant)
    value = exact_number(g, variant, max_order=args.max_order)
    print(value)
    if args.witness:
        witness = solve_safety(g, value, variant)
        doc = {
            "variant": variant.value,
            "order": value,
            "configurations": [list(c) for c in witness.configs],
            "successors": [
                {"from": i, "attack": {"kind": atk.kind, "v": atk.v, "u": atk.u}, "to": j}
                for (i, atk), j in sorted(witness.successors.items(), key=lambda kv: (kv[0][0], kv[0][1].kind, kv[0][1].v, kv[0][1].u or -1))
            ],
        }
        Path(args.witness).write_text(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_decompose(args) -> int:
    g = _load_graph(args.graph, args.format)
    coloring = color_red(g)
    dec = christmas_decomposition(g, coloring)
    bound = cactus_upper_bound(g, dec)
    print("red_vertices %d" % coloring.count)
    print("red_components %d" % coloring.component_count)
    print("components %d" % len(dec.components))
    print("bound %d" % bound)
    if args.emit_components:
        outdir = Path(args.emit_components)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, comp in enumerate(dec.components):
            path = outdir / ("component_%03d.txt" % i)
            path.write_text(serialize_graph(comp.graph, labels=comp.original))
    return 0


def cmd_strategy(args) -> int:
    g = _load_graph(args.graph, args.format)
    guards, trace = meden_christmas_cactus(g)
    engine = synthesize(g, trace)
    print("guards %d" % guards)
    print("configuration %s" % " ".join(map(str, engine.current)))
    code = 0
    if args.verify:
        trials, length, seed = args.verify
        report = verify_strategy(g, engine, trials=trials, length=length, seed=seed)
        print("verify responses=%d distinct_configurations=%d violations=%d"
              % (report.responses, report.distinct_configs, len(report.violations)))
        for v in report.violations[:10]:
            print("violation: %s" % v)
        code = 0 if report.ok else 1
        engine.reset()
    if args.interactive:
        _interactive(engine)
    return code


def _interactive(engine) -> None:
    print("attacks: attack v | evictv v | evicte u v | reset | quit", file=sys.stderr)
    for line in sys.stdin:
        parts = line.split()
        if not parts:
            continue
        try:
            if parts[0] == "quit":
                break
            if parts[0] == "reset":
                engine.reset()
                print("configuration %s" % " ".join(map(str, engine.current)))
                continue
            if parts[0] == "attack":
                atk = Attack.vertex(int(parts[1]))
            elif parts[0] == "evictv":
                atk = Attack.evict_vertex(int(parts[1]))
            elif parts[0] == "evicte":
                atk = Attack.evict_edge(int(parts[1]), int(parts[2]))
            else:
                print("unknown command %r" % parts[0], file=sys.stderr)
                continue
            cfg = engine.respond(atk)
            print("configuration %s" % " ".join(map(str, cfg)))
        except (StrategyError, IndexError, ValueError) as exc:
            print("error: %s" % exc, file=sys.stderr)


def cmd_crosscheck(args) -> int:
    g = _load_graph(args.graph, args.format)
    report = crosscheck(g)
    print("class %s" % report.kind)
    print("gamma %d egc %d edn %d ede %d" % (report.gamma, report.egc, report.edn, report.ede))
    if report.meden is not None:
        print("meden %d" % report.meden)
    if report.bound is not None:
        print("bound %d" % report.bound)
    for rel in report.relations:
        print("%s %s (%s)" % ("PASS" if rel.holds else "FAIL", rel.name, rel.detail))
    return 0 if report.ok else 1


def cmd_generate(args) -> int:
    seed = args.gen_seed if args.gen_seed is not None else (args.seed or 0)
    spec = GeneratorSpec(
        n=args.n,
        cycle_ratio=args.cycle_ratio,
        max_cycle=args.max_cycle,
        christmas=not args.cactus,
        seed=seed,
    )
    g = generate(spec)
    text = _dump_graph(g, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    seed = args.bench_seed if args.bench_seed is not None else (args.seed or 0)
    rows = bench(sizes, seed=seed)
    print("%10s %12s %12s %10s" % ("n", "build_s", "solve_s", "guards"))
    for row in rows:
        print("%10d %12.4f %12.4f %10d" % (row.n, row.build_seconds, row.solve_seconds, row.guards))
    ratios = doubling_ratios(rows)
    if ratios:
        print("doubling ratios: %s" % ", ".join("%.2f" % r for r in ratios))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cactusguard", description=__doc__)
    parser.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    parser.add_argument("--seed", type=int, default=None, help="default seed for generate/bench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="m-eternal domination number of a Christmas cactus")
    p.add_argument("graph")
    p.add_argument("--trace", metavar="OUT.json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="exact game number on a small graph")
    p.add_argument("graph")
    p.add_argument("--variant", choices=("egc", "edn", "ede"), required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--witness", metavar="OUT.json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decompose", help="red coloring, decomposition, cactus bound")
    p.add_argument("graph")
    p.add_argument("--emit-components", metavar="DIR")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("strategy", help="synthesize and exercise a defender strategy")
    p.add_argument("graph")
    p.add_argument("--verify", nargs=3, type=int, metavar=("TRIALS", "LENGTH", "SEED"))
    p.add_argument("--interactive", action="store_true")
    p.set_defaults(func=cmd_strategy)

    p = sub.add_parser("crosscheck", help="compare all applicable numbers on one graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("generate", help="random (Christmas) cactus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cycle-ratio", type=float, default=0.6)
    p.add_argument("--max-cycle", type=int, default=9)
    p.add_argument("--cactus", action="store_true", help="allow vertices in more than two blocks")
    p.add_argument("--seed", type=int, default=None, dest="gen_seed")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="timings of the linear solver")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=None, dest="bench_seed")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the attack console service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", metavar="DIR")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
