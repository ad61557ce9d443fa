"""Command-line entry point: ``eternaldom {solve,oracle,verify,gen,bench}``.

Exit codes: 0 success, 1 input or usage error, 2 budget/limit exceeded,
3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bench, oracle
from .certificate import Certificate
from .crosscheck import check_instance
from .game import ALL_MULTI, ALL_SIMPLE, SINGLE_SIMPLE
from .greedy import compute_sequences
from .interval_model import (ModelError, format_model, intersection_graph,
                             normalize, parse_graph, parse_model, random_model)
from .neocolonization import compute_blocks


EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_FAIL = 0, 1, 2, 3
GAMES = {"all-multi": ALL_MULTI, "all-simple": ALL_SIMPLE, "single-simple": SINGLE_SIMPLE}


class UsageError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ModelError(f"cannot read {path}: {exc.strerror}") from None


def _load_model(path):
    return normalize(parse_model(_read(path)))


def cmd_solve(args):
    model = _load_model(args.model)
    result = compute_sequences(model)
    if not args.emit_certificate:
        print(json.dumps({"n": model.n, "k": result.k}) if args.format == "json" else result.k)
        return EXIT_OK
    cert = Certificate.build(result, compute_blocks(model, result))
    print(cert.to_json() if args.format == "json" else cert.to_text())
    return EXIT_OK


def cmd_oracle(args):
    if args.graph:
        graph = parse_graph(_read(args.graph))
    else:
        graph = intersection_graph(_load_model(args.model))
    if args.game:
        names = list(GAMES) if args.game == "all" else [args.game]
        values = [oracle.eternal_domination_number_exact(graph, GAMES[g], limit=args.limit)
                  for g in names]
        if args.format == "json":
            print(json.dumps(dict(zip(names, values))))
        else:
            print(" ".join(map(str, values)))
        return EXIT_OK
    report = oracle.parameter_report(graph, limit=args.limit)
    if args.format == "json":
        print(json.dumps(report.as_dict(), indent=2))
    else:
        d = report.as_dict()
        for key in ("gamma", "gamma_c", "alpha", "theta", "theta_c"):
            print(f"{key} {'undefined' if d[key] is None else d[key]}")
        for label, value in d["eternal"].items():
            print(f"eternal[{label}] {value}")
        for name, ok in d["chains"].items():
            print(f"chain {name} {'pass' if ok else 'FAIL'}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args):
    if args.model:
        instances = [(args.model, _load_model(args.model))]
    else:
        if args.random is None:
            raise UsageError("verify needs --model or --random N")
        instances = (
            (f"random n={args.random} seed={args.seed + i}", random_model(args.random, args.seed + i, args.kind))
            for i in range(args.trials)
        )
    passed = total = 0
    for name, model in instances:
        total += 1
        rep = check_instance(model, budget=args.budget)
        if rep.ok:
            passed += 1
        failed = [c for c, ok in rep.checks.items() if not ok]
        status = "pass" if rep.ok else "FAIL " + ",".join(failed)
        if not rep.ok or args.verbose:
            print(f"{name}: n={rep.n} k={rep.k} {status}")
            for note in rep.notes:
                print(f"  {note}")
    print(f"{passed}/{total} pass")
    return EXIT_OK if passed == total else EXIT_FAIL


def cmd_gen(args):
    sys.stdout.write(format_model(random_model(args.n, args.seed, args.kind)))
    return EXIT_OK


def cmd_bench(args):
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    if not sizes:
        raise UsageError("--sizes needs at least one size")
    if sizes != sorted(sizes):
        raise UsageError("--sizes must be ascending")
    backends = ["numba", "numpy"] if args.backend == "both" else [args.backend] if args.backend else None
    rows = bench.run(sizes, seed=args.seed, repeats=args.repeats, backends=backends, kind=args.kind)
    print(f"{'backend':<8} {'size':>10} {'median_s':>12} {'ns/interval':>12} {'k':>9}")
    for r in rows:
        print(f"{r.backend:<8} {r.size:>10} {r.median:>12.6f} {r.ns_per_interval:>12.1f} {r.k:>9}")
    for name, rs in bench.ratios(rows).items():
        if rs:
            print(f"{name} ratios " + " ".join(f"{x:.2f}" for x in rs))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="eternaldom", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute k and the certificate of an interval model")
    p.add_argument("--model", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--emit-certificate", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive parameters of a small graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--model")
    p.add_argument("--game", choices=(*GAMES, "all"))
    p.add_argument("--limit", type=int, default=oracle.ETERNAL_LIMIT)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs single-threaded")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="cross-check greedy, strategy and oracles")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--model")
    src.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--kind", choices=("general", "proper"), default="general")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random canonical model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("general", "proper"), default="general")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the sweep on random models")
    p.add_argument("--sizes", required=True, help="comma-separated, ascending")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--backend", choices=("numba", "numpy", "both"))
    p.add_argument("--kind", choices=("general", "proper"), default="proper",
                   help="proper models have short intervals and k close to n/3")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ModelError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except oracle.LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
