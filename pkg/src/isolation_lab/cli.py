"""Command line front end.

Every subcommand is a thin wrapper over the HTTP service; by default the
app runs in-process, and --server points the same calls at a remote
instance.  Exit codes: 0 on success, 1 when a verify run finds
violations, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Iterator

from .client import ServiceClient, ServiceError


def _input_lines(args: list[str]) -> Iterator[str]:
    # "-" splices stdin; blank lines are dropped so piped files are easy.
    for item in args or ["-"]:
        if item == "-":
            for line in sys.stdin:
                line = line.strip()
                if line:
                    yield line
        else:
            yield item


def _witness_text(witness: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in witness) + "}"


def _cmd_solve(client: ServiceClient, args: argparse.Namespace) -> int:
    patterns = args.family or []
    if not patterns and not args.cycles:
        print("error: solve needs -F PATTERN or --cycles", file=sys.stderr)
        return 2
    for g6 in _input_lines(args.graphs):
        res = client.solve(g6, patterns, all_cycles=args.cycles)
        print(f"iota={res['iota']} witness={_witness_text(res['witness'])}")
    return 0


def _cmd_gen(client: ServiceClient, args: argparse.Namespace) -> int:
    if args.kind == "special":
        res = client.gen_special(
            args.family, args.m, pure=args.pure, include_layout=args.layout is not None
        )
        for g6 in res["graphs"]:
            print(g6)
        if args.layout is not None:
            with open(args.layout, "w", encoding="ascii") as fh:
                json.dump(res["layouts"], fh, indent=2, sort_keys=True)
                fh.write("\n")
    else:
        for g6 in client.gen_fplus(args.family)["graphs"]:
            print(g6)
    return 0


def _cmd_recognize(client: ServiceClient, args: argparse.Namespace) -> int:
    graphs = list(_input_lines(args.graphs))
    res = client.recognize(args.family, graphs)
    for g6, cls in zip(graphs, res["classes"]):
        print(f"{g6}\t{cls}")
    return 0


def _cmd_enum(client: ServiceClient, args: argparse.Namespace) -> int:
    res = client.enumerate(
        args.n_max, m_min=args.m_min, m_max=args.m_max, connected_only=args.connected
    )
    for g6 in res["graphs"]:
        print(g6)
    return 0


def _cmd_verify(client: ServiceClient, args: argparse.Namespace) -> int:
    if args.suite != "lemmas" and not args.family:
        print(f"error: verify {args.suite} needs -F PATTERN", file=sys.stderr)
        return 2
    seed = args.seed
    env_seed = os.environ.get("ISOLATION_LAB_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    res = client.verify(
        suite=args.suite,
        pattern=args.family,
        n_max=args.n_max,
        m_min=args.m_min,
        m_max=args.m_max,
        workers=args.workers,
        seed=seed,
        trials=args.trials,
    )
    if args.report is not None:
        with open(args.report, "w", encoding="ascii") as fh:
            for record in res["records"]:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
    print(json.dumps(res["report"], indent=2, sort_keys=True))
    return 0 if res["report"]["ok"] else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="isolation-lab",
        description="exact isolation numbers, extremal constructions, and exhaustive checks",
    )
    top.add_argument("--server", metavar="URL", help="use a running service instead of in-process")
    sub = top.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="isolation number and witness per input graph")
    solve.add_argument(
        "-F", "--family", action="append", metavar="PATTERN",
        help="pattern name or graph6 line; repeat for a multi-pattern family",
    )
    solve.add_argument("--cycles", action="store_true", help="isolate every cycle")
    solve.add_argument("graphs", nargs="*", metavar="G6", help='graph6 lines ("-" reads stdin)')
    solve.set_defaults(fn=_cmd_solve)

    gen = sub.add_parser("gen", help="emit extremal constructions as graph6")
    gensub = gen.add_subparsers(dest="kind", required=True)
    special = gensub.add_parser("special", help="one representative per isomorphism class")
    special.add_argument("-F", "--family", required=True, metavar="PATTERN")
    special.add_argument("-m", type=int, required=True, help="edge count of the output graphs")
    special.add_argument("--pure", action="store_true", help="zero-remainder classes only")
    special.add_argument("--layout", metavar="PATH", help="write constituent layouts as JSON")
    special.set_defaults(fn=_cmd_gen)
    fplus = gensub.add_parser("fplus", help="pattern plus one extra edge, up to isomorphism")
    fplus.add_argument("-F", "--family", required=True, metavar="PATTERN")
    fplus.set_defaults(fn=_cmd_gen)

    rec = sub.add_parser("recognize", help="classify graphs against the equality cases")
    rec.add_argument("-F", "--family", required=True, metavar="PATTERN")
    rec.add_argument("graphs", nargs="*", metavar="G6", help='graph6 lines ("-" reads stdin)')
    rec.set_defaults(fn=_cmd_recognize)

    en = sub.add_parser("enum", help="enumerate graphs up to isomorphism")
    en.add_argument("--n-max", type=int, required=True)
    en.add_argument("--m-min", type=int, default=0)
    en.add_argument("--m-max", type=int, default=None)
    en.add_argument("--connected", action="store_true")
    en.set_defaults(fn=_cmd_enum)

    ver = sub.add_parser("verify", help="exhaustive and randomized theorem checks")
    ver.add_argument("suite", choices=["bound", "extremal", "two-copies", "lemmas"])
    ver.add_argument("-F", "--family", metavar="PATTERN")
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--m-min", type=int, default=None)
    ver.add_argument("--m-max", type=int, default=None)
    ver.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=1000)
    ver.add_argument("--report", metavar="PATH", help="write per-graph records as JSON lines")
    ver.set_defaults(fn=_cmd_verify)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(fn=_cmd_serve)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "serve":
            return _cmd_serve(args)
        client = ServiceClient(args.server)
        return args.fn(client, args)
    except ServiceError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())
