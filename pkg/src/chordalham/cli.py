"""Command-line client for the service.

Every command builds a JSON request and sends it through the HTTP layer: by
default straight into the in-process ASGI app (no server needed), or to a
running instance via ``--server URL``.  Files are parsed client-side so a
malformed file never leaves the machine.

Exit codes: 0 success/cycle/true, 1 witness/false/none, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from .errors import ChordalHamError
from .graphio import parse_graph
from .schemas import GraphModel

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _default_cap() -> int:
    raw = os.environ.get("CHORDAL_CAP")
    if raw is None:
        return 20
    try:
        return int(raw)
    except ValueError:
        return 20


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _call(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            response = client.post(path, json=payload)
        return response.status_code, response.json()

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://chordalham"
        ) as client:
            return await client.post(path, json=payload)

    response = asyncio.run(go())
    return response.status_code, response.json()


def _emit(args, body: dict) -> None:
    if args.quiet:
        return
    if getattr(args, "dot", False):
        dot = body.get("dot")
        if not dot:
            print("error: this command produced no DOT output", file=sys.stderr)
            return
        print(dot, end="")
        return
    print(json.dumps(body, indent=2))


def _graph_payload(args) -> dict:
    g = parse_graph(_read_text(args.file))
    return GraphModel.from_graph(g).model_dump()


def _run_graph_command(args, endpoint: str, extra: dict | None = None) -> tuple[int, dict]:
    payload: dict = {"graph": _graph_payload(args)}
    if getattr(args, "dot", False):
        payload["dot"] = True
    if extra:
        payload.update(extra)
    return _call(args.server, endpoint, payload)


def _finish(args, status: int, body: dict, negative: bool = False) -> int:
    if status == 200:
        _emit(args, body)
        return EXIT_NEGATIVE if negative else EXIT_OK
    if status in (400, 422):
        if not args.quiet:
            print(json.dumps(body, indent=2), file=sys.stderr)
        return EXIT_INPUT
    if not args.quiet:
        print(json.dumps(body, indent=2), file=sys.stderr)
    return EXIT_INTERNAL


def cmd_check(args) -> int:
    status, body = _run_graph_command(args, "/check")
    return _finish(args, status, body, negative=status == 200 and not body["chordal"])


def cmd_cliquetree(args) -> int:
    status, body = _run_graph_command(args, "/cliquetree")
    return _finish(args, status, body)


def cmd_basetree(args) -> int:
    status, body = _run_graph_command(args, "/basetree")
    return _finish(args, status, body)


def cmd_overspan(args) -> int:
    status, body = _run_graph_command(args, "/overspan")
    return _finish(args, status, body)


def cmd_sdr(args) -> int:
    status, body = _run_graph_command(args, "/sdr")
    return _finish(args, status, body, negative=status == 200 and not body["found"])


def cmd_hamilton(args) -> int:
    status, body = _run_graph_command(args, "/hamilton")
    return _finish(args, status, body, negative=status == 200 and not body["found"])


def cmd_path(args) -> int:
    status, body = _run_graph_command(
        args,
        "/path",
        extra={"source": args.from_vertex, "target": args.to_vertex, "cap": args.cap},
    )
    return _finish(
        args, status, body, negative=status == 200 and body["outcome"] == "witness"
    )


def cmd_toughness(args) -> int:
    status, body = _run_graph_command(args, "/toughness")
    return _finish(args, status, body)


def cmd_witness(args) -> int:
    status, body = _run_graph_command(args, "/witness", extra={"cap": args.cap})
    return _finish(args, status, body, negative=status == 200 and body["found"])


def cmd_pipeline(args) -> int:
    status, body = _run_graph_command(args, "/pipeline", extra={"cap": args.cap})
    return _finish(
        args, status, body, negative=status == 200 and body["outcome"] == "witness"
    )


def cmd_gen(args) -> int:
    payload = {
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "seed": args.seed,
        "dot": bool(args.dot),
    }
    status, body = _call(args.server, "/gen", payload)
    if status != 200:
        return _finish(args, status, body)
    text = body["text"]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    elif not args.quiet:
        if args.dot:
            print(body.get("dot", ""), end="")
        else:
            print(text, end="")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("chordalham.service:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalham",
        description=(
            "Hamilton cycles or toughness-below-10 separators for connected "
            "chordal graphs"
        ),
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="JSON output (default)")
        p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        p.add_argument("--quiet", action="store_true", help="exit code only")
        p.add_argument(
            "--cap",
            type=int,
            default=_default_cap(),
            help="subfamily enumeration cap (env CHORDAL_CAP)",
        )
        p.set_defaults(func=func)
        return p

    graph_command("check", cmd_check, "chordality check; exit 0 chordal, 1 hole")
    graph_command("cliquetree", cmd_cliquetree, "clique-tree representation")
    graph_command("basetree", cmd_basetree, "base tree with red/black colours")
    graph_command("overspan", cmd_overspan, "overspan family")
    graph_command("sdr", cmd_sdr, "system of disjoint representatives")
    graph_command("hamilton", cmd_hamilton, "Hamilton cycle from the construction")
    p_path = graph_command("path", cmd_path, "Hamilton path between two vertices")
    p_path.add_argument("--from", dest="from_vertex", type=int, required=True)
    p_path.add_argument("--to", dest="to_vertex", type=int, required=True)
    graph_command("toughness", cmd_toughness, "exact toughness (exponential)")
    graph_command("witness", cmd_witness, "witness separator search; exit 1 if found")
    graph_command("pipeline", cmd_pipeline, "full dichotomy: cycle or witness")

    p_gen = sub.add_parser("gen", help="generate a seeded chordal graph file")
    p_gen.add_argument("--family", required=True, choices=("ktree", "interval", "split"))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--k", type=int, default=2, help="ktree width")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="write to file instead of stdout")
    p_gen.add_argument("--dot", action="store_true")
    p_gen.add_argument("--quiet", action="store_true")
    p_gen.set_defaults(func=cmd_gen)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChordalHamError as exc:
        if not getattr(args, "quiet", False):
            print(
                json.dumps({"error": {"code": exc.code, "message": str(exc)}}),
                file=sys.stderr,
            )
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except httpx.HTTPError as exc:
        print(f"error: cannot reach the service: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
