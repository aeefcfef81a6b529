"""Command-line frontend: a thin HTTP client of the service.

By default requests run against an in-process instance of the service app
(no server required), so verification scripts and CI can call the CLI
directly; point --server (or TPOSC_SERVER) at a running instance to use a
shared one.  Exit codes: 0 success/true verdict, 1 negative verdict or
suite failure, 2 usage/parse error, 3 domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

__all__ = ["main"]

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class ServiceClient:
    """HTTP client bound either to a remote base URL or to the in-process app.

    The in-process route drives the ASGI app through httpx's ASGITransport
    (async-only), one event loop per request; the CLI makes one request per
    invocation, so this costs nothing and needs no running server.
    """

    def __init__(self, base_url: str | None = None) -> None:
        self._remote = httpx.Client(base_url=base_url, timeout=None) if base_url else None

    def post(self, path: str, payload: dict) -> httpx.Response:
        if self._remote is not None:
            return self._remote.post(path, json=payload)
        import asyncio

        from .service import app

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://tposc.internal", timeout=None
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(go())

    def close(self) -> None:
        if self._remote is not None:
            self._remote.close()


def _print_json(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _default_seed() -> int:
    raw = os.environ.get("TPOSC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        print(f"error: TPOSC_SEED={raw!r} is not an integer", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read JSON from {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if not isinstance(data, dict):
        print(f"error: {path} must hold a JSON object", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return data


def _handle_error(resp: httpx.Response) -> int:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        code = detail.get("code")
        message = detail.get("message", "")
    else:
        code = None
        message = detail if isinstance(detail, str) else resp.text
    print(f"error: {message}", file=sys.stderr)
    if resp.status_code == 409 or code == "domain":
        return EXIT_DOMAIN
    return EXIT_USAGE


def _cmd_mg(args: argparse.Namespace, client: ServiceClient) -> int:
    payload = {
        "type": args.type,
        "witness": args.witness,
        "per_permutation": args.per_permutation,
        "jobs": args.jobs,
    }
    resp = client.post("/mg", payload)
    if resp.status_code != 200:
        return _handle_error(resp)
    data = resp.json()
    if args.json:
        _print_json(data)
    else:
        print(f"m({data['type']}) = {data['m']}  "
              f"[{data['permutations_checked']} permutations, {data['elapsed_ms']} ms]")
        if data.get("witness") is not None:
            print("witness permutation: " + ",".join(str(i) for i in data["witness"]))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, client: ServiceClient) -> int:
    matrix = _load_json_file(args.matrix_file)
    payload: dict = {"matrix": matrix, "mode": args.mode}
    if args.cap is not None:
        payload["cap"] = args.cap
    resp = client.post("/check", payload)
    if resp.status_code != 200:
        return _handle_error(resp)
    data = resp.json()
    verdict = data["verdict"]
    if args.json:
        _print_json(data)
    else:
        if args.mode == "cell":
            cell = verdict["cell"]
            print(f"cell: u = {_word_str(cell['u'])}  v = {_word_str(cell['v'])}")
        elif args.mode == "minpow":
            print(f"tnn: {verdict['tnn']}  min power: {verdict['min_power']} "
                  f"(cap {verdict['cap']})")
        else:
            line = f"{args.mode}: {str(verdict['value']).lower()}"
            if verdict.get("min_power") is not None:
                line += f"  (minimal totally positive power: {verdict['min_power']})"
            if verdict.get("witness"):
                w = verdict["witness"]
                line += (f"  [witness minor rows={w['rows']} cols={w['cols']} "
                         f"value={w['value']}]")
            print(line)
    return EXIT_OK if verdict.get("ok") else EXIT_FALSE


def _cmd_factor(args: argparse.Namespace, client: ServiceClient) -> int:
    payload = {"factorization": _load_json_file(args.factorization_file)}
    resp = client.post("/factor", payload)
    if resp.status_code != 200:
        return _handle_error(resp)
    data = resp.json()
    if args.json:
        _print_json(data)
    else:
        verdict = data["verdict"]
        for row in verdict["matrix"]["entries"]:
            print("  ".join(row))
        cell = verdict["cell"]
        print(f"cell: u = {_word_str(cell['u'])}  v = {_word_str(cell['v'])}")
        print(f"predicted minimal totally positive power: "
              f"{verdict['predicted_min_tp_power']}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, client: ServiceClient) -> int:
    payload = {
        "suite": args.suite,
        "seed": args.seed if args.seed is not None else _default_seed(),
        "jobs": args.jobs,
    }
    if args.trials is not None:
        payload["trials"] = args.trials
    resp = client.post("/verify", payload)
    if resp.status_code != 200:
        return _handle_error(resp)
    data = resp.json()
    verdict = data["verdict"]
    if args.json:
        _print_json(data)
    else:
        status = "PASS" if verdict["passed"] else "FAIL"
        print(f"suite {args.suite}: {status} "
              f"({verdict['checks']} checks, seed {verdict['seed']})")
        for failure in verdict["failures"]:
            print(f"  reproducer: {json.dumps(failure, sort_keys=True)}")
    return EXIT_OK if verdict["passed"] else EXIT_FALSE


def _cmd_serve(args: argparse.Namespace, _client: ServiceClient) -> int:
    import uvicorn

    uvicorn.run("tposc.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def _word_str(word: list[int]) -> str:
    return ",".join(str(i) for i in word) if word else "e"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tposc",
        description="Exact total-positivity and oscillation verifiers.",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get("TPOSC_SERVER"),
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mg = sub.add_parser("mg", help="minimal universal oscillatory exponent of a type")
    p_mg.add_argument("type", help='Dynkin type string, e.g. "A4" or "E8"')
    p_mg.add_argument("--witness", action="store_true",
                      help="report a permutation attaining the maximum")
    p_mg.add_argument("--per-permutation", action="store_true",
                      help="include the per-permutation minimal copy counts")
    p_mg.add_argument("--jobs", type=int, default=_default_jobs())
    p_mg.add_argument("--json", action="store_true")
    p_mg.set_defaults(func=_cmd_mg)

    p_check = sub.add_parser("check", help="test a matrix from a JSON file")
    p_check.add_argument("matrix_file")
    p_check.add_argument("--mode", required=True,
                         choices=["tnn", "tp", "osc", "cell", "minpow"])
    p_check.add_argument("--cap", type=int, default=None,
                         help="power cap for minpow (default 2n)")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=_cmd_check)

    p_factor = sub.add_parser(
        "factor", help="evaluate a factorization file; report cell and exponent"
    )
    p_factor.add_argument("factorization_file")
    p_factor.add_argument("--json", action="store_true")
    p_factor.set_defaults(func=_cmd_factor)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite",
                          choices=["dodgson", "gk", "gp", "coxeter", "lemma-c"])
    p_verify.add_argument("--seed", type=int, default=None,
                          help="trial seed (default: TPOSC_SEED or 0)")
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs())
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def _default_jobs() -> int:
    return os.cpu_count() or 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    client = ServiceClient(args.server) if args.command != "serve" else None
    try:
        return args.func(args, client)
    except SystemExit as exc:
        return int(exc.code or 0)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if client is not None:
            client.close()


if __name__ == "__main__":
    sys.exit(main())
