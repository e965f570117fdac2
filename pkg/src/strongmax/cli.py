"""Command-line driver: a thin client over the service.

By default the app is driven in-process (no server needed); pass
``--server URL`` to talk to a running instance instead.  Exit codes:
0 success, 2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=300.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app

    return TestClient(app)


def _emit(payload, emit: str) -> None:
    if emit == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(_render_text(payload))


def _render_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(f"{pad}- {json.dumps(v)}" for v in payload)
    return f"{pad}{json.dumps(payload)}"


def _request(client: httpx.Client, method: str, path: str, body=None):
    resp = client.request(method, path, json=body)
    if resp.status_code == 422:
        detail = resp.json().get("detail", "invalid input")
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)
    if resp.status_code >= 500:
        print(f"internal error: {resp.text}", file=sys.stderr)
        raise SystemExit(EXIT_INTERNAL)
    resp.raise_for_status()
    return resp.json()


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def build_parser() -> argparse.ArgumentParser:
    # --emit and --bound work before or after the subcommand; SUPPRESS
    # keeps subparser defaults from clobbering values parsed earlier
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--server", default=argparse.SUPPRESS,
                        help="base URL of a running service")
    shared.add_argument("--emit", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    shared.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="truncation window for verification")

    top = argparse.ArgumentParser(prog="strongmax", description=__doc__,
                                  parents=[shared])
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, help, **kw):
        return sub.add_parser(name, help=help, parents=[shared], **kw)

    cat = add("catalog", "catalogue constructions and edges")
    catsub = cat.add_subparsers(dest="subcommand", required=True)
    catsub.add_parser("list", parents=[shared])
    edge = catsub.add_parser("edge", parents=[shared])
    edge.add_argument("--construction", required=True)
    edge.add_argument("--x", type=int)
    edge.add_argument("--y", type=int)
    edge.add_argument("--u", type=int)
    edge.add_argument("--v", type=int)
    edge.add_argument("--members", type=int, nargs="*")

    gad = add("gadget", "build an edge gadget")
    gadsub = gad.add_subparsers(dest="subcommand", required=True)
    build = gadsub.add_parser("build", parents=[shared])
    build.add_argument("--k", type=int)
    build.add_argument("--host", type=int, nargs="*")

    ver = add("verify", "verify a presentation file")
    ver.add_argument("--input", required=True)
    ver.add_argument("--construction",
                     help="cross-check against the presentation")

    imp = add("improve", "improve a presentation file")
    imp.add_argument("--input", required=True)
    imp.add_argument("--construction",
                     help="cross-check against the presentation")
    imp.add_argument("--steps", type=int, default=1)
    imp.add_argument("--out", help="write the final presentation here")

    dem = add("demo", "iterate an oracle and report")
    dem.add_argument("--input", required=True)
    dem.add_argument("--steps", type=int, default=1)
    dem.add_argument("--out", help="write the final presentation here")

    lab = add("lab", "brute-force ground truth")
    labsub = lab.add_subparsers(dest="subcommand", required=True)
    lem = labsub.add_parser("gadget-lemmas", parents=[shared])
    lem.add_argument("--k-max", type=int, default=7)
    brute = labsub.add_parser("brute", parents=[shared])
    brute.add_argument("--input", required=True)
    brute.add_argument("--what", choices=("matchings", "covers"),
                       required=True)
    return top


def _check_construction(args, payload) -> None:
    want = getattr(args, "construction", None)
    if want and payload.get("construction") not in (want, None):
        print(
            f"error: presentation is for {payload.get('construction')!r},"
            f" not {want!r}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_INVALID)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.server = getattr(args, "server", None)
    args.emit = getattr(args, "emit", "json")
    args.bound = getattr(args, "bound", 8)
    with _client(args.server) as client:
        if args.command == "catalog":
            if args.subcommand == "list":
                _emit(_request(client, "GET", "/catalog/list"), args.emit)
            else:
                body = {
                    "construction": args.construction,
                    "x": args.x, "y": args.y, "u": args.u, "v": args.v,
                    "members": args.members,
                }
                _emit(_request(client, "POST", "/catalog/edge", body),
                      args.emit)
        elif args.command == "gadget":
            body = {"k": args.k, "host": args.host}
            _emit(_request(client, "POST", "/gadget/build", body), args.emit)
        elif args.command == "verify":
            p = _load_json(args.input)
            _check_construction(args, p)
            body = {"presentation": p, "bound": args.bound}
            out = _request(client, "POST", "/verify", body)
            _emit(out, args.emit)
            if not out["valid"]:
                return EXIT_INVALID
        elif args.command == "improve":
            p = _load_json(args.input)
            _check_construction(args, p)
            body = {"presentation": p,
                    "steps": args.steps, "bound": args.bound}
            out = _request(client, "POST", "/improve", body)
            if args.out:
                with open(args.out, "w") as fh:
                    json.dump(out["presentation"], fh, sort_keys=True)
            _emit(out, args.emit)
        elif args.command == "demo":
            body = {"presentation": _load_json(args.input),
                    "steps": args.steps, "bound": args.bound}
            out = _request(client, "POST", "/demo", body)
            report = out["report"]
            if args.out:
                with open(args.out, "w") as fh:
                    json.dump(report["final_presentation"], fh,
                              sort_keys=True)
            # Wall time goes to stderr so report bytes stay deterministic.
            print(f"wall_time_ms: {out['wall_time_ms']:.1f}", file=sys.stderr)
            _emit(report, args.emit)
        elif args.command == "lab":
            if args.subcommand == "gadget-lemmas":
                out = _request(client, "POST", "/lab/gadget-lemmas",
                               {"k_max": args.k_max})
                _emit(out, args.emit)
                if not out["all_hold"]:
                    return EXIT_INTERNAL
            else:
                body = _load_json(args.input)
                body["what"] = args.what
                _emit(_request(client, "POST", "/lab/brute", body), args.emit)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
