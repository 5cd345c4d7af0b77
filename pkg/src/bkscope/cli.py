"""Command-line client for the catalog service.

The CLI never touches the core package directly: every subcommand issues a
GET against the HTTP API, by default in-process (no socket), or against a
running server via --url.  Output formatting is the client's job: `text`
for humans, `json` streaming one object per line for record streams,
`json-array` for a single document, `csv` for spreadsheets.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .gaussian import GaussianInt

FORMATS = ("text", "json", "json-array", "csv")
SQUARE_IDS = tuple(f"S{i}" for i in range(1, 11))
LIST_KINDS = (
    "observables",
    "triads",
    "states",
    "squares",
    "tetrads",
    "lines",
    "mubsets",
)


def _client(url: str | None):
    if url:
        import httpx

        return httpx.Client(base_url=url)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _get(client, path: str, params: dict | None = None):
    response = client.get(path, params=params or {})
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    return response.json()


# --- rendering ---------------------------------------------------------------


def _flatten(value) -> str:
    """One CSV/text cell for a possibly nested list."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float, str)) or value is None:
        return "" if value is None else str(value)
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return ";".join(_flatten(v) for v in value)
        return " ".join(_flatten(v) for v in value)
    return json.dumps(value, separators=(",", ":"))


def _emit_records(records: list[dict], fmt: str) -> None:
    if fmt == "json":
        for r in records:
            print(json.dumps(r, separators=(",", ":")))
    elif fmt == "json-array":
        print(json.dumps(records, indent=2))
    elif fmt == "csv":
        if not records:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]))
        writer.writeheader()
        for r in records:
            writer.writerow({k: _flatten(v) for k, v in r.items()})
        sys.stdout.write(buf.getvalue())
    else:
        for r in records:
            print("  ".join(f"{k}={_flatten(v)}" for k, v in r.items()))


def _emit_document(doc: dict, fmt: str) -> None:
    if fmt in ("json", "json-array"):
        print(json.dumps(doc, indent=2))
    elif fmt == "csv":
        _emit_records([doc], "csv")
    else:
        print(json.dumps(doc, indent=2))


def _coords_text(coords: list[list[int]]) -> str:
    return "(" + ",".join(str(GaussianInt(re, im)) for re, im in coords) + ")"


# --- subcommands -------------------------------------------------------------


def cmd_verify(client, args) -> int:
    doc = _get(client, f"/verify/{args.scope}")
    if args.format == "text":
        for check in doc["checks"]:
            flag = "PASS" if check["ok"] else "FAIL"
            detail = f"  [{check['detail']}]" if check["detail"] else ""
            print(f"{flag}  {check['name']}{detail}")
        for note in doc["notes"]:
            print(f"note: {note}")
        status = "ok" if doc["ok"] else "FAILED"
        print(f"{doc['scope']}: {status} ({len(doc['checks'])} checks, "
              f"{doc['elapsed']}s)")
    else:
        _emit_document(doc, args.format)
    return 0 if doc["ok"] else 1


def _list_records(client, args) -> list[dict]:
    kind = args.kind
    if kind == "observables":
        return _get(client, "/observables")["observables"]
    if kind == "triads":
        return _get(client, "/triads")["triads"]
    if kind == "states":
        return _get(client, "/states")["states"]
    if kind == "squares":
        return _get(client, "/squares")["squares"]
    if kind == "mubsets":
        return _get(client, "/mubsets")["sets"]
    if kind == "tetrads":
        params = {"square": args.square} if args.square else {}
        doc = _get(client, "/tetrads", params)
        return [{"square": doc["square"], "tetrad": t} for t in doc["tetrads"]]
    # lines: the Reye configuration lines, per square
    sids = (args.square,) if args.square else SQUARE_IDS
    records = []
    for sid in sids:
        doc = _get(client, "/reye", {"square": sid})
        for cls in ("row_config", "column_config"):
            for line in doc[cls]["lines"]:
                records.append({"square": sid, "class": cls, "line": line})
    return records


def cmd_list(client, args) -> int:
    records = _list_records(client, args)
    if args.format == "text" and args.kind == "states":
        for r in records:
            sig = ",".join(f"{v:+d}" for v in r["signature"])
            print(f"{r['label']:>2}  {_coords_text(r['coords'])}  "
                  f"home={','.join(r['home_triad'])}  signature=({sig})")
        return 0
    _emit_records(records, args.format)
    return 0


def cmd_apparitions(client, args) -> int:
    params = {"square": args.square, "kind": args.kind, "check": args.check}
    doc = _get(client, "/apparitions", params)
    records = doc["apparitions"]
    if args.format == "text":
        for r in records:
            line = (f"{r['square']} kind={r['kind']} "
                    f"excluded={_flatten(r['excluded'])} "
                    f"tetrads={len(r['tetrads'])} parity={str(r['parity']).lower()}")
            if r.get("colorings") is not None:
                line += f" colorings={r['colorings']}"
            print(line)
        print(f"total: {len(records)}")
    else:
        _emit_records(records, args.format)
    if args.check and any(r.get("colorings") != 0 for r in records):
        return 1
    return 0


def cmd_find_map(client, args) -> int:
    doc = _get(client, "/find-map", {"src": args.src, "dst": args.dst,
                                     "lift": args.lift})
    if args.format == "text":
        print(f"{doc['source']} -> {doc['target']}: {doc['count']} maps, "
              f"all_nonlocal={str(doc['all_nonlocal']).lower()}")
        for m in doc["maps"]:
            tag = "local" if m["local"] else "non-local"
            rows = " ".join("".join(str(b) for b in row) for row in m["rows"])
            print(f"  [{rows}]  {tag}")
            if m.get("lift"):
                den = m["lift"]["den"]
                for row in m["lift"]["num"]:
                    cells = ", ".join(str(GaussianInt(re, im)) for re, im in row)
                    print(f"    [{cells}] / {den}")
    else:
        _emit_records(doc["maps"], args.format)
    return 0


def cmd_export(client, args) -> int:
    if args.dump_golden:
        _emit_document(_get(client, "/golden"), args.format)
        return 0
    doc = _get(client, "/apparitions", {"square": "all", "kind": "all"})
    records = [
        {
            "square": r["square"],
            "kind": r["kind"],
            "excluded": r["excluded"],
            "tetrads": r["tetrads"],
        }
        for r in doc["apparitions"]
    ]
    _emit_records(records, "json" if args.format == "text" else args.format)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkscope",
        description="Enumerate and verify the two-qubit magic-square catalog.",
    )
    parser.add_argument("--format", choices=FORMATS, default="text",
                        help="output format (default: text)")
    parser.add_argument("--url", default=None,
                        help="base URL of a running server (default: in-process)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value parsed before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    common.add_argument("--url", default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run invariant suites", parents=[common])
    p.add_argument("scope", nargs="?", default="all",
                   choices=("all", "observables", "squares", "states", "reye",
                            "apparitions", "designs", "transforms"))

    p = sub.add_parser("list", parents=[common], help="enumerate catalog objects")
    p.add_argument("kind", choices=LIST_KINDS)
    p.add_argument("--square", choices=SQUARE_IDS, default=None)

    p = sub.add_parser("apparitions", parents=[common], help="stream parity-proof apparitions")
    p.add_argument("--square", choices=SQUARE_IDS + ("all",), default="all")
    p.add_argument("--kind", choices=("18", "20", "all"), default="all")
    p.add_argument("--check", action="store_true",
                   help="also run the coloring search per apparition")

    p = sub.add_parser("find-map", parents=[common], help="symplectic maps between two squares")
    p.add_argument("src", choices=SQUARE_IDS)
    p.add_argument("dst", choices=SQUARE_IDS)
    p.add_argument("--lift", action="store_true",
                   help="attach an exact unitary lift to each map")

    p = sub.add_parser("export", parents=[common], help="machine-readable dumps")
    p.add_argument("--dump-golden", action="store_true",
                   help="emit the embedded golden tables instead of apparitions")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    client = _client(args.url)
    try:
        if args.command == "verify":
            return cmd_verify(client, args)
        if args.command == "list":
            return cmd_list(client, args)
        if args.command == "apparitions":
            return cmd_apparitions(client, args)
        if args.command == "find-map":
            return cmd_find_map(client, args)
        if args.command == "export":
            return cmd_export(client, args)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); not our error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    finally:
        client.close()
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
