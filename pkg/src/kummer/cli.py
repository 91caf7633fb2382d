"""Command-line front end, a thin client over the in-process service.

Subcommands:

* ``classify --R <expr> [--var <name>] [--format text|json]`` classifies
  one curvature and prints the report.
* ``batch`` reads one expression per stdin line (blank lines are
  skipped) and prints one compact JSON report per line, input order
  preserved; the first bad line aborts the run.
* ``selfcheck`` runs the identity suite and prints one PASS/FAIL line
  per check.

All subcommands accept ``--out <path>`` to write the output there
instead of stdout. Exit codes: 0 success, 1 syntax error, 2 unsupported
poles, 3 internal verification failure (including a failed selfcheck).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_UNSUPPORTED = 2
EXIT_INTERNAL = 3

_EXIT_BY_ERROR_KIND = {
    "syntax": EXIT_SYNTAX,
    "unsupported_poles": EXIT_UNSUPPORTED,
    "verification": EXIT_INTERNAL,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer",
        description=(
            "Classify the projective structure on the line with curvature R:"
            " differential Galois class, integrability verdicts, and exact"
            " witnesses."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    one = sub.add_parser("classify", help="classify a single curvature")
    one.add_argument(
        "--R",
        dest="expression",
        required=True,
        metavar="EXPR",
        help="curvature as a rational expression, e.g. '-4/x^2'",
    )
    one.add_argument(
        "--var",
        default=None,
        metavar="NAME",
        help="require this variable name in the expression",
    )
    one.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output rendering (default: text)",
    )
    one.add_argument("--out", default=None, metavar="PATH")

    many = sub.add_parser(
        "batch", help="classify one expression per stdin line, JSON per line"
    )
    many.add_argument("--out", default=None, metavar="PATH")

    check = sub.add_parser("selfcheck", help="run the exact identity suite")
    check.add_argument("--out", default=None, metavar="PATH")

    return parser


def _request(method: str, path: str, payload: dict | None = None) -> httpx.Response:
    """One in-process round trip to the service app.

    The ASGI transport only speaks async, so each CLI action drives a
    short-lived event loop; there is no network and no shared state."""
    from .service import app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://kummer.internal"
        ) as client:
            if method == "GET":
                return await client.get(path)
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _report_error(detail) -> int:
    if isinstance(detail, dict) and "error" in detail:
        kind = detail["error"]
        message = detail.get("message", "")
        position = detail.get("position")
        line = detail.get("line")
        place = ""
        if line is not None:
            place += f" (line {line})"
        if position is not None:
            place += f" (position {position})"
        factor = detail.get("residual_factor")
        if factor is not None:
            message += f": {factor}"
        sys.stderr.write(f"error: {message}{place}\n")
        return _EXIT_BY_ERROR_KIND.get(kind, EXIT_INTERNAL)
    sys.stderr.write(f"error: {detail}\n")
    return EXIT_INTERNAL


def _run_classify(args: argparse.Namespace) -> int:
    response = _request(
        "POST",
        "/classify",
        {"expression": args.expression, "var": args.var},
    )
    if response.status_code != 200:
        return _report_error(response.json().get("detail"))
    body = response.json()
    if args.format == "json":
        output = json.dumps(body["report"], separators=(",", ":")) + "\n"
    else:
        output = body["text"]
    _emit(output, args.out)
    return EXIT_OK


def _run_batch(args: argparse.Namespace) -> int:
    expressions = [
        line for line in sys.stdin.read().splitlines() if line.strip()
    ]
    response = _request("POST", "/batch", {"expressions": expressions})
    if response.status_code != 200:
        return _report_error(response.json().get("detail"))
    body = response.json()
    lines = [
        json.dumps(report, separators=(",", ":")) for report in body["reports"]
    ]
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def _run_selfcheck(args: argparse.Namespace) -> int:
    body = _request("GET", "/selfcheck").json()
    lines = [
        f"{'PASS' if check['passed'] else 'FAIL'}  {check['name']}: {check['detail']}"
        for check in body["checks"]
    ]
    verdict = "all checks passed" if body["passed"] else "SUITE FAILED"
    lines.append(verdict)
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK if body["passed"] else EXIT_INTERNAL


def _glue_expression_flag(argv: list[str]) -> list[str]:
    """Rewrite ``--R <expr>`` as ``--R=<expr>``.

    Curvatures routinely start with a minus sign, which argparse would
    otherwise read as another option; gluing the pair keeps the natural
    two-token spelling working."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--R" and i + 1 < len(argv):
            out.append(f"--R={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_glue_expression_flag(argv))
    if args.command == "classify":
        return _run_classify(args)
    if args.command == "batch":
        return _run_batch(args)
    return _run_selfcheck(args)


if __name__ == "__main__":
    sys.exit(main())
