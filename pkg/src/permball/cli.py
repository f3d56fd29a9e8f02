"""Command-line front end.

Every subcommand emits the same envelope — command echo, model, parameters,
result payload, elapsed time — as human-readable text or as JSON
(``--format json``). Exit codes: 0 success, 1 verification failure,
2 usage or parse error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from . import core, genset, models, verify
from .basis import basis as compute_basis
from .core import BudgetError
from .models import Model

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_max_len() -> int:
    value = os.environ.get("PERMBALL_MAX_LEN")
    if value is None:
        return core.DEFAULT_MAX_LEN
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"PERMBALL_MAX_LEN must be an integer, got {value!r}") from None


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--max-len",
        type=int,
        default=None,
        help="cap on permutation length for enumerations (default: "
        "$PERMBALL_MAX_LEN or 10)",
    )
    parser.add_argument(
        "--max-states",
        type=int,
        default=2_000_000,
        help="cap on visited search states (default: 2000000)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permball",
        description="Exact block- and prefix-transposition distances, balls, "
        "generating sets and bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="distance from a permutation to the identity")
    p.add_argument("--model", choices=("td", "ptd"), required=True)
    p.add_argument("perm")
    _common(p)

    p = sub.add_parser("neighbors", help="all permutations one operation away")
    p.add_argument("--model", choices=("td", "ptd"), required=True)
    p.add_argument("perm")
    p.add_argument("--count-only", action="store_true")
    _common(p)

    p = sub.add_parser("ball", help="all permutations within distance k of the identity")
    p.add_argument("--model", choices=("td", "ptd"), required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    _common(p)

    p = sub.add_parser("genset", help="generating set of the distance-k ball")
    p.add_argument("--model", choices=("td", "ptd"), required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=("direct", "constructive"), default="direct")
    _common(p)

    p = sub.add_parser("basis", help="basis (minimal excluded permutations) of the ball")
    p.add_argument("--model", choices=("td", "ptd"), required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--probe-extra-length", action="store_true", dest="probe")
    _common(p)

    p = sub.add_parser("count-irreducible", help="number of plus-irreducible permutations")
    p.add_argument("-n", type=int, required=True, help="permutation length")
    _common(p)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--model", choices=("td", "ptd"), default=None,
                   help="restrict to one model (default: both)")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--golden", default=None, help="path to an alternative expected-values file")
    _common(p)

    return parser


def _run_command(args: argparse.Namespace, max_len: int) -> tuple[dict[str, Any], int]:
    """Execute one subcommand; return (result payload, exit code)."""
    max_states = args.max_states
    if args.command == "distance":
        p = core.parse_perm(args.perm)
        if len(p) > max_len:
            raise BudgetError(f"length {len(p)} exceeds the cap {max_len}")
        d = models.distance(p, args.model, max_states=max_states)
        return {"distance": d}, EXIT_OK

    if args.command == "neighbors":
        p = core.parse_perm(args.perm)
        if len(p) > max_len:
            raise BudgetError(f"length {len(p)} exceeds the cap {max_len}")
        found = models.neighbors(p, args.model)
        result: dict[str, Any] = {"count": len(found)}
        if not args.count_only:
            result["elements"] = [core.format_perm(q) for q in found]
        return result, EXIT_OK

    if args.command == "ball":
        found = models.ball(args.n, args.k, args.model, max_len=max_len, max_states=max_states)
        result = {"count": len(found)}
        if not args.count_only:
            result["elements"] = [core.format_perm(q) for q in found]
        return result, EXIT_OK

    if args.command == "genset":
        report = genset.generating_set(
            args.k, args.model, args.method, max_len=max_len, max_states=max_states
        )
        return {
            "k": report.k,
            "model": report.model.value,
            "method": report.method,
            "element_length": report.element_length,
            "count": len(report.elements),
            "elements": [core.format_perm(q) for q in report.elements],
        }, EXIT_OK

    if args.command == "basis":
        report = compute_basis(
            args.k, args.model, probe_extra=args.probe, max_len=max_len, max_states=max_states
        )
        result = {
            "k": report.k,
            "model": report.model.value,
            "length_bound": report.length_bound_used,
            "count": len(report.elements),
            "elements": [core.format_perm(q) for q in report.elements],
        }
        if report.probe is not None:
            result["probe_length"] = report.probe.length
            result["probe_found"] = [core.format_perm(q) for q in report.probe.elements]
        return result, EXIT_OK

    if args.command == "count-irreducible":
        if args.n < 0:
            raise ValueError("length must be non-negative")
        count = 1 if args.n == 0 else core.plus_irreducible_count(args.n - 1)
        return {"n": args.n, "count": count}, EXIT_OK

    if args.command == "verify":
        tags = [Model(args.model)] if args.model else [Model.BLOCK, Model.PREFIX]
        golden = verify.load_golden(args.golden)
        results = verify.run_verification(
            tags, args.k, args.max_n, golden, max_len=max_len, max_states=max_states
        )
        payload = {
            "model": args.model or "both",
            "k": args.k,
            "max_n": args.max_n,
            "checks": [
                {"name": r.name, "status": r.status, "detail": r.detail} for r in results
            ],
            "all_passed": all(r.status != "FAIL" for r in results),
        }
        code = EXIT_OK if payload["all_passed"] else EXIT_VERIFY_FAILED
        return payload, code

    raise ValueError(f"unknown command {args.command!r}")


def _emit_text(envelope: dict[str, Any]) -> None:
    print(f"command: {envelope['command']}")
    if envelope["model"] is not None:
        print(f"model: {envelope['model']}")
    for key, value in envelope["parameters"].items():
        print(f"{key}: {value}")
    result = envelope["result"]
    if "checks" in result:
        for check in result["checks"]:
            print(f"{check['status']:<7}  {check['name']}  [{check['detail']}]")
        print(f"all_passed: {result['all_passed']}")
    else:
        for key, value in result.items():
            if isinstance(value, list):
                print(f"{key}:")
                for item in value:
                    print(f"  {item}")
            else:
                print(f"{key}: {value}")
    print(f"elapsed_seconds: {envelope['elapsed_seconds']:.3f}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        max_len = _default_max_len() if args.max_len is None else args.max_len
        result, code = _run_command(args, max_len)
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    envelope = {
        "command": args.command,
        "model": getattr(args, "model", None),
        "parameters": {
            key: getattr(args, attr)
            for key, attr in (("k", "k"), ("n", "n"), ("method", "method"),
                              ("max_n", "max_n"), ("perm", "perm"))
            if hasattr(args, attr)
        },
        "result": result,
        "elapsed_seconds": time.perf_counter() - started,
    }
    if args.format == "json":
        print(json.dumps(envelope, indent=2))
    else:
        _emit_text(envelope)
    return code


if __name__ == "__main__":
    sys.exit(main())
