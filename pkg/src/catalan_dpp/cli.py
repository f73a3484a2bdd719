"""Command-line entry point: ``catalan-dpp <subcommand> ...``.

Exit status: 0 on success, 1 when a verification or count check fails,
2 for usage errors (bad flags, malformed values, orders above a cap).
Caps default to the library defaults and may be overridden by flags or
the environment variables ``CATALAN_DPP_MAX_ORDER``,
``CATALAN_DPP_MAX_DEPTH``, ``CATALAN_DPP_MAX_ASM_ORDER`` and
``CATALAN_DPP_MAX_TSSCPP_ORDER``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Iterator, TextIO

from . import asm, catalan, dpp, trees, verify

FAMILIES = ("dpp", "catalan-dpp", "path", "perm231", "asm", "mono-diag", "magog-diag", "tsscpp")
PRODUCT_FAMILIES = {"dpp", "asm", "tsscpp"}

_ENV_CAPS = {
    "dpp_order": ("CATALAN_DPP_MAX_ORDER", dpp.DEFAULT_MAX_ORDER),
    "depth": ("CATALAN_DPP_MAX_DEPTH", trees.DEFAULT_MAX_DEPTH),
    "asm_order": ("CATALAN_DPP_MAX_ASM_ORDER", asm.DEFAULT_MAX_ASM_ORDER),
    "tsscpp_order": ("CATALAN_DPP_MAX_TSSCPP_ORDER", asm.DEFAULT_MAX_TSSCPP_ORDER),
}


class UsageError(Exception):
    pass


def _caps(args) -> verify.Caps:
    values = {}
    for field, (env, default) in _ENV_CAPS.items():
        flag = getattr(args, f"max_{field}", None)
        if flag is not None:
            values[field] = flag
        elif env in os.environ:
            try:
                values[field] = int(os.environ[env])
            except ValueError:
                raise UsageError(f"{env} must be an integer") from None
        else:
            values[field] = default
    return verify.Caps(**values)


def _family_stream(family: str, n: int, caps: verify.Caps) -> Iterator:
    if family == "dpp":
        return dpp.enumerate_dpps(n, caps.dpp_order)
    if family == "catalan-dpp":
        return catalan.enumerate_catalan_dpps(n)
    if family == "path":
        return catalan.enumerate_paths(n)
    if family == "perm231":
        return catalan.enumerate_231_avoiding(n)
    if family == "asm":
        return asm.enumerate_asms(n, caps.asm_order)
    if family in ("mono-diag", "magog-diag"):
        return asm.enumerate_diagonals(n, "monotone" if family == "mono-diag" else "magog")
    if family == "tsscpp":
        return asm.enumerate_tsscpps(n, caps.tsscpp_order)
    raise UsageError(f"unknown family {family!r}")


def _as_json(obj) -> dict:
    if isinstance(obj, tuple) and not hasattr(obj, "to_json"):
        return {"values": list(obj)}
    return obj.to_json()


def _as_ascii(obj) -> str:
    if isinstance(obj, dpp.Dpp):
        return obj.ascii()
    if isinstance(obj, tuple) and not hasattr(obj, "to_json"):
        return catalan.format_permutation(obj)
    return str(obj)


def cmd_enumerate(args, out: TextIO, caps: verify.Caps) -> int:
    count = 0
    multiline = args.family in ("dpp", "asm", "tsscpp")
    for obj in _family_stream(args.family, args.order, caps):
        if args.format == "json":
            out.write(json.dumps(_as_json(obj)) + "\n")
        elif args.format == "ascii":
            if multiline and count:
                out.write("\n")
            out.write(_as_ascii(obj) + "\n")
        count += 1
    if args.format == "json":
        out.write(json.dumps({"count": count}) + "\n")
    elif args.format == "count":
        out.write(f"{count}\n")
    return 0


def _formula(family: str, n: int) -> int:
    return dpp.product_formula(n) if family in PRODUCT_FAMILIES else catalan.catalan_number(n)


def cmd_count(args, out: TextIO, caps: verify.Caps) -> int:
    count = sum(1 for _ in _family_stream(args.family, args.order, caps))
    formula = _formula(args.family, args.order)
    verdict = "MATCH" if count == formula else "MISMATCH"
    out.write(f"{count} formula={formula} {verdict}\n")
    return 0 if count == formula else 1


def cmd_map(args, out: TextIO, caps: verify.Caps) -> int:
    try:
        if args.source == "catalan-dpp":
            parts = dpp.parse_rows(args.value)
            if len(parts) > 1:
                raise UsageError("a Catalan DPP has a single row")
            row = parts[0] if parts else ()
            order = args.order if args.order is not None else (row[0] if row else 0)
            c = catalan.catalan_dpp(row, order)
            out.write(str(catalan.dpp_to_path(c)) + "\n")
        else:
            steps = catalan.parse_path(args.value)
            order = args.order if args.order is not None else steps.count(1) + 1
            p = catalan.validate_path(steps, order)
            out.write(str(catalan.path_to_dpp(p)) + "\n")
    except (ValueError, dpp.InvalidDpp, catalan.InvalidPath) as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_tree(args, out: TextIO, caps: verify.Caps) -> int:
    levels = list(trees.iter_levels(args.which, args.depth, caps.depth))
    if args.format == "json":
        for lv in levels:
            for line in trees.level_jsonl(lv):
                out.write(line + "\n")
    elif args.format == "dot":
        out.write(trees.tree_dot(levels, name=f"{args.which}_tree") + "\n")
    else:
        out.write(trees.tree_ascii(levels) + "\n")
    return 0


def cmd_verify(args, out: TextIO, caps: verify.Caps) -> int:
    failures = 0
    for check in verify.SUITES[args.suite](args.max_order, caps):
        out.write(check.line() + "\n")
        failures += not check.ok
    out.write(f"{args.suite}: {'FAIL' if failures else 'PASS'} ({failures} failed)\n")
    return 1 if failures else 0


def cmd_qpoly(args, out: TextIO, caps: verify.Caps) -> int:
    brute = dpp.dpp_generating_polynomial(args.order, caps.dpp_order)
    closed = dpp.q_product_formula(args.order)
    out.write(f"enumerated: {brute}\n")
    out.write(f"q-product:  {closed}\n")
    out.write(("MATCH" if brute == closed else "MISMATCH") + "\n")
    return 0 if brute == closed else 1


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-dpp",
        description="Enumerate and cross-check descending plane partitions and their Catalan subset.")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--max-dpp-order", dest="max_dpp_order", type=_nonneg)
    parser.add_argument("--max-depth", dest="max_depth", type=_nonneg)
    parser.add_argument("--max-asm-order", dest="max_asm_order", type=_nonneg)
    parser.add_argument("--max-tsscpp-order", dest="max_tsscpp_order", type=_nonneg)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream a family in canonical order")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--format", choices=("json", "ascii", "count"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count a family and compare with its formula")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--order", type=_nonneg, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("map", help="apply the Catalan DPP <-> path bijection")
    p.add_argument("--from", dest="source", choices=("catalan-dpp", "path"), required=True)
    p.add_argument("--value", required=True)
    p.add_argument("--order", type=_nonneg, help="order bound (default: smallest valid)")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("tree", help="emit a generating tree down to a depth")
    p.add_argument("--which", choices=trees.TREE_IDS, required=True)
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--format", choices=("json", "dot", "ascii"), default="ascii")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=tuple(verify.SUITES), required=True)
    p.add_argument("--max-order", type=_nonneg, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qpoly", help="compare the sum-of-entries polynomial with the q-product")
    p.add_argument("--order", type=_nonneg, required=True)
    p.set_defaults(func=cmd_qpoly)
    return parser


def run(argv: Iterable[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        caps = _caps(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return args.func(args, fh, caps)
        return args.func(args, stdout, caps)
    except (UsageError, dpp.OrderTooLargeForEnumeration, asm.OrderTooLarge,
            trees.DepthTooLarge) as exc:
        stderr.write(f"catalan-dpp: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
