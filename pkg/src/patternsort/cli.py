"""Command-line surface: every verb is a thin adapter over the library.

Exit codes: 0 on success, 1 when a verification or cross-check fails,
2 on usage errors (bad flags, malformed or oversized inputs).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bijections, checks, grid, machine, paths, rgf, sequences
from .errors import InvalidInputError, MalformedInputError, ResourceLimitError
from .perms import format_perm, ltr_minima, parse_perm
from .rgf import format_rgf

ENV_CAP = "PATTERNSORT_CAP"
SCHEMA = 1


def _parse_word(text: str) -> tuple[int, ...]:
    """Positive-integer word: spaced, comma-separated, or compact digits."""
    s = text.strip().replace(",", " ")
    if not s:
        raise InvalidInputError("empty word")
    if " " in s:
        parts = s.split()
    elif s.isdigit():
        parts = list(s)
    else:
        raise InvalidInputError(f"cannot parse word {text!r}")
    try:
        word = tuple(int(t) for t in parts)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse word {text!r}") from exc
    if any(v < 1 for v in word):
        raise InvalidInputError("word letters must be positive")
    return word


def _effective_cap(args: argparse.Namespace, default: int) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get(ENV_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInputError(f"{ENV_CAP}={env!r} is not an integer") from exc
    return default


def _require(args: argparse.Namespace, flag: str, verb: str) -> str:
    value = getattr(args, flag.lstrip("-").replace("-", "_"), None)
    if value is None:
        raise InvalidInputError(f"{verb} requires {flag}")
    return value


# -- verb bodies ------------------------------------------------------------

def _do_simulate(args) -> tuple[str, int]:
    p = parse_perm(_require(args, "--perm", "simulate"))
    sigma = parse_perm(args.sigma)
    out, trace = machine.sigma_stack_pass(p, sigma)
    sortable = machine.is_sigma_sortable(p, sigma)
    if args.json:
        doc = {
            "schema": SCHEMA,
            "perm": format_perm(p),
            "sigma": format_perm(sigma),
            "s_sigma": format_perm(out),
            "sortable": sortable,
        }
        if args.trace:
            doc["trace"] = trace.as_dicts()
        return json.dumps(doc, indent=2), 0
    lines = [f"s_sigma: {format_perm(out)}", f"sortable: {str(sortable).lower()}"]
    if args.trace:
        lines.extend(trace.as_lines())
    return "\n".join(lines), 0


def _do_sortable(args) -> tuple[str, int]:
    p = parse_perm(_require(args, "--perm", "sortable"))
    sigma = parse_perm(args.sigma)
    result = machine.is_sigma_sortable(p, sigma)
    if args.json:
        doc = {
            "schema": SCHEMA,
            "perm": format_perm(p),
            "sigma": format_perm(sigma),
            "sortable": result,
        }
        return json.dumps(doc, indent=2), 0
    return str(result).lower(), 0


def _do_enumerate(args) -> tuple[str, int]:
    kind = args.kind
    n = args.n
    if kind == "sortable":
        cap = _effective_cap(args, machine.DEFAULT_PERM_CAP)
        items = [
            format_perm(p)
            for p in machine.enumerate_sortable(n, parse_perm(args.sigma), cap)
        ]
    elif kind == "rgf":
        cap = _effective_cap(args, rgf.DEFAULT_RGF_CAP)
        if args.pattern:
            words = rgf.enumerate_avoiders(n, _parse_word(args.pattern), cap)
        else:
            words = rgf.enumerate_rgfs(n, cap)
        items = [format_rgf(w) for w in words]
    elif kind == "dyck":
        cap = _effective_cap(args, paths.DEFAULT_PATH_CAP)
        items = list(paths.enumerate_dyck(n, cap))
    elif kind == "motzkin":
        cap = _effective_cap(args, paths.DEFAULT_PATH_CAP)
        items = [paths.format_steps(s) for s in paths.enumerate_motzkin(n, cap)]
    else:  # labeled-motzkin
        cap = _effective_cap(args, paths.DEFAULT_LABELED_CAP)
        items = [
            paths.format_steps(s) for s in paths.enumerate_labeled_motzkin(n, cap)
        ]
    if args.json:
        doc = {"schema": SCHEMA, "kind": kind, "n": n, "count": len(items)}
        if not args.count_only:
            doc["items"] = items
        return json.dumps(doc, indent=2), 0
    if args.count_only:
        return str(len(items)), 0
    return "\n".join(items), 0


def _do_decompose(args) -> tuple[str, int]:
    p = parse_perm(_require(args, "--perm", "decompose"))
    d = grid.decompose(p)
    if args.json:
        doc = {
            "schema": SCHEMA,
            "perm": format_perm(p),
            "minima": [[pos, val] for pos, val in d.minima],
            "blocks": [list(b) for b in d.blocks],
            "hstrips": [list(h) for h in d.hstrips],
            "cells": {f"{i},{j}": list(c) for (i, j), c in sorted(d.cells.items())},
            "core": list(d.core),
        }
        return json.dumps(doc, indent=2), 0
    lines = [
        f"perm: {format_perm(p)}",
        f"minima: {format_perm(d.minima_values)}",
        f"core: {format_perm(d.core) if d.core else '(empty)'}",
    ]
    lines.extend(d.describe())
    return "\n".join(lines), 0


_MAP_ALIASES = {
    "sortable-to-rgf": "phi",
    "rgf-to-sortable": "phi-inverse",
    "rgf-to-dyck": "psi",
    "dyck-to-rgf": "psi-inverse",
    "motzkin-to-rgf": "beta",
    "rgf-to-motzkin": "beta-inverse",
    "rgf-to-av321": "nr-to-av321",
    "av321-to-rgf": "av321-to-nr",
    "to-12321": "gamma",
    "to-12231": "gamma-inverse",
}

MAP_NAMES = tuple(
    sorted(
        {
            "phi",
            "phi-inverse",
            "psi",
            "psi-inverse",
            "beta",
            "beta-inverse",
            "nr-to-av321",
            "av321-to-nr",
            "gamma",
            "gamma-inverse",
            *_MAP_ALIASES,
        }
    )
)


def _path_stats(steps: Sequence[str]) -> dict:
    return {s: sum(1 for t in steps if t == s) for s in paths.LABELED_STEPS}


def _do_map(args) -> tuple[str, int]:
    name = _MAP_ALIASES.get(args.name, args.name)
    steps_doc = None

    if name == "phi":
        p = parse_perm(_require(args, "--perm", f"map {args.name}"))
        r = bijections.sortable_to_rgf(p, relaxed=args.relaxed)
        out_text = format_rgf(r)
        stats = {"max": max(r), "ltr_minima": len(ltr_minima(p))}
        in_text = format_perm(p)
    elif name == "phi-inverse":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        p = bijections.rgf_to_sortable(r)
        out_text = format_perm(p)
        stats = {"max": max(r), "ltr_minima": len(ltr_minima(p))}
        in_text = format_rgf(tuple(r))
    elif name == "psi":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        path = bijections.rgf_to_dyck_path(r)
        out_text = path
        stats = {"max": max(r), "double_rises": paths.double_rises(path)}
        in_text = format_rgf(tuple(r))
    elif name == "psi-inverse":
        path = _require(args, "--path", f"map {args.name}")
        r = bijections.dyck_path_to_rgf(path.strip())
        out_text = format_rgf(r)
        stats = {"max": max(r), "double_rises": paths.double_rises(path.strip())}
        in_text = path.strip()
    elif name == "beta":
        steps = paths.parse_steps(_require(args, "--path", f"map {args.name}"))
        r = bijections.labeled_motzkin_to_rgf(steps, args.mode, reduced=args.reduced)
        out_text = format_rgf(r)
        stats = {"max": max(r), **_path_stats(steps)}
        in_text = paths.format_steps(steps)
    elif name == "beta-inverse":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        steps = bijections.rgf_to_labeled_motzkin(r, args.mode, reduced=args.reduced)
        out_text = paths.format_steps(steps)
        stats = {"max": max(r), **_path_stats(steps)}
        in_text = format_rgf(tuple(r))
    elif name == "nr-to-av321":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        p = bijections.rgf_to_av321(r)
        out_text = format_perm(p)
        stats = {"max": max(r)}
        in_text = format_rgf(tuple(r))
    elif name == "av321-to-nr":
        p = parse_perm(_require(args, "--perm", f"map {args.name}"))
        r = bijections.av321_to_rgf(p)
        out_text = format_rgf(r)
        stats = {"max": max(r)}
        in_text = format_perm(p)
    elif name == "gamma":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        out, swap_steps = bijections.to_12321_avoider(r, with_steps=True)
        out_text = format_rgf(out)
        stats = {"max": max(out) if out else 0, "swaps": len(swap_steps)}
        steps_doc = [list(t) for t in swap_steps]
        in_text = format_rgf(tuple(r))
    elif name == "gamma-inverse":
        r = _parse_word(_require(args, "--rgf", f"map {args.name}"))
        out, swap_steps = bijections.to_12231_avoider(r, with_steps=True)
        out_text = format_rgf(out)
        stats = {"max": max(out) if out else 0, "swaps": len(swap_steps)}
        steps_doc = [list(t) for t in swap_steps]
        in_text = format_rgf(tuple(r))
    else:
        raise InvalidInputError(f"unknown map {args.name!r}")

    if args.json:
        doc = {
            "schema": SCHEMA,
            "map": args.name,
            "input": in_text,
            "output": out_text,
            "statistics": stats,
        }
        if args.steps and steps_doc is not None:
            doc["steps"] = steps_doc
        return json.dumps(doc, indent=2), 0
    return out_text, 0


def _do_verify(args) -> tuple[str, int]:
    results = checks.run_checks(args.scope, args.nmax)
    failed = [r for r in results if not r.passed]
    if args.json:
        doc = {
            "schema": SCHEMA,
            "scope": args.scope,
            "nmax": args.nmax,
            "passed": not failed,
            "checks": [
                {
                    "name": r.name,
                    "scope": r.scope,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": round(r.seconds, 3),
                    "counterexample": r.counterexample,
                }
                for r in results
            ],
        }
        return json.dumps(doc, indent=2), 1 if failed else 0
    lines = []
    for r in results:
        mark = "pass" if r.passed else "FAIL"
        line = f"{mark} {r.name} ({r.seconds:.3f}s): {r.detail}"
        if not r.passed:
            line += f" [{r.counterexample}]"
        lines.append(line)
    lines.append(
        f"{len(results) - len(failed)}/{len(results)} checks passed "
        f"(scope {args.scope}, nmax {args.nmax})"
    )
    return "\n".join(lines), 1 if failed else 0


def _table_rows(args) -> tuple[str, list[tuple[int, int]], int]:
    kind = args.kind
    n = args.n
    status = 0
    if kind == "a007317":
        header = "n,value"
        rows = [(i, sequences.a007317(i - 1)) for i in range(1, n + 1)]
    elif kind == "narayana":
        header = "k,value"
        rows = [(k, sequences.narayana(n, k)) for k in range(1, n + 1)]
    elif kind == "sortable-by-minima":
        cap = _effective_cap(args, machine.DEFAULT_PERM_CAP)
        dist = grid.minima_distribution(n, cap)
        header = "k,count"
        rows = [(k, dist.get(k, 0)) for k in range(1, n + 1)]
        for k, got in rows:
            want = sequences.max_distribution_formula(n - 1, k - 1)
            if got != want:
                status = 1
    elif kind == "rgf-max":
        cap = _effective_cap(args, rgf.DEFAULT_RGF_CAP)
        pattern = _parse_word(args.pattern) if args.pattern else (1, 2, 3, 3, 2)
        dist = rgf.max_distribution(n, pattern, cap)
        header = "max,count"
        rows = [(k, dist.get(k, 0)) for k in range(1, n + 1)]
    else:
        raise InvalidInputError(f"unknown table kind {kind!r}")
    return header, rows, status


def _do_table(args) -> tuple[str, int]:
    header, rows, status = _table_rows(args)
    if args.format == "bfile":
        body = "\n".join(f"{i} {v}" for i, v in rows)
    elif args.format == "json":
        body = json.dumps(
            {
                "schema": SCHEMA,
                "kind": args.kind,
                "n": args.n,
                "columns": header.split(","),
                "rows": [[i, v] for i, v in rows],
            },
            indent=2,
        )
    else:
        body = "\n".join([header] + [f"{i},{v}" for i, v in rows])
    if status:
        body += "\ncross-check failed against the closed form"
    return body, status


def _do_export(args) -> tuple[str, int]:
    if args.kind == "trace":
        p = parse_perm(_require(args, "--perm", "export trace"))
        sigma = parse_perm(args.sigma)
        out, trace = machine.sigma_stack_pass(p, sigma)
        if args.format == "json":
            doc = {
                "schema": SCHEMA,
                "perm": format_perm(p),
                "sigma": format_perm(sigma),
                "events": trace.as_dicts(),
                "output": format_perm(out),
            }
            return json.dumps(doc, indent=2), 0
        return "\n".join(trace.as_lines()), 0
    # decomposition
    sub = argparse.Namespace(
        perm=_require(args, "--perm", "export decomposition"),
        json=(args.format == "json"),
    )
    return _do_decompose(sub)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternsort",
        description="Sortable permutations, growth-function words, and lattice paths.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("simulate", help="run the first stack on a permutation")
    p.add_argument("--sigma", default="132")
    p.add_argument("--perm", required=True)
    p.add_argument("--trace", action="store_true", help="include the event log")
    common(p)

    p = sub.add_parser("sortable", help="test sortability of a permutation")
    p.add_argument("--sigma", default="132")
    p.add_argument("--perm", required=True)
    common(p)

    p = sub.add_parser("enumerate", help="list combinatorial families")
    p.add_argument(
        "kind", choices=["sortable", "rgf", "dyck", "motzkin", "labeled-motzkin"]
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", default="132")
    p.add_argument("--pattern", help="avoided pattern for kind rgf")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--cap", type=int)
    common(p)

    p = sub.add_parser("decompose", help="grid decomposition of a permutation")
    p.add_argument("--perm", required=True)
    common(p)

    p = sub.add_parser("map", help="apply one of the bijections")
    p.add_argument("name", choices=list(MAP_NAMES))
    p.add_argument("--perm")
    p.add_argument("--rgf")
    p.add_argument("--path")
    p.add_argument("--mode", choices=["stack", "queue"], default="stack")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--steps", action="store_true", help="include swap steps in JSON")
    common(p)

    p = sub.add_parser("verify", help="run the exhaustive check suite")
    p.add_argument("--scope", choices=["all", *checks.SCOPES], default="all")
    p.add_argument("--nmax", type=int, default=6)
    common(p)

    p = sub.add_parser("table", help="print a distribution or sequence table")
    p.add_argument(
        "kind", choices=["sortable-by-minima", "rgf-max", "narayana", "a007317"]
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json", "bfile"], default="csv")
    p.add_argument("--pattern", help="avoided pattern for kind rgf-max")
    p.add_argument("--cap", type=int)
    p.add_argument("--out", help="write the report to this file")

    p = sub.add_parser("export", help="machine-readable trace or decomposition")
    p.add_argument("kind", choices=["trace", "decomposition"])
    p.add_argument("--perm", required=True)
    p.add_argument("--sigma", default="132")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write the report to this file")

    return parser


_DISPATCH = {
    "simulate": _do_simulate,
    "sortable": _do_sortable,
    "enumerate": _do_enumerate,
    "decompose": _do_decompose,
    "map": _do_map,
    "verify": _do_verify,
    "table": _do_table,
    "export": _do_export,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        body, status = _DISPATCH[args.verb](args)
    except (InvalidInputError, MalformedInputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return status


if __name__ == "__main__":
    sys.exit(main())
