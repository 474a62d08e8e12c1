"""Command-line interface: bounds, exact, construct, verify, table.

Commands read a group spec like "Z2024" or "Z4xZ2" and a set spec that is
either an explicit list "{0, 1, 5}" (coordinate tuples like "(1,1)" allowed)
or, for cyclic groups, a coset union "cosets(order=8; reps=0,1)".  Output is
text, json, or csv (csv for the table command only); the machine-readable
document goes to stdout, diagnostics to stderr.  Exit codes: 0 success or
verified, 1 usage or parse failure, 2 verification failed, 3 budget exceeded,
4 search exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from typing import Optional

from . import __version__
from .bounds import BoundsReport, bounds_report, upper_bound
from .construct import SearchConfig, construct_thm1, construct_thm2, search_avoider, verify_avoids
from .errors import (
    BudgetExceededError,
    DivisibilityError,
    DomainMismatchError,
    EmptySetError,
    InvalidGroupError,
    NotCosetUnionError,
    ParseError,
    SearchExhaustedError,
)
from .exact import DEFAULT_BUDGET_MS, ExactResult, exact_N
from .groups import Group, GroupSubset, stabilizer, subgroup_generated

__all__ = ["main", "run", "parse_group", "format_group", "parse_set"]

_GROUP_RE = re.compile(r"^[Zz]\d+(?:[xX][Zz]\d+)*$")
_COSETS_RE = re.compile(
    r"^cosets\(\s*order\s*=\s*(\d+)\s*;\s*reps\s*=\s*([0-9,\s]+)\)$", re.IGNORECASE
)

BOUND_KEYS = ("thm1_lower", "lemma_lower", "thm2_lower", "upper")


# -- spec parsing -------------------------------------------------------------


def parse_group(text: str) -> Group:
    """Parse "Z2024" or "Z4xZ2" (case-insensitive, whitespace ignored)."""
    compact = "".join(text.split())
    if not _GROUP_RE.match(compact):
        raise ParseError(f"unrecognized group spec {text!r}")
    orders = [int(part[1:]) for part in re.split("[xX]", compact)]
    if any(m == 0 for m in orders):
        raise ParseError(f"group spec {text!r} has a zero-order factor")
    return Group(orders)


def format_group(group: Group) -> str:
    """Canonical display form; order-1 factors are dropped."""
    nontrivial = [m for m in group.orders if m > 1]
    if not nontrivial:
        return "Z1"
    return "x".join(f"Z{m}" for m in nontrivial)


def parse_set(text: str, group: Group) -> GroupSubset:
    """Parse an explicit element list or a cosets(...) union."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_explicit(stripped, group)
    if stripped.lower().startswith("cosets"):
        return _parse_cosets(stripped, group)
    raise ParseError(f"unrecognized set spec {text!r}")


def _parse_explicit(text: str, group: Group) -> GroupSubset:
    if not text.endswith("}"):
        raise ParseError(f"set spec {text!r} is missing the closing brace")
    body = text[1:-1].strip()
    if not body:
        return GroupSubset.empty(group)
    indices = []
    for item in _split_top_level(body):
        item = item.strip()
        if not item:
            raise ParseError(f"empty element in set spec {text!r}")
        if item.startswith("("):
            if not item.endswith(")"):
                raise ParseError(f"bad coordinate tuple {item!r}")
            try:
                coords = [int(p) for p in item[1:-1].split(",")]
            except ValueError:
                raise ParseError(f"bad coordinate tuple {item!r}") from None
            indices.append(group.flat_index(coords))
        else:
            try:
                flat = int(item)
            except ValueError:
                raise ParseError(f"bad element {item!r} in set spec") from None
            group.check_element(flat)
            indices.append(flat)
    return GroupSubset.from_indices(group, indices)


def _split_top_level(body: str) -> list[str]:
    items, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {body!r}")
        elif ch == "," and depth == 0:
            items.append(body[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {body!r}")
    items.append(body[start:])
    return items


def _parse_cosets(text: str, group: Group) -> GroupSubset:
    match = _COSETS_RE.match(text)
    if not match:
        raise ParseError(f"unrecognized coset spec {text!r}")
    nontrivial = [(i, m) for i, m in enumerate(group.orders) if m > 1]
    if len(nontrivial) > 1:
        raise ParseError("cosets(...) specs are only defined for cyclic groups")
    order = int(match.group(1))
    reps = [int(p) for p in match.group(2).split(",") if p.strip()]
    if not reps:
        raise ParseError(f"coset spec {text!r} lists no representatives")
    if order < 1 or group.size % order != 0:
        raise ParseError(f"subgroup order {order} does not divide the group order {group.size}")
    if group.size == 1:
        generator = 0
    else:
        axis, factor = nontrivial[0]
        generator = ((group.size // order) % factor) * group.strides[axis]
    sub = subgroup_generated(group, [generator])
    coset = GroupSubset(group, sub.bits)
    bits = 0
    for r in reps:
        group.check_element(r)
        bits |= coset.translate(r).bits
    return GroupSubset(group, bits)


# -- document building --------------------------------------------------------


def _group_doc(group: Group) -> dict:
    return {"orders": list(group.orders), "size": group.size}


def _subset_doc(subset: GroupSubset) -> dict:
    return {"elements": subset.indices(), "size": subset.size}


def _meta_doc(seed: Optional[int]) -> dict:
    return {"seed": seed, "version": __version__}


def _bounds_doc(report: BoundsReport) -> dict:
    return {
        "thm1_lower": report.thm1_lower,
        "lemma_lower": report.lemma_lower,
        "thm2_lower": report.thm2_lower,
        "upper": report.upper,
        "best_lower": report.best_lower,
    }


def _coincide(report: BoundsReport) -> list[list[str]]:
    """Names of bounds sharing a value, grouped, in canonical bound order."""
    by_value: dict[int, list[str]] = {}
    for key in BOUND_KEYS:
        by_value.setdefault(getattr(report, key), []).append(key)
    return [names for _, names in sorted(by_value.items()) if len(names) > 1]


def _legend(group: Group) -> str:
    terms = " + ".join(f"{stride}*c{i}" for i, stride in enumerate(group.strides))
    ranges = ", ".join(f"c{i} < {m}" for i, m in enumerate(group.orders))
    return f"flat = {terms} ({ranges})"


def _set_text(subset: GroupSubset) -> str:
    return "{" + ", ".join(map(str, subset.indices())) + "}"


# -- commands -----------------------------------------------------------------


def _cmd_bounds(args: argparse.Namespace) -> int:
    group = parse_group(args.group)
    subset = parse_set(args.set, group)
    report = bounds_report(subset)
    sub = stabilizer(subset)
    doc = {
        "group": _group_doc(group),
        "set": _subset_doc(subset),
        "stabilizer": {"elements": sub.indices(), "order": sub.order},
        "transversal_size": report.transversal_size,
        "bounds": _bounds_doc(report),
        "coincide": _coincide(report),
        "meta": _meta_doc(None),
    }

    def text(doc: dict) -> list[str]:
        lines = [
            f"group: {format_group(group)} (order {group.size})",
            f"legend: {_legend(group)}",
            f"set: {_set_text(subset)} (size {subset.size})",
            f"stabilizer: {_set_text(sub)} (order {sub.order})",
            f"transversal size: {report.transversal_size}",
        ]
        lines += [f"{key}: {getattr(report, key)}" for key in BOUND_KEYS]
        lines.append(f"best_lower: {report.best_lower}")
        groups = doc["coincide"]
        lines.append("coincide: " + ("; ".join("=".join(g) for g in groups) if groups else "none"))
        return lines

    _emit(args, doc, text)
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    group = parse_group(args.group)
    subset = parse_set(args.set, group)
    report = bounds_report(subset)
    sub = stabilizer(subset)
    doc = {
        "group": _group_doc(group),
        "set": _subset_doc(subset),
        "stabilizer": {"elements": sub.indices(), "order": sub.order},
        "bounds": _bounds_doc(report),
        "meta": _meta_doc(None),
    }

    def text(doc: dict) -> list[str]:
        lines = [
            f"group: {format_group(group)} (order {group.size})",
            f"legend: {_legend(group)}",
            f"set: {_set_text(subset)} (size {subset.size})",
            f"stabilizer: {_set_text(sub)} (order {sub.order})",
            "bounds: " + " ".join(f"{k}={doc['bounds'][k]}" for k in BOUND_KEYS),
        ]
        if "exact" in doc:
            ex = doc["exact"]
            lines += [
                f"N: {ex['n']}",
                f"method: {ex['method']}",
                f"avoider: {{{', '.join(map(str, ex['avoider']))}}} (size {len(ex['avoider'])})",
                f"hitting_set: {{{', '.join(map(str, ex['hitting_set']))}}} (size {len(ex['hitting_set'])})",
                f"nodes: {ex['nodes']}",
            ]
        return lines

    started = time.monotonic()
    if report.s == report.h:
        # The pattern is a single coset of its stabilizer, where the bounds
        # close: N = (s-1)/s * g + 1 exactly, no search needed.
        cert = construct_thm1(subset)
        result = ExactResult(
            n_value=upper_bound(report.group_size, report.s),
            max_avoider=cert.avoiding_set,
            min_hitting_set=cert.avoiding_set.complement(),
            optimal=True,
            nodes=0,
        )
        method = "corollary"
    else:
        try:
            result = exact_N(subset, budget_ms=args.budget_ms)
        except BudgetExceededError as exc:
            _emit(args, doc, text)
            print(f"error: {exc}", file=sys.stderr)
            return 3
        method = "hitting-set"
    doc["exact"] = {
        "n": result.n_value,
        "method": method,
        "avoider": result.max_avoider.indices(),
        "hitting_set": result.min_hitting_set.indices(),
        "nodes": result.nodes,
    }
    _emit(args, doc, text)
    print(f"solve time: {(time.monotonic() - started) * 1000:.1f} ms", file=sys.stderr)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    group = parse_group(args.group)
    subset = parse_set(args.set, group)
    config = SearchConfig(seed=args.seed)
    if args.method == "thm1":
        if args.target is not None:
            raise ParseError("--target only applies to --method search")
        cert = construct_thm1(subset)
    elif args.method == "thm2":
        if args.target is not None:
            raise ParseError("--target only applies to --method search")
        cert = construct_thm2(subset, config)
    else:
        if args.target is None:
            raise ParseError("--method search requires --target")
        cert = search_avoider(subset, args.target, config)
    doc = {
        "group": _group_doc(group),
        "set": _subset_doc(subset),
        "certificate": {
            "method": args.method,
            "elements": cert.avoiding_set.indices(),
            "size": cert.size,
            "verified": cert.verified,
            "witness": cert.witness,
        },
        "meta": _meta_doc(args.seed),
    }

    def text(doc: dict) -> list[str]:
        cd = doc["certificate"]
        return [
            f"group: {format_group(group)} (order {group.size})",
            f"legend: {_legend(group)}",
            f"set: {_set_text(subset)} (size {subset.size})",
            f"method: {cd['method']}",
            f"avoider: {{{', '.join(map(str, cd['elements']))}}} (size {cd['size']})",
            f"verified: {str(cd['verified']).lower()}",
        ]

    _emit(args, doc, text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    group = parse_group(args.group)
    subset = parse_set(args.set, group)
    candidate = parse_set(args.candidate, group)
    cert = verify_avoids(candidate, subset)
    doc = {
        "group": _group_doc(group),
        "set": _subset_doc(subset),
        "candidate": _subset_doc(candidate),
        "verified": cert.verified,
        "witness": cert.witness,
        "meta": _meta_doc(None),
    }

    def text(doc: dict) -> list[str]:
        lines = [
            f"group: {format_group(group)} (order {group.size})",
            f"legend: {_legend(group)}",
            f"set: {_set_text(subset)} (size {subset.size})",
            f"candidate: {_set_text(candidate)} (size {candidate.size})",
            f"verified: {str(cert.verified).lower()}",
        ]
        if cert.witness is not None:
            lines.append(f"witness: {cert.witness}")
            lines.append(f"contained translate: {_set_text(subset.translate(cert.witness))}")
        return lines

    _emit(args, doc, text)
    return 0 if cert.verified else 2


def _table_rows() -> tuple[Group, list[dict]]:
    group = Group([2024])
    sub = subgroup_generated(group, [group.size // 8])
    coset = GroupSubset(group, sub.bits)
    rows = []
    for n in range(1, 11):
        bits = 0
        for rep in range(n):
            bits |= coset.translate(rep).bits
        report = bounds_report(GroupSubset(group, bits))
        rows.append(
            {
                "n": n,
                "s": report.s,
                "h": report.h,
                "thm2_lower": report.thm2_lower,
                "upper": report.upper,
                "exact": report.exact_value,
            }
        )
    return group, rows


def _cmd_table(args: argparse.Namespace) -> int:
    group, rows = _table_rows()
    doc = {"group": _group_doc(group), "table": rows, "meta": _meta_doc(None)}

    def text(doc: dict) -> list[str]:
        lines = []
        for row in doc["table"]:
            if row["exact"] is not None:
                lines.append(f"n={row['n']}: ={row['exact']}")
            else:
                lines.append(f"n={row['n']}: [{row['thm2_lower']}, {row['upper']}]")
        return lines

    def as_csv(doc: dict) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "s", "h", "thm2_lower", "upper", "exact"])
        for row in doc["table"]:
            exact = "" if row["exact"] is None else row["exact"]
            writer.writerow([row["n"], row["s"], row["h"], row["thm2_lower"], row["upper"], exact])
        return out.getvalue()

    _emit(args, doc, text, as_csv)
    return 0


# -- plumbing -----------------------------------------------------------------


def _emit(args: argparse.Namespace, doc: dict, text_fn, csv_fn=None) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        if csv_fn is None:
            raise ParseError("csv format is only available for the table command")
        sys.stdout.write(csv_fn(doc))
    else:
        print("\n".join(text_fn(doc)))


def _seed_type(value: str) -> int:
    try:
        seed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed {value!r} is not an integer") from None
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"seed {value!r} does not fit in 64 bits")
    return seed


def _positive_type(name: str):
    def convert(value: str) -> int:
        try:
            number = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} {value!r} is not an integer") from None
        if number < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {value!r}")
        return number

    return convert


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=_seed_type, default=0, help="seed for randomized search")
    common.add_argument(
        "--threads",
        type=_positive_type("threads"),
        default=None,
        help="solver threads (reserved; exploration is sequential and deterministic); "
        "defaults to SHIFTFREE_THREADS or 1",
    )
    common.add_argument(
        "--budget-ms",
        type=_positive_type("budget"),
        default=DEFAULT_BUDGET_MS,
        help="wall-clock budget for the exact solver in milliseconds",
    )

    parser = _Parser(prog="shiftfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="all four bounds for a pattern")
    p.add_argument("group")
    p.add_argument("set")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("exact", parents=[common], help="exact N by hitting-set solve")
    p.add_argument("group")
    p.add_argument("set")
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("construct", parents=[common], help="build a certified avoiding set")
    p.add_argument("group")
    p.add_argument("set")
    p.add_argument("--method", choices=("thm1", "thm2", "search"), default="thm2")
    p.add_argument("--target", type=int, default=None, help="avoider size for --method search")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a candidate avoiding set")
    p.add_argument("group")
    p.add_argument("set")
    p.add_argument("candidate")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", parents=[common], help="bounds table for Z2024 coset unions")
    p.set_defaults(handler=_cmd_table)

    return parser


def _resolve_threads(args: argparse.Namespace) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("SHIFTFREE_THREADS")
    if env is None:
        return 1
    try:
        threads = int(env)
    except ValueError:
        raise ParseError(f"SHIFTFREE_THREADS value {env!r} is not an integer") from None
    if threads < 1:
        raise ParseError(f"SHIFTFREE_THREADS must be >= 1, got {env!r}")
    return threads


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        args.threads = _resolve_threads(args)
        return args.handler(args)
    except (
        ParseError,
        InvalidGroupError,
        DomainMismatchError,
        EmptySetError,
        NotCosetUnionError,
        DivisibilityError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SearchExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
