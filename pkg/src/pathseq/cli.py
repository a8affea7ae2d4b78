"""Command-line interface.

Commands: invariant, profile, census, verify, reconstruct, distinguish,
check-conditions, survey. Inputs are edge-list files (--graph) or JSON spec
files (--starlike, --generalized). Output is JSON by default, CSV with
--format csv; both carry identical numeric values. Exit codes: 0 success,
1 domain error (with a machine-readable error object), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import tempfile

from .errors import PathseqError
from .generalized import (
    GenStarlikeSpec,
    generalized_census,
    generalized_invariant,
    generalized_profile,
    load_generalized_spec,
    realize_generalized,
)
from .graph import (
    DEFAULT_BUDGET,
    Graph,
    load_edge_list,
    longest_path_length,
    path_census,
)
from .invariants import (
    evaluate_invariant,
    invariant_profile,
    resolve_index,
    validate_symmetry,
)
from .reconstruct import (
    check_generalized_conditions,
    check_starlike_conditions,
    distinguish,
    reconstruct_generalized,
    reconstruct_starlike,
    survey_distinguishability,
)
from .starlike import (
    StarlikeSpec,
    load_starlike_spec,
    realize_starlike,
    starlike_census,
    starlike_invariant,
    starlike_profile,
)


class UsageError(Exception):
    pass


def _load_inputs(args) -> list[Graph | StarlikeSpec | GenStarlikeSpec]:
    items = []
    for path in args.graph or []:
        items.append(load_edge_list(path))
    for path in args.starlike or []:
        items.append(load_starlike_spec(path))
    for path in args.generalized or []:
        # a clique of 2 normalizes to a plain starlike spec
        items.append(load_generalized_spec(path))
    return items


def _single_input(args):
    items = _load_inputs(args)
    if len(items) != 1:
        raise UsageError("exactly one of --graph/--starlike/--generalized is required")
    return items[0]


def _rho(obj, budget: int) -> int:
    if isinstance(obj, Graph):
        return longest_path_length(obj, budget)
    return obj.longest_path_length


def _census(obj, order: int, budget: int):
    if isinstance(obj, Graph):
        return path_census(obj, order, budget)
    if order < 2:
        # closed forms start at order 2; low orders enumerate the realization
        g = realize_starlike(obj) if isinstance(obj, StarlikeSpec) else realize_generalized(obj)
        return path_census(g, order, budget)
    if isinstance(obj, StarlikeSpec):
        return starlike_census(obj, order)
    return generalized_census(obj, order)


def _invariant(obj, order: int, f, budget: int) -> float:
    if isinstance(obj, Graph):
        return evaluate_invariant(obj, order, f, budget)
    if isinstance(obj, StarlikeSpec):
        return starlike_invariant(obj, order, f)
    return generalized_invariant(obj, order, f)


def _profile(obj, f, max_order: int, budget: int) -> list[float]:
    if isinstance(obj, Graph):
        return invariant_profile(obj, f, max_order, budget)
    if isinstance(obj, StarlikeSpec):
        return starlike_profile(obj, f, max_order)
    return generalized_profile(obj, f, max_order)


def _index(args):
    f = resolve_index(args.index)
    if args.seed is not None:
        validate_symmetry(f, random.Random(args.seed))
    return f


def _cmd_invariant(args) -> dict:
    obj = _single_input(args)
    f = _index(args)
    return {"h": args.order, "value": _invariant(obj, args.order, f, args.budget)}


def _cmd_profile(args) -> dict:
    obj = _single_input(args)
    f = _index(args)
    rho = _rho(obj, args.budget)
    h_max = rho if args.max_order is None else min(args.max_order, rho)
    return {
        "index": f.name,
        "longest_path_length": rho,
        "h_max": h_max,
        "values": _profile(obj, f, h_max, args.budget),
    }


def _cmd_census(args) -> dict:
    obj = _single_input(args)
    census = _census(obj, args.order, args.budget)
    classes = [
        {"degrees": list(seq), "count": count}
        for seq, count in sorted(census.entries.items())
    ]
    return {"h": args.order, "total": census.total, "classes": classes}


def _cmd_verify(args) -> dict:
    obj = _single_input(args)
    if isinstance(obj, Graph):
        raise UsageError("verify compares a spec's closed form; pass --starlike or --generalized")
    f = _index(args)
    rho = obj.longest_path_length
    h_max = rho if args.max_order is None else args.max_order
    g = realize_starlike(obj) if isinstance(obj, StarlikeSpec) else realize_generalized(obj)
    brute = invariant_profile(g, f, h_max, args.budget)
    closed = _profile(obj, f, h_max, args.budget)
    abs_diffs = [abs(a - b) for a, b in zip(brute, closed)]
    rel_diffs = [d / max(1.0, abs(a), abs(b)) for d, a, b in zip(abs_diffs, brute, closed)]
    ok = all(d <= args.tol for d in rel_diffs)
    return {
        "index": f.name,
        "h_max": h_max,
        "longest_path_length": rho,
        "max_abs_diff": max(abs_diffs),
        "max_rel_diff": max(rel_diffs),
        "status": "ok" if ok else "mismatch",
    }


def _cmd_reconstruct(args) -> dict:
    obj = _single_input(args)
    f = _index(args)
    if isinstance(obj, Graph):
        rho = longest_path_length(obj, args.budget)
        profile = invariant_profile(obj, f, rho, args.budget)
        if obj.edge_count == obj.vertex_count - 1:
            result = reconstruct_starlike(obj.vertex_count, profile, f, args.tol)
        else:
            result = reconstruct_generalized(
                obj.vertex_count, max(obj.degrees), profile, f, args.tol
            )
    elif isinstance(obj, StarlikeSpec):
        profile = starlike_profile(obj, f, obj.longest_path_length)
        result = reconstruct_starlike(obj.vertex_count, profile, f, args.tol)
    else:
        profile = generalized_profile(obj, f, obj.longest_path_length)
        result = reconstruct_generalized(
            obj.vertex_count, obj.max_degree, profile, f, args.tol
        )
    return {"index": f.name, **result.to_dict()}


def _cmd_distinguish(args) -> dict:
    items = _load_inputs(args)
    if len(items) != 2:
        raise UsageError("distinguish needs exactly two spec inputs")
    a, b = items
    if isinstance(a, Graph) or isinstance(b, Graph):
        raise UsageError("distinguish compares specs; pass --starlike or --generalized twice")
    f = _index(args)
    order = distinguish(a, b, f, args.tol)
    h_max = max(a.longest_path_length, b.longest_path_length)
    return {
        "index": f.name,
        "n": a.vertex_count,
        "separating_order": order,
        "indistinguishable": order is None,
        "orders_compared": h_max + 1,
    }


def _cmd_check_conditions(args) -> dict:
    f = _index(args)
    if args.theorem == 7:
        report = check_starlike_conditions(f, args.x_max, args.t_max, args.tol)
    else:
        report = check_generalized_conditions(f, args.x_max, args.t_max, args.tol)
    return {"index": f.name, "theorem": args.theorem, **report.to_dict()}


def _cmd_survey(args) -> dict:
    f = _index(args)
    if args.family == "generalized" and args.max_degree is None:
        raise UsageError("generalized survey needs --max-degree")
    report = survey_distinguishability(
        args.size, f, family=args.family, max_degree=args.max_degree, tol=args.tol
    )
    return report.to_dict()


def _cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (int, str)) or value is None:
        return str(value)
    return json.dumps(value, separators=(",", ":"))


def _to_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "classes" in doc:
        for key, value in doc.items():
            if key != "classes":
                writer.writerow([key, _cell(value)])
        writer.writerow(["degrees", "count"])
        for cls in doc["classes"]:
            writer.writerow([" ".join(map(str, cls["degrees"])), _cell(cls["count"])])
    elif "values" in doc:
        for key, value in doc.items():
            if key != "values":
                writer.writerow([key, _cell(value)])
        writer.writerow(["h", "value"])
        for h, value in enumerate(doc["values"]):
            writer.writerow([h, _cell(value)])
    else:
        for key, value in doc.items():
            writer.writerow([key, _cell(value)])
    return buf.getvalue()


def _emit(doc: dict, args) -> None:
    if args.format == "csv":
        text = _to_csv(doc)
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        directory = os.path.dirname(os.path.abspath(args.output))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pathseq-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, args.output)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathseq",
        description="Path degree-sequence censuses, closed-form invariants and reconstruction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, index_required=True):
        p.add_argument("--index", required=index_required, help="index function, e.g. connectivity or power:0.5")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--seed", type=int, default=None, help="seed for randomized symmetry validation")
        p.add_argument("--output", default=None, help="write the report atomically to this file")

    def inputs(p):
        p.add_argument("--graph", action="append", help="edge-list file")
        p.add_argument("--starlike", action="append", help="starlike spec JSON file")
        p.add_argument("--generalized", action="append", help="coalesced spec JSON file")

    p = sub.add_parser("invariant", help="one invariant value")
    inputs(p)
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=_cmd_invariant)

    p = sub.add_parser("profile", help="invariant values for all orders")
    inputs(p)
    common(p)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("census", help="degree-sequence census at one order")
    inputs(p)
    common(p, index_required=False)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("verify", help="closed form against enumeration")
    inputs(p)
    common(p)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("reconstruct", help="rebuild a spec from its profile")
    inputs(p)
    common(p)
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("distinguish", help="first order separating two specs")
    inputs(p)
    common(p)
    p.set_defaults(handler=_cmd_distinguish)

    p = sub.add_parser("check-conditions", help="scan index qualification inequalities")
    common(p)
    p.add_argument("--theorem", type=int, choices=(7, 8), required=True)
    p.add_argument("--x-max", type=int, default=64)
    p.add_argument("--t-max", type=int, default=32)
    p.set_defaults(handler=_cmd_check_conditions)

    p = sub.add_parser("survey", help="all-pairs distinguishability in a family")
    common(p)
    p.add_argument("--family", choices=("starlike", "generalized"), default="starlike")
    p.add_argument("--size", type=int, required=True, help="vertex count n")
    p.add_argument("--max-degree", type=int, default=None, help="hub degree r (generalized)")
    p.set_defaults(handler=_cmd_survey)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PathseqError as exc:
        error = {"error": {"type": type(exc).__name__.removesuffix("Error"), "message": str(exc)}}
        _emit(error, args)
        return 1
    except OSError as exc:
        _emit({"error": {"type": "IO", "message": str(exc)}}, args)
        return 1
    _emit(doc, args)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
