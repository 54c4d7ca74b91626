"""Command line front end.

Every subcommand wraps exactly one library call.  Exit codes: 0 for a
definite result, 2 for an inconclusive one (a budget ran out before the
search could settle), 1 for usage or parse errors.  Results go to stdout,
diagnostics to stderr.  JSON output is pretty-printed with sorted keys;
words are comma-separated naturals and the empty word is the empty string.
"""

from __future__ import annotations

import argparse
import json
import sys

from .anticomplex import decide_anticomplex, escape_index, non_interior_witness, trapping_order
from .classes import EffectiveClass
from .complexity import class_functions, class_points, complexity_profile, prefix_complexity
from .cover import (
    CoverBudgets,
    cover_from_json,
    cover_to_json,
    enumerate_cover,
    semidecide_from_cover,
    verify_cover_truncation,
)
from .ec import make_ec
from .orders import load_order
from .outcomes import (
    Accept,
    ArityError,
    BudgetExhausted,
    CeclabError,
    ExceedsBound,
    NotCapable,
    ParseError,
    SearchExhausted,
    WitnessNotFound,
)
from .pr import evaluate as pr_evaluate
from .pr import make_pr, parse as pr_parse, pr_enumerate, render
from .topology import cylinder_acceptor, oracle_semidecide
from .words import format_word, parse_word

_USAGE_ERROR = 1
_INCONCLUSIVE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract reserves 2 for inconclusive
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _get_class(class_id: str) -> EffectiveClass:
    if class_id == "ec":
        return make_ec()
    if class_id == "pr":
        return make_pr()
    raise _UsageError(f"unknown class id {class_id!r} (expected 'ec' or 'pr')")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _load_property(path: str) -> list[tuple[int, ...]]:
    with open(path) as fh:
        data = json.load(fh)
    return [tuple(c) for c in data["cylinders"]]


def _parse_args_list(text: str) -> tuple[int, ...]:
    return parse_word(text)


def _build_parser() -> _Parser:
    top = _Parser(prog="ceclab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser("class", help="direct class access")
    class_sub = p_class.add_subparsers(dest="class_command", required=True)
    p_ce = class_sub.add_parser("eval", help="evaluate f_i(n)")
    p_ce.add_argument("--class", dest="class_id", required=True)
    p_ce.add_argument("--index", type=int, required=True)
    p_ce.add_argument("--input", type=int, required=True)

    p_pr = sub.add_parser("pr", help="primitive recursive terms")
    pr_sub = p_pr.add_subparsers(dest="pr_command", required=True)
    p_pp = pr_sub.add_parser("parse", help="parse and reprint a term")
    p_pp.add_argument("--term", required=True)
    p_pe = pr_sub.add_parser("eval", help="evaluate a term")
    p_pe.add_argument("--term", required=True)
    p_pe.add_argument("--args", required=True)
    p_pe.add_argument("--fuel", type=int, default=10**6)
    p_pn = pr_sub.add_parser("enum", help="enumerate terms")
    group = p_pn.add_mutually_exclusive_group(required=True)
    group.add_argument("--index", type=int)
    group.add_argument("--count", type=int)

    p_kc = sub.add_parser("kc", help="prefix complexity of a word")
    p_kc.add_argument("--class", dest="class_id", required=True)
    p_kc.add_argument("--word", required=True)
    p_kc.add_argument("--bound", type=int, required=True)

    p_prof = sub.add_parser("profile", help="complexity profile along prefixes")
    p_prof.add_argument("--class", dest="class_id", required=True)
    p_prof.add_argument("--index", type=int, required=True)
    p_prof.add_argument("--len", dest="n_max", type=int, required=True)
    p_prof.add_argument("--format", choices=("csv", "json"), default="json")

    p_pts = sub.add_parser("points", help="length-p words of complexity <= k")
    p_pts.add_argument("--class", dest="class_id", required=True)
    p_pts.add_argument("--k", type=int, required=True)
    p_pts.add_argument("--p", type=int, required=True)

    p_fun = sub.add_parser("functions", help="representatives of complexity <= k")
    p_fun.add_argument("--class", dest="class_id", required=True)
    p_fun.add_argument("--k", type=int, required=True)
    p_fun.add_argument("--horizon", type=int, default=64)

    p_anti = sub.add_parser("anticomplex", help="is f_i in the anticomplex set of an order")
    p_anti.add_argument("--class", dest="class_id", required=True)
    p_anti.add_argument("--index", type=int, required=True)
    p_anti.add_argument("--order", required=True)

    p_esc = sub.add_parser("escape", help="one-step escape from an anticomplex set")
    p_esc.add_argument("--class", dest="class_id", required=True)
    p_esc.add_argument("--word", required=True)
    p_esc.add_argument("--order", required=True)

    p_trap = sub.add_parser("trap", help="order trapping f_i on the boundary")
    p_trap.add_argument("--class", dest="class_id", required=True)
    p_trap.add_argument("--index", type=int, required=True)
    p_trap.add_argument("--depth", type=int, required=True)
    p_trap.add_argument("--witness", type=int, default=None)

    p_semi = sub.add_parser("semidecide", help="staged oracle semi-decision")
    p_semi.add_argument("--class", dest="class_id", required=True)
    p_semi.add_argument("--property", dest="property_path", required=True)
    p_semi.add_argument("--oracle-index", type=int, required=True)
    p_semi.add_argument("--k", type=int, required=True)
    p_semi.add_argument("--budget", type=int, required=True)

    p_cover = sub.add_parser("cover", help="cover synthesis and verification")
    cover_sub = p_cover.add_subparsers(dest="cover_command", required=True)
    p_cb = cover_sub.add_parser("build", help="synthesize and materialize a cover")
    p_cb.add_argument("--class", dest="class_id", required=True)
    p_cb.add_argument("--property", dest="property_path", required=True)
    p_cb.add_argument("--kmax", type=int, required=True)
    p_cb.add_argument("--out", required=True)
    p_cb.add_argument("--points", type=int, default=3)
    p_cb.add_argument("--max-components", type=int, default=64)
    p_cb.add_argument("--scan", type=int, default=1200)
    p_cb.add_argument("--cert-take", type=int, default=64)
    p_cb.add_argument("--level-cap", type=int, default=24)
    p_cv = cover_sub.add_parser("verify", help="replay a cover against ground truth")
    p_cv.add_argument("--cover", dest="cover_path", required=True)
    p_cv.add_argument("--index-bound", type=int, required=True)
    p_cv.add_argument("--property", dest="property_path", default=None)
    p_cv.add_argument("--probe-budget", type=int, default=None)
    return top


def _cmd_class(args) -> int:
    cls = _get_class(args.class_id)
    print(cls.evaluate(args.index, args.input))
    return 0


def _cmd_pr(args) -> int:
    if args.pr_command == "parse":
        print(render(pr_parse(args.term)))
        return 0
    if args.pr_command == "eval":
        term = pr_parse(args.term)
        values = _parse_args_list(args.args)
        print(pr_evaluate(term, values, fuel=args.fuel))
        return 0
    if args.index is not None:
        print(render(pr_enumerate(args.index)))
    else:
        for t in range(args.count):
            print(render(pr_enumerate(t)))
    return 0


def _cmd_kc(args) -> int:
    cls = _get_class(args.class_id)
    result = prefix_complexity(cls, parse_word(args.word), args.bound)
    if isinstance(result, ExceedsBound):
        print(f"exceeds {result.bound}")
        return _INCONCLUSIVE
    print(result)
    return 0


def _cmd_profile(args) -> int:
    cls = _get_class(args.class_id)
    profile = complexity_profile(cls, args.index, args.n_max)
    if args.format == "csv":
        print("n,kc")
        for n, value in enumerate(profile.values):
            print(f"{n},{value}")
    else:
        _emit_json({"index": profile.index, "values": list(profile.values)})
    return 0


def _cmd_points(args) -> int:
    cls = _get_class(args.class_id)
    _emit_json(sorted(list(w) for w in class_points(cls, args.k, args.p)))
    return 0


def _cmd_functions(args) -> int:
    cls = _get_class(args.class_id)
    result = class_functions(cls, args.k, horizon=args.horizon)
    _emit_json(
        {
            "indices": list(result.indices),
            "horizon_limited": result.horizon_limited,
            "horizon": result.horizon,
        }
    )
    return 0


def _cmd_anticomplex(args) -> int:
    cls = _get_class(args.class_id)
    order = load_order(args.order)
    print("true" if decide_anticomplex(cls, args.index, order) else "false")
    return 0


def _cmd_escape(args) -> int:
    cls = _get_class(args.class_id)
    order = load_order(args.order)
    print(escape_index(cls, parse_word(args.word), order))
    return 0


def _cmd_trap(args) -> int:
    cls = _get_class(args.class_id)
    trap = trapping_order(cls, args.index, args.depth)
    payload = trap.order.to_json()
    if args.witness is not None:
        witness = non_interior_witness(cls, trap, args.witness)
        _emit_json({"order": payload, "witness": list(witness)})
    else:
        _emit_json(payload)
    return 0


def _cmd_semidecide(args) -> int:
    cls = _get_class(args.class_id)
    cylinders = _load_property(args.property_path)
    acceptor = cylinder_acceptor(cls, cylinders)
    oracle = lambda n: cls.evaluate(args.oracle_index, n)  # noqa: E731
    verdict, run_info = oracle_semidecide(acceptor, cls, oracle, args.k, args.budget)
    if isinstance(verdict, Accept):
        _emit_json(
            {
                "verdict": "accept",
                "stage": verdict.at,
                "accepted": sorted(run_info.accepted),
                "rejected": sorted(run_info.rejected),
            }
        )
        return 0
    _emit_json({"verdict": "no-verdict", "budget": args.budget, "detail": verdict.detail})
    return _INCONCLUSIVE


def _cmd_cover_build(args) -> int:
    cls = _get_class(args.class_id)
    cylinders = _load_property(args.property_path)
    acceptor = cylinder_acceptor(cls, cylinders)
    budgets = CoverBudgets(
        kmax=args.kmax,
        open_scan=args.scan,
        cert_take=args.cert_take,
        max_points=max(args.points, 1),
        max_components=args.max_components,
        level_cap=args.level_cap,
    )
    components = list(enumerate_cover(cls, acceptor, budgets))
    truncated = 0
    for comp in components:
        if not comp.ensure_points(args.points):
            truncated += 1
    payload = cover_to_json(cls, components)
    payload["property"] = {"cylinders": [list(c) for c in cylinders]}
    with open(args.out, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(components)} components to {args.out}")
    if truncated:
        print(f"{truncated} components hit a synthesis budget", file=sys.stderr)
    return 0


def _cmd_cover_verify(args) -> int:
    with open(args.cover_path) as fh:
        data = json.load(fh)
    class_id, components = cover_from_json(data)
    cls = _get_class(class_id)
    if args.property_path is not None:
        cylinders = _load_property(args.property_path)
    elif "property" in data:
        cylinders = [tuple(c) for c in data["property"]["cylinders"]]
    else:
        raise _UsageError("ground truth needed: embed 'property' in the cover or pass --property")
    report = verify_cover_truncation(
        cls, cylinders, components, args.index_bound, args.probe_budget
    )
    _emit_json(report.as_dict())
    return 0 if not report.inconclusive else _INCONCLUSIVE


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "class":
            return _cmd_class(args)
        if args.command == "pr":
            return _cmd_pr(args)
        if args.command == "kc":
            return _cmd_kc(args)
        if args.command == "profile":
            return _cmd_profile(args)
        if args.command == "points":
            return _cmd_points(args)
        if args.command == "functions":
            return _cmd_functions(args)
        if args.command == "anticomplex":
            return _cmd_anticomplex(args)
        if args.command == "escape":
            return _cmd_escape(args)
        if args.command == "trap":
            return _cmd_trap(args)
        if args.command == "semidecide":
            return _cmd_semidecide(args)
        if args.command == "cover":
            if args.cover_command == "build":
                return _cmd_cover_build(args)
            return _cmd_cover_verify(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return _USAGE_ERROR
    except (ParseError, ArityError, NotCapable) as err:
        print(f"error: {err}", file=sys.stderr)
        return _USAGE_ERROR
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return _USAGE_ERROR
    except (SearchExhausted, WitnessNotFound, BudgetExhausted) as err:
        print(f"inconclusive: {err}", file=sys.stderr)
        return _INCONCLUSIVE
    except CeclabError as err:
        print(f"error: {err}", file=sys.stderr)
        return _USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
