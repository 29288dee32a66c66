"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification failed (a
mathematical counterexample), 2 input or usage error, 3 internal engine
disagreement, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .depth import EngineDisagreement, betti_table, depth
from .sdepth import DEFAULT_NODE_BUDGET, INFINITY, BudgetExceeded, sdepth
from .stability import (
    analyze_stability,
    matroid_report,
    sequence,
    verify_colon_identity,
    verify_depth_comparison,
    verify_power_membership,
    verify_sdepth_comparison,
    verify_splitting_bound,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_BUDGET = 4


def _emit(data, fmt):
    if fmt == "json":
        print(json.dumps(data, indent=2))
    elif fmt == "table":
        _print_table(data)
    else:
        raise ValueError(f"unsupported format {fmt!r}")


def _print_table(data, indent=""):
    if isinstance(data, dict):
        width = max((len(str(k)) for k in data), default=0)
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _print_table(value, indent + "  ")
            else:
                print(f"{indent}{str(key).ljust(width)}  {value}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                _print_table(item, indent + "  ")
                print()
            else:
                print(f"{indent}{item}")
    else:
        print(f"{indent}{data}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symdepth",
        description="Exact depth, Stanley depth, and symbolic-power "
                    "stability checks for squarefree monomial ideals.",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; results are "
                             "identical for any value")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, budget=False):
        p.add_argument("--char", type=int, default=0,
                       help="coefficient field characteristic (0 or a prime)")
        p.add_argument("--format", choices=("json", "table", "csv"),
                       default="json")
        if budget:
            p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                           help="node limit for the Stanley depth search")

    p = sub.add_parser("depth", help="depth of S/I")
    p.add_argument("ideal")
    p.add_argument("--engine", choices=("cross_check", "takayama", "betti"),
                   default="cross_check")
    add_common(p)

    p = sub.add_parser("betti", help="multigraded Betti numbers of S/I")
    p.add_argument("ideal")
    add_common(p)

    p = sub.add_parser("sdepth", help="Stanley depth of I or S/I")
    p.add_argument("ideal")
    p.add_argument("--kind", choices=("ideal", "quotient"), default="ideal")
    add_common(p, budget=True)

    p = sub.add_parser("symbolic-power", help="k-th symbolic power of I")
    p.add_argument("ideal")
    p.add_argument("-k", type=int, required=True)
    add_common(p)

    p = sub.add_parser("sequence", help="quantity along symbolic powers")
    p.add_argument("ideal")
    p.add_argument("--quantity",
                   choices=("depth", "sdepth_ideal", "sdepth_quotient"),
                   default="depth")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--engine", choices=("cross_check", "takayama", "betti"),
                   default="cross_check")
    add_common(p, budget=True)

    p = sub.add_parser("analyze", help="stability analysis of a sequence")
    p.add_argument("ideal")
    p.add_argument("--quantity",
                   choices=("depth", "sdepth_ideal", "sdepth_quotient"),
                   default="depth")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--engine", choices=("cross_check", "takayama", "betti"),
                   default="cross_check")
    add_common(p, budget=True)

    p = sub.add_parser("verify", help="check an inequality or identity")
    vsub = p.add_subparsers(dest="check", required=True)
    for name in ("depsym", "sdepsym", "power-lemma"):
        vp = vsub.add_parser(name)
        vp.add_argument("ideal")
        vp.add_argument("-m", type=int, required=True)
        vp.add_argument("-k", type=int, required=True)
        if name == "power-lemma":
            vp.add_argument("--samples", type=int, default=100)
            vp.add_argument("--seed", type=int, default=0)
        add_common(vp, budget=(name == "sdepsym"))
    vp = vsub.add_parser("colon-lemma")
    vp.add_argument("ideal")
    vp.add_argument("--kmax", type=int, required=True)
    add_common(vp)
    vp = vsub.add_parser("splitting-bound")
    vp.add_argument("ideal")
    vp.add_argument("--var", type=int, default=1, help="1-based variable index")
    add_common(vp, budget=True)

    p = sub.add_parser("matroid-report", help="per-power report for a matroid")
    p.add_argument("complex")
    p.add_argument("--kmax", type=int, required=True)
    add_common(p, budget=True)

    p = sub.add_parser("complex", help="simplicial complex utilities")
    csub = p.add_subparsers(dest="action", required=True)
    for name in ("check-matroid", "check-vd", "sr-ideal"):
        cp = csub.add_parser(name)
        cp.add_argument("complex")
        add_common(cp)

    return parser


def _run(args):
    fmt = getattr(args, "format", "json")

    if args.command == "depth":
        ideal = formats.load_ideal(args.ideal)
        witness = depth(ideal, args.engine, args.char)
        _emit(witness.to_dict(), fmt)
        return EXIT_OK

    if args.command == "betti":
        ideal = formats.load_ideal(args.ideal)
        table = betti_table(ideal, args.char)
        data = table.to_dict()
        data["total"] = {str(i): v for i, v in sorted(table.total().items())}
        data["projective_dimension"] = table.projective_dimension()
        _emit(data, fmt)
        return EXIT_OK

    if args.command == "sdepth":
        ideal = formats.load_ideal(args.ideal)
        result = sdepth(ideal, args.kind, args.budget)
        _emit(result.to_dict(), fmt)
        return EXIT_OK

    if args.command == "symbolic-power":
        ideal = formats.load_ideal(args.ideal)
        power = ideal.symbolic_power(args.k)
        data = formats.ideal_to_json(power)
        data["equals_ordinary_power"] = power == ideal.power(args.k)
        _emit(data, fmt)
        return EXIT_OK

    if args.command == "sequence":
        ideal = formats.load_ideal(args.ideal)
        report = sequence(ideal, args.quantity, args.kmax,
                          engine=args.engine, char=args.char,
                          node_budget=args.budget)
        if fmt == "csv":
            print("k,value,engine,char")
            for k, value in enumerate(report.values, start=1):
                shown = "infinity" if value == INFINITY else value
                print(f"{k},{shown},{report.engine},{report.char}")
        else:
            _emit(report.to_dict(), fmt)
        return EXIT_OK

    if args.command == "analyze":
        ideal = formats.load_ideal(args.ideal)
        report = analyze_stability(ideal, args.quantity, args.kmax,
                                   engine=args.engine, char=args.char,
                                   node_budget=args.budget)
        _emit(report.to_dict(), fmt)
        return EXIT_OK

    if args.command == "verify":
        ideal = formats.load_ideal(args.ideal)
        if args.check == "depsym":
            result = verify_depth_comparison(ideal, args.m, args.k,
                                             char=args.char)
        elif args.check == "sdepsym":
            result = verify_sdepth_comparison(ideal, args.m, args.k,
                                              node_budget=args.budget)
        elif args.check == "power-lemma":
            result = verify_power_membership(ideal, args.m, args.k,
                                             samples=args.samples,
                                             seed=args.seed)
        elif args.check == "colon-lemma":
            result = verify_colon_identity(ideal, args.kmax)
        else:
            result = verify_splitting_bound(ideal, args.var - 1,
                                            node_budget=args.budget)
        _emit(result.to_dict(), fmt)
        return EXIT_OK if result.passed else EXIT_VERIFY_FAIL

    if args.command == "matroid-report":
        delta = formats.load_complex(args.complex)
        report = matroid_report(delta, args.kmax, char=args.char,
                                node_budget=args.budget)
        _emit(report.to_dict(), fmt)
        return EXIT_OK if report.all_claims_hold else EXIT_VERIFY_FAIL

    if args.command == "complex":
        delta = formats.load_complex(args.complex)
        if args.action == "check-matroid":
            is_mat, witness = delta.is_matroid()
            data = {"matroid": is_mat}
            if witness is not None:
                data["witness"] = {
                    "F": [v + 1 for v in witness[0]],
                    "G": [v + 1 for v in witness[1]],
                }
            _emit(data, fmt)
        elif args.action == "check-vd":
            _emit({"vertex_decomposable": delta.is_vertex_decomposable()}, fmt)
        else:
            _emit(formats.ideal_to_json(delta.stanley_reisner_ideal()), fmt)
        return EXIT_OK

    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _run(args)
    except EngineDisagreement as exc:
        print(json.dumps({
            "error": "engine disagreement",
            "takayama": exc.witness_a.to_dict(),
            "betti": exc.witness_b.to_dict(),
        }), file=sys.stderr)
        return EXIT_INTERNAL
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
