"""Command-line front end.

Exit codes: 0 success, 2 domain error, 3 node budget refused,
4 verification disagreement.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Dict, List, Optional

from . import counting, genfun, polyhypercube
from .errors import BudgetExceeded, DomainError

log = logging.getLogger("polyplateau")

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4

METHODS = ("closed", "conv", "oracle", "enum")


def _budget(args) -> int:
    value = getattr(args, "budget", None)
    return polyhypercube.default_budget() if value is None else value


def count_with(method: str, d: int, k: int, n: int, budget: int) -> int:
    if method == "closed":
        return counting.count_dpp_closed(d, k, n)
    if method == "conv":
        return counting.count_dpp_convolution(d, k, n)
    if method == "oracle":
        return polyhypercube.oracle_count_dpp(d, k, n, budget=budget)
    if method == "enum":
        _guard_enumeration(d, k, n, budget)
        return len(polyhypercube.enumerate_dpp(d, k, n))
    raise DomainError(f"unknown method {method!r}")


def _guard_enumeration(d: int, k: int, n: int, budget: int) -> None:
    if counting.count_dpp_closed(d, k, n) > budget:
        raise BudgetExceeded(budget, "enumeration")


def cmd_count(args, out) -> int:
    value = count_with(args.method, args.d, args.k, args.n, _budget(args))
    print(value, file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    table = counting.build_table(args.d, args.kmax, args.nmax)
    if args.format == "csv":
        out.write(table.to_csv())
    else:
        print(table.to_json(), file=out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.which == "fixed":
        if args.k is None:
            raise DomainError("--which fixed needs -k")
        f = genfun.gf_fixed_width(args.d, args.k)
    else:
        f = genfun.gf_total(args.d)
    prefix = genfun.series_expand(f, args.order)
    if args.format == "json":
        k = args.k if args.which == "fixed" else None
        print(prefix.to_json(args.d, k), file=out)
    else:
        print(prefix.to_text(), file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    _guard_enumeration(args.d, args.k, args.n, _budget(args))
    objects = polyhypercube.enumerate_dpp(args.d, args.k, args.n)
    for P in objects:
        if args.cells:
            cells = polyhypercube.rasterize_dpp(P)
            print(json.dumps(polyhypercube.cells_to_dict(cells), separators=(",", ":")), file=out)
        else:
            print(P.to_json(), file=out)
    print(json.dumps({"count": len(objects)}), file=out)
    return EXIT_OK


def verify_grid(
    dmax: int = 5,
    kmax: int = 3,
    nmax: int = 12,
    oracle_dmax: int = 4,
    oracle_nmax: int = 8,
    budget: Optional[int] = None,
    self_test: bool = False,
) -> dict:
    """Cross-check every counting route over a grid of ``(d, k, n)`` cells.

    The report's cells carry the values from each route (decimal strings) and
    an ``agree`` flag.  ``self_test`` corrupts one closed-form value so the
    harness can prove it notices.
    """
    budget = polyhypercube.default_budget() if budget is None else budget
    cells: List[dict] = []
    injected = False
    for d in range(3, dmax + 1):
        for k in range(1, kmax + 1):
            series = genfun.series_expand(genfun.gf_fixed_width(d, k), nmax)
            oracle: Dict[int, set] = {}
            use_oracle = d <= oracle_dmax
            if use_oracle:
                oracle = polyhypercube.oracle_enumerate_dpp(d, k, oracle_nmax, budget=budget)
            for n in range(nmax + 1):
                values = {}
                if use_oracle and n <= oracle_nmax:
                    values["oracle"] = len(oracle.get(n, ()))
                if counting.count_dpp_closed(d, k, n) <= budget:
                    values["enumerator"] = len(polyhypercube.enumerate_dpp(d, k, n))
                values["convolution"] = counting.count_dpp_convolution(d, k, n)
                values["closed_form"] = counting.count_dpp_closed(d, k, n)
                values["gf_coefficient"] = series[n]
                if self_test and not injected:
                    values["closed_form"] += 1
                    injected = True
                cells.append(
                    {
                        "d": d,
                        "k": k,
                        "n": n,
                        "values": {name: str(v) for name, v in values.items()},
                        "agree": len(set(values.values())) == 1,
                    }
                )
    failed = sum(not c["agree"] for c in cells)
    return {
        "grid": {
            "d": [3, dmax],
            "k": [1, kmax],
            "n": [0, nmax],
            "oracle": {"d": [3, oracle_dmax], "n": [0, oracle_nmax], "budget": budget},
        },
        "cells": cells,
        "summary": {"cells": len(cells), "passed": len(cells) - failed, "failed": failed},
    }


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    report = verify_grid(
        dmax=args.dmax,
        kmax=args.kmax,
        nmax=args.nmax,
        oracle_dmax=args.oracle_dmax,
        oracle_nmax=args.oracle_nmax,
        budget=_budget(args),
        self_test=args.self_test,
    )
    elapsed = time.perf_counter() - start
    if args.timing:
        report["summary"]["wall_time_s"] = round(elapsed, 3)
    log.info("verified %d cells in %.2fs", report["summary"]["cells"], elapsed)
    print(json.dumps(report, indent=1 if args.pretty else None), file=out)
    return EXIT_DISAGREE if report["summary"]["failed"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyplateau",
        description="Count and enumerate directed plateau polyhypercubes by width and lateral area.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flag(p, name="--budget"):
        p.add_argument(
            name,
            dest="budget",
            type=int,
            default=None,
            help=f"node budget for exhaustive searches (default: ${polyhypercube.BUDGET_ENV} or "
            f"{polyhypercube.DEFAULT_BUDGET})",
        )

    p = sub.add_parser("count", help="exact count for one (d, k, n)")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="closed")
    budget_flag(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="counts for k = 1..kmax, n = 0..nmax")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--which", choices=("fixed", "total"), default="total")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", help="dump every object, one JSON line each")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--cells", action="store_true", help="emit rasterized cells instead of strata")
    budget_flag(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check all counting routes over a grid")
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--oracle-dmax", type=int, default=4)
    p.add_argument("--oracle-nmax", type=int, default=8)
    budget_flag(p, "--oracle-budget")
    p.add_argument("--self-test", action="store_true", help="inject one wrong value")
    p.add_argument("--timing", action="store_true", help="add wall time to the report")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
