"""Command line entry point.

Exit codes: 0 when every verdict is definitive (or a verify suite passes),
2 when any verdict is Inconclusive, 1 on operational errors or failed suites.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import DEFAULT_EFFORT
from .catalogue import FAMILY_ORDER, CatalogueError, Family, find_case
from .eliminator import Outcome, evaluate_case
from .polygon import PolygonKind
from .report import (
    FORMATS,
    CaseReport,
    SweepConfig,
    paper_crosscheck,
    parse_m_range,
    render_report,
    run_sweep,
    summarize,
)
from .verify import DEFAULT_LIMITS, SUITES, run_suite

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _families(text: str) -> tuple[Family, ...]:
    if text.strip().lower() == "all":
        return FAMILY_ORDER
    return tuple(Family.parse(part) for part in text.split(",") if part.strip())


def _kinds(text: str) -> tuple[PolygonKind, ...]:
    if text.strip().lower() in ("both", "all"):
        return tuple(PolygonKind)
    return tuple(PolygonKind.parse(part) for part in text.split(",") if part.strip())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polygon-elim",
        description="Exact verdicts for point-primitive Suzuki/Ree actions on "
        "generalised hexagons and octagons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="evaluate every case over a range of m")
    sw.add_argument("--family", default="all", help="sz,ree-small,ree-large or all")
    sw.add_argument("--m", default="3..13", help="odd range like 3..13, or a single m")
    sw.add_argument("--kind", default="both", help="hexagon,octagon or both")
    sw.add_argument("--format", default="json", choices=FORMATS)
    sw.add_argument("--factor-effort", type=int, default=DEFAULT_EFFORT,
                    help="Pollard-rho iteration budget per factorization")
    sw.add_argument("--out", default=None, help="write here instead of stdout")

    cs = sub.add_parser("case", help="evaluate one case")
    cs.add_argument("--family", required=True)
    cs.add_argument("--m", type=int, required=True)
    cs.add_argument("--case", required=True, help="label such as '(ii)', 'P1', '(iv)+'")
    cs.add_argument("--kind", required=True, choices=[k.value for k in PolygonKind])
    cs.add_argument("--factor-effort", type=int, default=DEFAULT_EFFORT)
    cs.add_argument("--trace", action="store_true", help="print the full evidence")

    vf = sub.add_parser("verify", help="run a brute-force oracle suite")
    vf.add_argument("--suite", required=True, choices=SUITES)
    vf.add_argument("--limit", type=int, default=None,
                    help="suite bound (defaults: " +
                    ", ".join(f"{k}={v}" for k, v in DEFAULT_LIMITS.items()) + ")")

    cc = sub.add_parser("crosscheck", help="printed index expressions vs exact quotients")
    cc.add_argument("--family", required=True)
    cc.add_argument("--m", type=int, required=True)
    return parser


def _cmd_sweep(args) -> int:
    config = SweepConfig(
        families=_families(args.family),
        m_values=tuple(parse_m_range(args.m)),
        kinds=_kinds(args.kind),
        factor_effort=args.factor_effort,
        format=args.format,
        out=args.out,
    )
    reports = run_sweep(config)
    data = render_report(reports, config.format)
    if config.out:
        with open(config.out, "wb") as fh:
            fh.write(data)
        summary = summarize(reports)
        print(" ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    if any(r.outcome == Outcome.INCONCLUSIVE.value for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_case(args) -> int:
    family = Family.parse(args.family)
    kind = PolygonKind.parse(args.kind)
    case = find_case(family, args.m, args.case)
    verdict = evaluate_case(family, args.m, case, kind, effort=args.factor_effort)
    rep = CaseReport.build(family, args.m, case, kind, verdict)
    if args.trace:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        extra = f" {', '.join(rep.witnesses)}" if rep.witnesses else ""
        print(f"{rep.case} {rep.kind} m={rep.m} N={rep.point_count}: "
              f"{rep.outcome}{extra} [{rep.test or '-'}] crosscheck={rep.crosscheck}")
    return EXIT_INCONCLUSIVE if not verdict.definitive else EXIT_OK


def _cmd_verify(args) -> int:
    res = run_suite(args.suite, args.limit)
    print("\n".join(res.lines()))
    return EXIT_OK if res.passed else EXIT_ERROR


def _cmd_crosscheck(args) -> int:
    rows = paper_crosscheck(Family.parse(args.family), args.m)
    for row in rows:
        flag = "match" if row["match"] else "MISMATCH"
        shown = row.get("displayed_value", "-")
        print(f"{row['case']:<24} {'/'.join(row['kinds']):<15} {flag:<8} "
              f"displayed={shown} exact={row['exact_index']}  [{row['displayed']}]")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "sweep": _cmd_sweep,
        "case": _cmd_case,
        "verify": _cmd_verify,
        "crosscheck": _cmd_crosscheck,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, CatalogueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
