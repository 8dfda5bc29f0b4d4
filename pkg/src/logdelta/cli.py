"""``logdelta`` command line.

Exit codes: 0 success, 1 verification failures, 2 input or usage errors.
Rationals are read as ``p/q`` only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .catalog import FAMILY_COUNT, CatalogError, find_records, load_catalog, verify_all, verify_case
from .cyclic import CyclicQuot, hj_expand
from .delta import delta
from .exact import fmt_rat, parse_form, rat
from .germs import DEEP_THRESHOLD, solve_blowup_weights

CATALOG_ENV = "LOGDELTA_CATALOG"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    catalog_path: Optional[Path] = None
    threshold: Fraction = DEEP_THRESHOLD
    output: str = "table"
    parallel: bool = False

    def __post_init__(self):
        if not 0 < self.threshold < 1:
            raise UsageError("threshold must lie in (0, 1)")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _rational(text: str) -> Fraction:
    try:
        return rat(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _records(cfg: CliConfig):
    try:
        return load_catalog(cfg.catalog_path)
    except CatalogError as exc:
        raise UsageError(f"catalog: {exc}") from None
    except OSError as exc:
        raise UsageError(f"catalog: {exc}") from None


def _lookup(cfg: CliConfig, key: str, single: bool):
    recs = _records(cfg)
    found = find_records(recs, key)
    if not found:
        raise UsageError(f"unknown case id {key!r}")
    if single and len(found) > 1:
        ids = ", ".join(r.id for r in found)
        raise UsageError(f"unknown case id {key!r}: ambiguous, candidates are {ids}")
    return recs, found


def cmd_hj(cfg: CliConfig, args) -> int:
    try:
        chain = hj_expand(CyclicQuot(args.n, args.q))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.output == "json":
        _emit({"n": args.n, "q": args.q, "chain": chain})
    else:
        print("[" + ", ".join(str(c) for c in chain) + "]")
    return 0


def _print_report(rep) -> None:
    print(f"{rep.record_id}: {'pass' if rep.passed else 'FAIL'}")
    for c in rep.checks:
        if not c.passed:
            print(f"  {c.name}: expected {c.expected}; got {c.actual}")


def cmd_verify(cfg: CliConfig, args) -> int:
    if args.case == "all":
        recs = _records(cfg)
        summary = verify_all(recs, parallel=cfg.parallel)
        ok, total = summary.family_counts(recs)
        if cfg.output == "json":
            _emit({
                "records": [r.to_json() for r in summary.reports],
                "families_passed": ok,
                "families_total": FAMILY_COUNT,
                "records_passed": summary.passed,
                "records_total": len(summary.reports),
            })
        else:
            for rep in summary.reports:
                if not rep.passed:
                    _print_report(rep)
            print(f"records: {summary.passed}/{len(summary.reports)} pass")
            print(f"{ok}/{FAMILY_COUNT} pass")
        return 0 if summary.failed == 0 and total == FAMILY_COUNT else 1
    _recs, found = _lookup(cfg, args.case, single=False)
    reports = [verify_case(r) for r in found]
    if cfg.output == "json":
        _emit({"records": [r.to_json() for r in reports]})
    else:
        for rep in reports:
            _print_report(rep)
    return 0 if all(r.passed for r in reports) else 1


def cmd_delta(cfg: CliConfig, args) -> int:
    _recs, (rec,) = _lookup(cfg, args.case, single=True)
    t = _rational(args.t)
    try:
        rep = delta(rec.surface, t, cfg.threshold)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.output == "json":
        _emit({"id": rec.id, **rep.to_json()})
    else:
        print(f"{rec.id} at t = {fmt_rat(t)}")
        print(f"delta = {rep.delta}")
        for w in rep.witnesses:
            print(f"  {w.describe()}")
    return 0


def cmd_solve_weights(cfg: CliConfig, args) -> int:
    try:
        m1, m2 = parse_form(args.m1), parse_form(args.m2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lo_text, sep, hi_text = args.range.partition("..")
    if not sep:
        raise UsageError("range must look like a/b..c/d")
    lo, hi = _rational(lo_text), _rational(hi_text)
    try:
        sols = solve_blowup_weights(m1, m2, lo, hi, high_open=not args.closed,
                                    alpha_ge_beta_plus_1=args.alpha_dominant, theta_max=args.theta_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.output == "json":
        _emit({"solutions": [{"alpha": w.alpha, "beta": w.beta, "theta": w.theta, "b": fmt_rat(b)} for w, b in sols]})
    else:
        for w, b in sols:
            print(f"(alpha,beta,theta,b) = ({w.alpha},{w.beta},{w.theta},{fmt_rat(b)})")
        print(f"{len(sols)} solution(s)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="logdelta", description="Exact log surface singularity calculus and the delta = 1 catalog verifier.")
    p.add_argument("--catalog", type=Path, help=f"catalog JSON (default: ${CATALOG_ENV} or the bundled file)")
    p.add_argument("--threshold", default=None, help="deep-divisor threshold p/q (default 6/7)")
    p.add_argument("--output", choices=("table", "json"), default="table")
    p.add_argument("--parallel", action="store_true", help="verify records in worker processes")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hj", help="Hirzebruch-Jung chain of 1/n(q,1)")
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_hj)

    s = sub.add_parser("verify", help="verify one case, a family, or all")
    s.add_argument("case", help='case id such as 2-1, 6-1[k=3], or "all"')
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("delta", help="delta of a case at a given t")
    s.add_argument("case")
    s.add_argument("--t", required=True, help="parameter value p/q")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("solve-weights", help="weighted blow-up equation alpha(1-m1)+beta(1-m2)=1/theta")
    s.add_argument("--m1", required=True, help="affine form in b, e.g. 7/3-2b")
    s.add_argument("--m2", required=True)
    s.add_argument("--range", required=True, help="a/b..c/d, upper end open unless --closed")
    s.add_argument("--closed", action="store_true", help="include the upper end")
    s.add_argument("--alpha-dominant", action="store_true", help="require alpha >= beta + 1")
    s.add_argument("--theta-max", type=int, default=6)
    s.set_defaults(func=cmd_solve_weights)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        catalog = args.catalog or (Path(os.environ[CATALOG_ENV]) if os.environ.get(CATALOG_ENV) else None)
        threshold = _rational(args.threshold) if args.threshold is not None else DEEP_THRESHOLD
        cfg = CliConfig(catalog, threshold, args.output, args.parallel)
        return args.func(cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
