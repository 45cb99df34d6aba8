"""Command-line verifier: ``alv <subcommand> [--format text|json]``."""
from __future__ import annotations

import argparse
import sys

from . import classify
from .dynkin import (DynkinType, ade_graph, admissible_labelings, catalog_row,
                     component_profiles, count_profile, format_labeling)
from .lefschetz import (A_P, A_Q, B_C, L_TAU, euler_characteristic_check,
                        feasible_order6_profiles, holomorphic_lefschetz_order6,
                        solve_multiplicities, step_one_balance)
from .report import CaseReport, document, dumps, summary_verdict, CONFIRMED


def _lefschetz_report() -> CaseReport:
    rep = CaseReport("lefschetz", "holomorphic and topological Lefschetz bookkeeping for an "
                     "order-6 automorphism with the stated fixed-locus shape")
    half = L_TAU
    rep.values["a(P)"] = A_P
    rep.values["a(Q)"] = A_Q
    rep.values["b(C)"] = B_C
    rep.values["L(tau)"] = L_TAU
    rep.check(f"a(P) = {A_P} = (3 - sqrt(-3))/6", A_P == half / 3)
    rep.check(f"a(Q) = {A_Q} = (3 - sqrt(-3))/12", A_Q == half / 6)
    rep.check(f"b(C) = {B_C} = -(3 - sqrt(-3))/2", B_C == -half)
    pairs = [(l, c) for l in range(11) for c in range(11) if step_one_balance(l, c)]
    rep.values["balanced_pairs"] = pairs
    rep.check("sum over 2l P-points, 2l Q-points, c curves equals L(tau) iff l = c + 1 "
              "(0 <= l, c <= 10)", pairs == [(c + 1, c) for c in range(10)])
    rep.check("(6, 6, 2) evaluates to L(tau)", holomorphic_lefschetz_order6(6, 6, 2) == L_TAU)
    rows = []
    profiles = feasible_order6_profiles()
    for pr in profiles:
        m = solve_multiplicities(pr)
        closed = (5 * pr.c + 2 * pr.p + pr.q + 6, -pr.c + 2 * pr.p - pr.q + 4,
                  -pr.c - pr.p + pr.q + 3, -pr.c - pr.p - pr.q + 2)
        rows.append({"c": pr.c, "p": pr.p, "q": pr.q, "alpha": m.alpha, "beta": m.beta,
                     "gamma": m.gamma, "delta": m.delta})
        rep.check(f"(c,p,q) = ({pr.c},{pr.p},{pr.q}): (alpha,beta,gamma,delta) = "
                  f"{m.as_tuple()} matches the closed form and the Euler count",
                  m.as_tuple() == closed and euler_characteristic_check(pr, m))
    rep.check(f"{len(profiles)} feasible profiles, exactly those with c + p + q <= 2",
              len(profiles) == 10 and all(p.c + p.p + p.q <= 2 for p in profiles))
    rep.values["multiplicities"] = rows
    return rep.finish()


def _labelings_report(dtype: DynkinType, order: int) -> CaseReport:
    rep = CaseReport(f"labelings order {order} {dtype}",
                     "fixed/stable labelings of the curves and the counts N, M they give")
    comps = []
    for letter, rank in dtype.components:
        g = ade_graph(DynkinType([(letter, rank)]))
        labs = admissible_labelings(g, order)
        profiles = sorted({tuple(count_profile(g, lab, order)) for lab in labs})
        expected = catalog_row(letter, rank, order)
        comps.append({"component": f"{letter}{rank}",
                      "labelings": [format_labeling(g, lab) for lab in labs],
                      "profiles": [list(p) for p in profiles],
                      "catalog": list(expected) if expected else None})
        rep.check(f"{letter}{rank}: computed {profiles or 'no labeling'} vs table "
                  f"{tuple(expected) if expected else 'no labeling'}",
                  (profiles == [expected]) if expected else not profiles)
    rep.values["components"] = comps
    return rep.finish()


def _catalog_report(order: int, max_rank: int = 19) -> CaseReport:
    rep = CaseReport(f"labelings order {order} catalog",
                     "closed-form table of fixed curves and isolated points per component")
    letters = ("A",) if order == 2 else ("A", "D")
    rows = []
    ok = True
    for letter in letters:
        for r in range(1 if letter == "A" else 4, max_rank + 1):
            got = [tuple(p) for p in component_profiles(letter, r, order)]
            want = catalog_row(letter, r, order)
            ok &= (got == [want]) if want else not got
            rows.append({"component": f"{letter}{r}", "profiles": [list(p) for p in got]})
    rep.check(f"all components up to rank {max_rank} match the table", ok)
    rep.values["rows"] = rows
    return rep.finish()


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")
    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--hsq-bound", type=int, default=None,
                       help="largest H^2 searched (default $ALV_HSQ_BOUND or 200)")
    p = argparse.ArgumentParser(prog="alv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("indices", parents=[fmt], help="candidate canonical indices")
    sub.add_parser("lefschetz", parents=[fmt], help="order-6 Lefschetz tables")
    s = sub.add_parser("labelings", parents=[fmt], help="fixed/stable labelings")
    s.add_argument("--order", type=int, choices=[2, 3], required=True)
    s.add_argument("--type", dest="dtype", default=None,
                   help="Dynkin type such as D16+A3 (omit for the whole catalog)")
    s = sub.add_parser("enumerate", parents=[fmt], help="candidate types for an index")
    s.add_argument("--index", type=int, choices=[2, 3], required=True)
    s = sub.add_parser("exclude", parents=[fmt], help="exclude index 4 or 6")
    s.add_argument("--index", type=int, choices=[4, 6], required=True)
    s = sub.add_parser("lattice-exclude", parents=[fmt, bound], help="lattice exclusion")
    s.add_argument("--type", dest="dtype", required=True)
    s = sub.add_parser("basis", parents=[fmt, bound], help="H^2 and Picard basis data")
    s.add_argument("--type", dest="dtype", required=True)
    s = sub.add_parser("verify-config", parents=[fmt], help="check a divisor of the catalog")
    s.add_argument("--case", type=int, choices=range(1, 8), required=True)
    sub.add_parser("main-theorem", parents=[fmt, bound], help="the full pipeline")
    return p


def _parse_type(parser, text):
    try:
        return DynkinType.parse(text)
    except ValueError as exc:
        parser.error(str(exc))


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    cmd = args.command
    if cmd == "indices":
        reports = [classify.index_candidates(2)]
    elif cmd == "lefschetz":
        reports = [_lefschetz_report()]
    elif cmd == "labelings":
        if args.dtype is None:
            reports = [_catalog_report(args.order)]
        else:
            reports = [_labelings_report(_parse_type(parser, args.dtype), args.order)]
    elif cmd == "enumerate":
        reports = [classify.classify_index2() if args.index == 2 else classify.classify_index3()]
    elif cmd == "exclude":
        reports = [classify.exclude_index4() if args.index == 4 else classify.exclude_index6()]
    elif cmd == "lattice-exclude":
        dtype = _parse_type(parser, args.dtype)
        reports = [classify.exclude_by_lattice(dtype, args.hsq_bound)]
    elif cmd == "basis":
        dtype = _parse_type(parser, args.dtype)
        try:
            _, rep = classify.uniqueness_data(dtype, args.hsq_bound)
        except ValueError as exc:
            parser.error(str(exc))
        reports = [rep]
    elif cmd == "verify-config":
        reports = [classify.verify_construction(args.case)]
    else:
        _, reports = classify.main_theorem(args.hsq_bound)
        extra = [_lefschetz_report(), _catalog_report(2), _catalog_report(3)]
        reports = reports[:1] + extra + reports[1:]
    if args.format == "json":
        out = dumps(reports)
    else:
        out = "\n\n".join(r.to_text() for r in reports)
        out += f"\n\nsummary: {summary_verdict(reports)}"
    code = 0 if summary_verdict(reports) == CONFIRMED else 1
    return code, out


def main(argv=None) -> int:
    code, out = run(argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "run", "build_parser", "document"]
