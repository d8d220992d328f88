"""Command-line front end.

Subcommands: analyze, verify-pdpds, bounds, table, search, roundtrip.
All results go to stdout (JSON, CSV, or text); diagnostics go to stderr.

Exit codes: 0 success, 1 verification failure or recorded violations,
2 input/parse error, 3 search-budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, search, theory
from .cyclotomic import CyclotomicInt
from .diffset import (
    PdpdsParams,
    build_ra,
    classify_pdpds,
    expected_pdpds_params,
    group_ring_residual,
    parse_subset,
    residual_is_zero,
)
from .sequence import classify_nps, parse_sequence, profile, two_valued_set
from .theory import (
    generate_bound_table,
    nonexistence_verdict,
    pdpds_counting_identity,
    second_component_counts,
    second_component_identities,
    table_to_csv,
    table_to_json,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _render_value(value: CyclotomicInt) -> int | list[int]:
    """Rational integers render as ints, everything else as [c0..c_{p-2}]."""
    as_int = value.as_int()
    if as_int is not None:
        return as_int
    return list(value.coeffs[:-1])


def _envelope(inputs: dict, results: dict, checks: dict) -> dict:
    return {
        "version": __version__,
        "inputs": inputs,
        "results": results,
        "checks": checks,
    }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=None, separators=(",", ":"), sort_keys=True))


def _cmd_analyze(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.p, args.seq)
    prof = profile(seq)
    nps = classify_nps(seq) if seq.period >= 3 else None
    two_valued = two_valued_set(seq)
    results: dict = {
        "period": seq.period,
        "n": seq.n,
        "s": seq.s,
        "zero_positions": list(seq.zero_positions),
        "consecutive_zeros": seq.has_consecutive_zeros,
        "profile": [_render_value(v) for v in prof.values],
        "ell": prof.ell,
        "all_integral": prof.all_integral,
        "nps_type": [nps.gamma1, nps.gamma2] if nps else None,
        "uniform": nps.uniform if nps else None,
        "two_valued_set": sorted(two_valued) if two_valued is not None else None,
    }
    checks: dict = {}
    if seq.zero_positions == (0, 1):
        ra = build_ra(seq)
        params = classify_pdpds(ra)
        results["pdpds"] = list(params.as_tuple()) if params else None
        if params is not None:
            s_counts = second_component_counts(ra)
            checks["counting_identity"] = pdpds_counting_identity(params, seq.p)
            if nps is not None:
                expected = expected_pdpds_params(seq.n, seq.p, nps.gamma1, nps.gamma2)
                checks["expected_params_match"] = params == expected
                ident = second_component_identities(
                    s_counts, seq.n, seq.p, nps.gamma1, nps.gamma2
                )
                checks["second_component_identities"] = ident.all_ok
            checks["residual_zero"] = residual_is_zero(
                group_ring_residual(ra, params)
            )
    payload = _envelope({"p": args.p, "seq": args.seq}, results, checks)
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"period={seq.period} n={seq.n} s={seq.s}")
        print(f"profile: {results['profile']}")
        print(f"ell={prof.ell}")
        if nps:
            print(f"type: ({nps.gamma1},{nps.gamma2})" + (" uniform" if nps.uniform else ""))
        else:
            print("type: none")
        if two_valued is not None:
            print(f"two-valued set: {sorted(two_valued)}")
        if "pdpds" in results:
            print(f"pdpds: {results['pdpds']}")
        for name, ok in checks.items():
            print(f"check {name}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK


def _cmd_verify_pdpds(args: argparse.Namespace) -> int:
    R = parse_subset(args.N, args.p, args.set)
    if args.params is not None:
        values = [int(x) for x in args.params.split(",")]
        if len(values) != 8:
            raise ValueError("--params needs 8 comma-separated integers")
        params = PdpdsParams(*values)
        residual = group_ring_residual(R, params)
        ok = residual_is_zero(residual)
        payload = _envelope(
            {"N": args.N, "p": args.p, "set": args.set, "params": values},
            {"residual": [list(row) for row in residual]},
            {"residual_zero": ok},
        )
        if args.format == "json":
            _emit_json(payload)
        else:
            print("residual zero" if ok else "nonzero residual:")
            if not ok:
                for row in residual:
                    print(" ".join(str(v) for v in row))
        return EXIT_OK if ok else EXIT_VIOLATION

    params = classify_pdpds(R)
    payload = _envelope(
        {"N": args.N, "p": args.p, "set": args.set},
        {"pdpds": list(params.as_tuple()) if params else None},
        {"classified": params is not None},
    )
    if args.format == "json":
        _emit_json(payload)
    elif params is not None:
        print(f"pdpds: {list(params.as_tuple())}")
    else:
        print(_first_violated_class(R))
    return EXIT_OK if params is not None else EXIT_VIOLATION


def _first_violated_class(R) -> str:
    """Name the first difference class whose multiplicities are not constant."""
    from .diffset import difference_multiset

    grid = difference_multiset(R).counts
    N, p = R.N, R.p
    classes = [
        ("far H-pure", [grid[d][0] for d in range(2, N - 1)]),
        ("P-pure", [grid[0][e] for e in range(1, p)]),
        ("near H-pure", [grid[d][0] for d in (1, N - 1)]),
        ("far mixed", [grid[d][e] for d in range(2, N - 1) for e in range(1, p)]),
        ("near mixed", [grid[d][e] for d in (1, N - 1) for e in range(1, p)]),
    ]
    for name, values in classes:
        if values and len(set(values)) > 1:
            return f"not a PDPDS: {name} class not constant ({sorted(set(values))})"
    return "not a PDPDS"


def _cmd_bounds(args: argparse.Namespace) -> int:
    verdict = nonexistence_verdict(args.n, args.p, args.gamma1, args.gamma2)
    a = args.n - args.gamma2 - 2
    c = args.n - args.gamma1 - 1
    checks = {
        "divides_n_gamma2": a % args.p == 0,
        "divides_n_gamma1": c % args.p == 0,
        "above_bound": verdict.bound_B is None or args.gamma2 > verdict.bound_B,
        "above_global_floor": args.gamma2 > -3,
    }
    payload = _envelope(
        {"n": args.n, "p": args.p, "gamma1": args.gamma1, "gamma2": args.gamma2},
        {
            "status": verdict.status.value,
            "B": verdict.bound_B,
            "details": verdict.details,
        },
        checks,
    )
    if args.format == "json":
        _emit_json(payload)
    else:
        if verdict.bound_B is not None:
            print(f"B = {verdict.bound_B}")
        print(f"verdict: {verdict.status.value} ({verdict.details})")
        for name, ok in checks.items():
            print(f"check {name}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK  # verdicts are data, not errors


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _cmd_table(args: argparse.Namespace) -> int:
    rows = generate_bound_table(
        args.n, _parse_int_list(args.gamma1_list), _parse_int_list(args.gamma2_list)
    )
    if args.format == "csv":
        sys.stdout.write(table_to_csv(rows))
    elif args.format == "json":
        payload = _envelope(
            {
                "n": args.n,
                "gamma1_list": _parse_int_list(args.gamma1_list),
                "gamma2_list": _parse_int_list(args.gamma2_list),
            },
            {"rows": json.loads(table_to_json(rows))},
            {},
        )
        _emit_json(payload)
    else:
        for row in rows:
            flag = "not exist" if row.not_exist else ""
            print(f"{row.gamma1}\t{row.gamma2}\t{row.B}\t{flag}")
    return EXIT_OK


def _search_config(args: argparse.Namespace) -> search.SearchConfig:
    target = None
    mode = search.FILTER_NPS
    if getattr(args, "type", None):
        g1, g2 = (int(x) for x in args.type.split(","))
        target = (g1, g2)
        mode = search.FILTER_TYPE
    return search.SearchConfig(
        p=args.p,
        period=args.period,
        zeros=args.zeros,
        normalize_phase=not args.full_space,
        filter_mode=mode,
        target=target,
        job_count=args.jobs,
        budget=args.budget,
    )


def _emit_report(report: search.SearchReport, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(search.report_to_csv(report))
    elif fmt == "json":
        print(search.report_to_json(report))
    else:
        print(f"enumerated: {report.total_enumerated}")
        print(f"matches: {len(report.matches)}")
        for m in report.matches:
            pd = list(m.pdpds.as_tuple()) if m.pdpds else None
            print(f"  exponents {list(m.exponents)} type ({m.gamma1},{m.gamma2}) pdpds {pd}")
        print(f"ell histogram: {dict(sorted(report.ell_histogram.items()))}")
        print(f"violations: {len(report.violations)}")
        for v in report.violations:
            print(f"  {v}")


def _cmd_search(args: argparse.Namespace) -> int:
    report = search.enumerate_and_classify(_search_config(args))
    _emit_report(report, args.format)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _cmd_roundtrip(args: argparse.Namespace) -> int:
    report = search.verify_nps_pdpds_equivalence(_search_config(args))
    _emit_report(report, args.format)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npseq",
        description="Exact autocorrelation and difference-set analysis of almost p-ary sequences",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="profile and classify a sequence")
    p_analyze.add_argument("--p", type=int, required=True)
    p_analyze.add_argument("--seq", required=True, help='tokens like "Z,Z,1,1,1"')
    p_analyze.add_argument("--format", choices=["json", "text"], default="text")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser("verify-pdpds", help="classify a subset of Z_N x Z_p")
    p_verify.add_argument("--N", type=int, required=True)
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--set", required=True, help='pairs like "(2,1);(3,1)"')
    p_verify.add_argument("--params", help="8 comma-separated integers to check instead")
    p_verify.add_argument("--format", choices=["json", "text"], default="text")
    p_verify.set_defaults(func=_cmd_verify_pdpds)

    p_bounds = sub.add_parser("bounds", help="nonexistence verdict for one (gamma1, gamma2)")
    p_bounds.add_argument("--n", type=int, required=True)
    p_bounds.add_argument("--p", type=int, required=True)
    p_bounds.add_argument("--gamma1", type=int, required=True)
    p_bounds.add_argument("--gamma2", type=int, required=True)
    p_bounds.add_argument("--format", choices=["json", "text"], default="text")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_table = sub.add_parser("table", help="bound table over gamma grids")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--gamma1-list", required=True, help="comma-separated integers")
    p_table.add_argument("--gamma2-list", required=True, help="comma-separated integers")
    p_table.add_argument("--format", choices=["json", "csv", "text"], default="csv")
    p_table.set_defaults(func=_cmd_table)

    for name, func, extra in (
        ("search", _cmd_search, True),
        ("roundtrip", _cmd_roundtrip, False),
    ):
        p_cmd = sub.add_parser(
            name,
            help="exhaustive scan with a pinned leading zero run"
            if extra
            else "exhaustive sequence/difference-set equivalence check",
        )
        p_cmd.add_argument("--p", type=int, required=True)
        p_cmd.add_argument("--period", type=int, required=True)
        p_cmd.add_argument("--zeros", type=int, required=True)
        if extra:
            p_cmd.add_argument("--type", help="target gamma1,gamma2")
        p_cmd.add_argument("--jobs", type=int, default=1)
        p_cmd.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET)
        p_cmd.add_argument(
            "--full-space",
            action="store_true",
            help="disable phase normalization (scan all p^(period-zeros) candidates)",
        )
        p_cmd.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p_cmd.set_defaults(func=func)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, matching the input-error contract
        return int(exc.code or 0)
    try:
        return args.func(args)
    except search.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
