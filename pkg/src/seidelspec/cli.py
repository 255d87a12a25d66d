"""Command line interface.

Exit codes: 0 success, 1 negative decision (e.g. not equivalent),
2 usage or parse error, 3 a property that must always hold failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .determination import verify_shared_part_property
from .errors import (
    CapExceededError,
    ConsistencyError,
    GraphFormatError,
    InvalidPartitionError,
    SeidelSpecError,
)
from .exactalg import charpoly_oracle
from .graphs import complete_multipartite, graph6_decode, seidel_matrix, switching_equivalent
from .multipartite import (
    Partition,
    charpoly_coefficients,
    charpoly_grouped_coefficients,
    charpoly_product,
    least_eigenvalue_bound,
    quotient_matrix,
)
from .spectra import COMPARISON_TOL, spectrum_report, symmetric_eigenvalues
from .verify import DEFAULT_SEED, run_suites

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3

FORMS = ("product", "coeff", "grouped", "oracle")


def _form_result(p: Partition, form: str) -> dict:
    if form == "product":
        f = charpoly_product(p)
    elif form == "coeff":
        f = charpoly_coefficients(p)
    elif form == "grouped":
        f = charpoly_grouped_coefficients(p)
    elif form == "oracle":
        poly = charpoly_oracle(seidel_matrix(complete_multipartite(p)))
        return {
            "name": "oracle",
            "factored": poly.to_string(),
            "coefficients": [str(c) for c in poly.coeffs],
            "_expanded": poly,
        }
    else:
        raise ValueError(form)
    return {
        "name": form,
        "factored": f.factored_str(),
        "coefficients": [str(c) for c in f.expanded.coeffs],
        "_expanded": f.expanded,
    }


def cmd_charpoly(args) -> int:
    p = Partition.parse(args.partition)
    names = list(FORMS) if args.form == "all" else [args.form]
    results = [_form_result(p, name) for name in names]
    agree = all(r["_expanded"] == results[0]["_expanded"] for r in results)
    if args.json:
        payload = {
            "partition": str(p),
            "forms": [
                {k: v for k, v in r.items() if not k.startswith("_")} for r in results
            ],
            "agree": agree,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"partition: {p}")
        for r in results:
            print(f"form: {r['name']}")
            print(f"  factored: {r['factored']}")
            print(f"  expanded: {r['_expanded'].to_string()}")
            print(f"  coefficients (constant first): {[str(c) for c in r['_expanded'].coeffs]}")
        if args.form == "all":
            print(f"all forms agree: {'yes' if agree else 'NO'}")
    if not agree:
        print("error: closed forms disagree", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_spectrum(args) -> int:
    p = Partition.parse(args.partition)
    report = spectrum_report(p)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
        return EXIT_OK
    print(f"partition: {p}")
    print(f"order: {p.n}  parts: {p.k}")
    print(f"charpoly: {report.charpoly.factored_str()}")
    print(f"-1 multiplicity: {report.minus_one_multiplicity}")
    print(f"positive roots: {report.positive_roots}")
    print(f"roots below -1: {report.roots_below_minus_one}")
    print("eigenvalues: " + ", ".join(repr(e) for e in report.eigenvalues))
    print(f"least eigenvalue: {report.least_eigenvalue!r}")
    tight = "yes" if report.bound_tight else "no"
    print(f"bound: {report.bound.value!r}  satisfied: yes  tight: {tight}")
    for e, lo, hi, within in report.interval_checks:
        word = "yes" if within else "NO"
        print(f"interval [{lo},{hi}] contains {e!r}: {word}")
    return EXIT_OK


def cmd_bound(args) -> int:
    p = Partition.parse(args.partition)
    bound = least_eigenvalue_bound(p)
    eigs = symmetric_eigenvalues(seidel_matrix(complete_multipartite(p)))
    least = eigs[-1]
    gap = bound.value - least
    tight = abs(gap) <= COMPARISON_TOL
    if args.json:
        payload = {
            "partition": str(p),
            "bound": repr(bound.value),
            "rational": str(bound.rational),
            "sqrt_coefficient": str(bound.sqrt_coefficient),
            "radicands": [str(r) for r in bound.radicands],
            "least_eigenvalue": repr(least),
            "tight": tight,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"partition: {p}")
        print(f"bound: {bound.value!r}")
        print(f"least eigenvalue: {least!r}")
        print(f"tight (|difference| < {COMPARISON_TOL}): {'yes' if tight else 'no'}")
    if least > bound.value + COMPARISON_TOL:
        print("error: bound violated", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_quotient(args) -> int:
    p = Partition.parse(args.partition)
    b = quotient_matrix(p)
    if args.json:
        payload = {
            "partition": str(p),
            "quotient": [[str(v) for v in row] for row in b.rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"partition: {p}")
        for row in b.rows:
            print("[" + ", ".join(str(v) for v in row) + "]")
    return EXIT_OK


def cmd_search(args) -> int:
    report = verify_shared_part_property(args.n, args.k, jobs=args.jobs)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"order: {report.order}" + (f"  k: {args.k}" if args.k else ""))
        print(f"classes: {len(report.classes)}")
        for cls in report.classes:
            if len(cls.partitions) == 1:
                continue
            names = "; ".join(str(p) for p in cls.partitions)
            flag = " (known two-part degeneracy)" if cls.degenerate_bipartite else ""
            print(f"cospectral: {names}{flag}")
        if report.shared_part_violations:
            for a, b, size in report.shared_part_violations:
                print(f"VIOLATION: {a} and {b} share part size {size}")
        else:
            print("shared-part violations: none")
    if report.shared_part_violations:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    names = (
        ["closedform", "bounds", "switching", "determination"]
        if args.suite == "all"
        else [args.suite]
    )
    results = run_suites(names, max_n=args.max_n, seed=args.seed, jobs=args.jobs)
    if args.json:
        payload = {
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "checks": r.checks,
                    "failures": list(r.failures),
                }
                for r in results
            ],
            "passed": all(r.passed for r in results),
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            word = "PASS" if r.passed else "FAIL"
            print(f"{word} {r.name} checks={r.checks}")
            for f in r.failures:
                print(f"  {f}")
    if not all(r.passed for r in results):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_switch_equiv(args) -> int:
    if len(args.g6) != 2:
        print("error: exactly two --g6 inputs are required", file=sys.stderr)
        return EXIT_USAGE
    g = graph6_decode(args.g6[0])
    h = graph6_decode(args.g6[1])
    if g.n != h.n:
        if args.json:
            print(json.dumps({"equivalent": False, "reason": "orders differ"}))
        else:
            print("not equivalent (orders differ)")
        return EXIT_NO
    witness = switching_equivalent(g, h)
    if witness is None:
        if args.json:
            print(json.dumps({"equivalent": False}))
        else:
            print("not equivalent")
        return EXIT_NO
    if args.json:
        payload = {
            "equivalent": True,
            "switch_set": list(witness.subset),
            "permutation": list(witness.permutation),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"equivalent: switch at {list(witness.subset)}, relabel by {list(witness.permutation)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seidelspec",
        description="Exact Seidel spectra of complete multipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("charpoly", help="Seidel characteristic polynomial of a partition")
    sp.add_argument("partition", help="part sizes like 3,2,1 or grouped 2*3,1*2")
    sp.add_argument("--form", choices=FORMS + ("all",), default="all")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_charpoly)

    sp = sub.add_parser("spectrum", help="full exact/numeric spectrum report")
    sp.add_argument("partition")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("bound", help="upper bound on the least Seidel eigenvalue")
    sp.add_argument("partition")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("quotient", help="part quotient matrix of the Seidel matrix")
    sp.add_argument("partition")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("search", help="cospectral classes among partitions of n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument(
        "--suite",
        choices=("closedform", "bounds", "switching", "determination", "all"),
        default="all",
    )
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("switch-equiv", help="decide switching equivalence of two graphs")
    sp.add_argument("--g6", action="append", required=True, help="graph6 string (give twice)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_switch_equiv)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidPartitionError, GraphFormatError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except SeidelSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
