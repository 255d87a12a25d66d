"""Bulk verification suites behind the ``verify`` CLI subcommand.

Each suite sweeps a family of inputs and returns a SuiteResult; a failure
message names the offending input.  All randomness is seeded, so runs are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .determination import (
    exhaustive_switching_survey,
    forced_rule,
    partitions_of,
    recover_partitions,
    verify_shared_part_property,
)
from .errors import SeidelSpecError
from .exactalg import charpoly_oracle
from .graphs import Graph, complete_multipartite, seidel_matrix, switch
from .multipartite import (
    charpoly_coefficients,
    charpoly_grouped_coefficients,
    charpoly_product,
    quotient_matrix,
)
from .spectra import spectrum_report

DEFAULT_SEED = 12345
SWITCHING_PAIRS = 500


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: tuple[str, ...]


def closedform_suite(max_n: int = 12) -> SuiteResult:
    """All three closed forms against the determinant recurrence, exactly."""
    checks = 0
    failures: list[str] = []
    for n in range(1, max_n + 1):
        for p in partitions_of(n):
            product = charpoly_product(p)
            coeff = charpoly_coefficients(p)
            grouped = charpoly_grouped_coefficients(p)
            oracle = charpoly_oracle(seidel_matrix(complete_multipartite(p)))
            checks += 1
            if not (
                product.expanded == coeff.expanded == grouped.expanded == oracle
            ):
                failures.append(f"{p}: closed forms disagree")
                continue
            if charpoly_oracle(quotient_matrix(p)) != product.residual:
                failures.append(f"{p}: quotient polynomial differs from residual")
    return SuiteResult("closedform", not failures, checks, tuple(failures))


def bounds_suite(max_n: int = 12) -> SuiteResult:
    """Spectrum reports for every partition; bound tight for equal parts."""
    checks = 0
    failures: list[str] = []
    for n in range(1, max_n + 1):
        for p in partitions_of(n):
            checks += 1
            try:
                report = spectrum_report(p)
            except SeidelSpecError as exc:
                failures.append(f"{p}: {exc}")
                continue
            sizes = {s for s, _ in p.grouped()}
            if p.k >= 2 and len(sizes) == 1:
                m = p.parts[0]
                expected = -1.0 - (p.k - 2) * m
                if not report.bound_tight:
                    failures.append(f"{p}: equal-part bound is not tight")
                if abs(report.bound.value - expected) > 1e-9:
                    failures.append(f"{p}: equal-part bound differs from -1-(k-2)m")
    return SuiteResult("bounds", not failures, checks, tuple(failures))


def switching_suite(
    max_n: int = 8,
    seed: int = DEFAULT_SEED,
    pairs: int = SWITCHING_PAIRS,
    jobs: int = 1,
) -> SuiteResult:
    """Random switching invariance plus the exhaustive small-order survey."""
    rng = random.Random(seed)
    checks = 0
    failures: list[str] = []
    for n in range(4, min(max_n, 8) + 1):
        bits = comb(n, 2)
        for _ in range(pairs):
            g = Graph.from_mask(n, rng.getrandbits(bits))
            subset = [v for v in range(n) if rng.getrandbits(1)]
            h = switch(g, subset)
            checks += 1
            if charpoly_oracle(seidel_matrix(g)) != charpoly_oracle(seidel_matrix(h)):
                failures.append(f"switch changed the spectrum: n={n} mask={g.mask} U={subset}")
    for n in range(1, min(max_n, 7) + 1):
        checks += 1
        report = exhaustive_switching_survey(n, jobs=jobs)
        for partition, key in report.equivalence_violations:
            failures.append(f"order {n}: class {key} cospectral with {partition} but not equivalent")
        for key, row in report.sample_violations:
            failures.append(f"order {n}: class {key} member row {row} has a different spectrum")
        for a, b, kind in report.distinct_partition_violations:
            failures.append(f"order {n}: {kind} between {a} and {b}")
    return SuiteResult("switching", not failures, checks, tuple(failures))


def determination_suite(max_n: int = 20, recover_max: int = 12) -> SuiteResult:
    """Recovery round trip, shared-part scan, forced-pattern uniqueness."""
    checks = 0
    failures: list[str] = []
    for n in range(1, min(max_n, recover_max) + 1):
        for p in partitions_of(n):
            checks += 1
            residual = charpoly_coefficients(p).residual
            recovered = recover_partitions(residual)
            if p not in recovered:
                failures.append(f"{p}: recovery lost the partition")
                continue
            for q in recovered:
                if charpoly_coefficients(q).residual != residual:
                    failures.append(f"{p}: recovered {q} does not reproduce the residual")
    for n in range(1, max_n + 1):
        checks += 1
        try:
            report = verify_shared_part_property(n)
        except SeidelSpecError as exc:
            failures.append(f"order {n}: {exc}")
            continue
        for a, b, size in report.shared_part_violations:
            failures.append(f"order {n}: {a} and {b} cospectral sharing size {size}")
        for verdict in report.verdicts:
            rule = forced_rule(verdict.partition)
            if rule is not None and rule != "bipartite" and verdict.mates:
                failures.append(
                    f"order {n}: {verdict.partition} matches {rule} but is not unique"
                )
    return SuiteResult("determination", not failures, checks, tuple(failures))


SUITES = {
    "closedform": closedform_suite,
    "bounds": bounds_suite,
    "switching": switching_suite,
    "determination": determination_suite,
}


def run_suites(
    names: list[str],
    max_n: int | None = None,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> list[SuiteResult]:
    results = []
    for name in names:
        if name == "closedform":
            results.append(closedform_suite(max_n or 12))
        elif name == "bounds":
            results.append(bounds_suite(max_n or 12))
        elif name == "switching":
            results.append(switching_suite(max_n or 8, seed=seed, jobs=jobs))
        elif name == "determination":
            results.append(determination_suite(max_n or 20))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results
