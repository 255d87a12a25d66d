"""Numeric eigenvalues, exact root counting, and spectrum reports.

The exact side (root counts, multiplicities) is authoritative; the Jacobi
eigensolver is the numeric companion and every report cross-checks the two
views.  Tolerances are fixed here: 1e-12 for Jacobi convergence, 1e-8 for
exact/numeric comparisons, 1e-6 for scaled polynomial residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AsymmetryError,
    ConsistencyError,
    ConvergenceError,
    DimensionError,
    TheoremViolationError,
    ZeroPolynomialError,
)
from .exactalg import IntMatrix, IntPoly
from .graphs import complete_multipartite, seidel_matrix
from .multipartite import (
    EigenvalueBound,
    FactoredSeidelPoly,
    Partition,
    SpectralStructure,
    charpoly_product,
    eigenvalue_intervals,
    least_eigenvalue_bound,
    quotient_matrix,
    symmetrize_quotient,
)

JACOBI_CONVERGENCE = 1e-12
COMPARISON_TOL = 1e-8
RESIDUAL_TOL = 1e-6
SYMMETRY_TOL = 1e-10
_MAX_SWEEPS = 64


def _as_float_rows(m) -> list[list[float]]:
    if isinstance(m, IntMatrix):
        return [[float(v) for v in row] for row in m.rows]
    rows = [[float(v) for v in row] for row in m]
    for row in rows:
        if len(row) != len(rows):
            raise DimensionError(f"matrix must be square, got row of length {len(row)}")
    return rows


def symmetric_eigenvalues(m) -> list[float]:
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Cyclic Jacobi rotations swept in a fixed row order until the
    off-diagonal Frobenius norm drops below 1e-12 times the matrix norm,
    so results are deterministic.
    """
    a = _as_float_rows(m)
    n = len(a)
    asym = max(
        (abs(a[i][j] - a[j][i]) for i in range(n) for j in range(i + 1, n)),
        default=0.0,
    )
    if asym > SYMMETRY_TOL:
        raise AsymmetryError(f"matrix asymmetry {asym:.3e} exceeds {SYMMETRY_TOL}")
    for i in range(n):
        for j in range(i + 1, n):
            v = (a[i][j] + a[j][i]) / 2.0
            a[i][j] = a[j][i] = v
    norm = math.sqrt(math.fsum(a[i][j] ** 2 for i in range(n) for j in range(n)))
    threshold = JACOBI_CONVERGENCE * norm
    for _ in range(_MAX_SWEEPS):
        off = math.sqrt(
            2.0 * math.fsum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
        )
        if off <= threshold or norm == 0.0:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                if abs(theta) > 1e12:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp, arq = a[r][p], a[r][q]
                    a[r][p] = a[p][r] = c * arp - s * arq
                    a[r][q] = a[q][r] = s * arp + c * arq
    raise ConvergenceError(f"Jacobi sweep limit {_MAX_SWEEPS} reached")


# ---------------------------------------------------------------------------
# exact root counting


def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return g


def _primitive(p: IntPoly) -> IntPoly:
    """Divide out the content, keeping the sign of the leading coefficient."""
    if p.is_zero():
        return p
    g = _content(p.coeffs)
    return IntPoly([c // g for c in p.coeffs])


def _signed_prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of f by g up to a positive integer scale factor."""
    delta = f.degree - g.degree
    if delta < 0:
        return f
    lead = g.leading
    r = f
    steps = 0
    while not r.is_zero() and r.degree >= g.degree:
        shift = r.degree - g.degree
        top = r.leading
        r = r * lead - g * IntPoly([0] * shift + [top])
        steps += 1
    total = delta + 1
    if steps < total:
        r = r * (lead ** (total - steps))
    if lead < 0 and total % 2 == 1:
        r = -r
    return r


def _poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = _primitive(p), _primitive(q)
    while not b.is_zero():
        a, b = b, _primitive(_signed_prem(a, b))
    if a.leading < 0:
        a = -a
    return a


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of p over the integers (positively scaled remainders)."""
    if p.is_zero():
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    chain = [_primitive(p)]
    d = p.derivative()
    if not d.is_zero():
        chain.append(_primitive(d))
        while chain[-1].degree > 0:
            r = _signed_prem(chain[-2], chain[-1])
            if r.is_zero():
                break
            chain.append(_primitive(-r))
    return chain


def _sign_changes(signs: Sequence[int]) -> int:
    prev = 0
    changes = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            changes += 1
        prev = s
    return changes


def sturm_distinct_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots, from sign variations at -inf and +inf."""
    chain = sturm_chain(p)
    at_minus = [(-1 if f.leading < 0 else 1) * (-1 if f.degree % 2 else 1) for f in chain]
    at_plus = [-1 if f.leading < 0 else 1 for f in chain]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def squarefree_degree(p: IntPoly) -> int:
    """Degree of p with root multiplicities collapsed to one."""
    if p.degree <= 0:
        return max(p.degree, 0)
    return p.degree - _poly_gcd(p, p.derivative()).degree


def is_real_rooted(p: IntPoly) -> bool:
    """True iff every complex root of p is real (certified exactly)."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no well-defined roots")
    if p.degree <= 1:
        return True
    return sturm_distinct_real_roots(p) == squarefree_degree(p)


def descartes_sign_changes(p: IntPoly) -> int:
    """Sign changes in the coefficient sequence (zeros skipped)."""
    return _sign_changes([0 if c == 0 else (1 if c > 0 else -1) for c in p.coeffs])


def positive_root_count(p: IntPoly, assume_real_rooted: bool = False) -> int:
    """Positive roots of p counted with multiplicity, exactly.

    Uses the sign-change count, which is exact for real-rooted polynomials;
    unless the caller vouches for real-rootedness it is certified first
    with a Sturm sequence.
    """
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no root count")
    if not assume_real_rooted and not is_real_rooted(p):
        raise ConsistencyError("polynomial has non-real roots; sign-change count unsound")
    return descartes_sign_changes(p)


def roots_below(p: IntPoly, c: int, assume_real_rooted: bool = False) -> int:
    """Roots of p strictly below the integer c, counted with multiplicity."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no root count")
    if not assume_real_rooted and not is_real_rooted(p):
        raise ConsistencyError("polynomial has non-real roots; sign-change count unsound")
    # substitute x = c - t; roots below c become positive roots in t
    acc = IntPoly()
    lin = IntPoly([c, -1])
    for coeff in reversed(p.coeffs):
        acc = acc * lin + coeff
    return descartes_sign_changes(acc)


def roots_in_open_interval(
    p: IntPoly, a: int, b: int, assume_real_rooted: bool = False
) -> int:
    """Roots with multiplicity in the open interval (a, b), integer endpoints."""
    below_b = roots_below(p, b, assume_real_rooted)
    below_a = roots_below(p, a, assume_real_rooted=True)
    return below_b - below_a - exact_root_multiplicity(p, a)


def exact_root_multiplicity(p: IntPoly, r: int) -> int:
    """Largest e with (x - r)^e dividing p, by repeated exact division."""
    if p.is_zero():
        raise ZeroPolynomialError("every power divides the zero polynomial")
    lin = IntPoly([-r, 1])
    e = 0
    while p.degree >= 1 and p(r) == 0:
        p = p.divexact(lin)
        e += 1
    return e


# ---------------------------------------------------------------------------
# assembled reports


@dataclass(frozen=True)
class SpectrumReport:
    """Exact and numeric views of one Seidel spectrum, cross-checked.

    Construction fails with TheoremViolationError or ConsistencyError if
    any required property does not hold, so an existing report is itself
    the certificate.
    """

    partition: Partition
    charpoly: FactoredSeidelPoly
    minus_one_multiplicity: int
    positive_roots: int
    roots_below_minus_one: int
    eigenvalues: tuple[float, ...]
    least_eigenvalue: float
    quotient_eigenvalues: tuple[float, ...]
    bound: EigenvalueBound
    bound_satisfied: bool
    bound_tight: bool
    structure: SpectralStructure
    interval_checks: tuple[tuple[float, int, int, bool], ...]
    trace_error: float
    square_sum_error: float
    max_scaled_residual: float

    def to_json_dict(self) -> dict:
        """JSON-ready dict; numbers are decimal strings to avoid precision loss."""
        return {
            "partition": str(self.partition),
            "order": str(self.partition.n),
            "parts": str(self.partition.k),
            "charpoly": {
                "factored": self.charpoly.factored_str(),
                "coefficients": [str(c) for c in self.charpoly.expanded.coeffs],
            },
            "-1_multiplicity": str(self.minus_one_multiplicity),
            "positive_roots": str(self.positive_roots),
            "roots_below_minus_one": str(self.roots_below_minus_one),
            "eigenvalues": [repr(e) for e in self.eigenvalues],
            "least_eigenvalue": repr(self.least_eigenvalue),
            "quotient_eigenvalues": [repr(e) for e in self.quotient_eigenvalues],
            "bound": {
                "value": repr(self.bound.value),
                "rational": str(self.bound.rational),
                "sqrt_coefficient": str(self.bound.sqrt_coefficient),
                "radicands": [str(r) for r in self.bound.radicands],
            },
            "bound_satisfied": self.bound_satisfied,
            "bound_tight": self.bound_tight,
            "intervals": [
                {
                    "low": str(lo),
                    "high": str(hi),
                    "eigenvalue": repr(e),
                    "within": within,
                }
                for e, lo, hi, within in self.interval_checks
            ],
            "checks": {
                "trace_error": repr(self.trace_error),
                "square_sum_error": repr(self.square_sum_error),
                "max_scaled_residual": repr(self.max_scaled_residual),
            },
            "tolerances": {
                "jacobi_convergence": repr(JACOBI_CONVERGENCE),
                "comparison": repr(COMPARISON_TOL),
                "residual": repr(RESIDUAL_TOL),
            },
        }


def _float_eval(p: IntPoly, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def spectrum_report(partition) -> SpectrumReport:
    """Assemble the full exact/numeric spectrum report for a partition.

    Violated structural properties (wrong -1 multiplicity, wrong positive
    count, extra eigenvalues below -1, broken interlacing, broken bound)
    raise TheoremViolationError; exact/numeric disagreements raise
    ConsistencyError.
    """
    p = partition if isinstance(partition, Partition) else Partition(partition)
    n, k = p.n, p.k
    factored = charpoly_product(p)
    full = factored.expanded
    structure = eigenvalue_intervals(p)

    minus_one = exact_root_multiplicity(full, -1)
    if minus_one != structure.minus_one_multiplicity:
        raise TheoremViolationError(
            f"{p}: -1 multiplicity {minus_one}, expected {structure.minus_one_multiplicity}"
        )
    if not is_real_rooted(full):
        raise ConsistencyError(f"{p}: Seidel polynomial is not real-rooted")
    positives = positive_root_count(full, assume_real_rooted=True)
    if positives != structure.positive_count:
        raise TheoremViolationError(
            f"{p}: {positives} positive roots, expected {structure.positive_count}"
        )
    below = roots_below(full, -1, assume_real_rooted=True)
    expected_below = 1 if structure.least_is_simple_below_minus_one else 0
    if below != expected_below:
        raise TheoremViolationError(
            f"{p}: {below} roots below -1, expected {expected_below}"
        )

    eigs = tuple(symmetric_eigenvalues(seidel_matrix(complete_multipartite(p))))
    least = eigs[-1]
    numeric_pos = sum(1 for e in eigs if e > COMPARISON_TOL)
    if numeric_pos != positives:
        raise ConsistencyError(
            f"{p}: numeric positive count {numeric_pos} != exact {positives}"
        )
    trace_error = abs(math.fsum(eigs))
    if trace_error > 1e-9:
        raise ConsistencyError(f"{p}: eigenvalue sum {trace_error:.3e} is not zero")
    square_sum_error = abs(math.fsum(e * e for e in eigs) - n * (n - 1))
    if square_sum_error > RESIDUAL_TOL:
        raise ConsistencyError(
            f"{p}: eigenvalue square sum off by {square_sum_error:.3e}"
        )
    max_scaled_residual = max(
        abs(_float_eval(full, e)) / (1.0 + abs(e)) ** n for e in eigs
    )
    if max_scaled_residual > RESIDUAL_TOL:
        raise ConsistencyError(
            f"{p}: eigenvalue residual {max_scaled_residual:.3e} exceeds {RESIDUAL_TOL}"
        )

    quotient_eigs = tuple(
        symmetric_eigenvalues(symmetrize_quotient(quotient_matrix(p), p))
    )
    quotient_residual = max(
        abs(_float_eval(factored.residual, e)) / (1.0 + abs(e)) ** k
        for e in quotient_eigs
    )
    if quotient_residual > RESIDUAL_TOL:
        raise ConsistencyError(
            f"{p}: quotient eigenvalue residual {quotient_residual:.3e}"
        )

    bound = least_eigenvalue_bound(p)
    bound_satisfied = least <= bound.value + COMPARISON_TOL
    if not bound_satisfied:
        raise TheoremViolationError(
            f"{p}: least eigenvalue {least} above bound {bound.value}"
        )
    bound_tight = abs(least - bound.value) <= COMPARISON_TOL

    interval_checks = []
    interval_ok = True
    for i, (lo, hi) in enumerate(structure.intervals):
        e = eigs[i]
        within = lo - COMPARISON_TOL <= e <= hi + COMPARISON_TOL
        interval_ok = interval_ok and within
        interval_checks.append((e, lo, hi, within))
    if not interval_ok:
        raise TheoremViolationError(f"{p}: interlacing interval violated")

    return SpectrumReport(
        partition=p,
        charpoly=factored,
        minus_one_multiplicity=minus_one,
        positive_roots=positives,
        roots_below_minus_one=below,
        eigenvalues=eigs,
        least_eigenvalue=least,
        quotient_eigenvalues=quotient_eigs,
        bound=bound,
        bound_satisfied=bound_satisfied,
        bound_tight=bound_tight,
        structure=structure,
        interval_checks=tuple(interval_checks),
        trace_error=trace_error,
        square_sum_error=square_sum_error,
        max_scaled_residual=max_scaled_residual,
    )
