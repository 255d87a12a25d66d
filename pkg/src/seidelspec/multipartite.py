"""Closed forms for Seidel spectra of complete multipartite graphs.

For a complete multipartite graph on parts of sizes n_1 >= ... >= n_k the
Seidel characteristic polynomial is (x+1)^(n-k) times a degree-k residual,
computed here three independent ways: by clearing denominators in the
product identity, from the explicit coefficient formula over elementary
symmetric functions, and from the grouped formula over distinct part
sizes.  The module also provides the part quotient matrix, interlacing
intervals for the positive eigenvalues, and the Rayleigh upper bound on
the least eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import (
    ConsistencyError,
    DimensionError,
    EmptyPartitionError,
    InvalidPartitionError,
    ZeroVectorError,
)
from .exactalg import IntMatrix, IntPoly, elementary_symmetric, sigma_l


class Partition:
    """Multiset of positive part sizes, stored non-increasing."""

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]) -> None:
        try:
            ps = tuple(sorted((int(p) for p in parts), reverse=True))
        except (TypeError, ValueError) as exc:
            raise InvalidPartitionError(f"parts must be integers: {exc}") from None
        if not ps:
            raise EmptyPartitionError("a partition needs at least one part")
        if ps[-1] < 1:
            raise InvalidPartitionError(f"parts must be >= 1, got {ps}")
        self.parts = ps

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"`` or grouped ``"2*3,1*2"`` (count*size) or a mix."""
        parts: list[int] = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise InvalidPartitionError(f"empty part in {text!r}")
            if "*" in token:
                left, _, right = token.partition("*")
                try:
                    count, size = int(left), int(right)
                except ValueError:
                    raise InvalidPartitionError(f"bad grouped part {token!r}") from None
                if count < 1:
                    raise InvalidPartitionError(f"part multiplicity must be >= 1 in {token!r}")
                parts.extend([size] * count)
            else:
                try:
                    parts.append(int(token))
                except ValueError:
                    raise InvalidPartitionError(f"bad part {token!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        """Total number of vertices."""
        return sum(self.parts)

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def grouped(self) -> tuple[tuple[int, int], ...]:
        """Distinct sizes with multiplicities, sizes decreasing."""
        out: list[tuple[int, int]] = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return tuple(out)

    def grouped_str(self) -> str:
        return ",".join(f"{r}*{s}" for s, r in self.grouped())

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


def _linear(size: int) -> IntPoly:
    # the factor x + 1 - 2*size
    return IntPoly([1 - 2 * size, 1])


@dataclass(frozen=True)
class FactoredSeidelPoly:
    """A Seidel characteristic polynomial kept in factored form.

    expanded == (x+1)^ones_exponent * prod (x+1-2m)^e * residual, exactly;
    the expanded polynomial is monic of full degree.  ``linear_factors``
    holds (part size m, exponent) pairs.
    """

    ones_exponent: int
    linear_factors: tuple[tuple[int, int], ...]
    residual: IntPoly
    expanded: IntPoly

    @classmethod
    def assemble(
        cls,
        ones_exponent: int,
        linear_factors: Sequence[tuple[int, int]],
        residual: IntPoly,
        order: int,
    ) -> "FactoredSeidelPoly":
        full = IntPoly([1, 1]) ** ones_exponent * residual
        for size, exp in linear_factors:
            full = full * _linear(size) ** exp
        if full.degree != order or not full.is_monic():
            raise ConsistencyError(
                f"assembled polynomial has degree {full.degree}, expected monic of degree {order}"
            )
        return cls(ones_exponent, tuple(linear_factors), residual, full)

    def factored_str(self, var: str = "x") -> str:
        pieces: list[str] = []
        if self.ones_exponent:
            e = f"^{self.ones_exponent}" if self.ones_exponent > 1 else ""
            pieces.append(f"({var}+1){e}")
        for size, exp in self.linear_factors:
            e = f"^{exp}" if exp > 1 else ""
            pieces.append(f"({_linear(size).to_string(var)}){e}")
        if self.residual != IntPoly([1]) or not pieces:
            pieces.append(f"({self.residual.to_string(var)})")
        return " * ".join(pieces)


def quotient_matrix(p: Partition) -> IntMatrix:
    """Quotient of the Seidel matrix under the partition into parts.

    Entry (i,i) is n_i - 1 (vertices inside a part are non-adjacent, Seidel
    +1, zero diagonal); entry (i,j) is -n_j for i != j (all cross pairs
    adjacent, Seidel -1).  The partition into parts is equitable, so the
    quotient spectrum is a sub-multiset of the Seidel spectrum.
    """
    ns = p.parts
    k = p.k
    return IntMatrix(
        [[ns[i] - 1 if i == j else -ns[j] for j in range(k)] for i in range(k)]
    )


def _product_residual(parts: Sequence[int]) -> IntPoly:
    lins = [_linear(m) for m in parts]
    total = IntPoly([1])
    for lin in lins:
        total = total * lin
    acc = total
    for i, m in enumerate(parts):
        other = IntPoly([1])
        for j, lin in enumerate(lins):
            if j != i:
                other = other * lin
        acc = acc + other * m
    return acc


def _flat_residual(parts: Sequence[int]) -> IntPoly:
    k = len(parts)
    sig = elementary_symmetric(parts)
    out = [0] * (k + 1)
    for m in range(k + 1):
        c = comb(k, m)
        for i in range(1, m + 1):
            term = (1 << (i - 1)) * (i - 2) * comb(k - i, m - i) * sig[i]
            c += term if (i - 1) % 2 == 0 else -term
        out[k - m] = c
    return IntPoly(out)


def _grouped_residual(sizes: Sequence[int], mults: Sequence[int]) -> IntPoly:
    s = len(sizes)
    sig = elementary_symmetric(sizes)
    weight = [-2 * e for e in sig]
    for l in range(1, s + 1):
        sl = sigma_l(sizes, l)
        r = mults[l - 1]
        for i in range(s + 1):
            weight[i] += r * sl[i]
    out = [0] * (s + 1)
    for m in range(s + 1):
        c = comb(s, m)
        for i in range(1, m + 1):
            term = (1 << (i - 1)) * comb(s - i, m - i) * weight[i]
            c += term if (i - 1) % 2 == 0 else -term
        out[s - m] = c
    return IntPoly(out)


def charpoly_product(p: Partition) -> FactoredSeidelPoly:
    """Seidel characteristic polynomial via the cleared-denominator product.

    The degree-k residual is prod(x+1-2n_i) + sum_i n_i prod_{j!=i}(x+1-2n_j);
    the rational form with denominators is never evaluated, so coinciding
    eigenvalues cause no poles and everything stays exact.
    """
    residual = _product_residual(p.parts)
    return FactoredSeidelPoly.assemble(p.n - p.k, (), residual, p.n)


def charpoly_coefficients(p: Partition) -> FactoredSeidelPoly:
    """Same polynomial from the explicit coefficient formula.

    The residual coefficient of x^(k-m) is
    C(k,m) + sum_{i=1..m} (-1)^(i-1) 2^(i-1) (i-2) C(k-i,m-i) sigma_i;
    the i=0 term contributes the bare binomial C(k,m) and the i=2 term
    vanishes because of the factor (i-2), so sigma_2 never appears.
    """
    return FactoredSeidelPoly.assemble(p.n - p.k, (), _flat_residual(p.parts), p.n)


def charpoly_grouped_coefficients(p: Partition) -> FactoredSeidelPoly:
    """Same polynomial grouped by distinct part sizes.

    Each distinct size m with multiplicity r contributes a factor
    (x+1-2m)^(r-1); the remaining degree-s residual has coefficient of
    x^(s-m) equal to
    C(s,m) + sum_{i=1..m} (-1)^(i-1) 2^(i-1) C(s-i,m-i) w_i
    with w_i = sum_l r_l sigma_{l,i} - 2 sigma_i over the distinct sizes.
    """
    g = p.grouped()
    sizes = [s for s, _ in g]
    mults = [r for _, r in g]
    factors = tuple((s, r - 1) for s, r in g if r >= 2)
    residual = _grouped_residual(sizes, mults)
    return FactoredSeidelPoly.assemble(p.n - p.k, factors, residual, p.n)


@dataclass(frozen=True)
class EigenvalueBound:
    """Upper bound on the least Seidel eigenvalue, with exact pieces.

    value = rational + sqrt_coefficient * sum(sqrt(r) for r in radicands).
    The float is accurate to about 1e-12 relative error; the exact pieces
    allow symbolic comparison when the radicands are perfect squares.
    """

    value: float
    rational: Fraction
    sqrt_coefficient: Fraction
    radicands: tuple[int, ...]


def least_eigenvalue_bound(p: Partition) -> EigenvalueBound:
    """Rayleigh upper bound n/k - 1 - (2/k) sum_{i<j} sqrt(n_i n_j)."""
    ns = p.parts
    k = p.k
    radicands = tuple(
        sorted(ns[i] * ns[j] for i in range(k) for j in range(i + 1, k))
    )
    rational = Fraction(p.n, k) - 1
    coef = Fraction(-2, k)
    value = p.n / k - 1.0 - (2.0 / k) * math.fsum(math.sqrt(r) for r in radicands)
    return EigenvalueBound(value, rational, coef, radicands)


def symmetrize_quotient(b: IntMatrix, p: Partition) -> list[list[float]]:
    """Similarity transform of the quotient by diag(1/sqrt(n_i)).

    Entry (i,j) becomes b_ij * sqrt(n_i / n_j); off the diagonal this is
    -sqrt(n_i n_j), so the result is symmetric (up to rounding) with the
    same spectrum as the quotient.
    """
    ns = p.parts
    k = p.k
    if b.n != k:
        raise DimensionError(f"quotient has dimension {b.n}, partition has {k} parts")
    return [
        [b.rows[i][j] * math.sqrt(ns[i] / ns[j]) for j in range(k)]
        for i in range(k)
    ]


def rayleigh_quotient(m: Sequence[Sequence[float]], x: Sequence[float]) -> float:
    """x^T M x / x^T x for a real symmetric matrix."""
    if all(v == 0 for v in x):
        raise ZeroVectorError("Rayleigh quotient of the zero vector")
    num = 0.0
    for i, row in enumerate(m):
        num += x[i] * math.fsum(row[j] * x[j] for j in range(len(x)))
    den = math.fsum(v * v for v in x)
    return num / den


@dataclass(frozen=True)
class SpectralStructure:
    """Counts and interval bounds for the Seidel spectrum of a partition.

    ``intervals[i]`` is the closed range [2 n_{i+2} - 1, 2 n_{i+1} - 1]
    containing the (i+1)-th largest positive eigenvalue (parts sorted
    non-increasing).  For one or two parts all remaining eigenvalues equal
    -1; for more than two parts the least eigenvalue is simple and lies
    strictly below -1.
    """

    intervals: tuple[tuple[int, int], ...]
    positive_count: int
    minus_one_multiplicity: int
    least_is_simple_below_minus_one: bool


def eigenvalue_intervals(p: Partition) -> SpectralStructure:
    """Interlacing intervals and multiplicity structure for the partition."""
    ns = p.parts
    k = p.k
    n = p.n
    intervals = tuple((2 * ns[i + 1] - 1, 2 * ns[i] - 1) for i in range(k - 1))
    if k <= 2:
        # one part: spectrum of J - I; two parts: switching equivalent to it
        minus_one = n - 1
        positives = k - 1 if k == 2 else (1 if n >= 2 else 0)
    else:
        minus_one = n - k
        positives = k - 1
    return SpectralStructure(
        intervals=intervals,
        positive_count=positives,
        minus_one_multiplicity=minus_one,
        least_is_simple_below_minus_one=k > 2,
    )
