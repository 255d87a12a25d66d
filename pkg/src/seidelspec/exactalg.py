"""Exact integer polynomial and matrix algebra.

Coefficients and entries are Python ints, so everything in this module is
exact; no floating point is used anywhere here.  Values are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError, ExactDivisionError, NonMonicError


class IntPoly:
    """Dense univariate polynomial over the integers.

    ``coeffs[i]`` is the coefficient of x^i.  Trailing zeros are stripped on
    construction, so the zero polynomial has ``coeffs == ()`` and every
    nonzero polynomial has a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        """The monic polynomial with the given integer roots (with multiplicity)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-int(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly('{self.to_string()}')"

    def _coerce(self, other) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return None

    def __add__(self, other) -> "IntPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "IntPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "IntPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero() or q.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divexact(self, other) -> "IntPoly":
        """Exact quotient over the integers.

        Raises ExactDivisionError unless ``other`` divides ``self`` exactly
        in Z[x] (zero remainder, integer quotient).
        """
        d = self._coerce(other)
        if d is None:
            raise TypeError(f"cannot divide by {other!r}")
        if d.is_zero():
            raise ExactDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPoly()
        if self.degree < d.degree:
            raise ExactDivisionError(f"{d!r} does not divide {self!r}")
        rem = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        qlen = len(rem) - len(dc) + 1
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(dc) - 1]
            if c == 0:
                continue
            t, r = divmod(c, lead)
            if r:
                raise ExactDivisionError(f"{d!r} does not divide {self!r}")
            quot[i] = t
            for j, dcj in enumerate(dc):
                rem[i + j] -= t * dcj
        if any(rem):
            raise ExactDivisionError(f"{d!r} does not divide {self!r}")
        return IntPoly(quot)

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, float, Fraction, IntPoly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_string(self, var: str = "x") -> str:
        """Human form like ``x^3-3x^2-9x+19``."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" + (f"^{i}" if i > 1 else "")
            parts.append(sign + body)
        return "".join(parts)


class IntMatrix:
    """Square matrix of Python ints, immutable after construction."""

    __slots__ = ("n", "rows")

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        rs = tuple(tuple(int(v) for v in row) for row in rows)
        for row in rs:
            if len(row) != len(rs):
                raise DimensionError(
                    f"matrix must be square, got row of length {len(row)} in a {len(rs)}-row matrix"
                )
        self.n = len(rs)
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def charpoly_oracle(matrix) -> IntPoly:
    """Exact monic characteristic polynomial det(xI - M).

    Faddeev-LeVerrier recurrence.  For an integer matrix every division by
    the step index is exact over the integers, which is checked; the result
    is independent of any closed form elsewhere in this package.
    """
    m = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
    n = m.n
    if n == 0:
        return IntPoly([1])
    a = [list(r) for r in m.rows]
    coeffs = [1]
    work = [row[:] for row in a]
    for k in range(1, n + 1):
        t = sum(work[i][i] for i in range(n))
        q, r = divmod(-t, k)
        if r:
            raise ArithmeticError("trace recurrence produced a non-integer coefficient")
        coeffs.append(q)
        if k == n:
            break
        for i in range(n):
            work[i][i] += q
        work = _matmul(a, work)
    return IntPoly(reversed(coeffs))


def elementary_symmetric(values: Sequence[int]) -> list[int]:
    """All elementary symmetric functions [e_0, ..., e_k] of ``values``.

    Computed with the product recurrence for prod(1 + v t); e_0 is 1 even
    for empty input.
    """
    sig = [1]
    for v in values:
        sig.append(0)
        for i in range(len(sig) - 1, 0, -1):
            sig[i] += v * sig[i - 1]
    return sig


def sigma_l(values: Sequence[int], l: int) -> list[int]:
    """Symmetric functions restricted to terms containing ``values[l-1]``.

    ``l`` is 1-based.  Entry i (for i >= 1) is values[l-1] times the
    elementary symmetric function of degree i-1 over the other values;
    entry 0 is 0 by convention.  The returned list has len(values)+1
    entries.
    """
    if not 1 <= l <= len(values):
        raise IndexError(f"l={l} out of range for {len(values)} values")
    v = values[l - 1]
    rest = list(values[: l - 1]) + list(values[l:])
    return [0] + [v * e for e in elementary_symmetric(rest)]


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def integer_root_multiset(p: IntPoly):
    """All integer roots with multiplicity, or None if p does not split.

    Requires p monic.  Zero roots are peeled off first; the remaining
    candidates are divisors of the constant term, each removed by exact
    deflation and retried so multiplicities come out right.  Returns a
    sorted tuple when p factors completely as a product of (x - a_i) with
    integer a_i, otherwise None.
    """
    if p.is_zero() or not p.is_monic():
        raise NonMonicError("integer root extraction requires a monic polynomial")
    roots: list[int] = []
    work = p
    x = IntPoly([0, 1])
    while work.degree > 0 and work.coeffs[0] == 0:
        roots.append(0)
        work = work.divexact(x)
    if work.degree > 0:
        # Every remaining root divides the current constant term, which in
        # turn divides the original one, so one divisor list suffices.
        for d in _divisors(work.coeffs[0]):
            for cand in (d, -d):
                while work.degree > 0 and work(cand) == 0:
                    roots.append(cand)
                    work = work.divexact(IntPoly([-cand, 1]))
    if work.degree != 0:
        return None
    return tuple(sorted(roots))
