"""Spectral determination searches over the complete multipartite family.

Partition recovery inverts the coefficient formula (every sigma except
sigma_2 is forced; sigma_2 is enumerated), cospectral classes group the
family by exact characteristic polynomial, and the exhaustive survey walks
every labeled graph at tiny orders to confirm that anything cospectral
with a complete multipartite graph is switching equivalent to it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import (
    CapExceededError,
    ConsistencyError,
    NonMonicError,
    TheoremViolationError,
)
from .exactalg import IntPoly, charpoly_oracle, integer_root_multiset
from .graphs import (
    ENUMERATION_CAP,
    Graph,
    _cut_edges_mask,
    _pair_index,
    complete_multipartite,
    normalize_at,
    seidel_matrix,
    switching_equivalent,
)
from .multipartite import (
    Partition,
    charpoly_coefficients,
    charpoly_product,
)
from .spectra import exact_root_multiplicity, roots_in_open_interval

COSPECTRAL_CAP = 30


def partitions_of(n: int, k: int | None = None) -> Iterator[Partition]:
    """Partitions of n (optionally into exactly k parts), descending lex order."""
    if n < 1:
        return

    def rec(remaining: int, largest: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            if k is None or len(prefix) == k:
                yield Partition(prefix)
            return
        if k is not None and len(prefix) >= k:
            return
        for part in range(min(largest, remaining), 0, -1):
            if k is not None and remaining - part < k - len(prefix) - 1:
                continue
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def recover_partitions(residual: IntPoly, n: int | None = None) -> list[Partition]:
    """All partitions whose degree-k residual equals the given polynomial.

    sigma_1 = n is read off the x^(k-1) coefficient and sigma_3..sigma_k
    follow from a triangular system (the x^(k-m) coefficient pins sigma_m
    with a nonzero factor for every m >= 3).  sigma_2 never appears, so it
    is enumerated from C(k,2) (all parts at least 1) up to the Maclaurin
    bound; each candidate power-sum polynomial that splits into positive
    integers is kept after reproducing the residual exactly.  An empty list
    means no partition matches.
    """
    if residual.is_zero() or not residual.is_monic():
        raise NonMonicError("residual must be monic and nonzero")
    k = residual.degree
    if k < 1:
        return []
    c = [residual.coeffs[k - m] for m in range(k + 1)]
    sig1 = k - c[1]
    if n is not None and n != sig1:
        return []
    if sig1 < k:
        return []
    if k >= 2 and c[2] != comb(k, 2) - (k - 1) * sig1:
        return []
    sig: dict[int, int] = {0: 1, 1: sig1}
    for m in range(3, k + 1):
        rhs = c[m] - comb(k, m) + comb(k - 1, m - 1) * sig1
        for i in range(3, m):
            t = (1 << (i - 1)) * (i - 2) * comb(k - i, m - i) * sig[i]
            rhs -= t if (i - 1) % 2 == 0 else -t
        am = (1 << (m - 1)) * (m - 2)
        if (m - 1) % 2 == 1:
            am = -am
        q, r = divmod(rhs, am)
        if r:
            return []
        sig[m] = q
    if k < 2:
        sig2_values: range | list[int] = [0]
    else:
        lo = comb(k, 2)
        hi = (sig1 * sig1 * (k - 1)) // (2 * k)
        sig2_values = range(lo, hi + 1)
    found: set[Partition] = set()
    for sig2 in sig2_values:
        coeffs = [0] * (k + 1)
        for i in range(k + 1):
            v = sig2 if i == 2 else sig[i]
            coeffs[k - i] = v if i % 2 == 0 else -v
        roots = integer_root_multiset(IntPoly(coeffs))
        if roots is None or roots[0] < 1:
            continue
        cand = Partition(roots)
        if charpoly_coefficients(cand).residual == residual:
            found.add(cand)
    return sorted(found)


@dataclass(frozen=True)
class CospectralClass:
    """Partitions sharing one exact Seidel characteristic polynomial."""

    charpoly: IntPoly
    partitions: tuple[Partition, ...]

    @property
    def degenerate_bipartite(self) -> bool:
        """True when every member has at most two parts (one switching class)."""
        return all(p.k <= 2 for p in self.partitions)


def _charpoly_keys_task(parts_list: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [charpoly_product(Partition(parts)).expanded.coeffs for parts in parts_list]


def cospectral_classes(
    n: int, k: int | None = None, jobs: int = 1
) -> list[CospectralClass]:
    """Group all partitions of n (optionally with k parts) by exact spectrum.

    With jobs > 1 the per-partition polynomials are computed in parallel
    shards and merged in the original deterministic order.  Partitions
    with different part counts, at least one above two, must never share a
    polynomial (their -1 multiplicities differ); that is checked, not
    assumed.
    """
    if n > COSPECTRAL_CAP:
        raise CapExceededError(
            f"cospectral search is capped at order {COSPECTRAL_CAP}, got {n}"
        )
    plist = list(partitions_of(n, k))
    if jobs > 1 and len(plist) >= 64:
        chunk = max(16, len(plist) // (4 * jobs))
        tasks = [
            [p.parts for p in plist[lo : lo + chunk]]
            for lo in range(0, len(plist), chunk)
        ]
        keys: list[tuple[int, ...]] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_charpoly_keys_task, tasks):
                keys.extend(part)
    else:
        keys = [charpoly_product(p).expanded.coeffs for p in plist]
    groups: dict[tuple[int, ...], list[Partition]] = {}
    for p, key in zip(plist, keys):
        groups.setdefault(key, []).append(p)
    classes = [
        CospectralClass(IntPoly(key), tuple(sorted(ps))) for key, ps in groups.items()
    ]
    classes.sort(key=lambda cls: cls.partitions)
    for cls in classes:
        ks = {p.k for p in cls.partitions}
        if len(ks) > 1 and max(ks) > 2:
            raise TheoremViolationError(
                "partitions with different part counts share a spectrum: "
                + "; ".join(str(p) for p in cls.partitions)
            )
    return classes


@dataclass(frozen=True)
class ForcedSizeVerdict:
    """Family-determination verdict for one partition.

    ``rule`` names the structural pattern that forces uniqueness (if any);
    ``evidence`` holds the exact checks backing it; ``mates`` lists other
    partitions with the same spectrum (same part count).
    """

    partition: Partition
    status: str
    rule: str | None
    evidence: tuple[tuple[str, bool], ...]
    mates: tuple[Partition, ...]


def forced_rule(p: Partition) -> str | None:
    """The uniqueness pattern a partition falls under, if any."""
    if p.k <= 2:
        return "bipartite"
    if any(r >= 3 for _, r in p.grouped()):
        return "repeated_size"
    if p.parts[-2:] == (1, 1):
        return "trailing_ones"
    if p.parts[-3:] == (2, 2, 1):
        return "trailing_2_2_1"
    return None


def _build_verdict(p: Partition, mates: tuple[Partition, ...]) -> ForcedSizeVerdict:
    rule = forced_rule(p)
    if rule == "bipartite":
        # all partitions into at most two parts of the same order form one
        # switching class, so the graph is determined outright
        return ForcedSizeVerdict(p, "s_determined", rule, (), mates)
    evidence: list[tuple[str, bool]] = []
    if rule is not None:
        full = charpoly_product(p).expanded
        if rule == "repeated_size":
            for size, r in p.grouped():
                if r >= 3:
                    evidence.append(
                        (
                            f"root {2 * size - 1} multiplicity >= {r - 1}",
                            exact_root_multiplicity(full, 2 * size - 1) >= r - 1,
                        )
                    )
        elif rule == "trailing_ones":
            evidence.append(("root 1 present", exact_root_multiplicity(full, 1) >= 1))
            evidence.append(
                (
                    "no root in (0,1)",
                    roots_in_open_interval(full, 0, 1, assume_real_rooted=True) == 0,
                )
            )
        elif rule == "trailing_2_2_1":
            evidence.append(("root 3 present", exact_root_multiplicity(full, 3) >= 1))
    status = "s_determined_in_family" if not mates else "cospectral_mates_in_family"
    if rule is not None:
        if mates:
            raise TheoremViolationError(
                f"{p} matches forced pattern {rule} but has cospectral mates "
                + ", ".join(str(m) for m in mates)
            )
        if not all(ok for _, ok in evidence):
            raise TheoremViolationError(f"{p}: forced pattern evidence failed")
    return ForcedSizeVerdict(p, status, rule, tuple(evidence), mates)


def check_forced_part_sizes(partition) -> ForcedSizeVerdict:
    """Verdict for one partition, recovering its cospectral family afresh."""
    p = partition if isinstance(partition, Partition) else Partition(partition)
    if p.k <= 2:
        return _build_verdict(p, ())
    family = recover_partitions(charpoly_coefficients(p).residual)
    if p not in family:
        raise ConsistencyError(f"recovery lost the partition {p}")
    mates = tuple(q for q in family if q != p)
    return _build_verdict(p, mates)


@dataclass(frozen=True)
class DeterminationReport:
    """Cospectral classes of one order plus per-partition verdicts."""

    order: int
    k_filter: int | None
    classes: tuple[CospectralClass, ...]
    shared_part_violations: tuple[tuple[Partition, Partition, int], ...]
    verdicts: tuple[ForcedSizeVerdict, ...]
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "order": str(self.order),
            "k": None if self.k_filter is None else str(self.k_filter),
            "classes": [
                {
                    "charpoly": [str(c) for c in cls.charpoly.coeffs],
                    "partitions": [str(p) for p in cls.partitions],
                    "degenerate_bipartite": cls.degenerate_bipartite,
                }
                for cls in self.classes
            ],
            "violations": [
                {"first": str(a), "second": str(b), "shared_size": str(s)}
                for a, b, s in self.shared_part_violations
            ],
            "verdicts": {str(v.partition): v.status for v in self.verdicts},
        }


def verify_shared_part_property(
    n: int, k: int | None = None, jobs: int = 1
) -> DeterminationReport:
    """Scan one order for cospectral partitions sharing a part size.

    For three or more parts, two cospectral partitions must either be
    identical or share no part size at all; any counterexample is recorded
    as a violation.  The two-part collapse is the known switching
    degeneracy and is excluded.
    """
    start = time.monotonic()
    classes = cospectral_classes(n, k, jobs=jobs)
    violations: list[tuple[Partition, Partition, int]] = []
    verdicts: list[ForcedSizeVerdict] = []
    for cls in classes:
        big = [p for p in cls.partitions if p.k >= 3]
        for a, b in combinations(big, 2):
            shared = set(a.parts) & set(b.parts)
            if shared:
                violations.append((a, b, min(shared)))
        for p in cls.partitions:
            mates = tuple(q for q in cls.partitions if q != p and q.k == p.k)
            verdicts.append(_build_verdict(p, mates))
    verdicts.sort(key=lambda v: v.partition)
    return DeterminationReport(
        order=n,
        k_filter=k,
        classes=tuple(classes),
        shared_part_violations=tuple(violations),
        verdicts=tuple(verdicts),
        elapsed=time.monotonic() - start,
    )


# ---------------------------------------------------------------------------
# exhaustive survey over all labeled graphs at tiny orders


def _survey_tables(n: int) -> tuple[list[int], list[int]]:
    # bit positions in the order-n mask: edges (0, j), and pairs among 1..n-1
    # indexed the same way as pairs of an (n-1)-vertex graph
    row_bits = [comb(j, 2) for j in range(1, n)]
    ind_bits = [
        _pair_index(u + 1, v + 1) for v in range(1, n - 1) for u in range(v)
    ]
    return row_bits, ind_bits


def _lift_descendant(n: int, dmask: int, ind_bits: list[int]) -> Graph:
    # class representative: vertex 0 isolated, rest wired per dmask
    mask = 0
    q = 0
    while dmask:
        if dmask & 1:
            mask |= 1 << ind_bits[q]
        dmask >>= 1
        q += 1
    return Graph.from_mask(n, mask)


def _descendant_key(g: Graph, ind_bits: list[int]) -> int:
    ng = normalize_at(g, 0)
    key = 0
    for q, pos in enumerate(ind_bits):
        key |= ((ng.mask >> pos) & 1) << q
    return key


def _member_graph(
    n: int, dmask: int, row_value: int, row_bits: list[int], ind_bits: list[int]
) -> Graph:
    # the unique class member whose vertex-0 row equals row_value
    rest = dmask ^ _cut_edges_mask(n - 1, row_value)
    mask = 0
    q = 0
    while rest:
        if rest & 1:
            mask |= 1 << ind_bits[q]
        rest >>= 1
        q += 1
    for t in range(n - 1):
        if (row_value >> t) & 1:
            mask |= 1 << row_bits[t]
    return Graph.from_mask(n, mask)


def _survey_scan(
    n: int, lo: int, hi: int, targets: dict[tuple[int, ...], int]
) -> list[tuple[int, int]]:
    _, ind_bits = _survey_tables(n)
    out: list[tuple[int, int]] = []
    for d in range(lo, hi):
        g = _lift_descendant(n, d, ind_bits)
        idx = targets.get(charpoly_oracle(seidel_matrix(g)).coeffs)
        if idx is not None:
            out.append((d, idx))
    return out


def _survey_scan_task(args) -> list[tuple[int, int]]:
    return _survey_scan(*args)


@dataclass(frozen=True)
class SurveyMatch:
    """All switching classes sharing the spectrum of these partitions."""

    partitions: tuple[Partition, ...]
    class_keys: tuple[int, ...]
    verified: bool


@dataclass(frozen=True)
class SurveyReport:
    """Result of the all-graphs survey at one order.

    Every labeled graph corresponds to exactly one (vertex-0 row, class
    key) pair, so walking class representatives covers all of them; the
    violation tuples must be empty.
    """

    order: int
    graph_count: int
    class_count: int
    class_size: int
    matches: tuple[SurveyMatch, ...]
    equivalence_violations: tuple[tuple[str, int], ...]
    sample_violations: tuple[tuple[int, int], ...]
    distinct_partition_violations: tuple[tuple[str, str, str], ...]
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "order": str(self.order),
            "graph_count": str(self.graph_count),
            "switching_class_count": str(self.class_count),
            "class_size": str(self.class_size),
            "matches": [
                {
                    "partitions": [str(p) for p in m.partitions],
                    "matched_classes": str(len(m.class_keys)),
                    "verified": m.verified,
                }
                for m in self.matches
            ],
            "equivalence_violations": [
                {"partition": p, "class_key": str(d)}
                for p, d in self.equivalence_violations
            ],
            "sample_violations": [
                {"class_key": str(d), "row": str(a)} for d, a in self.sample_violations
            ],
            "distinct_partition_violations": [
                {"first": a, "second": b, "kind": kind}
                for a, b, kind in self.distinct_partition_violations
            ],
        }


def exhaustive_switching_survey(n: int, jobs: int = 1) -> SurveyReport:
    """Survey every labeled graph of order n (n at most 7).

    Labeled switching classes are walked through their canonical members
    (vertex 0 isolated, one class per graph on n-1 vertices; each class
    holds exactly 2^(n-1) graphs, one per vertex-0 row).  For every class
    whose exact Seidel polynomial equals that of a complete multipartite
    partition, switching equivalence with relabeling to that graph is
    decided and recorded; sampled non-canonical members are re-checked to
    share the class spectrum.  Distinct partitions with the same number of
    parts (three or more) are also confirmed pairwise non-equivalent,
    while partitions into at most two parts are confirmed all equivalent.
    """
    if n > ENUMERATION_CAP:
        raise CapExceededError(
            f"the exhaustive survey is capped at order {ENUMERATION_CAP}, got {n}"
        )
    if n < 1:
        raise ValueError("survey needs at least one vertex")
    start = time.monotonic()
    row_bits, ind_bits = _survey_tables(n)
    class_count = 1 << comb(n - 1, 2)
    class_size = 1 << (n - 1)

    partitions = list(partitions_of(n))
    target_groups: dict[tuple[int, ...], list[Partition]] = {}
    for p in partitions:
        target_groups.setdefault(charpoly_product(p).expanded.coeffs, []).append(p)
    target_list = sorted(target_groups.items(), key=lambda item: item[1][0])
    targets = {key: i for i, (key, _) in enumerate(target_list)}

    if jobs > 1 and class_count >= 4096:
        chunk = 4096
        tasks = [
            (n, lo, min(lo + chunk, class_count), targets)
            for lo in range(0, class_count, chunk)
        ]
        matched: list[tuple[int, int]] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_survey_scan_task, tasks):
                matched.extend(part)
        matched.sort()
    else:
        matched = _survey_scan(n, 0, class_count, targets)

    # each partition's own class must show up for its spectrum
    key_sets: dict[int, set[int]] = {i: set() for i in range(len(target_list))}
    for d, idx in matched:
        key_sets[idx].add(d)
    equivalence_violations: list[tuple[str, int]] = []
    sample_violations: list[tuple[int, int]] = []
    matches: list[SurveyMatch] = []
    if class_size <= 8:
        sample_rows = list(range(1, class_size))
    else:
        sample_rows = [1, class_size // 2, class_size - 1]
    for idx, (key, ps) in enumerate(target_list):
        anchor = complete_multipartite(ps[0])
        own_key = _descendant_key(anchor, ind_bits)
        if own_key not in key_sets[idx]:
            raise ConsistencyError(
                f"class of {ps[0]} not matched to its own spectrum"
            )
        verified = True
        for d in sorted(key_sets[idx]):
            rep = _lift_descendant(n, d, ind_bits)
            if switching_equivalent(rep, anchor) is None:
                verified = False
                equivalence_violations.append((str(ps[0]), d))
            for a in sample_rows:
                member = _member_graph(n, d, a, row_bits, ind_bits)
                if charpoly_oracle(seidel_matrix(member)).coeffs != key:
                    sample_violations.append((d, a))
        matches.append(SurveyMatch(tuple(ps), tuple(sorted(key_sets[idx])), verified))

    distinct_violations: list[tuple[str, str, str]] = []
    by_k: dict[int, list[Partition]] = {}
    for p in partitions:
        by_k.setdefault(p.k, []).append(p)
    for k, ps in sorted(by_k.items()):
        if k < 3:
            continue
        for a, b in combinations(sorted(ps), 2):
            if (
                switching_equivalent(complete_multipartite(a), complete_multipartite(b))
                is not None
            ):
                distinct_violations.append((str(a), str(b), "unexpected_equivalence"))
    small = sorted(p for p in partitions if p.k <= 2)
    for a, b in zip(small, small[1:]):
        if (
            switching_equivalent(complete_multipartite(a), complete_multipartite(b))
            is None
        ):
            distinct_violations.append((str(a), str(b), "missing_equivalence"))

    return SurveyReport(
        order=n,
        graph_count=1 << comb(n, 2),
        class_count=class_count,
        class_size=class_size,
        matches=tuple(matches),
        equivalence_violations=tuple(equivalence_violations),
        sample_violations=tuple(sample_violations),
        distinct_partition_violations=tuple(distinct_violations),
        elapsed=time.monotonic() - start,
    )
