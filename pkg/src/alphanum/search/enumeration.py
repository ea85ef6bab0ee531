"""Sieve-driven enumeration and counting of classified integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from ..classify import Classification, Order, Verdict, _verdict
from ..exact import (
    Factorization,
    ReducedRatio,
    SieveTable,
    divisor_stats,
    reduce_ratio,
    shared_sieve,
    sigma_k_exact,
)

Parity = Literal["odd", "even", "all"]

ALL_BANDS = frozenset({Verdict.STRONG, Verdict.WEAK, Verdict.VERY_WEAK})


@dataclass(frozen=True)
class AlphaRecord:
    """One enumerated hit: the unit of CLI, report, and service output."""

    n: int
    factorization: Factorization
    sigma: int
    ratio: ReducedRatio
    classification: Classification
    order: Order
    variant: str

    def __post_init__(self) -> None:
        if self.ratio != self.classification.ratio:
            raise ValueError("record ratio disagrees with its classification")


def _parity_ok(n: int, parity: Parity) -> bool:
    if parity == "odd":
        return n % 2 == 1
    if parity == "even":
        return n % 2 == 0
    return True


def enumerate_range(
    sieve: SieveTable,
    lo: int,
    hi: int,
    order: Order,
    classes: Iterable[Verdict] = ALL_BANDS,
    parity: Parity = "all",
) -> list[AlphaRecord]:
    """Classify every n in [lo, hi) and keep those whose verdict is requested.

    Ranges over disjoint partitions merge to the full enumeration, so this is
    the partition-safe primitive behind :func:`enumerate_alpha`.
    """
    under, upper = order.exact_pair()
    wanted = frozenset(classes)
    records = []
    sigma1 = sieve.sigma1
    for n in range(max(lo, 1), min(hi, sieve.bound + 1)):
        if not _parity_ok(n, parity):
            continue
        f = sieve.factor(n)
        if under == 1:
            sigma = int(sigma1[n])
        else:
            sigma = sigma_k_exact(f, under)
        ratio = reduce_ratio(sigma, n**upper)
        stats = divisor_stats(f)
        verdict = _verdict(ratio.max_component, stats.omega, stats.tau, n)
        if verdict not in wanted:
            continue
        cls = Classification(verdict, ratio, stats.omega, stats.tau, "exact", False)
        records.append(AlphaRecord(n, f, sigma, ratio, cls, order, "exact"))
    return records


def enumerate_alpha(
    bound: int,
    order: Order,
    classes: Iterable[Verdict] = ALL_BANDS,
    parity: Parity = "all",
    sieve: SieveTable | None = None,
) -> list[AlphaRecord]:
    """All n <= bound whose exact classification lands in ``classes``.

    Output is ascending in n and deterministic.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    table = sieve if sieve is not None else shared_sieve(bound)
    return enumerate_range(table, 2, bound + 1, order, classes, parity)


@dataclass(frozen=True)
class BandCounts:
    strong: int
    weak: int
    very_weak: int
    not_alpha: int

    def of(self, verdict: Verdict) -> int:
        return {
            Verdict.STRONG: self.strong,
            Verdict.WEAK: self.weak,
            Verdict.VERY_WEAK: self.very_weak,
            Verdict.NOT_ALPHA: self.not_alpha,
        }[verdict]


def count_alpha(
    bound: int,
    order: Order,
    parity: Parity = "all",
    sieve: SieveTable | None = None,
) -> BandCounts:
    """Per-band counts over 2..bound; matches enumerate_alpha cardinalities."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    table = sieve if sieve is not None else shared_sieve(bound)
    under, upper = order.exact_pair()
    tally = {v: 0 for v in Verdict}
    sigma1 = table.sigma1
    for n in range(2, bound + 1):
        if not _parity_ok(n, parity):
            continue
        f = table.factor(n)
        sigma = int(sigma1[n]) if under == 1 else sigma_k_exact(f, under)
        ratio = reduce_ratio(sigma, n**upper)
        stats = divisor_stats(f)
        tally[_verdict(ratio.max_component, stats.omega, stats.tau, n)] += 1
    return BandCounts(
        tally[Verdict.STRONG],
        tally[Verdict.WEAK],
        tally[Verdict.VERY_WEAK],
        tally[Verdict.NOT_ALPHA],
    )
