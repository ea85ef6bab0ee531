"""Seed-pruned search for odd strong alpha numbers.

The search fixes the least prime p* of a candidate and grows it one prime
power at a time. Two layers live here:

* the seed/viability machinery (:func:`build_seeds`, :func:`chi_alpha`),
  which reconstructs the published pruning tables: forced odd primes are
  extracted from divisor sums of the components already chosen, and a
  candidate family dies on a forced prime below p*, a forced even factor,
  or overflow of the bound;

* :func:`seed_search_odd`, an independent depth-first search over all odd
  factorizations up to the bound using only provably sound prunes. Its
  contract is to return exactly what the sieve enumeration returns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from ..classify import Order, classify_exact
from ..exact import (
    Factorization,
    factorize,
    iter_primes,
    reduce_ratio,
    sigma_k_exact,
)
from .enumeration import AlphaRecord

PruneReason = Literal[
    "forced-smaller-prime", "exceeds-bound", "forced-even-factor", "viable"
]


@dataclass(frozen=True)
class AlphaSeed:
    """A partial odd candidate: generator prime power times forced factors."""

    generator: tuple[int, int]  # (p_star, lambda_star)
    factors: Factorization
    length: int  # number of distinct adjoined primes
    bound: int

    def __post_init__(self) -> None:
        p_star, lam = self.generator
        parts = dict(self.factors.parts)
        if parts.get(p_star, 0) < lam:
            raise ValueError("generator power must divide the seed")
        if self.factors.n % 2 == 0:
            raise ValueError("seeds are odd")
        if self.factors.parts and self.factors.parts[0][0] != p_star:
            raise ValueError("generator prime must be the least prime of the seed")
        if self.factors.n > self.bound:
            raise ValueError("seed exceeds its bound")

    @property
    def value(self) -> int:
        return self.factors.n


@dataclass(frozen=True)
class VirtualAlpha:
    """The minimal integer a seed forces, with its viability verdict."""

    seed: AlphaSeed
    value: int  # n-bar: seed value times all forced prime powers
    chi: int
    reason: PruneReason

    def __post_init__(self) -> None:
        if (self.chi == 0) != (self.reason != "viable"):
            raise ValueError("chi must be 0 exactly for pruned reasons")


def _sigma_pp(p: int, e: int) -> int:
    return (p ** (e + 1) - 1) // (p - 1)


def _next_odd_primes(after: int, count: int) -> list[int]:
    out = []
    for q in iter_primes(max(2 * after + 100, 100)):  # Bertrand leaves headroom
        if q > after and q % 2 == 1:
            out.append(q)
            if len(out) == count:
                return out
    raise RuntimeError("prime supply exhausted")


def lambda_cap(p_star: int, bound: int) -> int:
    """Largest lambda with p*^lambda times the next two odd primes <= bound."""
    q1, q2 = _next_odd_primes(p_star, 2)
    lam = 0
    power = p_star
    while power * q1 * q2 <= bound:
        lam += 1
        power *= p_star
    return lam


def omega_cap(parts: dict[int, int], value: int, p_star: int, bound: int) -> int:
    """Max omega(n) over odd n <= bound divisible by ``value`` with all primes >= p*.

    Greedy: adjoin the smallest unused primes >= p* while the product fits.
    """
    cap = len(parts)
    extra = value
    for q in iter_primes(bound):
        if q < p_star or q % 2 == 0 or q in parts:
            continue
        if extra * q > bound:
            break
        extra *= q
        cap += 1
    return cap


def generator_table(bound: int) -> list[tuple[int, int, int]]:
    """(p*, lambda cap, omega threshold) for each admissible odd generator prime.

    A prime is admissible while it still fits with the next two odd primes
    under the bound, mirroring how the published cap table was derived.
    """
    rows = []
    for p in iter_primes(bound):
        if p == 2:
            continue
        lam = lambda_cap(p, bound)
        if lam == 0:
            break
        g = p**lam
        rows.append((p, lam, omega_cap({p: lam}, g, p, bound)))
    return rows


def _extraction_threshold(p_star: int, bound: int) -> int:
    """Omega threshold used when extracting forced primes for a p* branch."""
    lam = lambda_cap(p_star, bound)
    if lam == 0:
        raise ValueError(f"no admissible generator for p* = {p_star} under {bound}")
    return omega_cap({p_star: lam}, p_star**lam, p_star, bound)


def build_seeds(generator: tuple[int, int], bound: int) -> list[AlphaSeed]:
    """Grow all seeds for one generator, by iterated forced-prime extraction.

    Starting from sigma of the generator, every odd prime power above the
    branch's omega threshold must divide any candidate, so its prime joins
    the seed (at the extracted exponent or higher); sigma of each extracted
    component is processed the same way. A forced prime below p* kills the
    generator outright. Seeds are returned ascending by value.
    """
    p_star, lam = generator
    if p_star % 2 == 0 or not _is_small_prime(p_star):
        raise ValueError("generator prime must be an odd prime")
    g = p_star**lam
    if g > bound:
        return []
    threshold = _extraction_threshold(p_star, bound)

    forced: dict[int, int] = {}
    queue: list[tuple[int, int]] = [(p_star, lam)]
    seen = {p_star}
    while queue:
        q, e = queue.pop(0)
        for r, v in factorize(_sigma_pp(q, e)).parts:
            if r == 2 or r in seen:
                continue
            if r > threshold:
                if r < p_star:
                    return []  # contradicts p* being the least prime
                seen.add(r)
                forced[r] = v
                queue.append((r, v))

    values = [g]
    for r, min_exp in sorted(forced.items()):
        grown = []
        for base in values:
            e = min_exp
            while base * r**e <= bound:
                grown.append(base * r**e)
                e += 1
        values = grown
    length = len(forced)
    return [
        AlphaSeed(generator, factorize(v), length, bound) for v in sorted(values)
    ]


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


def chi_alpha(seed: AlphaSeed, bound: int | None = None) -> VirtualAlpha:
    """Decide whether a seed can still grow into an odd strong alpha number.

    The forced set consists of the odd prime powers of sigma(seed) that are
    coprime to the seed and whose prime exceeds the branch omega cap (such a
    prime cannot divide the ratio numerator, hence must divide n). Prune
    order: a forced prime below p*, then the forced minimum exceeding the
    bound, then an even part too large for the numerator allowance.
    """
    limit = bound if bound is not None else seed.bound
    p_star = seed.generator[0]
    parts = dict(seed.factors.parts)
    cap = omega_cap(parts, seed.value, p_star, limit)

    sigma_fact: dict[int, int] = {}
    for q, e in seed.factors.parts:
        for r, v in factorize(_sigma_pp(q, e)).parts:
            sigma_fact[r] = sigma_fact.get(r, 0) + v

    forced = {
        r: v
        for r, v in sigma_fact.items()
        if r != 2 and r not in parts and r > cap
    }
    n_bar = seed.value * math.prod(r**v for r, v in forced.items())

    if any(r < p_star for r in forced):
        return VirtualAlpha(seed, n_bar, 0, "forced-smaller-prime")
    if n_bar > limit:
        return VirtualAlpha(seed, n_bar, 0, "exceeds-bound")
    if 2 ** sigma_fact.get(2, 0) > cap:
        return VirtualAlpha(seed, n_bar, 0, "forced-even-factor")
    return VirtualAlpha(seed, n_bar, 1, "viable")


# ---------------------------------------------------------------------------
# rigorous pruned depth-first search


@dataclass
class SearchStats:
    nodes: int = 0
    pruned_bound: int = 0
    pruned_even: int = 0
    pruned_forced: int = 0
    pruned_abundancy: int = 0
    hits: list[int] = field(default_factory=list)


def _prime_power_search(
    bound: int,
    primes: list[int],
    odd_rules: bool,
    stats: SearchStats,
) -> list[int]:
    """DFS for strong hits of order (1,1) over ascending prime-power products.

    Every prune is sound for the strong band (ratio numerator <= omega(n)):

    * omega cap: at most omega(u) plus however many unused larger primes fit;
    * abundancy: sigma(u)/u only grows, and the numerator is at least it;
    * forced primes: an odd prime of sigma(u) coprime to u and above the cap
      must divide n, so it must still be adjoinable and fit;
    * 2-adic (odd candidates only): for odd n the full 2-power of sigma(n)
      divides the numerator, and sigma(u) already contributes its share.

    No prune can hide the node itself: each one implies the node's own
    numerator already exceeds the cap.
    """
    hits: list[int] = []

    def omega_max(u: int, parts_len: int, last_idx: int) -> int:
        cap = parts_len
        extra = u
        for j in range(last_idx + 1, len(primes)):
            q = primes[j]
            if extra * q > bound:
                break
            extra *= q
            cap += 1
        return cap

    def visit(u: int, sigma_u: int, parts_len: int, last_idx: int) -> None:
        stats.nodes += 1
        cap = omega_max(u, parts_len, last_idx)

        # numerator >= sigma(n)/n >= sigma(u)/u
        if sigma_u > cap * u:
            stats.pruned_abundancy += 1
            return

        sig_fact = factorize(sigma_u)
        if odd_rules:
            v2 = dict(sig_fact.parts).get(2, 0)
            if 2**v2 > cap:
                stats.pruned_even += 1
                return

        forced_product = 1
        for r, v in sig_fact.parts:
            if r == 2 or u % r == 0 or r <= cap:
                continue
            if r <= primes[last_idx]:
                stats.pruned_forced += 1
                return  # r must divide n but can no longer be adjoined
            forced_product *= r**v
        if forced_product > 1 and u * forced_product > bound:
            stats.pruned_forced += 1
            return

        if parts_len >= 2:
            ratio = reduce_ratio(sigma_u, u)
            if 2 <= ratio.max_component <= parts_len:
                hits.append(u)
                stats.hits.append(u)

        for j in range(last_idx + 1, len(primes)):
            q = primes[j]
            if u * q > bound:
                break
            qe = q
            sigma_qe = 1 + q
            while u * qe <= bound:
                visit(u * qe, sigma_u * sigma_qe, parts_len + 1, j)
                qe *= q
                sigma_qe += qe

    for i, p in enumerate(primes):
        if p * (primes[i + 1] if i + 1 < len(primes) else bound + 1) > bound:
            break
        pe = p
        sigma_pe = 1 + p
        while pe <= bound:
            visit(pe, sigma_pe, 1, i)
            pe *= p
            sigma_pe += pe
    return sorted(hits)


def seed_search_odd(
    bound: int,
    stats: SearchStats | None = None,
) -> list[AlphaRecord]:
    """All odd strong alpha numbers of order (1,1) up to ``bound``.

    Found by the pruned depth-first search; the result must agree with the
    sieve enumeration (both are expected to be empty below 10**5).
    """
    if bound < 9:
        raise ValueError("bound must be >= 9")
    order = Order.exact(1, 1)
    odd_primes = [p for p in iter_primes(bound // 3 + 1) if p % 2 == 1]
    run_stats = stats if stats is not None else SearchStats()
    values = _prime_power_search(bound, odd_primes, True, run_stats)
    records = []
    for n in values:
        f = factorize(n)
        cls = classify_exact(f, order)
        records.append(
            AlphaRecord(n, f, sigma_k_exact(f, 1), cls.ratio, cls, order, "exact")
        )
    return records


def strong_search_all(bound: int, stats: SearchStats | None = None) -> list[int]:
    """Strong alpha numbers of order (1,1) up to bound, any parity, via DFS.

    Exercises the same machinery as :func:`seed_search_odd` but with the
    prime 2 admitted (the odd-only 2-adic prune is disabled); used to verify
    that the search actually finds strong numbers when they exist.
    """
    if bound < 6:
        raise ValueError("bound must be >= 6")
    primes = list(iter_primes(bound // 2 + 1))
    run_stats = stats if stats is not None else SearchStats()
    return _prime_power_search(bound, primes, False, run_stats)
