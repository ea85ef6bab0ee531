"""Exact integer arithmetic: factorization, divisor statistics, and bulk sieves.

Everything in this module works on arbitrary-precision integers; no result is
ever rounded through a float. The two entry points used by nearly everything
else are :func:`factorize` (single integers of any size) and
:func:`build_sieve` (bulk tables up to a memory-capped bound).
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import ResourceCapError

DIVISOR_CAP_DEFAULT = 10**6
SIEVE_ENTRY_CAP_DEFAULT = 10**8
MEMORY_CAP_ENV = "ALPHANUM_MEMORY_CAP"

TRIAL_PRIME_LIMIT = 10**6

# Deterministic Miller-Rabin witness set for n < 2**64.
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition of a positive integer.

    ``parts`` is a tuple of (prime, exponent) pairs with primes strictly
    increasing and every exponent >= 1; it is empty exactly for n = 1.
    """

    n: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if (self.n == 1) != (len(self.parts) == 0):
            raise ValueError("parts must be empty exactly when n = 1")
        prev = 1
        prod = 1
        for p, e in self.parts:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"parts multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    def __str__(self) -> str:
        return format_parts(self.parts) if self.parts else "1"


def format_parts(parts: tuple[tuple[int, int], ...]) -> str:
    """Render prime-power parts as ``p^e*q`` (exponent 1 omitted)."""
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in parts)


def parse_parts(text: str) -> tuple[tuple[int, int], ...]:
    """Inverse of :func:`format_parts` for "1" and ``p^e*q`` strings."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    parts = []
    for chunk in text.split("*"):
        if "^" in chunk:
            base, exp = chunk.split("^")
            parts.append((int(base), int(exp)))
        else:
            parts.append((int(chunk), 1))
    return tuple(parts)


@dataclass(frozen=True)
class ReducedRatio:
    """A fraction num/den held in lowest terms with den >= 1."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 1:
            raise ValueError("denominator must be >= 1")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError("ratio is not reduced")

    @property
    def max_component(self) -> int:
        return max(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def reduce_ratio(num: int, den: int) -> ReducedRatio:
    """Reduce num/den to lowest terms; den must be positive."""
    if den == 0:
        raise ValueError("denominator must not be zero")
    if den < 0 or num < 0:
        raise ValueError("ratio components must be nonnegative")
    if num == 0:
        return ReducedRatio(0, 1)
    g = math.gcd(num, den)
    return ReducedRatio(num // g, den // g)


class DivisorStats(NamedTuple):
    omega: int
    big_omega: int
    tau: int
    phi: int


# ---------------------------------------------------------------------------
# primality and factorization


def _simple_prime_list(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if mask[i]:
            mask[i * i :: i] = False
    return np.nonzero(mask)[0]


_trial_primes_cache: list[int] | None = None


def _trial_primes() -> list[int]:
    global _trial_primes_cache
    if _trial_primes_cache is None:
        _trial_primes_cache = [int(p) for p in _simple_prime_list(TRIAL_PRIME_LIMIT)]
    return _trial_primes_cache


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for n < 2**64; for larger inputs the witness set is
    extended with seeded pseudo-random bases, giving a strong probable
    prime test (certifying such inputs is out of scope).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses: tuple[int, ...] | list[int] = _MR_WITNESSES_64
    if n >= 1 << 64:
        rng = random.Random(n)
        witnesses = list(_MR_WITNESSES_64) + [rng.randrange(2, n - 2) for _ in range(20)]
    for a in witnesses:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Factorization:
    """Factor a positive integer into its canonical prime-power parts.

    Trial division by cached sieve primes handles the small-factor mass;
    any remaining cofactor goes through Miller-Rabin plus Pollard-Brent
    splitting, so inputs well beyond the sieve range are fine.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n == 1:
        return Factorization(1, ())
    counts: dict[int, int] = {}
    m = n
    for p in _trial_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    if m > 1:
        if m < TRIAL_PRIME_LIMIT * TRIAL_PRIME_LIMIT or is_probable_prime(m):
            # below the square of the trial limit the cofactor must be prime
            counts[m] = counts.get(m, 0) + 1
        else:
            stack = [m]
            while stack:
                v = stack.pop()
                if v == 1:
                    continue
                if is_probable_prime(v):
                    counts[v] = counts.get(v, 0) + 1
                    continue
                d = _pollard_brent(v)
                stack.append(d)
                stack.append(v // d)
    return Factorization(n, tuple(sorted(counts.items())))


def divisor_stats(f: Factorization) -> DivisorStats:
    """omega, big Omega, tau, and the exact Euler totient of f.n."""
    omega = len(f.parts)
    big_omega = sum(e for _, e in f.parts)
    tau = math.prod(e + 1 for _, e in f.parts)
    phi = 1
    for p, e in f.parts:
        phi *= (p - 1) * p ** (e - 1)
    return DivisorStats(omega, big_omega, tau, phi)


def sigma_k_exact(f: Factorization, k: int) -> int:
    """Exact sum of d**k over the divisors of f.n (k a nonnegative integer)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return divisor_stats(f).tau
    total = 1
    for p, e in f.parts:
        pk = p**k
        total *= (pk ** (e + 1) - 1) // (pk - 1)
    return total


def divisors_list(f: Factorization, cap: int = DIVISOR_CAP_DEFAULT) -> list[int]:
    """All divisors of f.n in ascending order.

    Refuses to materialise more than ``cap`` divisors.
    """
    tau = divisor_stats(f).tau
    if tau > cap:
        raise ResourceCapError(f"{tau} divisors exceed the cap of {cap}")
    divs = [1]
    for p, e in f.parts:
        powers = [p**i for i in range(e + 1)]
        divs = [d * q for d in divs for q in powers]
    divs.sort()
    return divs


def is_ore_harmonic(f: Factorization) -> bool:
    """True when the harmonic mean of the divisors of f.n is an integer.

    Equivalent divisibility form: sigma(n) divides n * tau(n).
    """
    stats = divisor_stats(f)
    return (f.n * stats.tau) % sigma_k_exact(f, 1) == 0


# ---------------------------------------------------------------------------
# bulk sieve


def _memory_cap() -> int:
    raw = os.environ.get(MEMORY_CAP_ENV)
    if raw is None:
        return SIEVE_ENTRY_CAP_DEFAULT
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MEMORY_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 2:
        raise ValueError(f"{MEMORY_CAP_ENV} must be >= 2")
    return cap


@dataclass(frozen=True)
class SieveTable:
    """Immutable bulk tables: smallest prime factor and divisor sums.

    ``spf[n]`` is the smallest prime factor of n (spf[p] = p for primes),
    ``sigma1[n]`` the exact divisor sum, both valid for 1 <= n <= bound.
    Safe to share read-only across threads.
    """

    bound: int
    spf: np.ndarray
    sigma1: np.ndarray

    def factor(self, n: int) -> Factorization:
        """Factor n <= bound by walking the spf table."""
        if not 1 <= n <= self.bound:
            raise ValueError(f"n = {n} outside sieve range [1, {self.bound}]")
        parts = []
        m = n
        while m > 1:
            p = int(self.spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            parts.append((p, e))
        return Factorization(n, tuple(parts))

    def prime_mask(self) -> np.ndarray:
        idx = np.arange(self.bound + 1, dtype=self.spf.dtype)
        mask = self.spf == idx
        mask[:2] = False
        return mask

    def primes(self) -> np.ndarray:
        return np.nonzero(self.prime_mask())[0]


def build_sieve(bound: int, entry_cap: int | None = None) -> SieveTable:
    """Build the spf/sigma1 tables for 1..bound.

    ``entry_cap`` limits the table length (default 10**8 entries, overridable
    through the ALPHANUM_MEMORY_CAP environment variable).
    """
    if bound < 2:
        raise ValueError("sieve bound must be >= 2")
    cap = entry_cap if entry_cap is not None else _memory_cap()
    if bound + 1 > cap:
        raise ResourceCapError(f"sieve bound {bound} exceeds the cap of {cap} entries")

    spf = np.zeros(bound + 1, dtype=np.int64)
    for i in range(2, math.isqrt(bound) + 1):
        if spf[i] == 0:
            sl = spf[i * i :: i]
            sl[sl == 0] = i
    untouched = np.nonzero(spf == 0)[0]
    spf[untouched] = untouched  # primes mark themselves
    spf[1] = 1

    sigma1 = np.zeros(bound + 1, dtype=np.int64)
    for d in range(1, bound + 1):
        sigma1[d::d] += d

    spf.setflags(write=False)
    sigma1.setflags(write=False)
    return SieveTable(bound, spf, sigma1)


_sieve_cache: dict[int, SieveTable] = {}


def shared_sieve(bound: int) -> SieveTable:
    """Return a cached sieve covering at least ``bound``."""
    candidates = [t for t in _sieve_cache.values() if t.bound >= bound]
    if candidates:
        return min(candidates, key=lambda t: t.bound)
    table = build_sieve(bound)
    _sieve_cache[bound] = table
    return table


def iter_primes(limit: int) -> Iterator[int]:
    """Primes up to ``limit`` inclusive, from the cached trial list or a sieve."""
    if limit <= TRIAL_PRIME_LIMIT:
        for p in _trial_primes():
            if p > limit:
                return
            yield p
        return
    for p in shared_sieve(limit).primes():
        yield int(p)
