"""Shared fixtures and the independent brute-force oracles used across tests.

The oracles deliberately avoid the library's factorization and sieve paths:
divisors come from trial division, sums from direct accumulation.
"""

from __future__ import annotations

import math

import pytest

from alphanum.exact import shared_sieve


def brute_divisors(n: int) -> list[int]:
    """Divisors by sqrt-bounded trial division; independent of factorize()."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def brute_sigma(n: int, k: int = 1) -> int:
    return sum(d**k for d in brute_divisors(n))


def brute_omega(n: int) -> int:
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            while n % d == 0:
                n //= d
        d += 1
    return count + (1 if n > 1 else 0)


def brute_band(n: int) -> str:
    """Direct banding of n under order (1,1), from scratch."""
    sigma = brute_sigma(n)
    g = math.gcd(sigma, n)
    max_c = max(sigma // g, n // g)
    omega = brute_omega(n)
    tau = len(brute_divisors(n))
    if 2 <= max_c <= omega:
        return "Strong"
    if 2 <= omega < max_c <= tau:
        return "Weak"
    if 2 <= tau < max_c < n:
        return "VeryWeak"
    return "NotAlpha"


@pytest.fixture(scope="session")
def sieve_1e5():
    return shared_sieve(10**5)


@pytest.fixture(scope="session")
def sieve_1e6():
    return shared_sieve(10**6)
