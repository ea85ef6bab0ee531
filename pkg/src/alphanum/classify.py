"""Banded classification of integers by their reduced divisor-sum ratio.

An integer n with sigma_under(n) = (a1/a2) * n**upper (a1, a2 coprime) is
classified by where max(a1, a2) falls:

  strong     2 <= max(a1, a2) <= omega(n)
  weak       2 <= omega(n) < max(a1, a2) <= tau(n)
  very weak  2 <= tau(n) < max(a1, a2) < n

The exact path requires nonnegative integer orders; complex and quaternion
orders go through the floored/ceiled variants, which apply the same bands to
the rounded moduli of both sides.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .exact import (
    Factorization,
    ReducedRatio,
    divisor_stats,
    reduce_ratio,
    sigma_k_exact,
)
from .errors import DegenerateDenominatorError
from .hyper import (
    DEFAULT_PRECISION,
    Precision,
    Quaternion,
    RoundingMode,
    quat_div,
    real_pow_quat,
    rounded_modulus,
    sigma_general,
)

EULER_GAMMA = 0.5772156649015329


class Verdict(str, enum.Enum):
    STRONG = "Strong"
    WEAK = "Weak"
    VERY_WEAK = "VeryWeak"
    NOT_ALPHA = "NotAlpha"

    def __str__(self) -> str:
        return self.value


Variant = str  # "exact" | "floored" | "ceiled"


@dataclass(frozen=True)
class Order:
    """An exponent pair (under, upper): sigma_under(n) versus n**upper."""

    under: Quaternion
    upper: Quaternion

    @classmethod
    def of(cls, under, upper) -> "Order":
        return cls(Quaternion.coerce(under), Quaternion.coerce(upper))

    @classmethod
    def exact(cls, under: int, upper: int) -> "Order":
        if under < 0 or upper < 0:
            raise ValueError("exact orders must be nonnegative integers")
        return cls(Quaternion(float(under)), Quaternion(float(upper)))

    @property
    def is_exact_integer(self) -> bool:
        return (
            self.under.is_real
            and self.upper.is_real
            and self.under.a >= 0
            and self.upper.a >= 0
            and self.under.a == int(self.under.a)
            and self.upper.a == int(self.upper.a)
        )

    def exact_pair(self) -> tuple[int, int]:
        if not self.is_exact_integer:
            raise ValueError(f"order {self} is not a nonnegative integer pair")
        return int(self.under.a), int(self.upper.a)

    def __str__(self) -> str:
        return f"({self.under},{self.upper})"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    ratio: ReducedRatio
    omega: int
    tau: int
    variant: Variant
    boundary_flag: bool = False


def _verdict(max_component: int, omega: int, tau: int, n: int) -> Verdict:
    if 2 <= max_component <= omega:
        return Verdict.STRONG
    if 2 <= omega < max_component <= tau:
        return Verdict.WEAK
    if 2 <= tau < max_component < n:
        return Verdict.VERY_WEAK
    return Verdict.NOT_ALPHA


def alpha_ratio(f: Factorization) -> ReducedRatio:
    """sigma(n)/n in lowest terms."""
    return reduce_ratio(sigma_k_exact(f, 1), f.n)


def classify_exact(f: Factorization, order: Order) -> Classification:
    """Classify n under an exact nonnegative-integer order.

    The ratio sigma_under(n) / n**upper is computed in exact integer
    arithmetic and reduced before banding; n = 1 lands in NotAlpha because
    omega = 0 and tau = 1 fail every band.
    """
    under, upper = order.exact_pair()
    sigma = sigma_k_exact(f, under)
    denom = f.n**upper
    ratio = reduce_ratio(sigma, denom)
    stats = divisor_stats(f)
    verdict = _verdict(ratio.max_component, stats.omega, stats.tau, f.n)
    return Classification(verdict, ratio, stats.omega, stats.tau, "exact", False)


def classify_rounded(
    f: Factorization,
    order: Order,
    mode: RoundingMode,
    prec: Precision = DEFAULT_PRECISION,
) -> Classification:
    """Classify n under the floored or ceiled variant of an arbitrary order.

    Both sides are reduced to integers via the rounded modulus; any boundary
    snap on either side is propagated in the boundary flag.
    """
    sig = sigma_general(f, order.under, prec)
    sig_val, sig_flag = rounded_modulus(sig, mode, prec)
    powq = real_pow_quat(f.n, order.upper, prec)
    pow_val, pow_flag = rounded_modulus(powq, mode, prec)
    if pow_val == 0:
        raise DegenerateDenominatorError(
            f"rounded |{f.n}**{order.upper}| is zero; no ratio exists"
        )
    ratio = reduce_ratio(sig_val, pow_val)
    stats = divisor_stats(f)
    verdict = _verdict(ratio.max_component, stats.omega, stats.tau, f.n)
    variant = "floored" if mode == "floor" else "ceiled"
    return Classification(verdict, ratio, stats.omega, stats.tau, variant, sig_flag or pow_flag)


def partial_alpha(
    f: Factorization, order: Order, prec: Precision = DEFAULT_PRECISION
) -> Quaternion:
    """The quaternion value sigma_under(n) * (n**upper)^-1.

    Every n has such a value, so this is an evaluation, not a verdict.
    """
    sig = sigma_general(f, order.under, prec)
    powq = real_pow_quat(f.n, order.upper, prec)
    return quat_div(sig, powq)


class RatioBound(NamedTuple):
    ratio: float
    bound: float
    ok: bool


def ratio_bound_check(f: Factorization) -> RatioBound:
    """Compare sigma(n)/n against e^gamma * ln ln n + 0.6483 / ln ln n.

    Requires n >= 3 (below that ln ln n is zero or negative and the bound
    is meaningless).
    """
    if f.n < 3:
        raise ValueError("ratio bound requires n >= 3")
    ratio = sigma_k_exact(f, 1) / f.n
    loglog = math.log(math.log(f.n))
    bound = math.exp(EULER_GAMMA) * loglog + 0.6483 / loglog
    return RatioBound(ratio, bound, ratio < bound)


class LogLogPhiProfile(NamedTuple):
    max_value: float
    argmax: int
    samples: int


def ratio_loglog_phi_profile(bound: int, sieve=None) -> LogLogPhiProfile:
    """Empirical maximum of (sigma(n)/n) / ln ln phi(n) over 4 <= n <= bound.

    No assertable constant exists for this quotient, so the profile is
    reported rather than checked; n with phi(n) <= 2 are skipped because
    ln ln phi(n) is not positive there.
    """
    from .exact import shared_sieve

    table = sieve if sieve is not None else shared_sieve(bound)
    best = 0.0
    best_n = 0
    samples = 0
    for n in range(4, bound + 1):
        stats = divisor_stats(table.factor(n))
        if stats.phi <= 2:
            continue
        denom = math.log(math.log(stats.phi))
        value = (int(table.sigma1[n]) / n) / denom
        samples += 1
        if value > best:
            best = value
            best_n = n
    return LogLogPhiProfile(best, best_n, samples)
