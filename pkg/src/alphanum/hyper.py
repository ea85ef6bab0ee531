"""Floating-point quaternion algebra and the generalized divisor sum.

Powers of a positive real base d by a quaternion exponent x are defined as
exp(x * ln d); because ln d is a real scalar this commutes with x, agrees
with the real and complex cases, and needs no branch cuts (divisors are
always positive).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .exact import DIVISOR_CAP_DEFAULT, Factorization, divisors_list

RoundingMode = Literal["floor", "ceiling"]


@dataclass(frozen=True)
class Quaternion:
    """A quaternion a + bi + cj + dk with finite float components."""

    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __post_init__(self) -> None:
        for comp in (self.a, self.b, self.c, self.d):
            if not math.isfinite(comp):
                raise ValueError("quaternion components must be finite")

    @classmethod
    def coerce(cls, value: "Quaternion | complex | float | int") -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, complex):
            return cls(value.real, value.imag)
        return cls(float(value))

    @property
    def is_real(self) -> bool:
        return self.b == 0.0 and self.c == 0.0 and self.d == 0.0

    @property
    def is_complex(self) -> bool:
        return self.c == 0.0 and self.d == 0.0

    def norm(self) -> float:
        return math.sqrt(self.a**2 + self.b**2 + self.c**2 + self.d**2)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def scale(self, s: float) -> "Quaternion":
        return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return quat_mul(self, other)

    def __str__(self) -> str:
        return format_quaternion(self)


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)


@dataclass(frozen=True)
class Precision:
    """Floating tolerance policy.

    ``eps_rel`` is the relative tolerance for agreement checks; values whose
    modulus lies within ``boundary_eps`` of an integer are snapped before
    floor/ceiling and flagged as boundary cases.
    """

    eps_rel: float = 1e-12
    boundary_eps: float = 1e-9

    def __post_init__(self) -> None:
        if not (0.0 < self.eps_rel < self.boundary_eps < 1.0):
            raise ValueError("require 0 < eps_rel < boundary_eps < 1")


DEFAULT_PRECISION = Precision()


class RoundedModulus(NamedTuple):
    value: int
    boundary: bool


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Hamilton product x*y (i*j = k)."""
    return Quaternion(
        x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
        x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
        x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
        x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
    )


def quat_exp(q: Quaternion) -> Quaternion:
    """Quaternion exponential: e^w (cos|v| + (v/|v|) sin|v|) for q = w + v."""
    vnorm = math.sqrt(q.b**2 + q.c**2 + q.d**2)
    ew = math.exp(q.a)
    if vnorm == 0.0:
        return Quaternion(ew)
    s = ew * math.sin(vnorm) / vnorm
    return Quaternion(ew * math.cos(vnorm), q.b * s, q.c * s, q.d * s)


def quat_inverse(q: Quaternion) -> Quaternion:
    n2 = q.a**2 + q.b**2 + q.c**2 + q.d**2
    if n2 == 0.0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    return q.conjugate().scale(1.0 / n2)


def quat_div(x: Quaternion, y: Quaternion) -> Quaternion:
    """Right division x * y^-1."""
    return quat_mul(x, quat_inverse(y))


def real_pow_quat(
    base: int | float, x: Quaternion, prec: Precision = DEFAULT_PRECISION
) -> Quaternion:
    """base**x for a positive real base and quaternion exponent x.

    Real exponents take the plain float power path (exact for the small
    integer cases), everything else goes through exp(x * ln base).
    """
    if base <= 0:
        raise ValueError("base must be positive")
    if x.is_real:
        return Quaternion(float(base) ** x.a)
    w = math.log(base)
    return quat_exp(Quaternion(x.a * w, x.b * w, x.c * w, x.d * w))


def sigma_general(
    f: Factorization,
    x: Quaternion | complex | float | int,
    prec: Precision = DEFAULT_PRECISION,
    divisor_cap: int = DIVISOR_CAP_DEFAULT,
) -> Quaternion:
    """Sum of d**x over all divisors d of f.n, as a quaternion.

    For integer real x this agrees with the exact divisor sum to within
    prec.eps_rel (and is exact while the values fit a float mantissa).
    """
    x = Quaternion.coerce(x)
    divisors = divisors_list(f, cap=divisor_cap)
    if x.is_real:
        return Quaternion(math.fsum(float(d) ** x.a for d in divisors))
    total = ZERO
    for d in divisors:
        total = total + real_pow_quat(d, x, prec)
    return total


def rounded_modulus(
    v: Quaternion, mode: RoundingMode, prec: Precision = DEFAULT_PRECISION
) -> RoundedModulus:
    """Floor or ceiling of |v|, with boundary snapping.

    When |v| falls within prec.boundary_eps of an integer the result snaps
    to that integer; the boundary flag is set when the snap actually moved
    the value, so exactly-integral moduli stay unflagged.
    """
    if mode not in ("floor", "ceiling"):
        raise ValueError(f"unknown rounding mode {mode!r}")
    m = v.norm()
    nearest = round(m)
    if abs(m - nearest) <= prec.boundary_eps:
        return RoundedModulus(int(nearest), m != nearest)
    value = math.floor(m) if mode == "floor" else math.ceil(m)
    return RoundedModulus(int(value), False)


# ---------------------------------------------------------------------------
# literal syntax: "2", "0.5", "1+2i", "i+j", "1.5-0.5i+2j-k", "5.9e-08k"

_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"(?P<unit>[ijk]?)"
)


def format_quaternion(q: Quaternion, digits: int | None = None) -> str:
    """Compact literal form; integer-valued components print without dots.

    Lossless by default (parse_quaternion round-trips); pass ``digits`` to
    shorten for display.
    """

    def num(x: float) -> str:
        if x == int(x):
            return str(int(x))
        return repr(x) if digits is None else repr(round(x, digits))

    if q.is_real:
        return num(q.a)
    out = []
    for value, unit in ((q.a, ""), (q.b, "i"), (q.c, "j"), (q.d, "k")):
        if value == 0.0 and unit:
            continue
        coef = num(abs(value))
        if unit and coef == "1":
            coef = ""
        sign = "-" if value < 0 else ("+" if out else "")
        out.append(f"{sign}{coef}{unit}")
    return "".join(out) or "0"


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal such as ``2``, ``0.5``, ``1+2i`` or ``i+j-k``."""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty quaternion literal")
    comps = {"": 0.0, "i": 0.0, "j": 0.0, "k": 0.0}
    pos = 0
    while pos < len(cleaned):
        match = _TERM_RE.match(cleaned, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"cannot parse quaternion literal {text!r}")
        number, unit = match.group("num"), match.group("unit")
        if number is None and not unit:
            raise ValueError(f"cannot parse quaternion literal {text!r}")
        value = 1.0 if number is None else float(number)
        if match.group("sign") == "-":
            value = -value
        comps[unit] += value
        pos = match.end()
    return Quaternion(comps[""], comps["i"], comps["j"], comps["k"])
