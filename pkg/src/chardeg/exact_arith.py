"""Exact arithmetic kernel.

Comparison of mixed rational powers, integer k-th roots, integer polynomials
with a cyclotomic constructor, and rational intervals with outward rounding
for the few checks that involve the constants e and pi.

Every verdict produced by this module reduces to a comparison of Python
integers; floats never participate.  Magnitudes like 2000!**14 are routine.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

# Decimal serialization of values like 2000!**14 is part of the interface;
# lift the interpreter's int-to-str conversion guard accordingly.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)

__all__ = [
    "Ordering",
    "cmp_power",
    "nth_root_floor",
    "factorial",
    "is_prime",
    "IntPolynomial",
    "cyclotomic",
    "eval_poly",
    "RationalInterval",
    "const_interval",
]

factorial = math.factorial

RationalLike = Fraction | int


class Ordering(IntEnum):
    """Outcome of an exact comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    @staticmethod
    def of(lhs: int, rhs: int) -> "Ordering":
        if lhs < rhs:
            return Ordering.LESS
        if lhs > rhs:
            return Ordering.GREATER
        return Ordering.EQUAL


def cmp_power(a: RationalLike, p: int, b: RationalLike, s: int) -> Ordering:
    """Order a**p against b**s by exact integer cross-multiplication.

    a and b must be nonnegative rationals; p and s are nonnegative integers,
    not both zero.  With a = an/ad and b = bn/bd the comparison performed is
    an**p * bd**s  vs  bn**s * ad**p, so no division ever happens.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a < 0 or b < 0:
        raise ValueError("cmp_power requires nonnegative bases")
    if p < 0 or s < 0:
        raise ValueError("cmp_power requires nonnegative exponents")
    if p == 0 and s == 0:
        raise ValueError("cmp_power: p and s must not both be zero")
    lhs = a.numerator ** p * b.denominator ** s
    rhs = b.numerator ** s * a.denominator ** p
    return Ordering.of(lhs, rhs)


def nth_root_floor(x: int, k: int) -> int:
    """The unique r >= 0 with r**k <= x < (r+1)**k, for x >= 0 and k >= 1."""
    if k < 1:
        raise ValueError("nth_root_floor requires k >= 1")
    if x < 0:
        raise ValueError("nth_root_floor requires x >= 0")
    if k == 1 or x < 2:
        return x
    # Newton iteration from a power-of-two overestimate; monotonically
    # decreasing, so the trailing adjustment loops run O(1) times.
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def x_power_minus_one(cls, k: int) -> "IntPolynomial":
        if k < 1:
            raise ValueError("need k >= 1")
        return cls((-1,) + (0,) * (k - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial.from_coeffs(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial.from_coeffs(x - y for x, y in zip(a, b))

    def div_exact(self, d: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient self / d over the integers; raises if not exact."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = d.coeffs[-1]
        qdeg = len(rem) - len(d.coeffs)
        if qdeg < 0:
            if self.is_zero():
                return IntPolynomial(())
            raise ValueError("inexact polynomial division")
        quot = [0] * (qdeg + 1)
        for i in range(qdeg, -1, -1):
            t, r = divmod(rem[i + d.degree], lead)
            if r:
                raise ValueError("inexact polynomial division")
            quot[i] = t
            if t:
                for j, c in enumerate(d.coeffs):
                    rem[i + j] -= t * c
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPolynomial.from_coeffs(quot)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            parts.append(f"{sign} {term}".strip() if parts else f"{sign}{term}")
        return " ".join(parts)


# Filled on demand; refills write identical immutable values, so concurrent
# population is idempotent.  Intended range of use is k <= 200.
_CYCLOTOMIC_CACHE: dict[int, IntPolynomial] = {}


def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, by exact division of x**k - 1 by the
    cyclotomic polynomials of the proper divisors of k."""
    if k < 1:
        raise ValueError("cyclotomic requires k >= 1")
    cached = _CYCLOTOMIC_CACHE.get(k)
    if cached is not None:
        return cached
    poly = IntPolynomial.x_power_minus_one(k)
    for d in range(1, k):
        if k % d == 0:
            poly = poly.div_exact(cyclotomic(d))
    _CYCLOTOMIC_CACHE[k] = poly
    return poly


def eval_poly(p: IntPolynomial, q: int) -> int:
    """Exact integer evaluation of p at q."""
    return p(q)


# ---------------------------------------------------------------------------
# Rational intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with Fraction endpoints.

    Endpoints are exact, so arithmetic never rounds: the result interval
    contains the product/power/sum of any members of the operands.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, x: RationalLike) -> "RationalInterval":
        x = Fraction(x)
        return cls(x, x)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: RationalLike) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        prods = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(prods), max(prods))

    def scale(self, c: RationalLike) -> "RationalInterval":
        c = Fraction(c)
        if c >= 0:
            return RationalInterval(self.lo * c, self.hi * c)
        return RationalInterval(self.hi * c, self.lo * c)

    def __pow__(self, k: int) -> "RationalInterval":
        if k < 0:
            raise ValueError("interval powers require k >= 0")
        if k == 0:
            return RationalInterval.point(1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2 == 1:
            return RationalInterval(a, b)
        if self.lo <= 0 <= self.hi:
            return RationalInterval(Fraction(0), max(a, b))
        return RationalInterval(min(a, b), max(a, b))

    def compare(self, threshold: RationalLike) -> Ordering | None:
        """GREATER/LESS if the whole interval is on one side of threshold,
        EQUAL for a degenerate match, None when the interval straddles it."""
        t = Fraction(threshold)
        if self.lo > t:
            return Ordering.GREATER
        if self.hi < t:
            return Ordering.LESS
        if self.lo == t == self.hi:
            return Ordering.EQUAL
        return None


def _e_interval(digits: int) -> RationalInterval:
    # Partial sums of sum 1/k!; the tail beyond K is < 2/(K+1)!.
    target = 4 * 10 ** digits
    k, fact = 1, 1
    while fact <= target:
        k += 1
        fact *= k
    K = k - 1  # (K+1)! = fact > target
    num, c = 1, 1
    for j in range(K, 0, -1):
        c *= j
        num += c
    lo = Fraction(num, c)  # c == K!
    hi = lo + Fraction(2, fact)
    return RationalInterval(lo, hi)


def _arctan_inv_interval(m: int, tail_bound: Fraction) -> RationalInterval:
    # arctan(1/m) as an alternating series; adjacent partial sums bracket the
    # limit, so the interval width is the first omitted term.
    acc = Fraction(0)
    i = 0
    while True:
        term = Fraction(1, (2 * i + 1) * m ** (2 * i + 1))
        if term < tail_bound:
            break
        acc += term if i % 2 == 0 else -term
        i += 1
    if i % 2 == 1:  # last added term positive: acc overestimates
        return RationalInterval(acc - term, acc)
    return RationalInterval(acc, acc + term)


def _pi_interval(digits: int) -> RationalInterval:
    # Machin: pi = 16*arctan(1/5) - 4*arctan(1/239).
    budget = Fraction(1, 10 ** (digits + 1))
    a5 = _arctan_inv_interval(5, budget / 32)
    a239 = _arctan_inv_interval(239, budget / 8)
    return a5.scale(16) - a239.scale(4)


def const_interval(name: str, digits: int) -> RationalInterval:
    """Rational interval of width < 10**-digits guaranteed to contain the
    named constant.  Supported names: "e", "pi", "two_pi"."""
    if digits < 1:
        raise ValueError("const_interval requires digits >= 1")
    if name == "e":
        return _e_interval(digits)
    if name == "pi":
        return _pi_interval(digits)
    if name == "two_pi":
        return _pi_interval(digits + 1).scale(2)
    raise ValueError(f"unknown constant {name!r}")
