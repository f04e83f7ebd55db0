"""Simple groups of Lie type: exact orders, Steinberg degrees, and one
companion unipotent degree per family, with exact verification of the two
degree-ratio inequalities

    alpha**14 > beta**14 * |S|        (power-gap check)
    5 * alpha >= 16 * beta            (minimum-ratio check)

where alpha is the Steinberg degree q**N (the p-part of |S|) and beta the
companion degree.  All divisions in the degree and order formulas are
asserted exact, so a transcription error cannot pass silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .exact_arith import Ordering, cmp_power, cyclotomic, eval_poly, is_prime

__all__ = [
    "Family",
    "CLASSICAL_FAMILIES",
    "EXCEPTIONAL_FAMILIES",
    "GroupSpec",
    "CharPair",
    "GapReport",
    "SweepRecord",
    "Exclusion",
    "make_spec",
    "validate",
    "order",
    "steinberg_degree",
    "beta_degree",
    "check_steinberg_gap",
    "check_min_ratio",
    "sweep",
    "prime_powers",
]


class Family(str, Enum):
    LINEAR = "linear"            # PSL_n(q), n >= 3
    UNITARY = "unitary"          # PSU_n(q), n >= 3
    SYMPLECTIC = "symplectic"    # PSp_{2n}(q), n >= 2
    ORTH_ODD = "orth_odd"        # Omega_{2n+1}(q), n >= 2
    ORTH_PLUS = "orth_plus"      # POmega+_{2n}(q), n >= 4
    ORTH_MINUS = "orth_minus"    # POmega-_{2n}(q), n >= 4
    SUZUKI_2B2 = "2B2"
    TRIALITY_3D4 = "3D4"
    G2 = "G2"
    REE_2G2 = "2G2"
    F4 = "F4"
    REE_2F4 = "2F4"
    E6 = "E6"
    TWISTED_E6 = "2E6"
    E7 = "E7"
    E8 = "E8"


CLASSICAL_FAMILIES = frozenset(
    {
        Family.LINEAR,
        Family.UNITARY,
        Family.SYMPLECTIC,
        Family.ORTH_ODD,
        Family.ORTH_PLUS,
        Family.ORTH_MINUS,
    }
)
EXCEPTIONAL_FAMILIES = frozenset(Family) - CLASSICAL_FAMILIES

_RANK_MIN = {
    Family.LINEAR: 3,
    Family.UNITARY: 3,
    Family.SYMPLECTIC: 2,
    Family.ORTH_ODD: 2,
    Family.ORTH_PLUS: 4,
    Family.ORTH_MINUS: 4,
}

_FAMILY_ORDER = list(Family)


@dataclass(frozen=True)
class GroupSpec:
    """One parameter point: family, rank parameter (None for the fixed-rank
    exceptional families), and q = p**e."""

    family: Family
    rank: int | None
    q: int
    p: int
    e: int


@dataclass(frozen=True)
class CharPair:
    """A Steinberg degree together with the companion degree and its label."""

    alpha_degree: int
    beta_degree: int
    beta_label: str


@dataclass(frozen=True)
class GapReport:
    spec: GroupSpec
    pair: CharPair
    order: int
    passed_pow14: bool
    passed_ratio165: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.pair.alpha_degree, self.pair.beta_degree)


@dataclass(frozen=True)
class Exclusion:
    family: Family
    rank: int | None
    q: int
    reason: str


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError("q must be at least 2")
    p = q
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, e


def make_spec(family: Family, q: int, rank: int | None = None) -> GroupSpec:
    family = Family(family)
    p, e = _factor_prime_power(q)
    if family in CLASSICAL_FAMILIES and rank is None:
        raise ValueError(f"family {family.value} requires a rank parameter")
    if family in EXCEPTIONAL_FAMILIES:
        rank = None
    return GroupSpec(family, rank, q, p, e)


def validate(spec: GroupSpec) -> str | None:
    """None when spec names a simple group this registry covers, otherwise
    the exclusion reason that fired."""
    fam, n, q = spec.family, spec.rank, spec.q
    if spec.p ** spec.e != q or not is_prime(spec.p):
        return "q is not a prime power"
    if fam in CLASSICAL_FAMILIES:
        if n is None:
            return "missing rank"
        if fam in (Family.LINEAR, Family.UNITARY) and n == 2:
            return "PSL_2"
        if fam in (Family.SYMPLECTIC, Family.ORTH_ODD) and n == 1:
            return "PSL_2"
        if n < _RANK_MIN[fam]:
            return f"rank below minimum {_RANK_MIN[fam]} for {fam.value}"
        if fam is Family.LINEAR and n == 3 and q == 2:
            return "not simple at this point (isomorphic to PSL_2(7))"
        if fam is Family.UNITARY and n == 3 and q == 2:
            return "not simple"
        if fam is Family.SYMPLECTIC and n == 2 and q == 2:
            return "not simple"
        if fam is Family.ORTH_ODD and n == 2 and q == 2:
            return "not simple (isomorphic to the symplectic point n=2, q=2)"
        return None
    if fam is Family.G2 and q == 2:
        return "not simple (the derived subgroup is proper)"
    if fam in (Family.SUZUKI_2B2, Family.REE_2F4):
        if spec.p != 2 or spec.e % 2 == 0 or spec.e < 3:
            return "q must be 2**(2f+1) with f >= 1"
        return None
    if fam is Family.REE_2G2:
        if spec.p != 3 or spec.e % 2 == 0 or spec.e < 3:
            return "q must be 3**(2f+1) with f >= 1"
        return None
    return None


def _require_valid(spec: GroupSpec) -> None:
    reason = validate(spec)
    if reason is not None:
        raise ValueError(f"invalid group spec ({reason})")


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division {a} / {b}")
    return q


def _prod(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out *= v
    return out


# Exceptional data: Steinberg exponent, order shape, companion degree shape.
# The companion degree is  q**mono * prod(Phi_k(q)**mult) / const,
# with an extra factor 2**f (resp. 3**f) for the Suzuki (resp. small Ree)
# family, where q = 2**(2f+1) (resp. 3**(2f+1)).
_EXC_STEINBERG = {
    Family.SUZUKI_2B2: 2,
    Family.TRIALITY_3D4: 12,
    Family.G2: 6,
    Family.REE_2G2: 3,
    Family.F4: 24,
    Family.REE_2F4: 12,
    Family.E6: 36,
    Family.TWISTED_E6: 36,
    Family.E7: 63,
    Family.E8: 120,
}

_EXC_BETA = {
    # family: (monomial power of q, ((k, mult), ...), constant divisor,
    #          sqrt factor base or None, label)
    Family.SUZUKI_2B2: (0, ((1, 1),), 1, 2, "2B2[a]"),
    Family.TRIALITY_3D4: (1, ((12, 1),), 1, None, "phi'_{1,3}"),
    Family.G2: (1, ((2, 2), (3, 1)), 6, None, "phi_{2,1}"),
    Family.REE_2G2: (0, ((1, 1), (2, 1)), 1, 3, "cuspidal"),
    Family.F4: (1, ((2, 2), (6, 2), (8, 1)), 2, None, "phi_{4,1}"),
    Family.REE_2F4: (1, ((6, 1), (12, 1)), 1, None, "epsilon'"),
    Family.E6: (1, ((8, 1), (9, 1)), 1, None, "phi_{6,1}"),
    Family.TWISTED_E6: (1, ((8, 1), (18, 1)), 1, None, "phi'_{2,4}"),
    Family.E7: (1, ((7, 1), (12, 1), (14, 1)), 1, None, "phi_{7,1}"),
    Family.E8: (1, ((4, 2), (8, 1), (12, 1), (20, 1), (24, 1)), 1, None, "phi_{8,1}"),
}


def order(spec: GroupSpec) -> int:
    """Exact group order from the standard product formulas, including the
    centre gcd factor for the projective families."""
    _require_valid(spec)
    fam, n, q = spec.family, spec.rank, spec.q
    if fam is Family.LINEAR:
        raw = q ** (n * (n - 1) // 2) * _prod(q ** i - 1 for i in range(2, n + 1))
        return _exact_div(raw, gcd(n, q - 1))
    if fam is Family.UNITARY:
        raw = q ** (n * (n - 1) // 2) * _prod(
            q ** i - (-1) ** i for i in range(2, n + 1)
        )
        return _exact_div(raw, gcd(n, q + 1))
    if fam in (Family.SYMPLECTIC, Family.ORTH_ODD):
        raw = q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        return _exact_div(raw, gcd(2, q - 1))
    if fam is Family.ORTH_PLUS:
        raw = (
            q ** (n * (n - 1))
            * (q ** n - 1)
            * _prod(q ** (2 * i) - 1 for i in range(1, n))
        )
        return _exact_div(raw, gcd(4, q ** n - 1))
    if fam is Family.ORTH_MINUS:
        raw = (
            q ** (n * (n - 1))
            * (q ** n + 1)
            * _prod(q ** (2 * i) - 1 for i in range(1, n))
        )
        return _exact_div(raw, gcd(4, q ** n + 1))
    if fam is Family.SUZUKI_2B2:
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if fam is Family.TRIALITY_3D4:
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if fam is Family.G2:
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if fam is Family.REE_2G2:
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if fam is Family.F4:
        return q ** 24 * _prod(q ** i - 1 for i in (12, 8, 6, 2))
    if fam is Family.REE_2F4:
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    if fam is Family.E6:
        raw = q ** 36 * _prod(q ** i - 1 for i in (12, 9, 8, 6, 5, 2))
        return _exact_div(raw, gcd(3, q - 1))
    if fam is Family.TWISTED_E6:
        raw = (
            q ** 36
            * (q ** 12 - 1)
            * (q ** 9 + 1)
            * (q ** 8 - 1)
            * (q ** 6 - 1)
            * (q ** 5 + 1)
            * (q ** 2 - 1)
        )
        return _exact_div(raw, gcd(3, q + 1))
    if fam is Family.E7:
        raw = q ** 63 * _prod(q ** i - 1 for i in (18, 14, 12, 10, 8, 6, 2))
        return _exact_div(raw, gcd(2, q - 1))
    if fam is Family.E8:
        return q ** 120 * _prod(q ** i - 1 for i in (30, 24, 20, 18, 14, 12, 8, 2))
    raise AssertionError(f"unhandled family {fam}")


def steinberg_degree(spec: GroupSpec) -> int:
    """The p-part of the group order: q**(n(n-1)/2) for linear/unitary,
    q**(n*n) for symplectic/odd-orthogonal, q**(n(n-1)) for even orthogonal,
    and the fixed exponents of the exceptional families."""
    _require_valid(spec)
    fam, n, q = spec.family, spec.rank, spec.q
    if fam in (Family.LINEAR, Family.UNITARY):
        return q ** (n * (n - 1) // 2)
    if fam in (Family.SYMPLECTIC, Family.ORTH_ODD):
        return q ** (n * n)
    if fam in (Family.ORTH_PLUS, Family.ORTH_MINUS):
        return q ** (n * (n - 1))
    return q ** _EXC_STEINBERG[fam]


def beta_degree(spec: GroupSpec) -> CharPair:
    """The companion unipotent degree used opposite the Steinberg degree.

    Classical families:
      linear     (q**n - q) / (q - 1)                label (n-1,1)
      unitary    (q**n + q*(-1)**n) / (q + 1)        label (n-1,1)
      symplectic/odd orthogonal
                 (q**n - 1)(q**n - q) / (2(q + 1))   label (0,1,n;-)
      plus  orthogonal  (q**n - 1)(q**(n-1) + q) / (q**2 - 1)  label (n-1;1)
      minus orthogonal  (q**n + 1)(q**(n-1) - q) / (q**2 - 1)  label (1,n-1;-)

    The even-orthogonal second factors use q**(n-1): those products are
    divisible by q**2 - 1 for every n and match the rank-3 singular-point
    permutation character decompositions exactly; the q**n variants fail
    integrality for every other parity of n.  Exceptional families evaluate
    their cyclotomic products on demand; every constant division is checked.
    """
    _require_valid(spec)
    fam, n, q = spec.family, spec.rank, spec.q
    alpha = steinberg_degree(spec)
    if fam is Family.LINEAR:
        beta = _exact_div(q ** n - q, q - 1)
        return CharPair(alpha, beta, "(n-1,1)")
    if fam is Family.UNITARY:
        beta = _exact_div(q ** n + q * (-1) ** n, q + 1)
        return CharPair(alpha, beta, "(n-1,1)")
    if fam in (Family.SYMPLECTIC, Family.ORTH_ODD):
        beta = _exact_div((q ** n - 1) * (q ** n - q), 2 * (q + 1))
        return CharPair(alpha, beta, "(0,1,n;-)")
    if fam is Family.ORTH_PLUS:
        beta = _exact_div((q ** n - 1) * (q ** (n - 1) + q), q ** 2 - 1)
        return CharPair(alpha, beta, "(n-1;1)")
    if fam is Family.ORTH_MINUS:
        beta = _exact_div((q ** n + 1) * (q ** (n - 1) - q), q ** 2 - 1)
        return CharPair(alpha, beta, "(1,n-1;-)")
    mono, phis, const, sqrt_base, label = _EXC_BETA[fam]
    beta = q ** mono
    for k, mult in phis:
        beta *= eval_poly(cyclotomic(k), q) ** mult
    if sqrt_base is not None:
        # q = sqrt_base**(2f+1), so sqrt(q / sqrt_base) = sqrt_base**f exactly.
        f = (spec.e - 1) // 2
        beta *= sqrt_base ** f
    beta = _exact_div(beta, const)
    return CharPair(alpha, beta, label)


def _report(spec: GroupSpec, pair: CharPair) -> GapReport:
    o = order(spec)
    ratio = Fraction(pair.alpha_degree, pair.beta_degree)
    pow14 = cmp_power(ratio, 14, o, 1) is Ordering.GREATER
    ratio165 = 5 * pair.alpha_degree >= 16 * pair.beta_degree
    return GapReport(spec, pair, o, pow14, ratio165)


def check_steinberg_gap(spec: GroupSpec) -> GapReport:
    """Exact verdict on alpha**14 > beta**14 * |S| for the standard pair."""
    _require_valid(spec)
    return _report(spec, beta_degree(spec))


def check_min_ratio(spec: GroupSpec) -> GapReport:
    """Exact verdict on 5*alpha >= 16*beta.

    For the linear group of rank 3 over GF(3) the standard pair has ratio
    27/12 < 16/5; the degrees 39 and 12 are used for that point instead.
    """
    _require_valid(spec)
    if spec.family is Family.LINEAR and spec.rank == 3 and spec.q == 3:
        return _report(spec, CharPair(39, 12, "degrees 39 and 12"))
    return _report(spec, beta_degree(spec))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def prime_powers(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, e) with q = p**e <= limit, ascending in q; sieve-based."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(range(i * i, limit + 1, i))
    out = []
    for p in range(2, limit + 1):
        if sieve[p]:
            q, e = p, 1
            while q <= limit:
                out.append((q, p, e))
                q *= p
                e += 1
    out.sort()
    return out


def _sweep_points(
    families: Sequence[Family], rank_max: int, q_max: int
) -> list[GroupSpec]:
    pps = prime_powers(q_max)
    points = []
    for fam in _FAMILY_ORDER:
        if fam not in families:
            continue
        if fam in CLASSICAL_FAMILIES:
            for rank in range(_RANK_MIN[fam], rank_max + 1):
                for q, p, e in pps:
                    points.append(GroupSpec(fam, rank, q, p, e))
        else:
            for q, p, e in pps:
                points.append(GroupSpec(fam, None, q, p, e))
    return points


@dataclass(frozen=True)
class SweepRecord:
    """Both checks at one parameter point.  gap_pair is always the Steinberg
    pair; ratio_pair may be the per-point override."""

    spec: GroupSpec
    order: int
    gap_pair: CharPair
    passed_pow14: bool
    ratio_pair: CharPair
    passed_ratio165: bool


def _sweep_one(spec: GroupSpec) -> SweepRecord | Exclusion:
    reason = validate(spec)
    if reason is not None:
        return Exclusion(spec.family, spec.rank, spec.q, reason)
    report = check_steinberg_gap(spec)
    ratio_report = check_min_ratio(spec)
    return SweepRecord(
        spec,
        report.order,
        report.pair,
        report.passed_pow14,
        ratio_report.pair,
        ratio_report.passed_ratio165,
    )


def sweep(
    families: Iterable[Family] | None = None,
    rank_max: int = 20,
    q_max: int = 32,
    parallel: int = 0,
) -> list[SweepRecord | Exclusion]:
    """Evaluate both ratio checks on every parameter point of the requested
    families with rank <= rank_max and prime-power q <= q_max.

    Excluded points are reported as Exclusion entries.  The output order is
    deterministic: family declaration order, then rank, then q.  parallel=N
    distributes the pointwise work over N processes; the merged order is
    identical to the sequential one.
    """
    fams = tuple(Family(f) for f in families) if families is not None else tuple(Family)
    points = _sweep_points(fams, rank_max, q_max)
    if parallel and parallel > 1:
        from multiprocessing import Pool

        with Pool(parallel) as pool:
            return pool.map(_sweep_one, points, chunksize=64)
    return [_sweep_one(sp) for sp in points]
