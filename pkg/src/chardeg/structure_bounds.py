"""Exact calculators for the structural inequalities.

These operate on user-supplied structural data (chief-factor descriptors,
subgroup indices); nothing here computes radicals or Fitting subgroups from
a group presentation.  The decimal exponents 1.43, 0.259, ... are treated as
the exact rationals 143/100, 259/1000, ... throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Ordering, cmp_power, factorial, is_prime, nth_root_floor
from .degree_data import DegreeTable

__all__ = [
    "ChiefFactorDescriptor",
    "ChiefSeries",
    "series_from_json",
    "rat14_lower_bound",
    "quotient_power_check",
    "maroti_bound",
    "solvable_index_bound",
    "radical_index_check",
    "frobenius_example",
    "extraspecial_example",
]


@dataclass(frozen=True)
class ChiefFactorDescriptor:
    """One chief factor S^k: the simple (or abelian) factor order, the number
    of copies, and the two flags that exempt a factor from the product bound."""

    label: str
    factor_order: int
    multiplicity: int
    is_abelian: bool
    is_psl2: bool

    def __post_init__(self) -> None:
        if self.factor_order < 2:
            raise ValueError("factor order must be at least 2")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be at least 1")
        if self.is_abelian and self.is_psl2:
            raise ValueError("a chief factor cannot be both abelian and PSL_2-type")


@dataclass(frozen=True)
class ChiefSeries:
    factors: tuple[ChiefFactorDescriptor, ...]


def series_from_json(text: str) -> ChiefSeries:
    """Accepts {"factors": [{"label": ..., "order": "20160",
    "multiplicity": 2, "abelian": false, "psl2": false}, ...]}."""
    doc = json.loads(text)
    factors = []
    for f in doc["factors"]:
        factors.append(
            ChiefFactorDescriptor(
                label=str(f.get("label", "")),
                factor_order=int(f["order"]),
                multiplicity=int(f.get("multiplicity", 1)),
                is_abelian=bool(f.get("abelian", False)),
                is_psl2=bool(f.get("psl2", False)),
            )
        )
    return ChiefSeries(tuple(factors))


def rat14_lower_bound(series: ChiefSeries) -> int:
    """Product of |S|**k over the nonabelian, non-PSL_2 chief factors; the
    caller reads the result P as the certified bound rat(G)**14 >= P."""
    out = 1
    for f in series.factors:
        if not f.is_abelian and not f.is_psl2:
            out *= f.factor_order ** f.multiplicity
    return out


def quotient_power_check(rat_g: Fraction, rat_gn: Fraction, order_n: int) -> bool:
    """Exact verdict on rat_g**14 >= rat_gn**14 * order_n."""
    rat_g, rat_gn = Fraction(rat_g), Fraction(rat_gn)
    if rat_g < 1 or rat_gn < 1:
        raise ValueError("degree ratios are at least 1")
    if order_n < 1:
        raise ValueError("order_n must be positive")
    return cmp_power(rat_g / rat_gn, 14, order_n, 1) is not Ordering.LESS


def maroti_bound(n: int, d: int) -> int:
    """floor of d!**((n-1)/(d-1)): the largest B with B**(d-1) <= (d!)**(n-1).

    This bounds the order of a degree-n permutation group none of whose
    composition factors is an alternating group of degree above d.
    """
    if d < 4:
        raise ValueError("maroti_bound requires d >= 4")
    if n < 1:
        raise ValueError("maroti_bound requires n >= 1")
    return nth_root_floor(factorial(d) ** (n - 1), d - 1)


def solvable_index_bound(order_n: int) -> int:
    """floor of order_n**1.43: the largest X with X**100 <= order_n**143."""
    if order_n < 1:
        raise ValueError("solvable_index_bound requires a positive order")
    return nth_root_floor(order_n ** 143, 100)


def radical_index_check(rat_g: Fraction, index: int) -> bool:
    """Exact verdict on index <= rat_g**21."""
    rat_g = Fraction(rat_g)
    if rat_g < 1:
        raise ValueError("degree ratios are at least 1")
    if index < 1:
        raise ValueError("index must be positive")
    return cmp_power(rat_g, 21, index, 1) is not Ordering.LESS


def frobenius_example(p: int, m: int) -> DegreeTable:
    """Index-m subgroup of the affine Frobenius group AGL(1, p) containing
    the translations: degrees are m ones and (p-1)/m copies of m, so the
    degree ratio is 1 while the Fitting index m is unbounded over the family.
    """
    if m <= 1:
        raise ValueError("frobenius_example requires m > 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % m != 0:
        raise ValueError(f"{m} does not divide p - 1 = {p - 1}")
    degrees = (1,) * m + (m,) * ((p - 1) // m)
    return DegreeTable(
        name=f"frobenius(p={p},m={m})",
        degrees=degrees,
        order=p * m,
        fitting_index=m,
    )


def extraspecial_example(p: int, i: int) -> DegreeTable:
    """Extraspecial-group construction with degree support {1, p**i, p**i+1}
    and Fitting index p**i + 1; multiplicities are not determined by the
    construction, so only the support is emitted."""
    if i < 1:
        raise ValueError("extraspecial_example requires i >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = p ** i
    return DegreeTable(
        name=f"extraspecial(p={p},i={i})",
        degrees=(1, m, m + 1),
        fitting_index=m + 1,
    )
