"""Integer partitions, Young-diagram hook lengths, and exact degrees.

A partition carries its hook grid, the hook product H, and the exact degree
n!/H of the corresponding irreducible character of the symmetric group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .exact_arith import factorial

__all__ = [
    "Partition",
    "HookData",
    "parse_partition",
    "conjugate",
    "is_self_conjugate",
    "hooks",
    "degree",
    "contains",
    "enumerate_gamma",
    "partitions_of",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts.  The empty partition is legal."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p < 1:
                raise ValueError("partition parts must be positive")
            if prev is not None and p > prev:
                raise ValueError("partition parts must be weakly decreasing")
            prev = p

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def exp_str(self) -> str:
        """Exponential display form, e.g. (5,4,4,4,3,3,1) -> "5,4^3,3^2,1"."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            count = j - i
            out.append(str(self.parts[i]) if count == 1 else f"{self.parts[i]}^{count}")
            i = j
        return ",".join(out)


_TERM_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse "3,2,2" or the exponential form "3,2^2"; round-trips both
    display forms."""
    text = text.strip()
    if not text:
        return Partition(())
    parts: list[int] = []
    for chunk in text.split(","):
        m = _TERM_RE.match(chunk.strip())
        if not m:
            raise ValueError(f"bad partition term {chunk!r}")
        val = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if count < 1:
            raise ValueError(f"bad exponent in {chunk!r}")
        parts.extend([val] * count)
    return Partition(tuple(parts))


@dataclass(frozen=True)
class HookData:
    """Hook lengths per node, row by row, and their product."""

    rows: tuple[tuple[int, ...], ...]
    product: int


def hooks(lam: Partition) -> HookData:
    """Hook grid via column counts of the conjugate: for the node (i, j),
    h = (arm) + (leg) + 1 = (lam_i - j) + (lam'_j - i) - 1 in 0-based terms."""
    conj = lam.conjugate().parts
    rows = []
    product = 1
    for i, part in enumerate(lam.parts):
        row = []
        for j in range(part):
            h = (part - j) + (conj[j] - i) - 1
            row.append(h)
            product *= h
        rows.append(tuple(row))
    return HookData(tuple(rows), product)


def degree(lam: Partition) -> int:
    """Exact degree n!/H of the character indexed by lam; the division is
    asserted exact (a remainder would mean a hook-computation bug)."""
    h = hooks(lam).product
    q, r = divmod(factorial(lam.n), h)
    if r:
        raise ArithmeticError(f"hook product {h} does not divide {lam.n}!")
    return q


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def is_self_conjugate(lam: Partition) -> bool:
    return lam.is_self_conjugate()


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of mu fits inside the diagram of lam
    (mu_i <= lam_i for every i, missing parts counting as 0)."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam.parts, mu.parts))


def enumerate_gamma(m: int) -> Iterator[Partition]:
    """All partitions with exactly m parts, each part in [m, m+2].

    Yields groups of constant size |lam| in increasing order of size; within
    one size, partitions with more parts equal to m+2 come first.
    """
    if m < 1:
        raise ValueError("enumerate_gamma requires m >= 1")
    for excess in range(0, 2 * m + 1):  # |lam| = m*m + excess
        for a in range(min(m, excess // 2), max(0, excess - m) - 1, -1):
            b = excess - 2 * a
            c = m - a - b
            if b < 0 or c < 0:
                continue
            yield Partition((m + 2,) * a + (m + 1,) * b + (m,) * c)


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n exactly once, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("partitions_of requires n >= 0")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rest = len(parts) - i  # the decremented unit plus all trailing 1s
        parts[i] -= 1
        cap = parts[i]
        del parts[i + 1 :]
        while rest > 0:
            take = min(cap, rest)
            parts.append(take)
            rest -= take


def partition_count(n: int) -> int:
    """Number of partitions of n (Euler recurrence); oracle support."""
    counts = [1] + [0] * n
    for k in range(1, n + 1):
        for j in range(k, n + 1):
            counts[j] += counts[j - k]
    return counts[n]
