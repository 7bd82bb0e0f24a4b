"""Counting inequalities behind the nonadditive constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb


def ball(n: int, d: int) -> int:
    """Number of binary vectors of length n and weight at most d - 1."""
    return sum(comb(n, i) for i in range(d))


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs

    def __str__(self) -> str:
        return f"{self.name}: {self.lhs} < {self.rhs} {'OK' if self.holds else 'FAILS'}"


def trivial_stabilizer_bound(n: int, k: int, d: int) -> Inequality:
    """Sufficient for n independent greedy coset shifts: (n-1) 2^k V < 2^(n-1)."""
    return Inequality("greedy-shifts", (n - 1) * 2**k * ball(n, d), 2 ** (n - 1))


def greedy_step_bound(n: int, k: int, d: int, m: int) -> Inequality:
    """Room for shift number m+1 after m are chosen: 2^m + m 2^k V < 2^n."""
    return Inequality("greedy-step", 2**m + m * 2**k * ball(n, d), 2**n)


def twisted_css_bound(n: int, k: int, d: int) -> Inequality:
    """(2^(n-k) + (k-1) 2^k) V < 2^(n-1)."""
    return Inequality("twisted-css", (2 ** (n - k) + (k - 1) * 2**k) * ball(n, d), 2 ** (n - 1))


def coset_room_bound(n: int, k: int) -> Inequality:
    """n - k - 1 < 2^(n-2k-1), written with the smaller side first."""
    return Inequality("coset-room", n - k - 1, 2 ** (n - 2 * k - 1) if n > 2 * k else 0)


def greedy_ell(n: int, k: int, d: int) -> int:
    """Greatest integer l with 2^l <= 2^(n-k) / V (may be negative)."""
    ratio = Fraction(2 ** (n - k), ball(n, d))
    ell = ratio.numerator.bit_length() - ratio.denominator.bit_length()
    while Fraction(2) ** ell > ratio:
        ell -= 1
    while Fraction(2) ** (ell + 1) <= ratio:
        ell += 1
    return ell


def ceil_ell_distance2(n: int) -> int:
    """ceil(n - 1 - log2(n + 1)), the exponent quoted for distance-2 families."""
    return math.ceil(n - 1 - math.log2(n + 1))


def binary_entropy(t: float) -> float:
    if t <= 0 or t >= 1:
        return 0.0
    return -t * math.log2(t) - (1 - t) * math.log2(1 - t)


def rate_bound(n: int, d: int) -> float:
    """Asymptotic rate 1 - 2 H2(d/n) (arithmetic only; no construction)."""
    return 1 - 2 * binary_entropy(d / n)
