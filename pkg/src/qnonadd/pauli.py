"""Signed Pauli words (-1)^lam X_alpha Z_beta with real phases only.

``Y`` is never represented directly: the word with ``alpha = beta = e_i`` and
``lam = 0`` is the real operator ``X_i Z_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .gf2core import (
    BitVector,
    DimensionError,
    SymplecticVector,
    bits_to_str,
    parity,
    str_to_bits,
)


@dataclass(frozen=True, slots=True)
class PauliWord:
    n: int
    lam: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.lam not in (0, 1):
            raise ValueError(f"sign exponent must be 0 or 1, got {self.lam}")
        if self.alpha >> self.n or self.beta >> self.n or self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha/beta do not fit in n bits")

    @classmethod
    def identity(cls, n: int) -> PauliWord:
        return cls(n, 0, 0, 0)

    @classmethod
    def from_vectors(cls, alpha: BitVector, beta: BitVector, lam: int = 0) -> PauliWord:
        if alpha.n != beta.n:
            raise DimensionError("alpha and beta differ in length")
        return cls(alpha.n, lam, alpha.bits, beta.bits)

    @classmethod
    def x(cls, alpha: str) -> PauliWord:
        return cls(len(alpha), 0, str_to_bits(alpha), 0)

    @classmethod
    def z(cls, beta: str) -> PauliWord:
        return cls(len(beta), 0, 0, str_to_bits(beta))

    @classmethod
    def parse(cls, text: str) -> PauliWord:
        """Parse ``"+ 10110|00101"`` (sign optional, defaults to +)."""
        text = text.strip()
        lam = 0
        if text[:1] in "+-":
            lam = 1 if text[0] == "-" else 0
            text = text[1:].strip()
        try:
            a, b = text.split("|")
        except ValueError:
            raise ValueError(f"malformed Pauli word: {text!r}") from None
        a, b = a.strip(), b.strip()
        if len(a) != len(b):
            raise DimensionError("alpha and beta differ in length")
        return cls(len(a), lam, str_to_bits(a), str_to_bits(b))

    def __str__(self) -> str:
        sign = "-" if self.lam else "+"
        return f"{sign} {bits_to_str(self.alpha, self.n)}|{bits_to_str(self.beta, self.n)}"

    @property
    def alpha_vec(self) -> BitVector:
        return BitVector(self.n, self.alpha)

    @property
    def beta_vec(self) -> BitVector:
        return BitVector(self.n, self.beta)

    @property
    def symplectic(self) -> SymplecticVector:
        return SymplecticVector(self.alpha_vec, self.beta_vec)

    @property
    def is_identity(self) -> bool:
        return not (self.lam or self.alpha or self.beta)

    @property
    def self_inverse(self) -> bool:
        """True iff the word squares to +I, i.e. ``alpha.beta = 0``."""
        return not parity(self.alpha & self.beta)

    def __mul__(self, other: PauliWord) -> PauliWord:
        return compose(self, other)

    def negate(self) -> PauliWord:
        return PauliWord(self.n, self.lam ^ 1, self.alpha, self.beta)


def compose(p: PauliWord, q: PauliWord) -> PauliWord:
    """The word for the operator product ``p q``."""
    if p.n != q.n:
        raise DimensionError(f"length mismatch: {p.n} vs {q.n}")
    lam = p.lam ^ q.lam ^ parity(p.beta & q.alpha)
    return PauliWord(p.n, lam, p.alpha ^ q.alpha, p.beta ^ q.beta)


def commutes(p: PauliWord, q: PauliWord) -> bool:
    if p.n != q.n:
        raise DimensionError(f"length mismatch: {p.n} vs {q.n}")
    return not (parity(p.alpha & q.beta) ^ parity(q.alpha & p.beta))


def weight(p: PauliWord) -> int:
    return (p.alpha | p.beta).bit_count()


# letter order X < Z < XZ as (alpha bit, beta bit)
_LETTERS = ((1, 0), (0, 1), (1, 1))


def error_count(n: int, max_weight: int) -> int:
    return sum(comb(n, i) * 3**i for i in range(1, max_weight + 1))


def errors_of_weight(n: int, w: int) -> Iterator[PauliWord]:
    """Unsigned words of weight exactly ``w`` in enumeration order."""
    for support in itertools.combinations(range(n), w):
        masks = [1 << (n - 1 - i) for i in support]
        for letters in itertools.product(_LETTERS, repeat=w):
            a = b = 0
            for m, (xa, zb) in zip(masks, letters):
                if xa:
                    a |= m
                if zb:
                    b |= m
            yield PauliWord(n, 0, a, b)


def enumerate_errors(n: int, max_weight: int) -> Iterator[PauliWord]:
    """Every unsigned word of weight 1..max_weight exactly once.

    Order: by weight, then support positions lexicographically, then letters
    per position in X < Z < XZ order.
    """
    if not 0 <= max_weight <= n:
        raise ValueError(f"max_weight must be in [0, {n}], got {max_weight}")
    for w in range(1, max_weight + 1):
        yield from errors_of_weight(n, w)
