"""Arbitrary (nonlinear) binary codebooks and their translation sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .gf2core import BitVector, DimensionError


@dataclass(frozen=True, eq=False)
class CodebookCode:
    """An ``(n, K, d)`` binary code; ``d`` is computed (None when K = 1)."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        if not self.words:
            raise ValueError("empty codebook")
        if len(set(self.words)) != len(self.words):
            raise ValueError("duplicate codewords")
        if any(w < 0 or w >> self.n for w in self.words):
            raise ValueError(f"codeword does not fit in {self.n} bits")

    @classmethod
    def from_vectors(cls, words: Iterable[BitVector]) -> CodebookCode:
        words = list(words)
        n = words[0].n
        if any(w.n != n for w in words):
            raise DimensionError("codewords of unequal length")
        return cls(n, tuple(w.bits for w in words))

    @classmethod
    def from_strs(cls, words: Iterable[str]) -> CodebookCode:
        return cls.from_vectors(BitVector.from_str(w) for w in words)

    @property
    def K(self) -> int:
        return len(self.words)

    @property
    def d(self) -> int | None:
        if len(self.words) < 2:
            return None
        return min((u ^ v).bit_count() for u, v in itertools.combinations(self.words, 2))

    @property
    def params(self) -> tuple[int, int, int | None]:
        return (self.n, self.K, self.d)

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.n, w) for w in self.words]


def translations(support: Iterable[int]) -> list[int]:
    """All x with ``x + S`` inside S, sorted; only ``x = s_1 + s`` can qualify."""
    s = set(support)
    if not s:
        return []
    first = min(s)
    out = []
    for w in sorted(s):
        x = first ^ w
        if all(u ^ x in s for u in s):
            out.append(x)
    return sorted(out)


def translation_set(code: CodebookCode) -> list[BitVector]:
    return [BitVector(code.n, x) for x in translations(code.words)]
