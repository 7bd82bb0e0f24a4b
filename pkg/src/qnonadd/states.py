"""Exact unnormalized superpositions with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .gf2core import BitVector, DimensionError, bits_to_str, parity
from .pauli import PauliWord


class BasisError(ValueError):
    """A code basis violates orthogonality, equal norms, or shape."""


@dataclass(frozen=True, eq=False)
class SignedSuperposition:
    """Sparse map ``label -> nonzero int``; labels are packed n-bit ints."""

    n: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for label, c in self.terms.items():
            if label < 0 or label >> self.n:
                raise ValueError(f"label {label} does not fit in {self.n} bits")
            if c:
                clean[label] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis_state(cls, label: BitVector | str) -> SignedSuperposition:
        v = BitVector.from_str(label) if isinstance(label, str) else label
        return cls(v.n, {v.bits: 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedSuperposition):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.terms)

    @property
    def norm2(self) -> int:
        return sum(c * c for c in self.terms.values())

    def scaled(self, k: int) -> SignedSuperposition:
        return SignedSuperposition(self.n, {u: c * k for u, c in self.terms.items()})

    def divided(self, k: int) -> SignedSuperposition:
        if any(c % k for c in self.terms.values()):
            raise ValueError(f"coefficients not divisible by {k}")
        return SignedSuperposition(self.n, {u: c // k for u, c in self.terms.items()})

    def __add__(self, other: SignedSuperposition) -> SignedSuperposition:
        _check_n(self.n, other.n)
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, 0) + c
        return SignedSuperposition(self.n, out)

    def __neg__(self) -> SignedSuperposition:
        return self.scaled(-1)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        return "\n".join(f"{c:+d} {bits_to_str(u, self.n)}" for u, c in self.items())


def _check_n(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"qubit count mismatch: {a} vs {b}")


def apply_pauli(p: PauliWord, s: SignedSuperposition) -> SignedSuperposition:
    _check_n(p.n, s.n)
    a, b, lam = p.alpha, p.beta, p.lam
    out = {}
    for u, c in s.terms.items():
        out[u ^ a] = -c if lam ^ parity(u & b) else c
    return SignedSuperposition(s.n, out)


def inner(x: SignedSuperposition, y: SignedSuperposition) -> int:
    _check_n(x.n, y.n)
    if len(x.terms) > len(y.terms):
        x, y = y, x
    yt = y.terms
    return sum(c * yt[u] for u, c in x.terms.items() if u in yt)


def matrix_element(x: SignedSuperposition, p: PauliWord, y: SignedSuperposition) -> int:
    """``<x| p |y>`` without building ``p|y>``."""
    _check_n(x.n, y.n)
    _check_n(p.n, y.n)
    a, b, lam = p.alpha, p.beta, p.lam
    xt = x.terms
    total = 0
    for u, c in y.terms.items():
        t = xt.get(u ^ a)
        if t is not None:
            total += -c * t if lam ^ parity(u & b) else c * t
    return total


def superpose_code(
    code: Iterable[BitVector | int],
    n: int | None = None,
    signs: Callable[[int], int] | None = None,
) -> SignedSuperposition:
    """``sum_c sign(c) |c>`` over distinct labels; ``signs`` maps a packed
    label to +1 or -1 and defaults to all +1."""
    labels = []
    for c in code:
        if isinstance(c, BitVector):
            if n is None:
                n = c.n
            _check_n(n, c.n)
            labels.append(c.bits)
        else:
            labels.append(int(c))
    if not labels:
        raise ValueError("empty code")
    if n is None:
        raise ValueError("n required for packed-int labels")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate labels in code")
    terms = {}
    for u in labels:
        s = 1 if signs is None else signs(u)
        if s not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {s}")
        terms[u] = s
    return SignedSuperposition(n, terms)


@dataclass(frozen=True, eq=False)
class QuantumCodeBasis:
    """Pairwise-orthogonal, equal-norm vectors spanning a code of length n.

    ``d`` is the declared distance; verification lives in :mod:`verify`.
    """

    n: int
    vectors: tuple[SignedSuperposition, ...]
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if not self.vectors:
            raise BasisError("empty basis")
        for v in self.vectors:
            _check_n(self.n, v.n)
            if not v:
                raise BasisError("zero vector in basis")
        norms = {v.norm2 for v in self.vectors}
        if len(norms) != 1:
            raise BasisError(f"basis vectors have unequal norms {sorted(norms)}")
        bad = first_overlap(self.vectors)
        if bad is not None:
            i, j, val = bad
            raise BasisError(f"vectors {i} and {j} not orthogonal (inner product {val})")

    @property
    def K(self) -> int:
        return len(self.vectors)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.K, self.d)

    @property
    def norm2(self) -> int:
        return self.vectors[0].norm2

    def with_distance(self, d: int) -> QuantumCodeBasis:
        return QuantumCodeBasis(self.n, self.vectors, d)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i: int) -> SignedSuperposition:
        return self.vectors[i]


def label_index(vectors: Sequence[SignedSuperposition]) -> dict[int, list[tuple[int, int]]]:
    """Map each label to the ``(vector index, coefficient)`` pairs carrying it."""
    index: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, v in enumerate(vectors):
        for u, c in v.terms.items():
            index[u].append((i, c))
    return index


def first_overlap(vectors: Sequence[SignedSuperposition]) -> tuple[int, int, int] | None:
    """First pair ``(i, j, <v_i|v_j>)`` with nonzero inner product, if any."""
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for owners in label_index(vectors).values():
        if len(owners) < 2:
            continue
        for s, (i, ci) in enumerate(owners):
            for j, cj in owners[s + 1 :]:
                acc[(i, j)] += ci * cj
    bad = sorted((k, v) for k, v in acc.items() if v)
    if bad:
        (i, j), val = bad[0]
        return i, j, val
    return None
