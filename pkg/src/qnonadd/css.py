"""Binary linear codes, CSS codes and their tau-twisted variants."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .gf2core import (
    BitMatrix,
    BitVector,
    DimensionError,
    complement_rows,
    extend_to_basis,
    in_span,
    nullspace_rows,
    parity,
    rank_rows,
    rref_rows,
    span_rows,
)
from .pauli import PauliWord
from .stabilizer import StabilizerGroup, _combine, _coordinates
from .states import QuantumCodeBasis, SignedSuperposition

MAX_EXHAUSTIVE_DIM = 24


class ConstructionError(ValueError):
    """Inputs do not meet a construction's preconditions."""


class CapacityError(ValueError):
    """Exhaustive search would be too large."""


@dataclass(frozen=True, eq=False)
class LinearBinaryCode:
    """An ``[n, k]`` code given by k independent generator rows."""

    n: int
    generator: BitMatrix

    def __post_init__(self):
        if self.generator.n_cols != self.n:
            raise DimensionError(f"generator has {self.generator.n_cols} columns, expected {self.n}")
        if rank_rows(self.generator.rows) != self.generator.n_rows:
            raise ValueError("generator rows are linearly dependent")

    @classmethod
    def from_strs(cls, rows: list[str], n: int | None = None) -> LinearBinaryCode:
        m = BitMatrix.from_strs(rows, n)
        return cls(m.n_cols, m)

    @classmethod
    def repetition(cls, n: int) -> LinearBinaryCode:
        return cls(n, BitMatrix(n, ((1 << n) - 1,)))

    @classmethod
    def zero(cls, n: int) -> LinearBinaryCode:
        return cls(n, BitMatrix(n, ()))

    @property
    def k(self) -> int:
        return self.generator.n_rows

    @cached_property
    def rref(self) -> tuple[int, ...]:
        return tuple(rref_rows(self.generator.rows))

    @cached_property
    def parity_check(self) -> BitMatrix:
        return BitMatrix(self.n, tuple(nullspace_rows(self.generator.rows, self.n)))

    def dual(self) -> LinearBinaryCode:
        return LinearBinaryCode(self.n, self.parity_check)

    def __contains__(self, v: BitVector | int) -> bool:
        x = v.bits if isinstance(v, BitVector) else v
        return in_span(x, self.rref)

    def syndrome(self, x: int) -> int:
        out = 0
        for h in self.parity_check.rows:
            out = (out << 1) | parity(h & x)
        return out

    def codewords(self) -> list[int]:
        """All codewords, sorted."""
        if self.k > MAX_EXHAUSTIVE_DIM:
            raise CapacityError(f"k={self.k} too large to enumerate")
        return sorted(span_rows(self.rref))


def is_weakly_self_dual(code: LinearBinaryCode) -> bool:
    rows = code.generator.rows
    return all(not parity(u & v) for i, u in enumerate(rows) for v in rows[i:])


def min_distance(code: LinearBinaryCode) -> int:
    """Minimum weight of a nonzero codeword; 0 for the zero code."""
    if code.k > MAX_EXHAUSTIVE_DIM:
        raise CapacityError(f"k={code.k} exceeds the exhaustive limit {MAX_EXHAUSTIVE_DIM}")
    if code.k == 0:
        return 0
    return min(c.bit_count() for c in span_rows(code.rref) if c)


def css_coset_reps(code: LinearBinaryCode) -> list[int]:
    """Sorted canonical representatives of the cosets of C in its dual."""
    comp = complement_rows(code.generator.rows, code.parity_check.rows)
    return sorted(span_rows(comp))


def _require_wsd(code: LinearBinaryCode) -> None:
    if not is_weakly_self_dual(code):
        raise ConstructionError("code is not weakly self-dual")


def build_css(code: LinearBinaryCode) -> QuantumCodeBasis:
    _require_wsd(code)
    words = code.codewords()
    vectors = [SignedSuperposition(code.n, {c ^ a: 1 for c in words}) for a in css_coset_reps(code)]
    d = min_distance(code.dual()) if code.k < code.n else code.n + 1
    return QuantumCodeBasis(code.n, tuple(vectors), d)


def css_stabilizer(code: LinearBinaryCode) -> StabilizerGroup:
    """``X_c`` and ``Z_c`` for each generator row c of a weakly self-dual C."""
    _require_wsd(code)
    rows = code.rref
    gens = [PauliWord(code.n, 0, c, 0) for c in rows] + [PauliWord(code.n, 0, 0, c) for c in rows]
    return StabilizerGroup(code.n, tuple(gens))


@dataclass(frozen=True, eq=False)
class TauMap:
    """Linear map on C fixed by its images on ``domain_rows``."""

    n: int
    domain_rows: tuple[int, ...]
    images: tuple[int, ...]
    _coords: object = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.domain_rows) != len(self.images):
            raise ValueError("one image per domain basis row required")
        object.__setattr__(self, "_coords", _coordinates(tuple(self.domain_rows)))

    @property
    def domain_basis(self) -> BitMatrix:
        return BitMatrix(self.n, self.domain_rows)

    def __call__(self, c: int) -> int:
        coeff = self._coords(c)
        if coeff is None:
            raise ValueError("argument is not in the domain code")
        return _combine(self.images, coeff)


def build_tau(code: LinearBinaryCode) -> TauMap:
    """Images are unit vectors completing a basis of the dual code, so
    distinct codewords land in distinct cosets of the dual."""
    images = extend_to_basis(code.parity_check.rows, code.n)
    return TauMap(code.n, code.rref, tuple(images))


def tau_signed_coset(code_words: list[int], tau: TauMap, a: int, n: int) -> SignedSuperposition:
    """``sum_c (-1)^{tau(c).a} |c + a>``."""
    return SignedSuperposition(n, {c ^ a: -1 if parity(tau(c) & a) else 1 for c in code_words})


def build_twisted_css(code: LinearBinaryCode, tau: TauMap | None = None) -> QuantumCodeBasis:
    _require_wsd(code)
    tau = tau or build_tau(code)
    words = code.codewords()
    vectors = [tau_signed_coset(words, tau, a, code.n) for a in css_coset_reps(code)]
    d = min_distance(code.dual()) if code.k < code.n else code.n + 1
    return QuantumCodeBasis(code.n, tuple(vectors), d)
