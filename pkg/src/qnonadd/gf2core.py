"""GF(2) vectors and matrices packed into Python ints.

Bit convention: coordinate 1 is the most significant bit, so the text form
``"1011"`` and ``int("1011", 2)`` agree and integer order is lexicographic
order on bitstrings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DimensionError(ValueError):
    """Operands have incompatible lengths."""


class DependentRowsError(ValueError):
    """A basis was expected but the rows are linearly dependent."""


class ContainmentError(ValueError):
    """A subspace is not contained in the claimed superspace."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def weight(x: int) -> int:
    return x.bit_count()


def bits_to_str(x: int, n: int) -> str:
    return format(x, f"0{n}b") if n else ""


def str_to_bits(s: str) -> int:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {s!r}")
    return int(s, 2)


def unit(i: int, n: int) -> int:
    """Packed unit vector for 0-based coordinate ``i`` (leftmost is 0)."""
    return 1 << (n - 1 - i)


@dataclass(frozen=True, slots=True)
class BitVector:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits} do not fit in length {self.n}")

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        s = s.strip()
        return cls(len(s), str_to_bits(s))

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitVector:
        return cls(n, (1 << n) - 1)

    def _check(self, other: BitVector) -> None:
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")

    def __add__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.n, self.bits & other.bits)

    def __or__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.n, self.bits | other.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> (self.n - 1 - i)) & 1

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.n)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [self[i] for i in range(self.n)]


@dataclass(frozen=True, slots=True)
class BitMatrix:
    n_cols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.n_cols:
                raise ValueError(f"row {r} does not fit in {self.n_cols} columns")

    @classmethod
    def from_strs(cls, rows: Sequence[str], n_cols: int | None = None) -> BitMatrix:
        rows = [r.strip() for r in rows]
        if n_cols is None:
            if not rows:
                raise ValueError("n_cols required for an empty matrix")
            n_cols = len(rows[0])
        if any(len(r) != n_cols for r in rows):
            raise DimensionError("rows of unequal length")
        return cls(n_cols, tuple(str_to_bits(r) for r in rows))

    @classmethod
    def from_vectors(cls, vectors: Iterable[BitVector], n_cols: int) -> BitMatrix:
        vectors = list(vectors)
        if any(v.n != n_cols for v in vectors):
            raise DimensionError("rows of unequal length")
        return cls(n_cols, tuple(v.bits for v in vectors))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(unit(i, n) for i in range(n)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.n_cols, self.rows[i])

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.n_cols, r) for r in self.rows]

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product ``M v`` (one output bit per row)."""
        if v.n != self.n_cols:
            raise DimensionError(f"vector length {v.n} vs {self.n_cols} columns")
        out = 0
        for r in self.rows:
            out = (out << 1) | parity(r & v.bits)
        return BitVector(self.n_rows, out)

    def __str__(self) -> str:
        return "\n".join(bits_to_str(r, self.n_cols) for r in self.rows)


@dataclass(frozen=True, slots=True)
class SymplecticVector:
    x_part: BitVector
    z_part: BitVector

    def __post_init__(self):
        if self.x_part.n != self.z_part.n:
            raise DimensionError("x and z parts differ in length")

    @property
    def n(self) -> int:
        return self.x_part.n

    def __str__(self) -> str:
        return f"{self.x_part}|{self.z_part}"


def dot(u: BitVector, v: BitVector) -> int:
    if u.n != v.n:
        raise DimensionError(f"length mismatch: {u.n} vs {v.n}")
    return parity(u.bits & v.bits)


def symplectic_product(u: SymplecticVector, v: SymplecticVector) -> int:
    """The alternating form ``a.b' + a'.b`` for ``u=(a|b)``, ``v=(a'|b')``."""
    if u.n != v.n:
        raise DimensionError(f"length mismatch: {u.n} vs {v.n}")
    return parity(u.x_part.bits & v.z_part.bits) ^ parity(v.x_part.bits & u.z_part.bits)


# ---------------------------------------------------------------------------
# int-level elimination kernels; everything above and below wraps these


def rref_rows(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of the span, leading bits descending.

    Every pivot (leading bit of a row) is zero in all other rows, so the
    rows are also the lexicographically minimal basis of their span.
    """
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r & (1 << (b.bit_length() - 1)):
                r ^= b
        if not r:
            continue
        lead = 1 << (r.bit_length() - 1)
        basis = [b ^ r if b & lead else b for b in basis]
        basis.append(r)
    basis.sort(reverse=True)
    return basis


def reduce_mod(x: int, rref: Sequence[int]) -> int:
    """Clear every pivot bit of ``x`` using RREF rows; the result is the
    lexicographically smallest element of ``x + span(rref)``."""
    for b in rref:
        if x & (1 << (b.bit_length() - 1)):
            x ^= b
    return x


def in_span(x: int, rref: Sequence[int]) -> bool:
    return reduce_mod(x, rref) == 0


def rank_rows(rows: Iterable[int]) -> int:
    return len(rref_rows(rows))


def nullspace_rows(rows: Iterable[int], n: int) -> list[int]:
    """Basis of ``{v : r.v = 0 for every row r}``, in RREF."""
    rref = rref_rows(rows)
    pivots = 0
    for b in rref:
        pivots |= 1 << (b.bit_length() - 1)
    out = []
    for f in range(n):
        fb = 1 << f
        if pivots & fb:
            continue
        v = fb
        for b in rref:
            if b & fb:
                v |= 1 << (b.bit_length() - 1)
        out.append(v)
    return rref_rows(out)


def solve_rows(rows: Sequence[int], rhs: Sequence[int]) -> int | None:
    """Some ``x`` with ``rows[i].x = rhs[i]`` for all i, or None."""
    aug = rref_rows((r << 1) | (b & 1) for r, b in zip(rows, rhs))
    x = 0
    for b in aug:
        lead = b.bit_length() - 1
        if lead == 0:
            return None
        if b & 1:
            x |= 1 << (lead - 1)
    return x


def span_rows(rows: Sequence[int]) -> list[int]:
    """All combinations, index bit ``r-1-j`` selecting ``rows[j]``."""
    vals = [0]
    for r in reversed(rows):
        vals += [v ^ r for v in vals]
    return vals


def complement_rows(sub: Sequence[int], sup: Sequence[int]) -> list[int]:
    """RREF basis of the canonical coset representatives of sub in sup."""
    sub_rref = rref_rows(sub)
    return rref_rows(reduce_mod(r, sub_rref) for r in sup)


def extend_to_basis(rows: Sequence[int], n: int) -> list[int]:
    """Unit vectors completing ``rows`` to a basis of the full space."""
    rref = rref_rows(rows)
    pivots = 0
    for b in rref:
        pivots |= 1 << (b.bit_length() - 1)
    return [1 << (n - 1 - i) for i in range(n) if not pivots & (1 << (n - 1 - i))]


# ---------------------------------------------------------------------------
# public operations


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def row_reduce(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.n_cols, tuple(rref_rows(m.rows)))


def nullspace(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.n_cols, tuple(nullspace_rows(m.rows, m.n_cols)))


def solve(a: BitMatrix, rhs: BitVector) -> BitVector | None:
    if rhs.n != a.n_rows:
        raise DimensionError(f"rhs length {rhs.n} vs {a.n_rows} rows")
    x = solve_rows(a.rows, [rhs[i] for i in range(rhs.n)])
    return None if x is None else BitVector(a.n_cols, x)


def span_enumerate(basis: BitMatrix) -> Iterator[BitVector]:
    """All combinations of independent rows in lexicographic coefficient order.

    The coefficient of row 0 is the most significant, so for an RREF basis
    the stream is sorted ascending.
    """
    if rank(basis) != basis.n_rows:
        raise DependentRowsError("basis rows are linearly dependent")
    rows = basis.rows
    r = len(rows)
    for i in range(1 << r):
        v = 0
        for j in range(r):
            if (i >> (r - 1 - j)) & 1:
                v ^= rows[j]
        yield BitVector(basis.n_cols, v)


def is_subspace(sub: BitMatrix, sup: BitMatrix) -> bool:
    if sub.n_cols != sup.n_cols:
        raise DimensionError("column counts differ")
    sup_rref = rref_rows(sup.rows)
    return all(in_span(r, sup_rref) for r in sub.rows)


def coset_reps(sub: BitMatrix, sup: BitMatrix) -> list[BitVector]:
    """Lexicographically smallest representative of each coset of sub in sup.

    These representatives form a linear subspace (reduction modulo an RREF
    basis is linear); they are returned sorted, zero first.
    """
    if not is_subspace(sub, sup):
        raise ContainmentError("row space of sub is not inside row space of sup")
    comp = complement_rows(sub.rows, sup.rows)
    return [BitVector(sup.n_cols, v) for v in sorted(span_rows(comp))]


def coset_complement(sub: BitMatrix, sup: BitMatrix) -> BitMatrix:
    """RREF basis of the space spanned by :func:`coset_reps`."""
    if not is_subspace(sub, sup):
        raise ContainmentError("row space of sub is not inside row space of sup")
    return BitMatrix(sup.n_cols, tuple(complement_rows(sub.rows, sup.rows)))
