"""Stabilizer groups, their coset-sum codespace bases, and sign tables.

A stabilizer code has a basis of vectors ``sum_c sgn(t+c+g) |t+c+g>`` where
``c`` runs over the X-part code ``C``, ``g`` over a complement ``Gamma`` and
``t`` is a fixed offset.  The offset is zero unless the group contains a
pure-Z element with a minus sign; the textbook characterization assumes it
is zero, so tables here carry it explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .gf2core import (
    BitMatrix,
    BitVector,
    bits_to_str,
    complement_rows,
    nullspace_rows,
    parity,
    rank_rows,
    reduce_mod,
    rref_rows,
    solve_rows,
    span_rows,
)
from .pauli import PauliWord, commutes, compose
from .states import QuantumCodeBasis, SignedSuperposition, apply_pauli


class StabilizerError(ValueError):
    """Generators do not define a valid stabilizer group."""


class InvalidStabilizerError(StabilizerError):
    """The generated group contains -I, so its fixed space is zero."""


class StructureError(StabilizerError):
    """Row reduction did not reach the expected block form."""


class ShapeError(ValueError):
    """A basis is not of the signed coset-sum form."""


@dataclass(frozen=True, eq=False)
class StabilizerGroup:
    n: int
    generators: tuple[PauliWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        self.check()

    @classmethod
    def unchecked(cls, n: int, generators) -> StabilizerGroup:
        """Build without validation (for diagnosing malformed inputs)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "generators", tuple(generators))
        return g

    def check(self) -> None:
        gens = self.generators
        for g in gens:
            if g.n != self.n:
                raise StabilizerError(f"generator {g} has length {g.n}, expected {self.n}")
            if not g.self_inverse:
                raise StabilizerError(f"generator {g} squares to -I")
        for g, h in itertools.combinations(gens, 2):
            if not commutes(g, h):
                raise StabilizerError(f"generators {g} and {h} anticommute")
        if rank_rows(self.symplectic_rows()) != len(gens):
            raise StabilizerError("generator symplectic vectors are dependent")

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def order(self) -> int:
        return 1 << self.m

    def symplectic_rows(self) -> list[int]:
        """Rows ``(alpha|beta)`` packed as ``alpha << n | beta``."""
        return [(g.alpha << self.n) | g.beta for g in self.generators]

    def matrix(self) -> BitMatrix:
        return BitMatrix(2 * self.n, tuple(self.symplectic_rows()))

    def elements(self) -> Iterator[PauliWord]:
        """All 2^m group elements in Gray-code order, identity first."""
        w = PauliWord.identity(self.n)
        yield w
        for i in range(1, 1 << self.m):
            j = (i & -i).bit_length() - 1
            w = compose(w, self.generators[j])
            yield w

    def fixes(self, v: SignedSuperposition) -> bool:
        return all(apply_pauli(g, v) == v for g in self.generators)

    def __str__(self) -> str:
        return "\n".join(str(g) for g in self.generators)


@dataclass(frozen=True)
class NormalForm:
    """Generators row-reduced to ``[[A | B], [0 | P]]``.

    ``top`` holds the words ``(-1)^eps X_a Z_b`` with A in RREF, ``bottom``
    the words ``(-1)^eps Z_p`` with P in RREF.  Every word is a product of
    original generators, signs included.
    """

    n: int
    top: tuple[PauliWord, ...]
    bottom: tuple[PauliWord, ...]

    @property
    def r(self) -> int:
        return len(self.top)

    @property
    def A(self) -> BitMatrix:
        return BitMatrix(self.n, tuple(w.alpha for w in self.top))

    @property
    def B(self) -> BitMatrix:
        return BitMatrix(self.n, tuple(w.beta for w in self.top))

    @property
    def P(self) -> BitMatrix:
        return BitMatrix(self.n, tuple(w.beta for w in self.bottom))

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(w.lam for w in self.top + self.bottom)

    def group(self) -> StabilizerGroup:
        return StabilizerGroup(self.n, self.top + self.bottom)


def _eliminate(words: list[PauliWord], key) -> tuple[list[PauliWord], list[PauliWord]]:
    """Gauss-Jordan on ``key(word)``; returns (pivot rows sorted, zero rows)."""
    pivots: list[PauliWord] = []
    rest: list[PauliWord] = []
    for w in words:
        for p in pivots:
            if key(w) & (1 << (key(p).bit_length() - 1)):
                w = compose(w, p)
        if not key(w):
            rest.append(w)
            continue
        lead = 1 << (key(w).bit_length() - 1)
        pivots = [compose(p, w) if key(p) & lead else p for p in pivots]
        pivots.append(w)
    pivots.sort(key=key, reverse=True)
    return pivots, rest


def normal_form(s: StabilizerGroup) -> NormalForm:
    top, rest = _eliminate(list(s.generators), lambda w: w.alpha)
    bottom, zero = _eliminate(rest, lambda w: w.beta)
    if zero:
        raise StructureError("dependent generators survived validation")
    a_rows = [w.alpha for w in top]
    for p in bottom:
        if any(parity(a & p.beta) for a in a_rows):
            raise StructureError("rows of A are not orthogonal to the rows of P")
    return NormalForm(s.n, tuple(top), tuple(bottom))


@dataclass(frozen=True)
class CosetStructure:
    """Offset ``t``, X-part code basis ``C`` and complement basis ``Gamma``.

    The codespace support is the disjoint union of ``t + g + C`` for ``g`` in
    the span of ``Gamma``; both bases are in RREF.
    """

    n: int
    offset: int
    c_rows: tuple[int, ...]
    gamma_rows: tuple[int, ...]

    @property
    def C_basis(self) -> BitMatrix:
        return BitMatrix(self.n, self.c_rows)

    @property
    def Gamma_basis(self) -> BitMatrix:
        return BitMatrix(self.n, self.gamma_rows)


def coset_structure(s: StabilizerGroup, nf: NormalForm | None = None) -> CosetStructure:
    nf = nf or normal_form(s)
    n = s.n
    p_rows = [w.beta for w in nf.bottom]
    d_rows = nullspace_rows(p_rows, n)
    t = solve_rows(p_rows, [w.lam for w in nf.bottom])
    if t is None:
        raise StructureError("sign system of the pure-Z generators is inconsistent")
    t = reduce_mod(t, d_rows)
    c_rows = tuple(w.alpha for w in nf.top)
    gamma = tuple(complement_rows(c_rows, d_rows))
    return CosetStructure(n, t, c_rows, gamma)


def _group_sum(gens: tuple[PauliWord, ...], start: int) -> dict[int, int]:
    """Coefficients of ``sum_{phi in H} phi |start>`` by Gray code."""
    lam = a = b = 0
    acc = {start: 1}
    for i in range(1, 1 << len(gens)):
        g = gens[(i & -i).bit_length() - 1]
        lam ^= g.lam ^ parity(b & g.alpha)
        a ^= g.alpha
        b ^= g.beta
        u = start ^ a
        acc[u] = acc.get(u, 0) + (-1 if lam ^ parity(start & b) else 1)
    return acc


def codespace_basis(s: StabilizerGroup) -> QuantumCodeBasis:
    """One ``|x_g> = sum_phi phi |t+g>`` per ``g`` in span(Gamma), sorted by g,
    with the common factor ``2^(m-r)`` divided out."""
    nf = normal_form(s)
    cs = coset_structure(s, nf)
    vectors = []
    for g in sorted(span_rows(cs.gamma_rows)):
        start = cs.offset ^ g
        acc = {u: c for u, c in _group_sum(s.generators, start).items() if c}
        if not acc:
            raise InvalidStabilizerError("the group contains -I; fixed space is zero")
        scale = acc.get(start, 0)
        if scale <= 0:
            raise InvalidStabilizerError("sum over the group does not fix its start label")
        vectors.append(SignedSuperposition(s.n, acc).divided(scale))
    return QuantumCodeBasis(s.n, tuple(vectors))


# ---------------------------------------------------------------------------
# sign tables


@dataclass(frozen=True, eq=False)
class SignTable:
    """``sgn[(c, g)]`` is the coefficient of ``|t+c+g>`` (labels packed)."""

    n: int
    c_rows: tuple[int, ...]
    gamma_rows: tuple[int, ...]
    sgn: Mapping[tuple[int, int], int]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c_rows", tuple(self.c_rows))
        object.__setattr__(self, "gamma_rows", tuple(self.gamma_rows))
        object.__setattr__(self, "sgn", dict(self.sgn))
        if rank_rows(self.c_rows + self.gamma_rows) != len(self.c_rows) + len(self.gamma_rows):
            raise ShapeError("C and Gamma bases are not jointly independent")

    @property
    def r(self) -> int:
        return len(self.c_rows)

    @property
    def m(self) -> int:
        return self.n - len(self.gamma_rows)

    @property
    def C_basis(self) -> BitMatrix:
        return BitMatrix(self.n, self.c_rows)

    @property
    def Gamma_basis(self) -> BitMatrix:
        return BitMatrix(self.n, self.gamma_rows)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.sgn[key]

    def flipped(self, c: int, g: int) -> SignTable:
        new = dict(self.sgn)
        new[(c, g)] = -new[(c, g)]
        return SignTable(self.n, self.c_rows, self.gamma_rows, new, self.offset)

    def lines(self) -> list[str]:
        out = []
        if self.offset:
            out.append(f"OFFSET {bits_to_str(self.offset, self.n)}")
        for (c, g), s in sorted(self.sgn.items()):
            out.append(f"SGN {bits_to_str(c, self.n)} {bits_to_str(g, self.n)} {s:+d}")
        return out


def _coordinates(rows: tuple[int, ...]):
    """Closure returning the coefficient bits of x in the (independent) rows,
    row 0 most significant, or None if x is outside the span."""
    k = len(rows)
    aug = rref_rows((r << k) | (1 << (k - 1 - i)) for i, r in enumerate(rows))

    def coords(x: int) -> int | None:
        y = x << k
        for b in aug:
            if y & (1 << (b.bit_length() - 1)):
                y ^= b
        if y >> k:
            return None
        return y

    return coords


def _combine(rows: tuple[int, ...], coeff: int) -> int:
    k = len(rows)
    v = 0
    for i, r in enumerate(rows):
        if (coeff >> (k - 1 - i)) & 1:
            v ^= r
    return v


def extract_signs(
    basis: QuantumCodeBasis, A: BitMatrix, Gamma: BitMatrix, offset: BitVector | int = 0
) -> SignTable:
    """Read ``sgn(t+c+g)`` off a basis of signed coset sums."""
    n = basis.n
    t = offset.bits if isinstance(offset, BitVector) else offset
    c_rows, g_rows = tuple(A.rows), tuple(Gamma.rows)
    r = len(c_rows)
    coords = _coordinates(c_rows + g_rows)
    if rank_rows(c_rows + g_rows) != len(c_rows) + len(g_rows):
        raise ShapeError("C and Gamma bases are not jointly independent")
    c_mask = ((1 << r) - 1) << len(g_rows)
    table: dict[tuple[int, int], int] = {}
    seen_gamma = set()
    for idx, v in enumerate(basis.vectors):
        gammas = set()
        for u, coef in v.terms.items():
            xy = coords(u ^ t)
            if xy is None:
                raise ShapeError(f"vector {idx}: label {bits_to_str(u, n)} outside t + C + Gamma")
            if abs(coef) != 1:
                raise ShapeError(f"vector {idx}: coefficient {coef} is not +-1")
            c = _combine(c_rows, (xy & c_mask) >> len(g_rows))
            g = _combine(g_rows, xy & ((1 << len(g_rows)) - 1))
            gammas.add(g)
            table[(c, g)] = coef
        if len(gammas) != 1:
            raise ShapeError(f"vector {idx}: support meets several cosets of C")
        if len(v.terms) != 1 << r:
            raise ShapeError(f"vector {idx}: support is not a full coset of C")
        (g,) = gammas
        if g in seen_gamma:
            raise ShapeError(f"two basis vectors share the coset of {bits_to_str(g, n)}")
        seen_gamma.add(g)
    if len(seen_gamma) != 1 << len(g_rows):
        raise ShapeError("basis does not cover every coset label in span(Gamma)")
    return SignTable(n, c_rows, g_rows, table, t)


@dataclass(frozen=True)
class SignReport:
    passed: bool
    checked: int
    identity: str | None = None
    detail: str | None = None

    def __str__(self) -> str:
        if self.passed:
            return f"SIGNS result=pass checked={self.checked}"
        return f"SIGNS result=fail checked={self.checked} identity={self.identity} {self.detail}"


def verify_sign_identities(t: SignTable) -> SignReport:
    """Check ``sgn(g) = 1``, the pairwise law for sums of the ``a_i`` and the
    mixed law for ``sum a_i + sum g_j``, exhaustively over all subsets.

    Returns the first violation in that order.
    """
    n, a, g = t.n, t.c_rows, t.gamma_rows
    sgn = t.sgn
    checked = 0

    def fail(identity: str, s_set, t_set, lhs, rhs) -> SignReport:
        detail = f"S={list(s_set)} T={list(t_set)} lhs={lhs:+d} rhs={rhs:+d}"
        return SignReport(False, checked, identity, detail)

    for gv in span_rows(g):
        checked += 1
        val = sgn.get((0, gv))
        if val != 1:
            return fail("gamma-positive", [], [bits_to_str(gv, n)], val or 0, 1)

    subsets_a = [s for k in range(1, len(a) + 1) for s in itertools.combinations(range(len(a)), k)]
    subsets_g = [s for k in range(1, len(g) + 1) for s in itertools.combinations(range(len(g)), k)]

    def sum_of(rows, idx):
        v = 0
        for i in idx:
            v ^= rows[i]
        return v

    sa = {i: sgn[(a[i], 0)] for i in range(len(a))}
    for S in subsets_a:
        checked += 1
        lhs = sgn[(sum_of(a, S), 0)]
        rhs = 1
        for i in S:
            rhs *= sa[i] ** len(S)
        for i, j in itertools.combinations(S, 2):
            rhs *= sgn[(a[i] ^ a[j], 0)]
        if lhs != rhs:
            return fail("sum-of-generators", [i + 1 for i in S], [], lhs, rhs)

    for S in subsets_a:
        cs = sum_of(a, S)
        base = sgn[(cs, 0)]
        prod_sa = 1
        for i in S:
            prod_sa *= sa[i]
        for T in subsets_g:
            checked += 1
            lhs = sgn[(cs, sum_of(g, T))]
            rhs = base * prod_sa ** len(T)
            for i in S:
                for j in T:
                    rhs *= sgn[(a[i], g[j])]
            if lhs != rhs:
                return fail("mixed-sum", [i + 1 for i in S], [j + 1 for j in T], lhs, rhs)
    return SignReport(True, checked)


def rebuild_stabilizer(t: SignTable) -> StabilizerGroup:
    """Generators ``sgn(a_i) X_{a_i} Z_{b_i}`` and ``Z_{p_j}`` whose codespace
    has exactly the given signed coset-sum basis (offset conjugated in)."""
    n, a, g, off = t.n, t.c_rows, t.gamma_rows, t.offset
    sgn = t.sgn
    coeff_rows = list(a) + list(g)
    gens = []
    for i, ai in enumerate(a):
        s_i = sgn[(ai, 0)]
        rhs = [int(s_i * sgn[(ai ^ aj, 0)] * sgn[(aj, 0)] == -1) for aj in a]
        rhs += [int(s_i * sgn[(ai, gj)] == -1) for gj in g]
        b = solve_rows(coeff_rows, rhs)
        if b is None:  # pragma: no cover - independence makes this solvable
            raise AssertionError("linear system for b_i is inconsistent")
        lam = (1 if s_i == -1 else 0) ^ parity(b & off)
        gens.append(PauliWord(n, lam, ai, b))
    for p in nullspace_rows(coeff_rows, n):
        gens.append(PauliWord(n, parity(p & off), 0, p))
    return StabilizerGroup(n, tuple(gens))
