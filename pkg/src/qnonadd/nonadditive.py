"""Constructions of codes with trivial stabilizer.

Families: tau-signed coset codes built from greedily chosen shifts, their
greedy extension by further coset vectors, the twisted-CSS-based family, and
the ((11,2,3)) code on the rows of a Paley-type Hadamard matrix.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from . import bounds
from .codebook import CodebookCode, translation_set, translations
from .css import (
    ConstructionError,
    LinearBinaryCode,
    TauMap,
    build_tau,
    css_coset_reps,
    is_weakly_self_dual,
    min_distance,
    tau_signed_coset,
)
from .gf2core import BitVector, reduce_mod, rref_rows, span_rows
from .states import QuantumCodeBasis, SignedSuperposition
from .verify import IncrementalKL, KLMode

log = logging.getLogger(__name__)

__all__ = [
    "CodebookCode",
    "GreedyConfig",
    "InfeasibleError",
    "HADAMARD_ROWS",
    "build_cssnonadd",
    "build_greedy_family",
    "build_tau_coset_code",
    "extend_code",
    "greedy_vectors",
    "hadamard11",
    "hadamard_codebook",
    "translation_set",
]


class InfeasibleError(ConstructionError):
    """A counting precondition fails or a greedy scan ran out of candidates."""


@dataclass(frozen=True, eq=False)
class GreedyConfig:
    code: LinearBinaryCode
    d: int
    tau: TauMap | None = None
    scan_order: str = "lexicographic"

    def __post_init__(self):
        if self.tau is None:
            object.__setattr__(self, "tau", build_tau(self.code))
        if self.d < 1:
            raise ValueError("d must be positive")
        limit = min(self.dist_code, self.dist_dual)
        if self.d > limit:
            raise ConstructionError(
                f"d={self.d} exceeds min(dist C, dist C^perp) = {limit}"
            )

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def dist_code(self) -> int:
        # the zero code imposes no constraint
        return min_distance(self.code) or self.n + 1

    @property
    def dist_dual(self) -> int:
        return min_distance(self.code.dual()) or self.n + 1

    def error_syndromes(self, code: LinearBinaryCode | None = None) -> set[int]:
        """Syndromes of all vectors of weight <= d-1 (zero included)."""
        code = code or self.code
        return {code.syndrome(e) for e in _low_weight(self.n, self.d - 1)}


def _low_weight(n: int, w: int):
    from itertools import combinations

    for k in range(w + 1):
        for pos in combinations(range(n), k):
            x = 0
            for p in pos:
                x |= 1 << (n - 1 - p)
            yield x


def greedy_vectors(cfg: GreedyConfig, count: int) -> list[BitVector]:
    """Lexicographic scan for independent shifts a_1..a_count with
    ``a_j`` outside ``C + a_i + E`` for every earlier i (including a_0 = 0)."""
    n, k, d = cfg.n, cfg.code.k, cfg.d
    check = bounds.trivial_stabilizer_bound(n, k, d)
    if not check.holds:
        log.warning("counting condition for %d shifts fails: %s", n, check)
    bad = cfg.error_syndromes()
    syn = cfg.code.syndrome
    chosen: list[int] = []
    chosen_syn = [0]
    rref: list[int] = []
    start = 1
    while len(chosen) < count:
        for a in range(start, 1 << n):
            if not reduce_mod(a, rref):
                continue
            sa = syn(a)
            if any(sa ^ s in bad for s in chosen_syn):
                continue
            chosen.append(a)
            chosen_syn.append(sa)
            rref = rref_rows(chosen)
            start = a + 1
            break
        else:
            step = bounds.greedy_step_bound(n, k, d, len(chosen))
            raise InfeasibleError(
                f"no shift number {len(chosen) + 1} exists; room condition {step}"
            )
    return [BitVector(n, a) for a in chosen]


def _code_basis(cfg: GreedyConfig, vectors: list[SignedSuperposition]) -> QuantumCodeBasis:
    return QuantumCodeBasis(cfg.n, tuple(vectors), cfg.d)


def build_tau_coset_code(cfg: GreedyConfig, vectors: Sequence[BitVector]) -> QuantumCodeBasis:
    """``|x_i> = sum_c (-1)^{tau(c).a_i} |c + a_i>`` for a_0 = 0 and the shifts."""
    words = cfg.code.codewords()
    shifts = [0] + [v.bits for v in vectors]
    keys = [reduce_mod(a, cfg.code.rref) for a in shifts]
    if len(set(keys)) != len(keys):
        raise ConstructionError("two shifts lie in the same coset of C")
    out = [tau_signed_coset(words, cfg.tau, a, cfg.n) for a in shifts]
    return _code_basis(cfg, out)


def extend_code(
    basis: QuantumCodeBasis,
    cfg: GreedyConfig,
    target_K: int,
    mode: KLMode | str = KLMode.GENERAL,
) -> QuantumCodeBasis:
    """Append plain coset sums ``sum_c |c + a>`` over unused cosets in
    lexicographic order, keeping each only if the KL conditions at distance
    d still hold.  Returns a shorter basis (with a warning) on exhaustion."""
    if target_K < basis.K:
        raise ValueError("target_K below current dimension")
    if target_K == basis.K:
        return basis
    n, rref = cfg.n, cfg.code.rref
    words = cfg.code.codewords()
    used = {reduce_mod(u, rref) for v in basis.vectors for u in v.terms}
    kl = IncrementalKL(basis.vectors, cfg.d, mode)
    for a in range(1 << n):
        if len(kl.vectors) >= target_K:
            break
        if reduce_mod(a, rref) != a or a in used:
            continue
        cand = SignedSuperposition(n, {c ^ a: 1 for c in words})
        if kl.accepts(cand):
            kl.add(cand)
            used.add(a)
    if len(kl.vectors) < target_K:
        log.warning("extension stopped at K=%d, target %d", len(kl.vectors), target_K)
    return QuantumCodeBasis(n, tuple(kl.vectors), cfg.d)


@dataclass(frozen=True)
class GreedyFamily:
    basis: QuantumCodeBasis
    ell: int
    shifts: tuple[BitVector, ...]
    truncated: bool = False
    notes: tuple[str, ...] = field(default=())


def build_greedy_family(code: LinearBinaryCode, d: int, mode: KLMode | str = KLMode.GENERAL) -> GreedyFamily:
    """The ``((n, 2^l, d))`` pipeline: n greedy shifts, then extension to 2^l
    vectors, l being the greatest integer with ``2^l <= 2^(n-k) / V``."""
    cfg = GreedyConfig(code, d)
    n, k = code.n, code.k
    ell = bounds.greedy_ell(n, k, d)
    notes = []
    if k + ell >= n:
        notes.append(f"k + ell = {k + ell} >= n = {n}; nonadditivity gate fails")
    shifts = greedy_vectors(cfg, n)
    base = build_tau_coset_code(cfg, shifts)
    target = 1 << max(ell, 0)
    if target < base.K:
        notes.append(f"2^ell = {target} < n + 1 = {base.K}; truncated to 2^ell vectors")
        for note in notes:
            log.warning(note)
        basis = QuantumCodeBasis(n, base.vectors[:target], d)
        return GreedyFamily(basis, ell, tuple(shifts), True, tuple(notes))
    for note in notes:
        log.warning(note)
    basis = extend_code(base, cfg, target, mode)
    return GreedyFamily(basis, ell, tuple(shifts), False, tuple(notes))


def build_cssnonadd(code: LinearBinaryCode, d: int) -> QuantumCodeBasis:
    """An ``((n, 2^(n-2k), d))`` code with trivial stabilizer from a weakly
    self-dual ``[n, k]`` code.

    The twisted vectors ``|y_{a_i}>`` use n-k independent shifts in distinct
    nonzero cosets of C inside its dual; k plain coset sums on further
    independent shifts follow; then k twisted vectors outside the protected
    set are dropped, largest coset label first.
    """
    n, k = code.n, code.k
    if not is_weakly_self_dual(code):
        raise InfeasibleError("code is not weakly self-dual")
    d0 = min_distance(code)
    dual = code.dual()
    d1 = min_distance(dual) or n + 1
    failed = []
    ineq = bounds.twisted_css_bound(n, k, d)
    if not ineq.holds:
        failed.append(f"counting condition fails: {ineq}")
    room = bounds.coset_room_bound(n, k)
    if not room.holds:
        failed.append(f"not enough cosets: {room}")
    if k and d0 < k:
        failed.append(f"dist(C) = {d0} < k = {k}")
    if d > d1:
        failed.append(f"d = {d} exceeds dist(C^perp) = {d1}")
    if failed:
        raise InfeasibleError("; ".join(failed))

    tau = build_tau(code)
    words = code.codewords()
    rref = code.rref

    twisted: dict[int, int] = {}  # coset label -> shift
    picked: list[int] = []
    for a in sorted(span_rows(rref_rows(dual.generator.rows))):
        if len(picked) == n - k:
            break
        key = reduce_mod(a, rref)
        if not key or key in twisted or not reduce_mod(a, rref_rows(picked)):
            continue
        twisted[key] = a
        picked.append(a)
    if len(picked) < n - k:
        raise InfeasibleError("could not pick independent shifts in distinct cosets")

    cfg = GreedyConfig(code, d, tau)
    bad_dual = cfg.error_syndromes(dual)
    bad_code = cfg.error_syndromes(code)
    plain: list[int] = []
    for x in range(1, 1 << n):
        if len(plain) == k:
            break
        if not reduce_mod(x, rref_rows(picked + plain)):
            continue
        if dual.syndrome(x) in bad_dual:
            continue
        if any(code.syndrome(x ^ p) in bad_code for p in plain):
            continue
        plain.append(x)
    if len(plain) < k:
        raise InfeasibleError("could not pick the plain shifts")

    reps = css_coset_reps(code)
    removable = [r for r in reps if r and r not in twisted]
    if len(removable) < k:
        raise InfeasibleError(f"only {len(removable)} removable twisted vectors, need {k}")
    dropped = set(removable[len(removable) - k :]) if k else set()
    vectors = [
        tau_signed_coset(words, tau, twisted.get(r, r), n) for r in reps if r not in dropped
    ]
    vectors += [SignedSuperposition(n, {c ^ a: 1 for c in words}) for a in plain]
    return QuantumCodeBasis(n, tuple(vectors), d)


HADAMARD_ROWS = (
    "00000000000",
    "10100011101",
    "11010001110",
    "01101000111",
    "10110100011",
    "11011010001",
    "11101101000",
    "01110110100",
    "00111011010",
    "00011101101",
    "10001110110",
    "01000111011",
)


def hadamard_codebook() -> CodebookCode:
    """The (11, 12, 6) code formed by the 12 rows."""
    return CodebookCode.from_strs(HADAMARD_ROWS)


def hadamard11() -> QuantumCodeBasis:
    """``|0_L> = sum |r_i>`` and ``|1_L> = sum |1 + r_i>``, declared ((11,2,3))."""
    rows = hadamard_codebook().words
    ones = (1 << 11) - 1
    zero = SignedSuperposition(11, {r: 1 for r in rows})
    one = SignedSuperposition(11, {r ^ ones: 1 for r in rows})
    return QuantumCodeBasis(11, (zero, one), 3)
