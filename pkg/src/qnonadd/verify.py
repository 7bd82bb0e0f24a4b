"""Knill-Laflamme checks, distances, stabilizer search and nonadditivity."""

from __future__ import annotations

import enum
import itertools
import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .codebook import CodebookCode, translations
from .gf2core import nullspace_rows, parity, reduce_mod, rref_rows, solve_rows
from .pauli import PauliWord, enumerate_errors, error_count, errors_of_weight
from .stabilizer import StabilizerGroup
from .states import (
    QuantumCodeBasis,
    SignedSuperposition,
    inner,
    label_index,
    superpose_code,
)


class KLMode(str, enum.Enum):
    STRICT = "strict"
    GENERAL = "general"


class CriterionInapplicableError(ValueError):
    """The hypotheses of a nonadditivity criterion do not hold."""


@dataclass(frozen=True)
class Violation:
    error: PauliWord
    i: int
    j: int
    value: int
    expected: int = 0

    def __str__(self) -> str:
        return f"VIOLATION {self.error} i={self.i} j={self.j} value={self.value} expected={self.expected}"


@dataclass(frozen=True)
class KLReport:
    checked_d: int
    mode: KLMode
    errors_checked: int
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        result = "pass" if self.passed else "fail"
        head = f"KL d={self.checked_d} mode={self.mode.value} result={result} errors_checked={self.errors_checked}"
        return [head] + [str(v) for v in self.violations]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def error_matrix(
    vectors: Sequence[SignedSuperposition],
    e: PauliWord,
    index: dict[int, list[tuple[int, int]]] | None = None,
) -> dict[tuple[int, int], int]:
    """Nonzero entries ``(i, j) -> <v_i| e |v_j>``."""
    index = label_index(vectors) if index is None else index
    a, b, lam = e.alpha, e.beta, e.lam
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for j, v in enumerate(vectors):
        for u, c in v.terms.items():
            owners = index.get(u ^ a)
            if not owners:
                continue
            s = -c if lam ^ parity(u & b) else c
            for i, ci in owners:
                acc[(i, j)] += ci * s
    return {k: v for k, v in acc.items() if v}


def _scan(vectors, errors: Iterable[PauliWord], mode: KLMode, early_exit: bool):
    index = label_index(vectors)
    k = len(vectors)
    violations = []
    count = 0
    for e in errors:
        count += 1
        m = error_matrix(vectors, e, index)
        if mode is KLMode.STRICT:
            bad = [Violation(e, i, j, v) for (i, j), v in sorted(m.items())]
        else:
            bad = [Violation(e, i, j, v) for (i, j), v in sorted(m.items()) if i != j]
            ref = m.get((0, 0), 0)
            bad += [
                Violation(e, i, i, m.get((i, i), 0), ref)
                for i in range(1, k)
                if m.get((i, i), 0) != ref
            ]
            bad.sort(key=lambda v: (v.i, v.j))
        if bad:
            violations.extend(bad)
            if early_exit:
                break
    return count, violations


def _scan_chunk(args):
    vectors, errors, mode, early_exit = args
    return _scan(vectors, errors, mode, early_exit)


def default_workers() -> int:
    env = os.environ.get("QECC_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def kl_check(
    basis: QuantumCodeBasis,
    d: int,
    mode: KLMode | str = KLMode.GENERAL,
    *,
    early_exit: bool = False,
    workers: int = 1,
    chunk: int = 2048,
) -> KLReport:
    """Check the matrix-element conditions for every error of weight 1..d-1.

    ``strict`` requires every element to vanish; ``general`` requires
    vanishing off-diagonal elements and a common diagonal value.
    """
    mode = KLMode(mode)
    if d < 1:
        raise ValueError("d must be positive")
    max_w = min(d - 1, basis.n)
    vectors = basis.vectors
    errors = enumerate_errors(basis.n, max_w)
    if workers <= 1 or error_count(basis.n, max_w) <= chunk:
        count, violations = _scan(vectors, errors, mode, early_exit)
        return KLReport(d, mode, count, tuple(violations))
    count, violations = 0, []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        batches = iter(lambda: list(itertools.islice(errors, chunk)), [])
        jobs = ((vectors, b, mode, early_exit) for b in batches)
        for c, v in pool.map(_scan_chunk, jobs):
            if early_exit and violations:
                break
            count += c
            violations.extend(v)
    return KLReport(d, mode, count, tuple(violations))


def find_distance(basis: QuantumCodeBasis, mode: KLMode | str = KLMode.GENERAL) -> int:
    """Largest d for which :func:`kl_check` passes, capped at n + 1."""
    mode = KLMode(mode)
    for w in range(1, basis.n + 1):
        _, bad = _scan(basis.vectors, errors_of_weight(basis.n, w), mode, True)
        if bad:
            return w
    return basis.n + 1


class IncrementalKL:
    """KL state for growing a basis one vector at a time.

    Only candidates with support disjoint from the current basis are
    considered; others are refused without evaluation.
    """

    def __init__(self, vectors: Sequence[SignedSuperposition], d: int, mode: KLMode | str = KLMode.GENERAL):
        self.mode = KLMode(mode)
        self.vectors = list(vectors)
        self.n = self.vectors[0].n
        self.errors = list(enumerate_errors(self.n, min(d - 1, self.n)))
        self.index = label_index(self.vectors)
        self.ref = [
            error_matrix(self.vectors[:1], e).get((0, 0), 0) for e in self.errors
        ]

    def accepts(self, v: SignedSuperposition) -> bool:
        if v.norm2 != self.vectors[0].norm2:
            return False
        if any(u in self.index for u in v.terms):
            return False
        own = v.terms
        for e, ref in zip(self.errors, self.ref):
            a, b, lam = e.alpha, e.beta, e.lam
            diag = 0
            cross: dict[int, int] = defaultdict(int)
            for u, c in own.items():
                w = u ^ a
                s = -c if lam ^ parity(u & b) else c
                for i, ci in self.index.get(w, ()):
                    cross[i] += ci * s
                t = own.get(w)
                if t is not None:
                    diag += t * s
            if any(cross.values()):
                return False
            target = 0 if self.mode is KLMode.STRICT else ref
            if diag != target:
                return False
        return True

    def add(self, v: SignedSuperposition) -> None:
        k = len(self.vectors)
        self.vectors.append(v)
        for u, c in v.terms.items():
            self.index.setdefault(u, []).append((k, c))


def dual_distance_witness(s: StabilizerGroup, d: int) -> PauliWord | None:
    """First word of weight 1..d-1 commuting with S but not in S, if any."""
    n = s.n
    rows = s.symplectic_rows()
    rref = rref_rows(rows)
    gens = [(g.alpha, g.beta) for g in s.generators]
    for e in enumerate_errors(n, min(d - 1, n)):
        if any(parity(e.alpha & gb) ^ parity(ga & e.beta) for ga, gb in gens):
            continue
        if reduce_mod((e.alpha << n) | e.beta, rref):
            return e
    return None


def dual_distance_check(s: StabilizerGroup, d: int) -> bool:
    """True iff S defines an ``[[n, n-m, d]]`` code."""
    return dual_distance_witness(s, d) is None


def common_translations(basis: QuantumCodeBasis) -> list[int]:
    """All alpha with ``alpha + supp(v) = supp(v)`` for every basis vector."""
    cand = translations(basis.vectors[0].terms)
    for v in basis.vectors[1:]:
        sup = v.terms
        cand = [x for x in cand if all(u ^ x in sup for u in sup)]
    return cand


def find_stabilizer(basis: QuantumCodeBasis) -> StabilizerGroup:
    """Generators of every signed Pauli word fixing each basis vector."""
    n = basis.n
    labels = sorted({u for v in basis.vectors for u in v.terms})
    rows = [(u << 1) | 1 for u in labels]  # unknowns (beta | lam)
    kernel = nullspace_rows(rows, n + 1)
    gens = [PauliWord(n, z & 1, 0, z >> 1) for z in kernel]
    found_alpha: list[int] = []
    for alpha in common_translations(basis):
        if not alpha or not reduce_mod(alpha, rref_rows(found_alpha)):
            continue
        eq_rows, rhs = [], []
        ok = True
        for v in basis.vectors:
            t = v.terms
            for u, c in t.items():
                c2 = t[u ^ alpha]
                if abs(c2) != abs(c):
                    ok = False
                    break
                eq_rows.append((u << 1) | 1)
                rhs.append(int((c2 < 0) != (c < 0)))
            if not ok:
                break
        if not ok:
            continue
        sol = solve_rows(eq_rows, rhs)
        if sol is None:
            continue
        found_alpha.append(alpha)
        gens.append(PauliWord(n, sol & 1, alpha, sol >> 1))
    return StabilizerGroup(n, tuple(gens))


class Verdict(str, enum.Enum):
    NONADDITIVE = "nonadditive"
    STRONG = "strongly-nonadditive-criteria-met"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NonaddVerdict:
    stabilizer_trivial: bool
    translation_obstruction: bool
    dimension_gate: bool
    verdict: Verdict
    stabilizer_order: int = 1
    translation_set_size: int = 1

    def lines(self) -> list[str]:
        return [
            f"NONADD verdict={self.verdict.value}",
            f"stabilizer_trivial={str(self.stabilizer_trivial).lower()} order={self.stabilizer_order}",
            f"dimension_gate={str(self.dimension_gate).lower()} translation_set_size={self.translation_set_size}",
            f"translation_obstruction={str(self.translation_obstruction).lower()}",
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def contains_state(basis: QuantumCodeBasis, x: SignedSuperposition) -> bool:
    """Exact span membership for an orthogonal equal-norm basis."""
    overlaps = sum(inner(v, x) ** 2 for v in basis.vectors)
    return overlaps == basis.norm2 * x.norm2


def nonadd_verdict(basis: QuantumCodeBasis, containing: CodebookCode, ell: int) -> NonaddVerdict:
    """Evaluate the discrete nonadditivity criteria for a real code of
    dimension ``2^ell`` containing the uniform superposition of ``containing``.
    """
    if basis.K != 1 << ell:
        raise CriterionInapplicableError(f"code dimension {basis.K} is not 2^{ell}")
    if containing.n != basis.n:
        raise CriterionInapplicableError("containing code has the wrong length")
    kc = math.ceil(math.log2(containing.K)) if containing.K > 1 else 0
    if containing.d is not None and containing.d <= kc:
        raise CriterionInapplicableError(
            f"containing code distance {containing.d} <= ceil(log2 K) = {kc}"
        )
    if not contains_state(basis, superpose_code(containing.words, containing.n)):
        raise CriterionInapplicableError("code does not contain the superposition of the containing code")
    stab = find_stabilizer(basis)
    trivial = stab.m == 0
    t_size = len(translations(containing.words))
    gate = (1 << (basis.n - ell)) > t_size
    obstruction = common_translations(basis) == [0]
    if trivial and gate and obstruction:
        verdict = Verdict.STRONG
    elif trivial and gate:
        verdict = Verdict.NONADDITIVE
    else:
        verdict = Verdict.INCONCLUSIVE
    return NonaddVerdict(trivial, obstruction, gate, verdict, stab.order, t_size)
