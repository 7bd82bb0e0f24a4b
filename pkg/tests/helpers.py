"""Independent oracles: dense 2^n matrices and brute-force enumeration."""

from __future__ import annotations

import itertools
import random

import numpy as np

from qnonadd.pauli import PauliWord, commutes
from qnonadd.stabilizer import StabilizerGroup
from qnonadd.states import QuantumCodeBasis, SignedSuperposition

I2 = np.eye(2, dtype=np.int64)
X2 = np.array([[0, 1], [1, 0]], dtype=np.int64)
Z2 = np.array([[1, 0], [0, -1]], dtype=np.int64)

STEANE_ROWS = ["0001111", "0110011", "1010101"]
HAMMING_ROWS = ["1110000", "1010101", "0110011", "0001111"]
# weakly self-dual [18, 6, 8]; dual distance 3; found by random search
WSD_18_6_ROWS = [
    "101101101100101111",
    "001111111010011011",
    "101010001101100010",
    "110001011101110111",
    "011011101001111110",
    "011000101101000101",
]


def dense_pauli(p: PauliWord) -> np.ndarray:
    """Kronecker product of per-qubit X^a Z^b, leftmost qubit first."""
    m = np.array([[1]], dtype=np.int64)
    for i in range(p.n):
        a = (p.alpha >> (p.n - 1 - i)) & 1
        b = (p.beta >> (p.n - 1 - i)) & 1
        f = (X2 if a else I2) @ (Z2 if b else I2)
        m = np.kron(m, f)
    return -m if p.lam else m


def dense_state(s: SignedSuperposition) -> np.ndarray:
    v = np.zeros(2**s.n, dtype=np.int64)
    for u, c in s.terms.items():
        v[u] = c
    return v


def all_words(n: int):
    """All 4^n unsigned words as (alpha, beta) pairs."""
    for a in range(2**n):
        for b in range(2**n):
            yield PauliWord(n, 0, a, b)


def dense_kl_passes(basis: QuantumCodeBasis, d: int, mode: str) -> bool:
    vecs = [dense_state(v) for v in basis.vectors]
    for p in all_words(basis.n):
        w = bin(p.alpha | p.beta).count("1")
        if not 1 <= w <= d - 1:
            continue
        e = dense_pauli(p)
        m = np.array([[vi @ e @ vj for vj in vecs] for vi in vecs])
        off = m - np.diag(np.diag(m))
        if np.any(off):
            return False
        diag = np.diag(m)
        if mode == "strict" and np.any(diag):
            return False
        if mode == "general" and np.any(diag != diag[0]):
            return False
    return True


def random_word(rng: random.Random, n: int, signed: bool = True) -> PauliWord:
    return PauliWord(n, rng.getrandbits(1) if signed else 0, rng.getrandbits(n), rng.getrandbits(n))


def random_state(rng: random.Random, n: int, max_terms: int = 4, max_coef: int = 3) -> SignedSuperposition:
    labels = rng.sample(range(2**n), rng.randint(1, min(max_terms, 2**n)))
    return SignedSuperposition(n, {u: rng.choice([c for c in range(-max_coef, max_coef + 1) if c]) for u in labels})


def random_basis(rng: random.Random, n: int) -> QuantumCodeBasis:
    """Orthogonal equal-norm basis: disjoint +-1 blocks, or +/- pairs."""
    labels = list(range(2**n))
    rng.shuffle(labels)
    if n >= 1 and rng.random() < 0.3:
        a, b = labels[:2]
        s = rng.choice([1, -1])
        vs = [SignedSuperposition(n, {a: 1, b: s}), SignedSuperposition(n, {a: 1, b: -s})]
        return QuantumCodeBasis(n, tuple(vs))
    size = rng.randint(1, max(1, 2**n // 2))
    k = rng.randint(1, 2**n // size)
    vs = []
    for i in range(k):
        block = labels[i * size : (i + 1) * size]
        vs.append(SignedSuperposition(n, {u: rng.choice([1, -1]) for u in block}))
    return QuantumCodeBasis(n, tuple(vs))


def random_stabilizer(rng: random.Random, n: int, m: int | None = None) -> StabilizerGroup:
    """Rejection-sample commuting, self-inverse, independent signed words."""
    if m is None:
        m = rng.randint(0, n)
    while True:
        gens: list[PauliWord] = []
        tries = 0
        while len(gens) < m and tries < 500:
            tries += 1
            w = random_word(rng, n)
            if not w.self_inverse or not all(commutes(w, g) for g in gens):
                continue
            cand = gens + [w]
            from qnonadd.gf2core import rank_rows

            if rank_rows([(g.alpha << n) | g.beta for g in cand]) == len(cand):
                gens = cand
        if len(gens) == m:
            return StabilizerGroup(n, tuple(gens))


def brute_translations(words: set[int], n: int) -> list[int]:
    return [x for x in range(2**n) if all(w ^ x in words for w in words)]


def combos(n: int, w: int):
    return itertools.combinations(range(n), w)
