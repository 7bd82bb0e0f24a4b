"""Exact construction and verification of additive and nonadditive quantum codes."""

from .codebook import CodebookCode, translation_set
from .css import LinearBinaryCode, build_css, build_tau, build_twisted_css, min_distance
from .gf2core import BitMatrix, BitVector, SymplecticVector
from .nonadditive import (
    GreedyConfig,
    build_cssnonadd,
    build_greedy_family,
    build_tau_coset_code,
    extend_code,
    greedy_vectors,
    hadamard11,
    hadamard_codebook,
)
from .pauli import PauliWord, commutes, compose, enumerate_errors
from .stabilizer import (
    SignTable,
    StabilizerGroup,
    codespace_basis,
    extract_signs,
    normal_form,
    rebuild_stabilizer,
    verify_sign_identities,
)
from .states import QuantumCodeBasis, SignedSuperposition, apply_pauli, inner, matrix_element
from .verify import (
    KLMode,
    dual_distance_check,
    find_distance,
    find_stabilizer,
    kl_check,
    nonadd_verdict,
)

__version__ = "0.1.0"
