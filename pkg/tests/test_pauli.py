import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import dense_pauli, random_word

from qnonadd.gf2core import DimensionError
from qnonadd.pauli import PauliWord, commutes, compose, enumerate_errors, error_count, weight

W = PauliWord.parse


def test_text_round_trip():
    p = W("- 10110|00101")
    assert (p.lam, p.n) == (1, 5)
    assert str(p) == "- 10110|00101"
    assert W("10|01") == PauliWord(2, 0, 2, 1)


def test_compose_identity_and_square():
    q = W("- 101|011")
    assert compose(PauliWord.identity(3), q) == q
    p = W("+ 110|011")  # alpha.beta = 1
    pp = compose(p, p)
    assert (pp.alpha, pp.beta, pp.lam) == (0, 0, 1)
    s = W("+ 110|001")  # alpha.beta = 0
    assert compose(s, s) == PauliWord.identity(3)


def test_compose_order_single_qubit():
    x, z = W("1|0"), W("0|1")
    xz, zx = compose(x, z), compose(z, x)
    assert (xz.alpha, xz.beta) == (zx.alpha, zx.beta) == (1, 1)
    assert xz.lam ^ zx.lam == 1


def test_compose_dimension_error():
    with pytest.raises(DimensionError):
        compose(W("1|0"), W("10|00"))


def test_commutes_examples():
    p = W("- 101|110")
    assert commutes(p, p)
    assert not commutes(W("1|0"), W("0|1"))
    assert commutes(W("10|00"), W("00|01"))


def test_weight_examples():
    assert weight(PauliWord.identity(4)) == 0
    assert weight(W("10110|00101")) == 4
    assert weight(W("1111|1111")) == 4


def test_error_enumeration_counts():
    errs = list(enumerate_errors(11, 2))
    assert len(errs) == 528 == 3 * 11 + 9 * 55 == error_count(11, 2)
    assert list(enumerate_errors(5, 0)) == []
    assert [str(e) for e in enumerate_errors(1, 1)] == ["+ 1|0", "+ 0|1", "+ 1|1"]


@pytest.mark.parametrize("n,w", [(3, 3), (4, 2), (5, 3)])
def test_error_enumeration_matches_exhaustive_filter(n, w):
    errs = list(enumerate_errors(n, w))
    keys = [(e.alpha, e.beta) for e in errs]
    assert len(keys) == len(set(keys))
    brute = {(a, b) for a in range(2**n) for b in range(2**n) if 1 <= bin(a | b).count("1") <= w}
    assert set(keys) == brute
    assert all(e.lam == 0 for e in errs)
    weights = [weight(e) for e in errs]
    assert weights == sorted(weights)


def test_error_enumeration_bad_weight():
    with pytest.raises(ValueError):
        list(enumerate_errors(3, 4))


words3 = st.tuples(st.integers(0, 1), st.integers(0, 7), st.integers(0, 7)).map(lambda t: PauliWord(3, *t))


@given(words3, words3, words3)
def test_compose_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(words3)
def test_square_has_zero_symplectic_part(p):
    pp = compose(p, p)
    assert pp.alpha == pp.beta == 0


@given(words3, words3)
def test_compose_matches_dense(p, q):
    assert np.array_equal(dense_pauli(compose(p, q)), dense_pauli(p) @ dense_pauli(q))


def test_commutes_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 3)
        p, q = random_word(rng, n), random_word(rng, n)
        dp, dq = dense_pauli(p), dense_pauli(q)
        assert commutes(p, q) == bool(np.array_equal(dp @ dq, dq @ dp))
