import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnonadd.gf2core import (
    BitMatrix,
    BitVector,
    ContainmentError,
    DependentRowsError,
    DimensionError,
    SymplecticVector,
    coset_reps,
    dot,
    nullspace,
    rank,
    solve,
    span_enumerate,
    symplectic_product,
)

V = BitVector.from_str


def sv(x, z):
    return SymplecticVector(V(x), V(z))


def test_dot_examples():
    assert dot(V("0000"), V("1011")) == 0
    assert dot(V("1011"), V("1011")) == 1
    assert dot(V("1100"), V("0110")) == 1


def test_dot_length_mismatch():
    with pytest.raises(DimensionError):
        dot(V("101"), V("1010"))


def test_symplectic_examples():
    assert symplectic_product(sv("1010", "0101"), sv("1100", "0011")) == 0
    assert symplectic_product(sv("1", "0"), sv("0", "1")) == 1
    with pytest.raises(DimensionError):
        symplectic_product(sv("1", "0"), sv("00", "11"))


def test_text_rendering_leftmost_is_coordinate_one():
    v = V("1000")
    assert v[0] == 1 and v[3] == 0
    assert str(v) == "1000"
    assert v.to_list() == [1, 0, 0, 0]


def test_rank_examples():
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(BitMatrix.from_strs(["1010", "1010", "0110"])) == 2
    assert rank(BitMatrix.from_strs(["1100", "0110", "1010"])) == 2


def brute_null(m: BitMatrix):
    n = m.n_cols
    return {x for x in range(2**n) if all(bin(r & x).count("1") % 2 == 0 for r in m.rows)}


def test_nullspace_examples():
    assert nullspace(BitMatrix.identity(5)).n_rows == 0
    ones = BitMatrix.from_strs(["11111"])
    ns = nullspace(ones)
    assert ns.n_rows == 4
    assert {v.bits for v in span_enumerate(ns)} == {x for x in range(32) if bin(x).count("1") % 2 == 0}


def test_solve_examples():
    rhs = V("101")
    assert solve(BitMatrix.identity(3), rhs) == rhs
    a = BitMatrix.from_strs(["110", "110"])
    assert solve(a, V("10")) is None
    with pytest.raises(DimensionError):
        solve(a, V("101"))


def test_span_examples():
    assert [v.bits for v in span_enumerate(BitMatrix(4, ()))] == [0]
    assert [str(v) for v in span_enumerate(BitMatrix.from_strs(["0110"]))] == ["0000", "0110"]
    with pytest.raises(DependentRowsError):
        list(span_enumerate(BitMatrix.from_strs(["0110", "0110"])))


def test_span_order_is_coefficient_lexicographic():
    rows = BitMatrix.from_strs(["0011", "1000"])
    assert [str(v) for v in span_enumerate(rows)] == ["0000", "1000", "0011", "1011"]


def test_coset_reps_examples(steane, hamming):
    assert coset_reps(steane.generator, steane.generator) == [BitVector.zeros(7)]
    full = BitMatrix.identity(2)
    assert [str(v) for v in coset_reps(BitMatrix(2, ()), full)] == ["00", "01", "10", "11"]
    reps = coset_reps(steane.generator, hamming.generator)
    assert len(reps) == 2 and reps[0].bits == 0


def test_coset_reps_are_minimal_and_distinct(steane, hamming):
    # brute force: smallest element of each coset
    cw = {v.bits for v in span_enumerate(steane.generator)}
    sup = {v.bits for v in span_enumerate(hamming.generator)}
    expected = sorted({min(a ^ c for c in cw) for a in sup})
    assert [v.bits for v in coset_reps(steane.generator, hamming.generator)] == expected


def test_coset_reps_containment_error():
    with pytest.raises(ContainmentError):
        coset_reps(BitMatrix.from_strs(["11"]), BitMatrix.from_strs(["10"]))


matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.integers(0, 2**n - 1), max_size=6).map(lambda rows: BitMatrix(n, tuple(rows)))
)


@given(matrices)
def test_nullspace_matches_brute_force(m):
    ns = nullspace(m)
    assert ns.n_rows == m.n_cols - rank(m)
    assert {v.bits for v in span_enumerate(ns)} == brute_null(m)


@given(matrices)
def test_double_dual_recovers_row_space(m):
    again = nullspace(nullspace(m))
    span_m = {0}
    for r in m.rows:
        span_m |= {x ^ r for x in span_m}
    assert {v.bits for v in span_enumerate(again)} == span_m


@given(matrices)
def test_span_cardinality(m):
    from qnonadd.gf2core import row_reduce

    basis = row_reduce(m)
    elems = [v.bits for v in span_enumerate(basis)]
    assert len(elems) == len(set(elems)) == 2 ** rank(m)
    assert elems == sorted(elems)


@given(matrices, st.integers(0, 2**7 - 1))
def test_solve_consistent_systems(m, seed):
    x = BitVector(m.n_cols, seed % (2**m.n_cols))
    b = m.mul_vec(x)
    got = solve(m, b)
    assert got is not None and m.mul_vec(got) == b


@given(matrices, st.integers(0, 2**6 - 1))
def test_solve_none_only_when_inconsistent(m, rhs_bits):
    rhs = BitVector(m.n_rows, rhs_bits % (2**m.n_rows)) if m.n_rows else BitVector(0, 0)
    got = solve(m, rhs)
    reachable = any(m.mul_vec(BitVector(m.n_cols, x)) == rhs for x in range(2**m.n_cols))
    assert (got is not None) == reachable


sym = st.integers(1, 5).flatmap(
    lambda n: st.tuples(*[st.integers(0, 2**n - 1)] * 6).map(
        lambda t: tuple(SymplecticVector(BitVector(n, t[2 * i]), BitVector(n, t[2 * i + 1])) for i in range(3))
    )
)


@given(sym)
def test_symplectic_bilinear_alternating(vs):
    u, v, w = vs
    assert symplectic_product(u, u) == 0
    assert symplectic_product(u, v) == symplectic_product(v, u)
    uv = SymplecticVector(u.x_part + v.x_part, u.z_part + v.z_part)
    assert symplectic_product(uv, w) == symplectic_product(u, w) ^ symplectic_product(v, w)
