import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bruhat_leq_subword, group_by_length, reduced_words
from twistinv import systems
from twistinv.coxeter import LEFT, RIGHT, CoxeterSystem, ResourceError
from twistinv.laurent import DomainError

A2 = [[1, 3], [3, 1]]
A3 = [[1, 3, 2], [3, 1, 3], [2, 3, 1]]
B2 = [[1, 4], [4, 1]]
I25 = [[1, 5], [5, 1]]


@pytest.mark.parametrize("matrix, star, msg", [
    ([[1, 3], [2, 1]], None, "symmetric"),
    ([[2, 3], [3, 1]], None, "diagonal"),
    ([[1, 1], [1, 1]], None, "< 2"),
    ([[1, 3, 2], [3, 1, 4], [2, 4, 1]], [2, 1, 0], "preserve"),
    ([[1, 3], [3, 1]], [1, 1], "permutation"),
    ([[1, 3, 3], [3, 1, 3], [3, 3, 1]], [1, 2, 0], "involution"),
])
def test_rejects_bad_descriptors(matrix, star, msg):
    with pytest.raises(ValueError, match=msg):
        CoxeterSystem(matrix, star)


def test_star_swap_accepted_and_inf_parsed():
    W = CoxeterSystem(A2, [1, 0])
    assert W.star == (1, 0)
    Wa = CoxeterSystem([[1, "inf"], ["inf", 1]])
    assert Wa.m(0, 1) == math.inf


def test_mul_gen_examples():
    W = CoxeterSystem(A2, labels="st")
    s, t = 0, 1
    assert W.mul_gen((), s, LEFT) == ((s,), 1)
    assert W.mul_gen((s,), s, LEFT) == ((), -1)
    assert W.mul_gen(W.parse("st"), s, RIGHT) == (W.parse("sts"), 1)
    assert W.mul_gen(W.parse("sts"), s, RIGHT) == (W.parse("st"), -1)


def test_parse_and_format():
    W = CoxeterSystem(A3, labels=["a", "b", "c"])
    w = W.parse("b.a.c.b")
    assert W.fmt(w) == "b.a.c.b"
    assert W.parse("") == ()
    assert W.parse("c.a") == W.parse("a.c") == (0, 2)
    with pytest.raises(DomainError):
        W.parse("a.x")


@pytest.mark.parametrize("matrix, order", [(A2, 6), (B2, 8), (I25, 10), (A3, 24),
                                           ([[1, 6], [6, 1]], 12)])
def test_counts_against_matrix_oracle(matrix, order):
    W = CoxeterSystem(matrix)
    elems = W.enumerate_up_to(50)
    assert len(elems) == len(set(elems)) == order
    oracle = group_by_length(matrix, 50)
    assert len(oracle) == order
    hist = {}
    for x in elems:
        hist[len(x)] = hist.get(len(x), 0) + 1
    ohist = {}
    for n in oracle.values():
        ohist[n] = ohist.get(n, 0) + 1
    assert hist == ohist


def test_affine_counts_against_oracle():
    matrix = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]
    W = CoxeterSystem(matrix)
    oracle = group_by_length(matrix, 6)
    assert len(W.enumerate_up_to(6)) == len(oracle)


def test_cap_is_enforced():
    W = CoxeterSystem([[1, 3, 3], [3, 1, 3], [3, 3, 1]], cap=50)
    with pytest.raises(ResourceError):
        W.enumerate_up_to(20)


@pytest.mark.parametrize("matrix", [A3, B2, I25])
def test_canonical_word_is_shortlex_minimal(matrix):
    W = CoxeterSystem(matrix)
    lengths = group_by_length(matrix, 50)
    for w in W.enumerate_up_to(5):
        rws = reduced_words(matrix, w, lengths)
        assert len(w) == len(rws[0])
        assert w == min(rws)
        for rw in rws:
            assert W.canonical(rw) == w


@pytest.mark.parametrize("matrix, L", [(A3, 6), (B2, 4)])
def test_bruhat_matches_subword_oracle(matrix, L):
    W = CoxeterSystem(matrix)
    elems = W.enumerate_up_to(L)
    for w in elems:
        for y in elems:
            if len(y) <= len(w):
                assert W.bruhat_leq(y, w) == bruhat_leq_subword(matrix, y, w), (y, w)


def test_bruhat_partial_order_b3():
    W = CoxeterSystem(systems.get("B3").matrix)
    elems = W.enumerate_up_to(9)
    for a, b in itertools.product(elems, repeat=2):
        if W.bruhat_leq(a, b) and W.bruhat_leq(b, a):
            assert a == b
    sample = elems[::5]
    for a, b, c in itertools.product(sample, repeat=3):
        if W.bruhat_leq(a, b) and W.bruhat_leq(b, c):
            assert W.bruhat_leq(a, c)


@pytest.mark.parametrize("name", ["A3-flip", "B3", "H3", "A2-affine-swap", "C2-affine"])
def test_exchange_condition_consistency(name):
    W = systems.get(name).build()
    for w in W.enumerate_up_to(6):
        for s in W.generators():
            for side in (LEFT, RIGHT):
                x, sign = W.mul_gen(w, s, side)
                assert len(x) == len(w) + sign
                assert W.descent(w, s, side) == (sign < 0)


@pytest.mark.parametrize("name", ["A2-swap", "A3-flip", "A2-affine-swap"])
def test_star_is_length_preserving_involution(name):
    W = systems.get(name).build()
    for w in W.enumerate_up_to(6):
        x = W.star_apply(w)
        assert W.star_apply(x) == w
        assert len(x) == len(w)
        for s in W.generators():
            assert W.descent(w, s) == W.descent(x, W.star[s])


@pytest.mark.parametrize("name", systems.FINITE)
def test_poincare_at_one_is_order(name):
    W = systems.get(name).build()
    P = W.poincare_poly()
    assert sum(c for _, c in P.terms()) == len(W.enumerate_up_to(100))


@pytest.mark.parametrize("name, exps", [("A1", [1]), ("A2", [1, 2]), ("B2", [1, 3]),
                                        ("A3", [1, 2, 3]), ("B3", [1, 3, 5]),
                                        ("I2(5)", [1, 4]), ("H3", [1, 5, 9])])
def test_exponents(name, exps):
    W = systems.get(name).build()
    assert W.exponents() == exps


def test_longest_elements_and_finiteness():
    W = systems.get("A2-affine-swap").build()
    assert not W.is_finite_parabolic([0, 1, 2])
    assert W.is_finite_parabolic([1, 2])
    assert W.fmt(W.longest_element([1, 2])) == "1.2.1"
    with pytest.raises(DomainError):
        W.parabolic_elements([0, 1, 2])


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "A2-affine-swap"])
@given(data=st.data())
def test_canonical_form_is_a_group_normal_form(name, data):
    W = systems.get(name).build()
    word = data.draw(st.lists(st.integers(0, W.rank - 1), max_size=12))
    w = W.canonical(word)
    assert W.canonical(w) == w
    assert W.multiply(w, W.inverse(w)) == ()
    assert W.canonical(list(word) + [word[-1]] if word else []) == W.canonical(word[:-1])
    # inserting a braid relation anywhere leaves the element unchanged
    s = data.draw(st.integers(0, W.rank - 1))
    t = data.draw(st.integers(0, W.rank - 1))
    m = W.m(s, t)
    if s != t and m != math.inf:
        pos = data.draw(st.integers(0, len(word)))
        lhs = [s if i % 2 == 0 else t for i in range(m)]
        rhs = [t if i % 2 == 0 else s for i in range(m)]
        assert W.canonical(word[:pos] + lhs + word[pos:]) == W.canonical(word[:pos] + rhs + word[pos:])
