import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistinv import systems
from twistinv import vectors as vec
from twistinv.laurent import ONE, U, V, VINV, ZERO, LaurentPoly
from twistinv.module import InvolutionModule

_MODULES: dict[str, InvolutionModule] = {}


def module(name):
    if name not in _MODULES:
        _MODULES[name] = InvolutionModule(systems.get(name).build())
    return _MODULES[name]


def brute_twisted(W, L):
    return sorted((w for w in W.enumerate_up_to(L) if W.star_apply(w) == W.inverse(w)),
                  key=vec.sort_key)


@pytest.mark.parametrize("name, L", [("A3", 6), ("A3-flip", 6), ("B3", 9), ("H3", 15),
                                     ("A2-affine-swap", 9), ("C2-affine", 8)])
def test_enumerate_twisted_matches_filter(name, L):
    M = module(name)
    assert M.enumerate_twisted(L) == brute_twisted(M.W, L)


def test_a2_twisted_sets():
    assert [module("A2").W.fmt(w) for w in module("A2").enumerate_twisted(3)] == \
        ["", "s", "t", "s.t.s"]
    # with the swap, s.1 = s s* = st
    M = module("A2-swap")
    assert [M.W.fmt(w) for w in M.enumerate_twisted(3)] == ["", "s.t", "t.s", "s.t.s"]


def test_ts_action_four_cases_a1():
    M = module("A1")
    s = 0
    assert M.ts_action(s, {(): ONE}) == {(): U, (0,): U + 1}
    assert M.ts_action(s, {(0,): ONE}) == {(0,): U * U - U - 1, (): U * U - U}


def test_ts_inverse_is_inverse():
    M = module("B3")
    for w in M.enumerate_twisted(9):
        for s in M.W.generators():
            a = vec.basis(w)
            assert M.ts_inverse_action(s, M.ts_action(s, a)) == a
            assert M.ts_action(s, M.ts_inverse_action(s, a)) == a


def test_bar_examples():
    M = module("A1")
    # bar(a_s) = -T_s^-1 a_s
    assert M.bar_vector({(): ONE}) == {(): ONE}
    assert M.r_poly((), (0,)) == V - VINV
    assert M.r_poly((0,), (0,)) == ONE
    assert M.r_poly_recursive((), (0,)) == V - VINV
    assert M.r_poly((), ()) == ONE


def test_phi_kappa_examples():
    M = module("A1")
    assert M.phi_kappa(()) == (0, 1)
    assert M.phi_kappa((0,)) == (1, -1)


@pytest.mark.parametrize("name", ["A3", "A3-flip", "B3", "H3", "A2-affine-swap"])
def test_kappa_flips_along_descents(name):
    M = module(name)
    for w in M.enumerate_twisted(8):
        for s in M.W.generators():
            k = M.kind(s, w)
            if not k.up:
                assert M.kappa(k.target) == -M.kappa(w)


def test_phi_is_reflection_count_when_star_trivial():
    # with star = id, phi(w) is the dimension of the -1 eigenspace of w
    import numpy as np
    from oracles import reflection_matrices
    M = module("B3")
    mats = reflection_matrices(systems.get("B3").matrix)
    for w in M.enumerate_twisted(9):
        X = np.eye(3)
        for s in w:
            X = X @ mats[s]
        neg = sum(1 for ev in np.linalg.eigvals(X) if abs(ev + 1) < 1e-6)
        assert M.phi(w) == neg


@pytest.mark.parametrize("name", ["A3-flip", "B3", "I2(5)", "A2-affine-swap", "C2-affine"])
@given(data=st.data())
def test_braid_and_quadratic_relations(name, data):
    M = module(name)
    W = M.W
    I = M.enumerate_twisted(7)
    w = data.draw(st.sampled_from(I))
    s, t = data.draw(st.sampled_from(list(itertools.permutations(W.generators(), 2))))
    a = vec.basis(w)
    m = W.m(s, t)
    if m != float("inf"):
        lhs = M.apply_word([s if i % 2 == 0 else t for i in range(m)], a)
        rhs = M.apply_word([t if i % 2 == 0 else s for i in range(m)], a)
        assert lhs == rhs
    x = vec.sub(M.ts_action(s, a), vec.scale(a, U * U))
    assert not vec.add(M.ts_action(s, x), x)


@pytest.mark.parametrize("name", ["A3-flip", "B3", "A2-affine-swap"])
@given(data=st.data())
def test_bar_is_semilinear_involution(name, data):
    M = module(name)
    I = M.enumerate_twisted(7)
    coeffs = st.builds(lambda o, c: LaurentPoly(o, c), st.integers(-4, 4),
                       st.lists(st.integers(-3, 3), max_size=4))
    m = data.draw(st.dictionaries(st.sampled_from(I), coeffs, max_size=4))
    m = {w: c for w, c in m.items() if c}
    s = data.draw(st.sampled_from(list(M.W.generators())))
    assert M.bar_vector(M.bar_vector(m)) == m
    assert M.bar_vector(M.ts_action(s, m)) == M.ts_inverse_action(s, M.bar_vector(m))


@pytest.mark.parametrize("name", ["B2", "B3", "A3-flip", "H3", "A2-affine-swap"])
def test_recursion_matches_extraction(name):
    M = module(name)
    I = M.enumerate_twisted(10)
    for w in I:
        for y in I:
            if len(y) <= len(w):
                r = M.r_poly(y, w)
                assert M.r_poly_recursive(y, w, "min") == r
                assert M.r_poly_recursive(y, w, "max") == r


def test_orthogonality_b3():
    M = module("B3")
    I = M.enumerate_twisted(9)
    for x in I:
        for z in I:
            total = ZERO
            for y in I:
                total = total + M.r_poly(x, y).bar() * M.r_poly(y, z)
            assert total == (1 if x == z else 0)
