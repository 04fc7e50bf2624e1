import math

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from twistinv.ring import CoeffRing, minimal_polynomial_2cos


@pytest.mark.parametrize("M", [4, 5, 6, 7, 8, 9, 10, 12, 15])
def test_minimal_polynomial_matches_sympy(M):
    x = sympy.Symbol("x")
    oracle = sympy.Poly(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / M), x), x)
    ours = minimal_polynomial_2cos(M)
    assert list(reversed(oracle.all_coeffs())) == list(ours)


def test_integers_only_for_small_entries():
    r = CoeffRing([2, 3, math.inf])
    assert r.degree == 1
    assert r.to_float(r.two_cos(3)) == 1


def test_b2_sqrt2_squared():
    r = CoeffRing([4])
    c = r.two_cos(4)
    assert abs(r.to_float(c) - math.sqrt(2)) < 1e-12
    assert r.mul(c, c) == r.from_int(2)


def test_two_cos_values():
    r = CoeffRing([4, 6, 5])
    for m in (2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60):
        if r.M % m == 0:
            assert abs(r.to_float(r.two_cos(m)) - 2 * math.cos(math.pi / m)) < 1e-9
    assert r.to_float(r.two_cos(math.inf)) == 2


@pytest.mark.parametrize("orders", [[5], [7], [8], [4, 6], [9]])
@given(data=st.data())
def test_exact_sign_agrees_with_high_precision(orders, data):
    r = CoeffRing(orders)
    coords = data.draw(st.lists(st.integers(-6, 6), min_size=r.degree, max_size=r.degree))
    a = tuple(coords)
    mpmath.mp.dps = 50
    c = 2 * mpmath.cos(mpmath.pi / r.M)
    val = sum(x * c ** k for k, x in enumerate(a))
    expected = 0 if not any(a) else (1 if val > 0 else -1)
    assert r.sign(a) == expected


@given(st.data())
def test_multiplication_matches_floats(data):
    r = CoeffRing([5, 4])
    a = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=r.degree, max_size=r.degree)))
    b = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=r.degree, max_size=r.degree)))
    assert abs(r.to_float(r.mul(a, b)) - r.to_float(a) * r.to_float(b)) < 1e-6
