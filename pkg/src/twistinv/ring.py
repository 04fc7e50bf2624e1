"""Exact arithmetic in Z[2cos(pi/M)].

The reflection representation of a Coxeter group needs the numbers
2cos(pi/m) for the finite entries m of its Coxeter matrix.  All of them
live in the ring generated by c = 2cos(pi/M) with M the lcm of the
entries >= 4 (entries 2, 3 and infinity give the integers 0, 1, 2).
Elements are stored as integer coordinate tuples on the power basis
1, c, ..., c^(d-1).
"""

from __future__ import annotations

import math
from functools import reduce

import mpmath
import sympy

Elem = tuple[int, ...]


def lucas_poly(k: int) -> sympy.Poly:
    """Integer polynomial C_k with C_k(2cos t) = 2cos(k t)."""
    x = sympy.Symbol("x")
    prev, cur = sympy.Poly(2, x), sympy.Poly(x, x)
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, sympy.Poly(x, x) * cur - prev
    return cur


def minimal_polynomial_2cos(M: int) -> list[int]:
    """Coefficients (ascending, monic) of the minimal polynomial of 2cos(pi/M).

    2cos(pi/M) is a root of C_M(x) + 2, since C_M(2cos(pi/M)) = 2cos(pi) = -2.
    The irreducible factor vanishing at the root is picked numerically and
    then confirmed at high precision.
    """
    if M < 1:
        raise ValueError("M must be positive")
    x = sympy.Symbol("x")
    target = lucas_poly(M) + sympy.Poly(2, x)
    _, factors = sympy.factor_list(target.as_expr(), x)
    with mpmath.workdps(60):
        root = 2 * mpmath.cos(mpmath.pi / M)
        best = None
        for f, _mult in factors:
            fp = sympy.Poly(f, x)
            coeffs = [int(c) for c in reversed(fp.all_coeffs())]
            val = abs(mpmath.polyval(list(reversed(coeffs)), root))
            if best is None or val < best[0]:
                best = (val, coeffs)
        assert best is not None and best[0] < mpmath.mpf(10) ** -40
    coeffs = best[1]
    if coeffs[-1] == -1:
        coeffs = [-c for c in coeffs]
    if coeffs[-1] != 1:
        raise ArithmeticError(f"non-monic factor for M={M}: {coeffs}")
    return coeffs


class CoeffRing:
    """Z[c] with c = 2cos(pi/M); M = 1 means the integers."""

    def __init__(self, orders):
        big = sorted({int(m) for m in orders if m != math.inf and m >= 4})
        self.M = reduce(math.lcm, big, 1)
        if self.M == 1:
            self.minpoly = [0, 1]  # placeholder, degree 1: c is never used
            self.degree = 1
        else:
            self.minpoly = minimal_polynomial_2cos(self.M)
            self.degree = len(self.minpoly) - 1
        d = self.degree
        # table[k] = coordinates of c^k for k < 2d - 1
        table: list[list[int]] = []
        for k in range(max(2 * d - 1, 1)):
            if k < d:
                row = [0] * d
                row[k] = 1
            else:
                prev = table[k - 1]
                row = [0] + prev[:-1]
                top = prev[-1]
                if top:
                    for i in range(d):
                        row[i] -= top * self.minpoly[i]
            table.append(row)
        self.table = [tuple(r) for r in table]
        self.zero: Elem = (0,) * d
        self.one: Elem = self.from_int(1)

    # basic arithmetic ---------------------------------------------------

    def from_int(self, n: int) -> Elem:
        return (n,) + (0,) * (self.degree - 1)

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [0] * d
        for k, p in enumerate(prod):
            if p:
                row = self.table[k]
                for i in range(d):
                    out[i] += p * row[i]
        return tuple(out)

    def is_zero(self, a: Elem) -> bool:
        return not any(a)

    def generator(self) -> Elem:
        if self.degree == 1:
            raise ValueError("integer ring has no irrational generator")
        return (0, 1) + (0,) * (self.degree - 2)

    def two_cos(self, m) -> Elem:
        """2cos(pi/m) as a ring element; m = inf gives 2."""
        if m == math.inf:
            return self.from_int(2)
        m = int(m)
        if m == 2:
            return self.zero
        if m == 3:
            return self.one
        if self.M % m:
            raise ValueError(f"2cos(pi/{m}) is not in this ring (M={self.M})")
        # C_k(c) with k = M/m by the Lucas recurrence
        k = self.M // m
        c = self.generator()
        prev, cur = self.from_int(2), c
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, self.sub(self.mul(c, cur), prev)
        return cur

    def to_float(self, a: Elem) -> float:
        if self.degree == 1:
            return float(a[0])
        c = 2 * math.cos(math.pi / self.M)
        return sum(x * c ** k for k, x in enumerate(a))

    # signs --------------------------------------------------------------

    def monomial_sign(self, a: Elem) -> int | None:
        """Sign read off the coordinates when they agree; None if mixed."""
        pos = any(x > 0 for x in a)
        neg = any(x < 0 for x in a)
        if pos and neg:
            return None
        return 1 if pos else (-1 if neg else 0)

    def sign(self, a: Elem) -> int:
        """Exact sign of the real number represented by a."""
        s = self.monomial_sign(a)
        if s is not None:
            return s
        # nonzero coordinates on an irreducible basis mean a nonzero value,
        # so interval refinement always terminates
        prec = 64
        saved = mpmath.iv.prec
        try:
            while True:
                mpmath.iv.prec = prec
                c = 2 * mpmath.iv.cos(mpmath.iv.pi / self.M)
                val = mpmath.iv.mpf(0)
                power = mpmath.iv.mpf(1)
                for x in a:
                    if x:
                        val += x * power
                    power = power * c
                if val.a > 0:
                    return 1
                if val.b < 0:
                    return -1
                prec *= 2
                if prec > 1 << 16:
                    raise ArithmeticError(f"sign refinement did not converge for {a}")
        finally:
            mpmath.iv.prec = saved
