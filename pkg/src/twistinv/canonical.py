"""Canonical basis A_w of the involution module and its polynomials.

pi_{y,w} is found by downward induction: for x < w set
alpha_x = sum_{x<y<=w} r_{x,y} pi_{y,w}, which is bar-antisymmetric, and
let pi_{x,w} be minus its strictly negative part.  The same kernel with
classical R-polynomials gives the usual Kazhdan-Lusztig polynomials
(see classic.py).  P-pm_{y,w} = v^(l(w)-l(y)) pi_{y,w} is a polynomial in u.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from . import vectors as vec
from .laurent import ONE, UINV, U, V_PLUS_VINV, ZERO, DomainError, LaurentPoly
from .module import InvolutionModule
from .vectors import Vector, Word


def negative_part_table(
    w: Word,
    interval: Sequence[Word],
    rfun: Callable[[Word, Word], LaurentPoly],
    leq: Callable[[Word, Word], bool],
) -> dict[Word, LaurentPoly]:
    """Solve bar(pi_x) - pi_x = sum_{x<y<=w} r_{x,y} pi_y with pi_w = 1.

    ``interval`` lists every y <= w (w included).  Raises when some
    alpha_x fails to be bar-antisymmetric.
    """
    order = sorted(interval, key=lambda y: (-len(y), y))
    if order[0] != w:
        raise ValueError("interval must have w as its unique longest element")
    pi: dict[Word, LaurentPoly] = {w: ONE}
    done: list[Word] = [w]
    for x in order[1:]:
        alpha = ZERO
        lx = len(x)
        for y in done:
            if len(y) > lx and leq(x, y):
                py = pi[y]
                if py:
                    alpha = alpha + rfun(x, y) * py
        if alpha + alpha.bar():
            raise ArithmeticError(f"alpha at {x} (target {w}) is not bar-antisymmetric: {alpha}")
        neg, _ = alpha.split_strictneg()
        pi[x] = -neg
        done.append(x)
    return pi


class CanonicalBasis:
    """Tables of pi_{y,w}; ``r_source`` selects how r-polynomials are obtained.

    "bar" reads them off the bar operator; "recursive-min" and
    "recursive-max" use the descent recursion with the smallest or largest
    left descent.  All three must give the same basis.
    """

    def __init__(self, module: InvolutionModule, r_source: str = "bar"):
        self.M = module
        self.W = module.W
        if r_source == "bar":
            self._rfun = module.r_poly
        elif r_source in ("recursive-min", "recursive-max"):
            choice = r_source.split("-")[1]
            self._rfun = lambda x, y: module.r_poly_recursive(x, y, choice)
        else:
            raise ValueError(f"unknown r_source {r_source!r}")
        self._pi: dict[Word, dict[Word, LaurentPoly]] = {}
        self._A: dict[Word, Vector] = {}

    def _require_twisted(self, *ws: Word) -> None:
        for w in ws:
            if not self.M.is_twisted(w):
                raise DomainError(f"{self.W.fmt(w)!r} is not a twisted involution")

    def compute_pi_table(self, w: Word) -> dict[Word, LaurentPoly]:
        hit = self._pi.get(w)
        if hit is not None:
            return hit
        self._require_twisted(w)
        table = negative_part_table(w, self.M.lower_interval(w), self._rfun,
                                    self.W.bruhat_leq)
        self._pi[w] = table
        return table

    def pi(self, y: Word, w: Word) -> LaurentPoly:
        return self.compute_pi_table(w).get(y, ZERO)

    def ppm(self, y: Word, w: Word) -> LaurentPoly:
        """P-pm_{y,w} as a polynomial in u (zero unless y <= w)."""
        return self.pi(y, w).shift(len(w) - len(y))

    def a_canonical(self, w: Word) -> Vector:
        """A_w = sum_y pi_{y,w} v^-l(y) a_y."""
        hit = self._A.get(w)
        if hit is None:
            hit = {y: p.shift(-len(y)) for y, p in self.compute_pi_table(w).items() if p}
            self._A[w] = hit
        return hit

    # mu coefficients and Moebius values ---------------------------------

    def mu1(self, y: Word, w: Word) -> int:
        if y == w:
            return 0
        return self.pi(y, w).coeff(-1)

    def mu2(self, y: Word, w: Word) -> int:
        if y == w:
            return 0
        return self.pi(y, w).coeff(-2)

    def mobius(self, x: Word, z: Word) -> int:
        if not self.W.bruhat_leq(x, z):
            raise DomainError(f"{self.W.fmt(x)!r} is not below {self.W.fmt(z)!r}")
        return self.M.kappa(x) * self.M.kappa(z)

    # the c_s action -----------------------------------------------------

    def m_spherical_coeff(self, s: int, y: Word, w: Word) -> LaurentPoly:
        """The coefficient M^s_{y,w}, defined when sy < y < sw and sw > w."""
        self._require_twisted(y, w)
        M, W = self.M, self.W
        ky, kw = M.kind(s, y), M.kind(s, w)
        if ky.up or not kw.up:
            raise DomainError("m_spherical_coeff needs sy < y and sw > w")
        if len(y) % 2 != len(w) % 2:
            return V_PLUS_VINV * self.mu1(y, w)
        total = self.mu2(y, w)
        for x in M.lower_interval(w):
            if x != w and len(x) > len(y) and W.descent(x, s) and W.bruhat_leq(y, x):
                total -= self.mu1(y, x) * self.mu1(x, w)
        if kw.commutes:
            total -= self.mu1(y, kw.target)
        if ky.commutes:
            total += self.mu1(ky.target, w)
        return LaurentPoly.constant(total)

    def expand_in_A(self, m: Vector) -> dict[Word, LaurentPoly]:
        """Write m as a combination of canonical basis vectors.

        Greedy elimination at the longest remaining term; A_z has leading
        coefficient v^-l(z) on a_z, so that term must be divisible by it.
        """
        rest = dict(m)
        out: dict[Word, LaurentPoly] = {}
        steps = 0
        while rest:
            z = max(rest, key=lambda x: (len(x), x))
            c = rest[z].shift(len(z))
            out[z] = c
            rest = vec.sub(rest, vec.scale(self.a_canonical(z), c))
            if z in rest:
                raise ArithmeticError(f"elimination did not clear {self.W.fmt(z)!r}")
            steps += 1
            if steps > 10**6:
                raise ArithmeticError("A-basis elimination does not terminate")
        return out

    def cs_on_A(self, s: int, w: Word) -> dict[Word, LaurentPoly]:
        """c_s A_w expanded in the A-basis."""
        return self.expand_in_A(self.M.cs_action(s, self.a_canonical(w)))

    def cs_formula(self, s: int, w: Word) -> dict[Word, LaurentPoly]:
        """The predicted expansion of c_s A_w from the mu-coefficients."""
        M, W = self.M, self.W
        kw = M.kind(s, w)
        if not kw.up:
            return {w: U + UINV}
        top = kw.target
        out: dict[Word, LaurentPoly] = {top: V_PLUS_VINV if kw.commutes else ONE}
        for z in M.lower_interval(top):
            if z != top and W.descent(z, s):
                c = self.m_spherical_coeff(s, z, w)
                if c:
                    out[z] = c
        return out

    # splitting against classical KL ----------------------------------------

    def split_pm(self, y: Word, w: Word, kl_P: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, bool]:
        """(P+, P-, nonnegative?) with P+- = (P +- P-pm)/2."""
        ppm = self.ppm(y, w)
        plus2, minus2 = kl_P + ppm, kl_P - ppm
        if any(c % 2 for c in plus2.coeffs + minus2.coeffs):
            raise ArithmeticError(f"P and P-pm differ mod 2 at ({self.W.fmt(y)}, {self.W.fmt(w)})")
        plus = LaurentPoly(plus2.offset, [c // 2 for c in plus2.coeffs])
        minus = LaurentPoly(minus2.offset, [c // 2 for c in minus2.coeffs])
        return plus, minus, plus.nonnegative() and minus.nonnegative()
