"""Classical R- and Kazhdan-Lusztig polynomials, and the mod 2 model.

The Hecke algebra here has basis t_w over Z[v, 1/v] with
(t_s + 1)(t_s - v^2) = 0.  Its R-type polynomials rho_{y,w} are defined by
bar(t_w) = sum_y bar(rho_{y,w}) v^(-l(w)-l(y)) t_y and obey a simple
left (or right) descent recursion.  KL polynomials come from the same
negative-part kernel as the canonical basis of the involution module.

Reducing mod 2, the involution module can be modelled inside the Hecke
algebra itself: a_w corresponds to t_w, T_s acts by xi -> pi(t_s xi t_s*),
and bar becomes pi(bar(xi)), where pi keeps the twisted-involution terms.
"""

from __future__ import annotations

from . import vectors as vec
from .canonical import negative_part_table
from .coxeter import LEFT, RIGHT, CoxeterSystem
from .laurent import ONE, U, V_MINUS_VINV, ZERO, LaurentPoly
from .module import InvolutionModule
from .vectors import Vector, Word

_U_MINUS_1 = U - 1
_UINV = LaurentPoly.monomial(-2)
_UINV_MINUS_1 = _UINV - 1

HeckeElement = Vector


class HeckeKL:
    def __init__(self, W: CoxeterSystem):
        self.W = W
        self._rho: dict[tuple[Word, Word], LaurentPoly] = {}
        self._rho_r: dict[tuple[Word, Word], LaurentPoly] = {}
        self._p: dict[Word, dict[Word, LaurentPoly]] = {}

    # R-polynomials -------------------------------------------------------

    def rho_poly(self, x: Word, w: Word) -> LaurentPoly:
        """Left recursion: with w = sy > y,
        rho_{x,w} = rho_{sx,y} if sx < x, else rho_{sx,y} + (v - 1/v) rho_{x,y}."""
        if not self.W.bruhat_leq(x, w):
            return ZERO
        if x == w:
            return ONE
        key = (x, w)
        hit = self._rho.get(key)
        if hit is not None:
            return hit
        W = self.W
        s, y = w[0], w[1:]
        sx, sign = W.mul_gen(x, s, LEFT)
        res = self.rho_poly(sx, y)
        if sign > 0:
            res = res + V_MINUS_VINV * self.rho_poly(x, y)
        self._rho[key] = res
        return res

    def rho_poly_right(self, x: Word, w: Word) -> LaurentPoly:
        """Same polynomials from the right-descent recursion."""
        if not self.W.bruhat_leq(x, w):
            return ZERO
        if x == w:
            return ONE
        key = (x, w)
        hit = self._rho_r.get(key)
        if hit is not None:
            return hit
        W = self.W
        s = W.right_descents(w)[0]
        y = W.rmul(w, s)
        xs, sign = W.mul_gen(x, s, RIGHT)
        res = self.rho_poly_right(xs, y)
        if sign > 0:
            res = res + V_MINUS_VINV * self.rho_poly_right(x, y)
        self._rho_r[key] = res
        return res

    # KL polynomials -------------------------------------------------------

    def p_table(self, w: Word) -> dict[Word, LaurentPoly]:
        hit = self._p.get(w)
        if hit is None:
            hit = negative_part_table(w, self.W.lower_interval(w), self.rho_poly,
                                      self.W.bruhat_leq)
            self._p[w] = hit
        return hit

    def kl_poly(self, y: Word, w: Word) -> LaurentPoly:
        """P_{y,w} as a polynomial in u (zero unless y <= w)."""
        return self.p_table(w).get(y, ZERO).shift(len(w) - len(y))

    # Hecke algebra arithmetic --------------------------------------------

    def lmul_t(self, s: int, h: HeckeElement) -> HeckeElement:
        """t_s h."""
        out: HeckeElement = {}
        for w, c in h.items():
            sw, sign = self.W.mul_gen(w, s, LEFT)
            if sign > 0:
                vec.add_term(out, sw, c)
            else:
                vec.add_term(out, w, c * _U_MINUS_1)
                vec.add_term(out, sw, c * U)
        return out

    def rmul_t(self, h: HeckeElement, s: int) -> HeckeElement:
        """h t_s."""
        out: HeckeElement = {}
        for w, c in h.items():
            ws, sign = self.W.mul_gen(w, s, RIGHT)
            if sign > 0:
                vec.add_term(out, ws, c)
            else:
                vec.add_term(out, w, c * _U_MINUS_1)
                vec.add_term(out, ws, c * U)
        return out

    def lmul_t_inv(self, s: int, h: HeckeElement) -> HeckeElement:
        """t_s^-1 h with t_s^-1 = v^-2 t_s + (v^-2 - 1)."""
        out = vec.scale(self.lmul_t(s, h), _UINV)
        for w, c in h.items():
            vec.add_term(out, w, c * _UINV_MINUS_1)
        return out

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        """a b, by applying the letters of each basis word of a to b."""
        out: HeckeElement = {}
        for w, c in a.items():
            term = dict(b)
            for s in reversed(w):
                term = self.lmul_t(s, term)
            for x, d in term.items():
                vec.add_term(out, x, c * d)
        return out

    def t_inverse(self, w: Word) -> HeckeElement:
        """t_w^-1 = t_{sk}^-1 ... t_{s1}^-1 for w = s1...sk."""
        h: HeckeElement = {(): ONE}
        for s in w:
            h = self.lmul_t_inv(s, h)
        return h

    def bar(self, h: HeckeElement) -> HeckeElement:
        """v^n t_x -> v^-n t_{x^-1}^-1."""
        return vec.combine((c.bar(), self.t_inverse(self.W.inverse(w))) for w, c in h.items())

    def sharp(self, h: HeckeElement) -> HeckeElement:
        """Antiautomorphism t_w -> t_{w*^-1}."""
        W = self.W
        return {W.inverse(W.star_apply(w)): c for w, c in h.items()}

    def rho_from_bar(self, x: Word, w: Word) -> LaurentPoly:
        """rho_{x,w} read off bar(t_w) directly (a third route, used in tests)."""
        c = self.bar({w: ONE}).get(x, ZERO)
        return c.shift(len(w) + len(x)).bar()


class Mod2Model:
    """The involution module mod 2, realised inside the Hecke algebra."""

    def __init__(self, module: InvolutionModule, hecke: HeckeKL | None = None):
        self.M = module
        self.W = module.W
        self.H = hecke if hecke is not None else HeckeKL(module.W)

    def project(self, h: HeckeElement) -> HeckeElement:
        """pi: keep the twisted-involution terms."""
        return {w: c for w, c in h.items() if self.M.is_twisted(w)}

    def sharp_project(self, h: HeckeElement) -> tuple[HeckeElement, HeckeElement]:
        return vec.mod2(self.H.sharp(h)), vec.mod2(self.project(h))

    def psi_inverse(self, h: Vector) -> HeckeElement:
        """u^n T_w -> v^n t_w (coefficients given in v with even support)."""
        return {w: c.halve_exponents() for w, c in h.items()}

    def odot(self, h: Vector, xi: HeckeElement) -> HeckeElement:
        """h (in the u-Hecke algebra, coefficients in u) acting on xi mod 2."""
        g = self.psi_inverse(vec.mod2(h))
        prod = self.H.mul(self.H.mul(g, xi), self.H.sharp(g))
        return vec.mod2(self.project(prod))

    def ts_odot(self, s: int, xi: HeckeElement) -> HeckeElement:
        """T_s acting: pi(t_s xi t_s*)."""
        prod = self.H.rmul_t(self.H.lmul_t(s, xi), self.W.star[s])
        return vec.mod2(self.project(prod))

    def bar_B(self, xi: HeckeElement) -> HeckeElement:
        """B(xi) = pi(bar(xi)) mod 2."""
        return vec.mod2(self.project(self.H.bar(xi)))


def mod2_compare(pairs, canonical, hecke: HeckeKL) -> list[tuple[Word, Word, LaurentPoly, LaurentPoly, bool]]:
    """For each (y, w): (y, w, P-pm, P, congruent mod 2)."""
    rows = []
    for y, w in pairs:
        ppm = canonical.ppm(y, w)
        p = hecke.kl_poly(y, w)
        rows.append((y, w, ppm, p, ppm.mod2() == p.mod2()))
    return rows
