"""The Hecke-algebra module spanned by twisted involutions.

For a Coxeter system with diagram involution ``*`` the twisted involutions
are the w with (w*)^-1 = w.  The module has basis a_w over Z[v, 1/v] and
each T_s acts by one of four formulas, chosen by whether sw equals ws*
and whether s is a left descent of w.  The bar operator is fixed on a_1
and semilinear; its matrix in the rescaled basis a'_w = v^-l(w) a_w
defines the r-polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import vectors as vec
from .coxeter import LEFT, CoxeterSystem, ResourceError
from .laurent import ONE, U, UINV, V_MINUS_VINV, V_PLUS_VINV, ZERO, LaurentPoly, u
from .vectors import Vector, Word

# T_s coefficients for the four cases
_U2 = u(2)
_C_II_SELF = _U2 - U - 1   # u^2 - u - 1
_C_II_OTHER = _U2 - U      # u^2 - u
_C_IV_SELF = _U2 - 1       # u^2 - 1
_C_UP_OTHER = U + 1        # u + 1
_INV_SHIFT = UINV * UINV - 1  # u^-2 - 1
_UINV2 = UINV * UINV


@dataclass(frozen=True)
class StepKind:
    """How s relates to a twisted involution w."""
    commutes: bool   # sw == ws*
    up: bool         # sw > w
    target: Word     # s.w: sw if commutes, else sws*


class InvolutionModule:
    def __init__(self, W: CoxeterSystem):
        self.W = W
        self._kind: dict[tuple[int, Word], StepKind] = {}
        self._ts: dict[tuple[int, Word], tuple[tuple[Word, LaurentPoly], ...]] = {}
        self._bar: dict[Word, Vector] = {(): {(): ONE}}
        self._r: dict[tuple[Word, Word], LaurentPoly] = {}
        self._rrec: dict[tuple[Word, Word, str], LaurentPoly] = {}
        self._phi: dict[Word, int] = {(): 0}
        self._twisted: dict[Word, bool] = {}
        self._enum: dict[int, list[Word]] = {}

    # twisted involutions -------------------------------------------------

    def is_twisted(self, w: Word) -> bool:
        hit = self._twisted.get(w)
        if hit is None:
            hit = self.W.star_apply(w) == self.W.inverse(w)
            self._twisted[w] = hit
        return hit

    def kind(self, s: int, w: Word) -> StepKind:
        key = (s, w)
        hit = self._kind.get(key)
        if hit is not None:
            return hit
        W = self.W
        sw, sign = W.mul_gen(w, s, LEFT)
        ws = W.rmul(w, W.star[s])
        if sw == ws:
            res = StepKind(True, sign > 0, sw)
        else:
            res = StepKind(False, sign > 0, W.rmul(sw, W.star[s]))
        self._kind[key] = res
        return res

    def sdot(self, s: int, w: Word) -> Word:
        return self.kind(s, w).target

    def enumerate_twisted(self, L: int) -> list[Word]:
        """Twisted involutions of length <= L, sorted by (length, word)."""
        hit = self._enum.get(L)
        if hit is not None:
            return hit
        seen = {()}
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.W.generators():
                    k = self.kind(s, w)
                    if k.up and len(k.target) <= L and k.target not in seen:
                        seen.add(k.target)
                        nxt.append(k.target)
            frontier = nxt
            if len(seen) > self.W.cap:
                raise ResourceError(f"more than {self.W.cap} twisted involutions")
        res = sorted(seen, key=vec.sort_key)
        self._enum[L] = res
        return res

    def lower_interval(self, w: Word) -> list[Word]:
        """Twisted involutions y <= w, sorted by (length, word)."""
        return sorted((y for y in self.W.lower_interval(w) if self.is_twisted(y)),
                      key=vec.sort_key)

    # the Hecke action ----------------------------------------------------

    def ts_basis(self, s: int, w: Word) -> tuple[tuple[Word, LaurentPoly], ...]:
        key = (s, w)
        hit = self._ts.get(key)
        if hit is not None:
            return hit
        k = self.kind(s, w)
        if k.commutes and k.up:
            res = ((w, U), (k.target, _C_UP_OTHER))
        elif k.commutes:
            res = ((w, _C_II_SELF), (k.target, _C_II_OTHER))
        elif k.up:
            res = ((k.target, ONE),)
        else:
            res = ((w, _C_IV_SELF), (k.target, _U2))
        self._ts[key] = res
        return res

    def ts_action(self, s: int, m: Vector) -> Vector:
        out: Vector = {}
        for w, c in m.items():
            for x, a in self.ts_basis(s, w):
                vec.add_term(out, x, a * c)
        return out

    def ts_inverse_action(self, s: int, m: Vector) -> Vector:
        """T_s^-1 = u^-2 T_s + (u^-2 - 1)."""
        out = vec.scale(self.ts_action(s, m), _UINV2)
        for w, c in m.items():
            vec.add_term(out, w, c * _INV_SHIFT)
        return out

    def apply_word(self, word, m: Vector, inverse: bool = False) -> Vector:
        """T_{s1} ... T_{sk} m (rightmost factor acts first)."""
        for s in reversed(tuple(word)):
            m = self.ts_inverse_action(s, m) if inverse else self.ts_action(s, m)
        return m

    def cs_action(self, s: int, m: Vector) -> Vector:
        """c_s = u^-1 (T_s + 1)."""
        return vec.scale(vec.add(self.ts_action(s, m), m), UINV)

    # bar operator ---------------------------------------------------------

    def bar_basis(self, w: Word) -> Vector:
        hit = self._bar.get(w)
        if hit is not None:
            return hit
        x = self.W.inverse(w)
        m: Vector = {x: ONE}
        # T_x^-1 = T_{sk}^-1 ... T_{s1}^-1 for x = s1...sk, so s1 acts first
        for s in x:
            m = self.ts_inverse_action(s, m)
        if len(w) % 2:
            m = vec.scale(m, -1)
        self._bar[w] = m
        return m

    def bar_vector(self, m: Vector) -> Vector:
        return vec.combine((c.bar(), self.bar_basis(w)) for w, c in m.items())

    def bar_hecke_ts(self, s: int, m: Vector) -> Vector:
        """bar(T_s) m where bar(T_s) = T_s^-1."""
        return self.ts_inverse_action(s, m)

    # r-polynomials --------------------------------------------------------

    def r_poly(self, y: Word, w: Word) -> LaurentPoly:
        """r_{y,w} read off bar(a_w): coefficient c_y gives bar(v^(l(w)+l(y)) c_y)."""
        key = (y, w)
        hit = self._r.get(key)
        if hit is not None:
            return hit
        c = self.bar_basis(w).get(y, ZERO)
        res = c.shift(len(w) + len(y)).bar()
        self._r[key] = res
        return res

    def r_poly_recursive(self, x: Word, w: Word, choice: str = "min") -> LaurentPoly:
        """r_{x,w} by downward recursion on l(w); independent of the bar operator.

        ``choice`` picks the left descent s of w used at each step
        ("min" or "max"); every choice must give the same answer.
        """
        if not w:
            return ONE if not x else ZERO
        if len(x) > len(w):
            return ZERO
        key = (x, w, choice)
        hit = self._rrec.get(key)
        if hit is not None:
            return hit
        W = self.W
        descents = W.left_descents(w)
        s = descents[0] if choice == "min" else descents[-1]
        kw = self.kind(s, w)
        y = kw.target  # s.w, shorter than w
        kx = self.kind(s, x)
        rec = lambda a: self.r_poly_recursive(a, y, choice)  # noqa: E731
        if kw.commutes:
            # w = sy with sy = ys*; solve (v + 1/v) r_{x,w} = ...
            if kx.commutes and kx.up:
                num = rec(kx.target) * (-V_MINUS_VINV) + (U - UINV) * rec(x)
            elif kx.commutes:
                num = rec(x) * (-2) + rec(kx.target) * V_PLUS_VINV
            elif kx.up:
                num = rec(kx.target) + (U - 1 - UINV) * rec(x)
            else:
                num = rec(kx.target) - rec(x)
            res = num.divmod_exact(V_PLUS_VINV)
        else:
            # w = sys*
            if kx.commutes and kx.up:
                res = rec(kx.target) * (-V_MINUS_VINV) + (U + 1 - UINV) * rec(x)
            elif kx.commutes:
                res = rec(kx.target) * V_PLUS_VINV - rec(x)
            elif kx.up:
                res = rec(kx.target) + (U - UINV) * rec(x)
            else:
                res = rec(kx.target)
        self._rrec[key] = res
        return res

    # phi and kappa -------------------------------------------------------

    def phi(self, w: Word) -> int:
        hit = self._phi.get(w)
        if hit is not None:
            return hit
        s = w[0]  # a left descent
        k = self.kind(s, w)
        assert not k.up
        res = self.phi(k.target) + 1 if k.commutes else self.phi(k.target)
        if (res - len(w)) % 2:
            raise AssertionError(f"parity of phi fails at {w}")
        self._phi[w] = res
        return res

    def kappa(self, w: Word) -> int:
        e = (len(w) + self.phi(w)) // 2
        return -1 if e % 2 else 1

    def phi_kappa(self, w: Word) -> tuple[int, int]:
        return self.phi(w), self.kappa(w)
