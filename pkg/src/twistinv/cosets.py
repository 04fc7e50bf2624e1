"""Double cosets W_K x W_{K*} and the spherical submodule M^K.

A double coset has a unique shortest element b and a unique longest
element d = w_K w_J b w_{K*}, where J = K meet b K* b^-1.  When the coset
is stable under w -> (w*)^-1 its twisted involutions are the c b z c^(*-1)
with c a minimal left coset representative of W_K/W_J and z a twisted
involution of W_{J*} for the twist tau(y) = b^-1 y* b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import vectors as vec
from .coxeter import LEFT, RIGHT, CoxeterSystem
from .laurent import ONE, U, ZERO, DomainError, LaurentPoly
from .module import InvolutionModule
from .vectors import Vector, Word


# rational functions --------------------------------------------------------

@dataclass(frozen=True)
class RatFunc:
    """num/den with integer Laurent polynomials; equality by cross-multiplying."""
    num: LaurentPoly
    den: LaurentPoly = ONE

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFunc":
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is unhashable")

    def __str__(self):
        return f"({self.num})/({self.den})"


def subs_u_squared(p: LaurentPoly) -> LaurentPoly:
    """p(u) -> p(u^2)."""
    return LaurentPoly.from_dict({2 * e: c for e, c in p.terms()})


# double cosets --------------------------------------------------------------

@dataclass(frozen=True)
class DoubleCoset:
    K: tuple[int, ...]
    Kstar: tuple[int, ...]
    b: Word
    d: Word
    J: tuple[int, ...]
    Jprime: tuple[int, ...]          # b^-1 J b, a subset of K*
    tau: tuple[tuple[int, int], ...]  # y -> b^-1 y* b on Jprime, when star-stable
    star_stable: bool

    def tau_map(self) -> dict[int, int]:
        return dict(self.tau)


def _conj_generator(W: CoxeterSystem, b: Word, s: int) -> int | None:
    """b^-1 s b if it is a simple reflection, else None."""
    x = W.multiply(W.inverse(b), (s,), b)
    return x[0] if len(x) == 1 else None


def minimal_element(W: CoxeterSystem, x: Word, K: Sequence[int], Kstar: Sequence[int]) -> Word:
    changed = True
    while changed:
        changed = False
        for s in K:
            if W.descent(x, s, LEFT):
                x = W.lmul(s, x)
                changed = True
        for t in Kstar:
            if W.descent(x, t, RIGHT):
                x = W.rmul(x, t)
                changed = True
    return x


def coset_of(module: InvolutionModule, x: Word, K: Iterable[int]) -> DoubleCoset:
    W = module.W
    K = tuple(sorted(set(K)))
    if not W.is_finite_parabolic(K):
        raise DomainError(f"W_K is infinite for K={[W.labels[s] for s in K]}")
    Kstar = tuple(sorted(W.star[s] for s in K))
    b = minimal_element(W, x, K, Kstar)
    J, Jp = [], []
    for s in K:
        t = _conj_generator(W, b, s)
        if t is not None and t in Kstar:
            J.append(s)
            Jp.append(t)
    J_t, Jp_t = tuple(J), tuple(sorted(Jp))
    d = W.multiply(W.longest_element(K), W.longest_element(J_t), b, W.longest_element(Kstar))
    expected = (len(W.longest_element(K)) + len(b) + len(W.longest_element(Kstar))
                - len(W.longest_element(J_t)))
    if len(d) != expected:
        raise AssertionError(f"maximal element length {len(d)} != {expected}")
    stable = module.is_twisted(b)
    tau: list[tuple[int, int]] = []
    if stable:
        for s in Jp_t:
            t = _conj_generator(W, b, W.star[s])
            if t is None or t not in Jp_t:
                raise AssertionError("twist does not preserve J*")
            tau.append((s, t))
    return DoubleCoset(K, Kstar, b, d, J_t, Jp_t, tuple(tau), stable)


def coset_elements(W: CoxeterSystem, coset: DoubleCoset) -> list[Word]:
    seen = {coset.b}
    frontier = [coset.b]
    while frontier:
        nxt = []
        for x in frontier:
            for s in coset.K:
                y, sign = W.mul_gen(x, s, LEFT)
                if sign > 0 and y not in seen:
                    seen.add(y)
                    nxt.append(y)
            for t in coset.Kstar:
                y, sign = W.mul_gen(x, t, RIGHT)
                if sign > 0 and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=vec.sort_key)


def decompose(W: CoxeterSystem, x: Word, coset: DoubleCoset) -> tuple[Word, Word]:
    """x = c b d' with c in W_K^J, d' in W_{K*}, lengths adding up."""
    xmin = x
    changed = True
    while changed:
        changed = False
        for t in coset.Kstar:
            if W.descent(xmin, t, RIGHT):
                xmin = W.rmul(xmin, t)
                changed = True
    c = W.multiply(xmin, W.inverse(coset.b))
    dprime = W.multiply(W.inverse(xmin), x)
    if len(c) + len(coset.b) + len(dprime) != len(x):
        raise AssertionError(f"lengths are not additive for {W.fmt(x)}")
    if any(W.descent(c, s, RIGHT) for s in coset.J):
        raise AssertionError("c is not a minimal coset representative")
    return c, dprime


def coset_involutions(module: InvolutionModule, coset: DoubleCoset) -> list[Word]:
    """Omega meet I_*, by the (c, z) parametrization and by filtering; both must agree."""
    if not coset.star_stable:
        return []
    W = module.W
    filtered = {x for x in coset_elements(W, coset) if module.is_twisted(x)}
    WK = W.parabolic_elements(coset.K)
    reps = [c for c in WK if not any(W.descent(c, s, RIGHT) for s in coset.J)]
    tau = coset.tau_map()
    zs = []
    for z in W.parabolic_elements(coset.Jprime):
        tz = W.canonical(tau[i] for i in z)
        if W.inverse(tz) == z:
            zs.append(z)
    param = set()
    for c in reps:
        cinv_star = W.inverse(W.star_apply(c))
        for z in zs:
            param.add(W.multiply(c, coset.b, z, cinv_star))
    if len(param) != len(reps) * len(zs) or param != filtered:
        raise AssertionError("coset involutions: parametrization and filter disagree")
    return sorted(param, key=vec.sort_key)


def double_cosets(module: InvolutionModule, K: Iterable[int], L: int) -> list[DoubleCoset]:
    """Star-stable double cosets whose longest element has length <= L, by (l(d), d)."""
    out = {}
    for x in module.enumerate_twisted(L):
        c = coset_of(module, x, K)
        if c.d == x:
            out[c.b] = c
    return sorted(out.values(), key=lambda c: vec.sort_key(c.d))


def chain_to_min(module: InvolutionModule, x: Word, coset: DoubleCoset) -> list[tuple[int, Word]]:
    """A chain x = x_0, x_1 = s_1.x_0, ..., x_n = b inside the coset."""
    W = module.W
    b = coset.b
    tau = coset.tau_map()
    binv = W.inverse(b)
    chain = []
    while x != b:
        c, _ = decompose(W, x, coset)
        if c:
            gen = c[0]
            nxt = module.sdot(gen, x)
            if nxt != W.multiply((gen,), x, (W.star[gen],)):
                raise AssertionError("stripping c should conjugate")
        else:
            z = W.multiply(binv, x)
            s = next(r for r in coset.Jprime if W.descent(z, r, LEFT))
            gen = W.star[tau[s]]
            nxt = module.sdot(gen, x)
            sz = W.lmul(s, z)
            expect = W.multiply(b, sz) if sz == W.rmul(z, tau[s]) else W.multiply(b, sz, (tau[s],))
            if nxt != expect:
                raise AssertionError("reduction inside W_{J*} went astray")
        if len(nxt) >= len(x):
            raise AssertionError("chain step did not decrease length")
        chain.append((gen, nxt))
        x = nxt
    return chain


# rank-two classification -----------------------------------------------------

def _alternating(first: int, other: int, n: int) -> Word:
    return tuple(first if i % 2 == 0 else other for i in range(n))


def classify_rank2(module: InvolutionModule, coset: DoubleCoset) -> tuple[str, list[Word], list[Word]]:
    """Case tag (i)..(vii) and the two explicit element lists of the coset."""
    W = module.W
    if len(coset.K) != 2 or not coset.star_stable:
        raise DomainError("classify_rank2 needs K = {s, t} and a star-stable coset")
    s, t = coset.K
    m = W.m(s, t)
    if m == float("inf"):
        raise DomainError("m_{s,t} must be finite")
    b = coset.b
    st, tt = W.star[s], W.star[t]
    sb, tb = W.lmul(s, b), W.lmul(t, b)
    bs, bt = W.rmul(b, st), W.rmul(b, tt)
    mul = W.multiply
    inv = W.inverse
    star = W.star_apply

    def ss(i):
        return W.canonical(_alternating(s, t, i))

    def ttw(i):
        return W.canonical(_alternating(t, s, i))

    xi: list[Word] = []
    xi2: list[Word] = []
    if sb not in (bs, bt) and tb not in (bs, bt):
        tag = "i"
        for i in range(m + 1):
            xi.append(mul(inv(ss(i)), b, star(ss(i))))
            xi2.append(mul(inv(ttw(i)), b, star(ttw(i))))
    elif sb == bs and tb != bt:
        tag = "ii"
        for i in range(m):
            xi.append(mul(inv(ttw(i)), b, star(ttw(i))))
            xi.append(mul(inv(ttw(i)), b, star(ss(i + 1))))
    elif sb != bs and tb == bt:
        tag = "iii"
        for i in range(m):
            xi.append(mul(inv(ss(i)), b, star(ss(i))))
            xi.append(mul(inv(ss(i)), b, star(ttw(i + 1))))
    elif sb == bs and tb == bt:
        tag = "iv" if m % 2 else "v"
        top = (m - 1) // 2 if m % 2 else (m - 2) // 2
        xi.append(b)
        xi2.append(b)
        for i in range(top + 1):
            first, other = (s, t) if i % 2 == 0 else (t, s)
            xi.append(mul(_alternating(first, other, 2 * i + 1), b))
            xi2.append(mul(_alternating(other, first, 2 * i + 1), b))
        xi.append(coset.d)
        xi2.append(coset.d)
    elif sb == bt and tb == bs:
        tag = "vi" if m % 2 else "vii"
        top = (m - 1) // 2 if m % 2 else m // 2
        xi.append(b)
        xi2.append(b)
        for i in range(1, top + 1):
            first, other = (s, t) if i % 2 == 1 else (t, s)
            xi.append(mul(_alternating(first, other, 2 * i), b))
            xi2.append(mul(_alternating(other, first, 2 * i), b))
        xi.append(coset.d)
        xi2.append(coset.d)
    else:
        raise AssertionError("rank-two coset fits none of the seven cases")
    return tag, xi, xi2


# the spherical submodule ---------------------------------------------------

def a_omega(module: InvolutionModule, coset: DoubleCoset) -> Vector:
    return {x: ONE for x in coset_involutions(module, coset)}


def is_in_MK(module: InvolutionModule, m: Vector, K: Iterable[int]) -> bool:
    """Coefficients invariant under w -> s.w for every s in K."""
    K = tuple(K)
    for w, c in m.items():
        for s in K:
            if m.get(module.sdot(s, w), ZERO) != c:
                return False
    return True


def constant_on_cosets(module: InvolutionModule, m: Vector, K: Iterable[int]) -> bool:
    """Coefficients constant on each coset meet I_*, checked coset by coset."""
    K = tuple(K)
    seen = set()
    for w in m:
        c = coset_of(module, w, K)
        if c.b in seen:
            continue
        seen.add(c.b)
        vals = {m.get(x, ZERO) for x in coset_involutions(module, c)}
        if len(vals) != 1:
            return False
    return True


def sigma_action(module: InvolutionModule, K: Iterable[int], m: Vector) -> Vector:
    """(sum over x in W_K of T_x) m, reusing T_x m = T_s T_{sx} m."""
    W = module.W
    cache: dict[Word, Vector] = {(): dict(m)}
    out: Vector = {}
    for x in W.parabolic_elements(K):
        if x:
            cache[x] = module.ts_action(x[0], cache[x[1:]])
        for w, c in cache[x].items():
            vec.add_term(out, w, c)
    return out


_LAMBDA_NUM = U - 1
_LAMBDA_DEN = U + 1


def zeta(module: InvolutionModule, m: Vector) -> RatFunc:
    """Linear map a_w -> u^l(w) ((u-1)/(u+1))^phi(w)."""
    if not m:
        return RatFunc(ZERO)
    phis = {w: module.phi(w) for w in m}
    top = max(phis.values())
    num = ZERO
    for w, c in m.items():
        f = phis[w]
        num = num + c * LaurentPoly.monomial(2 * len(w)) * _LAMBDA_NUM ** f * _LAMBDA_DEN ** (top - f)
    return RatFunc(num, _LAMBDA_DEN ** top)


@dataclass
class SphericalSeries:
    P: LaurentPoly        # sum over W_K of u^l
    Pstar: LaurentPoly    # same, over star-fixed elements
    R: RatFunc            # zeta-weighted sum over twisted involutions of W_K


def spherical_series(W: CoxeterSystem, K: Iterable[int], star: dict[int, int] | None = None
                     ) -> SphericalSeries:
    """Series of W_K with the given involution of K (default: the restriction of *)."""
    K = sorted(set(K))
    if star is None:
        star = {s: W.star[s] for s in K}
    if any(star[s] not in K for s in K):
        raise DomainError("K is not stable under the involution")
    if not K:
        return SphericalSeries(ONE, ONE, RatFunc(ONE))
    sub, _ = W.subsystem(K, star)
    sub_mod = InvolutionModule(sub)
    elems = sub.parabolic_elements(range(sub.rank))
    P = sub.poincare_poly()
    Pstar = LaurentPoly.from_dict({})
    fixed: dict[int, int] = {}
    for x in elems:
        if sub.star_apply(x) == x:
            fixed[2 * len(x)] = fixed.get(2 * len(x), 0) + 1
    Pstar = LaurentPoly.from_dict(fixed)
    twisted = {x: ONE for x in elems if sub_mod.is_twisted(x)}
    return SphericalSeries(P, Pstar, zeta(sub_mod, twisted))


def coset_r_poly(module: InvolutionModule, omega_p: DoubleCoset, omega: DoubleCoset
                 ) -> LaurentPoly:
    """r_{Omega',Omega} = sum over x in Omega with d' <= x of v^(l(x)-l(d)) r_{d',x}."""
    W = module.W
    total = ZERO
    for x in coset_involutions(module, omega):
        if W.bruhat_leq(omega_p.d, x):
            total = total + module.r_poly(omega_p.d, x).shift(len(x) - len(omega.d))
    return total
