"""Inversion formula for finite groups, and affine coset scans.

For finite W the diamond involution x -> w_S x* w_S gives a second module
whose r- and P-pm-polynomials are tied to the original ones by an
inversion formula.  For affine W with K = S - {s0} the longest elements of
the (W_K, W_K) double cosets are twisted involutions, and the canonical
basis element of the longest one can be compared with classical KL data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import vectors as vec
from .canonical import CanonicalBasis
from .classic import HeckeKL
from .coxeter import CoxeterSystem
from .cosets import DoubleCoset, a_omega, coset_involutions, coset_of
from .laurent import ONE, ZERO, DomainError, LaurentPoly
from .module import InvolutionModule
from .vectors import Vector, Word


@dataclass
class DualityContext:
    module: InvolutionModule
    canonical: CanonicalBasis
    w0: Word
    diamond: tuple[int, ...]
    dual_module: InvolutionModule
    dual_canonical: CanonicalBasis


def diamond_system(module: InvolutionModule, canonical: CanonicalBasis | None = None
                   ) -> DualityContext:
    W = module.W
    if not W.is_finite_parabolic(range(W.rank)):
        raise DomainError("the diamond involution needs a finite group")
    w0 = W.longest_element()
    perm = []
    for s in W.generators():
        conj = W.multiply(w0, (s,), w0)
        if len(conj) != 1:
            raise AssertionError("conjugation by w_S does not permute S")
        perm.append(W.star[conj[0]])
    perm_t = tuple(perm)
    dual = InvolutionModule(W.with_star(perm_t))
    if canonical is None:
        canonical = CanonicalBasis(module)
    return DualityContext(module, canonical, w0, perm_t, dual, CanonicalBasis(dual))


def _times_w0(ctx: DualityContext, x: Word) -> Word:
    return ctx.dual_module.W.multiply(x, ctx.w0)


def inversion_sum(ctx: DualityContext, y: Word, w: Word) -> LaurentPoly:
    """sum_{y<=t<=w} kappa(y) kappa(t) P-pm_{y,t} P-pm-diamond_{w w0, t w0}."""
    M, C, Cd, W = ctx.module, ctx.canonical, ctx.dual_canonical, ctx.module.W
    ky = M.kappa(y)
    total = ZERO
    ww0 = _times_w0(ctx, w)
    for t in M.lower_interval(w):
        if W.bruhat_leq(y, t):
            term = C.ppm(y, t) * Cd.ppm(ww0, _times_w0(ctx, t))
            total = total + term * (ky * M.kappa(t))
    return total


def inversion_check(ctx: DualityContext) -> list[tuple[Word, Word, LaurentPoly]]:
    """Every pair y <= w whose sum differs from delta_{y,w}."""
    M, W = ctx.module, ctx.module.W
    bad = []
    for w in M.enumerate_twisted(len(ctx.w0)):
        for y in M.lower_interval(w):
            val = inversion_sum(ctx, y, w)
            if val != (1 if y == w else 0):
                bad.append((y, w, val))
    return bad


def r_duality_check(ctx: DualityContext) -> list[tuple[Word, Word, LaurentPoly, LaurentPoly]]:
    """Pairs violating bar(r_{y,w}) = kappa(y) kappa(w) r-diamond_{w w0, y w0}."""
    M, Md = ctx.module, ctx.dual_module
    bad = []
    for w in M.enumerate_twisted(len(ctx.w0)):
        for y in M.lower_interval(w):
            lhs = M.r_poly(y, w).bar()
            rhs = Md.r_poly(_times_w0(ctx, w), _times_w0(ctx, y)) * (M.kappa(y) * M.kappa(w))
            if lhs != rhs:
                bad.append((y, w, lhs, rhs))
    return bad


# affine setups ---------------------------------------------------------------

@dataclass
class AffineSetup:
    module: InvolutionModule
    s0: int
    K: tuple[int, ...] = field(init=False)
    canonical: CanonicalBasis = field(init=False)
    hecke: HeckeKL = field(init=False)

    def __post_init__(self):
        W = self.module.W
        if not 0 <= self.s0 < W.rank:
            raise DomainError(f"s0={self.s0} is not a generator")
        if W.star[self.s0] != self.s0:
            raise DomainError("the involution must fix s0")
        if W.is_finite_parabolic(W.generators()):
            raise DomainError("an affine setup needs an infinite group")
        self.K = tuple(s for s in W.generators() if s != self.s0)
        if not W.is_finite_parabolic(self.K):
            raise DomainError("W_K must be finite")
        self.canonical = CanonicalBasis(self.module)
        self.hecke = HeckeKL(W)

    @property
    def W(self) -> CoxeterSystem:
        return self.module.W


def affine_extremal_pairs(setup: AffineSetup, L: int
                          ) -> tuple[list[DoubleCoset], list[tuple[DoubleCoset, DoubleCoset]]]:
    """(W_K, W_K) double cosets with l(d) <= L, and the pairs with d' <= d.

    Every such coset is checked to have a twisted-involution maximal element.
    """
    W, M = setup.W, setup.module
    cosets: dict[Word, DoubleCoset] = {}
    for x in W.enumerate_up_to(L):
        c = coset_of(M, x, setup.K)
        if len(c.d) <= L and c.b not in cosets:
            if not M.is_twisted(c.d):
                raise AssertionError(f"longest element {W.fmt(c.d)} is not a twisted involution")
            cosets[c.b] = c
    ordered = sorted(cosets.values(), key=lambda c: vec.sort_key(c.d))
    pairs = [(cp, c) for c in ordered for cp in ordered if W.bruhat_leq(cp.d, c.d)]
    return ordered, pairs


@dataclass
class ScanRow:
    dprime: Word
    d: Word
    ppm: LaurentPoly
    kl: LaurentPoly
    kl_neg_u: LaurentPoly
    equal: bool
    n_u1: int


def scan_extremal_pairs(setup: AffineSetup, L: int) -> list[ScanRow]:
    """Compare P-pm(u) with P(-u) on every extremal pair; report only."""
    _, pairs = affine_extremal_pairs(setup, L)
    rows = []
    for cp, c in pairs:
        ppm = setup.canonical.ppm(cp.d, c.d)
        kl = setup.hecke.kl_poly(cp.d, c.d)
        neg = kl.sub_minus_u()
        rows.append(ScanRow(cp.d, c.d, ppm, kl, neg, ppm == neg, kl.eval_u1()))
    return rows


def coset_expansion(setup: AffineSetup, w: Word) -> list[tuple[DoubleCoset, LaurentPoly]]:
    """Write A_w = v^-l(w) sum_Omega f_Omega a_Omega; returns the f's.

    Raises if A_w is not constant on some coset meet I_*.
    """
    M, W = setup.module, setup.W
    A = setup.canonical.a_canonical(w)
    out: list[tuple[DoubleCoset, LaurentPoly]] = []
    seen: set[Word] = set()
    rebuilt: Vector = {}
    for x in sorted(A, key=vec.sort_key):
        c = coset_of(M, x, setup.K)
        if c.b in seen:
            continue
        seen.add(c.b)
        f = A[x].shift(len(w))
        out.append((c, f))
        for y in coset_involutions(M, c):
            vec.add_term(rebuilt, y, f.shift(-len(w)))
    if rebuilt != A:
        raise AssertionError("A_w is not constant on double cosets")
    out.sort(key=lambda item: vec.sort_key(item[0].d), reverse=True)
    return out


@dataclass
class ClosedFormCheck:
    exponents: list[int]
    l_d: int
    l_dprime: int
    closed_form_ok: bool
    kl_ok: bool
    ppm_ok: bool
    length_gap_ok: bool
    kl: LaurentPoly
    ppm: LaurentPoly

    @property
    def ok(self) -> bool:
        return self.closed_form_ok and self.kl_ok and self.ppm_ok and self.length_gap_ok


def check_closed_forms(setup: AffineSetup) -> ClosedFormCheck:
    """Closed forms for the coset of s0 against the coset of 1 (simply laced W_K)."""
    W, M = setup.W, setup.module
    if any(W.m(s, t) not in (2, 3) for s in setup.K for t in setup.K if s != t):
        raise DomainError("W_K must be simply laced")
    omega = coset_of(M, (setup.s0,), setup.K)
    omega_p = coset_of(M, (), setup.K)
    e = W.exponents(setup.K)
    en = e[-1]
    A = setup.canonical.a_canonical(omega.d)
    expected = vec.scale(a_omega(M, omega), LaurentPoly.monomial(-len(omega.d)))
    coeff = ZERO
    for ej in e:
        coeff = coeff + LaurentPoly.monomial(-2 * ej, (-1) ** ej)
    coeff = coeff * ((-1) ** en)
    expected = vec.add(expected, vec.scale(a_omega(M, omega_p),
                                           coeff.shift(-len(omega_p.d))))
    kl = setup.hecke.kl_poly(omega_p.d, omega.d)
    ppm = setup.canonical.ppm(omega_p.d, omega.d)
    kl_expect = sum((LaurentPoly.monomial(2 * (ej - 1)) for ej in e), ZERO)
    ppm_expect = kl_expect.sub_minus_u()
    return ClosedFormCheck(
        exponents=e,
        l_d=len(omega.d),
        l_dprime=len(omega_p.d),
        closed_form_ok=A == expected,
        kl_ok=kl == kl_expect,
        ppm_ok=ppm == ppm_expect,
        length_gap_ok=len(omega.d) - len(omega_p.d) == 2 * en,
        kl=kl,
        ppm=ppm,
    )
