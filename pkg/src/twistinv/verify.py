"""Verification suites.

Every suite returns a list of ``CheckResult``.  A failing check keeps the
first violated identity with its operands spelled out, plus a count of
all violations.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import vectors as vec
from .canonical import CanonicalBasis
from .classic import HeckeKL, Mod2Model
from .coxeter import INF, CoxeterSystem
from .cosets import (RatFunc, a_omega, chain_to_min, classify_rank2, constant_on_cosets,
                     coset_elements, coset_involutions, coset_r_poly, decompose,
                     double_cosets, is_in_MK, sigma_action, spherical_series,
                     subs_u_squared, zeta)
from .duality import diamond_system, inversion_check, r_duality_check
from .laurent import ONE, U, ZERO, DomainError, LaurentPoly
from .module import InvolutionModule
from .vectors import Vector, Word


@dataclass
class CheckResult:
    suite: str
    name: str
    checked: int = 0
    failures: int = 0
    first: str | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        s = f"{status} {self.suite}/{self.name}: {self.checked} checked"
        if not self.ok:
            s += f", {self.failures} failed; first: {self.first}"
        return s


class _Recorder:
    def __init__(self, suite: str, name: str):
        self.res = CheckResult(suite, name)
        self._t = time.perf_counter()

    def expect(self, cond: bool, describe: Callable[[], str]) -> None:
        self.res.checked += 1
        if not cond:
            self.res.failures += 1
            if self.res.first is None:
                self.res.first = describe()

    def guard(self, describe: Callable[[], str], fn: Callable[[], bool]) -> None:
        """Run fn; an internal arithmetic error counts as a failure."""
        try:
            ok = fn()
        except (ArithmeticError, AssertionError) as exc:
            self.expect(False, lambda: f"{describe()}: {type(exc).__name__}: {exc}")
            return
        self.expect(ok, describe)

    def done(self) -> CheckResult:
        self.res.elapsed = time.perf_counter() - self._t
        return self.res


@dataclass
class VerifyContext:
    """Shared caches for one system and length bound."""
    W: CoxeterSystem
    maxlen: int | None = None
    module: InvolutionModule = field(init=False)
    canonical: CanonicalBasis = field(init=False)
    hecke: HeckeKL = field(init=False)
    finite: bool = field(init=False)

    def __post_init__(self):
        self.module = InvolutionModule(self.W)
        self.canonical = CanonicalBasis(self.module)
        self.hecke = HeckeKL(self.W)
        self.finite = self.W.is_finite_parabolic(range(self.W.rank))
        top = len(self.W.longest_element()) if self.finite else None
        if self.maxlen is None:
            if top is None:
                raise DomainError("an infinite group needs an explicit length bound")
            self.maxlen = top
        elif top is not None:
            self.maxlen = min(self.maxlen, top)

    def twisted(self) -> list[Word]:
        return self.module.enumerate_twisted(self.maxlen)

    def pairs(self) -> Iterator[tuple[Word, Word]]:
        for w in self.twisted():
            for y in self.module.lower_interval(w):
                yield y, w

    def fmt(self, w: Word) -> str:
        return repr(self.W.fmt(w))

    def vfmt(self, m: Vector) -> str:
        if not m:
            return "0"
        return " + ".join(f"({m[w]})a[{self.W.fmt(w)}]" for w in sorted(m, key=vec.sort_key))


# module axioms ----------------------------------------------------------------

def _alt(s: int, t: int, n: int) -> list[int]:
    return [s if i % 2 == 0 else t for i in range(n)]


def suite_module_axioms(ctx: VerifyContext) -> list[CheckResult]:
    M, W = ctx.module, ctx.W
    quad = _Recorder("module-axioms", "quadratic relation")
    braid = _Recorder("module-axioms", "braid relations")
    U2 = U * U
    for w in ctx.twisted():
        a = vec.basis(w)
        for s in W.generators():
            ts = M.ts_action(s, a)
            # (T_s + 1)(T_s - u^2) a_w
            m = vec.sub(ts, vec.scale(a, U2))
            res = vec.add(M.ts_action(s, m), m)
            quad.expect(not res, lambda: f"(T_s+1)(T_s-u^2)a_w != 0 for s={W.labels[s]}, "
                                         f"w={ctx.fmt(w)}: {ctx.vfmt(res)}")
        for s, t in itertools.combinations(W.generators(), 2):
            m_st = W.m(s, t)
            if m_st == INF:
                continue
            lhs = M.apply_word(_alt(s, t, m_st), a)
            rhs = M.apply_word(_alt(t, s, m_st), a)
            braid.expect(lhs == rhs, lambda: f"braid ({W.labels[s]},{W.labels[t]}) on "
                                             f"a_w, w={ctx.fmt(w)}: {ctx.vfmt(lhs)} vs {ctx.vfmt(rhs)}")
    return [quad.done(), braid.done()]


# bar operator -----------------------------------------------------------------

def suite_bar(ctx: VerifyContext) -> list[CheckResult]:
    M, W = ctx.module, ctx.W
    inv = _Recorder("bar", "bar is an involution")
    semi = _Recorder("bar", "bar(T_s m) = T_s^-1 bar(m)")
    for w in ctx.twisted():
        a = vec.basis(w)
        b = M.bar_vector(a)
        bb = M.bar_vector(b)
        inv.expect(bb == a, lambda: f"bar(bar(a_w)) for w={ctx.fmt(w)} is {ctx.vfmt(bb)}")
        for s in W.generators():
            lhs = M.bar_vector(M.ts_action(s, a))
            rhs = M.bar_hecke_ts(s, b)
            semi.expect(lhs == rhs, lambda: f"s={W.labels[s]}, w={ctx.fmt(w)}: "
                                            f"{ctx.vfmt(lhs)} vs {ctx.vfmt(rhs)}")
    return [inv.done(), semi.done()]


# r-polynomials ----------------------------------------------------------------

def _in_vinv2(p: LaurentPoly) -> bool:
    return all(e <= 0 and e % 2 == 0 for e, _ in p.terms())


def suite_rpoly(ctx: VerifyContext) -> list[CheckResult]:
    M, W = ctx.module, ctx.W
    rec = _Recorder("rpoly", "bar extraction equals both descent recursions")
    tri = _Recorder("rpoly", "r_{y,w} != 0 implies y <= w")
    par = _Recorder("rpoly", "normalised r', r'' lie in Z[v^-2]")
    const = _Recorder("rpoly", "constant terms 1 and kappa(y)kappa(w)")
    orth = _Recorder("rpoly", "orthogonality")
    I = ctx.twisted()
    for w in I:
        for y in I:
            if len(y) > len(w):
                break
            r = M.r_poly(y, w)
            for choice in ("min", "max"):
                rec.guard(lambda: f"r_{{y,w}} y={ctx.fmt(y)} w={ctx.fmt(w)} choice={choice}: "
                                  f"bar gives {r}, recursion gives "
                                  f"{M.r_poly_recursive(y, w, choice)}",
                          lambda: M.r_poly_recursive(y, w, choice) == r)
            leq = W.bruhat_leq(y, w)
            tri.expect(leq or not r, lambda: f"r={r} at y={ctx.fmt(y)} not below w={ctx.fmt(w)}")
            if not leq:
                continue
            r1 = r.shift(len(y) - len(w))
            r2 = r.bar().shift(len(y) - len(w))
            par.expect(_in_vinv2(r1) and _in_vinv2(r2),
                       lambda: f"y={ctx.fmt(y)} w={ctx.fmt(w)}: r'={r1}, r''={r2}")
            kk = M.kappa(y) * M.kappa(w)
            const.expect(r1.coeff(0) == 1 and r2.coeff(0) == kk,
                         lambda: f"y={ctx.fmt(y)} w={ctx.fmt(w)}: r'={r1}, r''={r2}, "
                                 f"kappa product {kk}")
    for z in I:
        below = M.lower_interval(z)
        for x in below:
            total = ZERO
            for y in below:
                if W.bruhat_leq(x, y):
                    total = total + M.r_poly(x, y).bar() * M.r_poly(y, z)
            orth.expect(total == (1 if x == z else 0),
                        lambda: f"sum bar(r_xy) r_yz for x={ctx.fmt(x)} z={ctx.fmt(z)} is {total}")
    return [rec.done(), tri.done(), par.done(), const.done(), orth.done()]


# canonical basis --------------------------------------------------------------

def permuted_system(W: CoxeterSystem, perm: list[int]) -> tuple[CoxeterSystem, Callable[[Word], Word]]:
    """Same group with generator i of the new system being generator perm[i] of W."""
    inv = {p: i for i, p in enumerate(perm)}
    mat = [[W.matrix[perm[i]][perm[j]] for j in range(W.rank)] for i in range(W.rank)]
    mat = [["inf" if m == INF else int(m) for m in row] for row in mat]
    star = [inv[W.star[perm[i]]] for i in range(W.rank)]
    W2 = CoxeterSystem(mat, star, [W.labels[p] for p in perm], W.cap)
    return W2, lambda w: W2.canonical(inv[s] for s in w)


def suite_canonical(ctx: VerifyContext) -> list[CheckResult]:
    M, W, C = ctx.module, ctx.W, ctx.canonical
    fixed = _Recorder("canonical", "bar(A_w) = A_w")
    deg = _Recorder("canonical", "degree bound: pi_{y,w} in v^-1 Z[v^-1] for y < w")
    ct = _Recorder("canonical", "P-pm constant term 1")
    det = _Recorder("canonical", "same table for every r source and generator order")
    mob = _Recorder("canonical", "Moebius sums")
    I = ctx.twisted()
    others = [CanonicalBasis(M, "recursive-min"), CanonicalBasis(M, "recursive-max")]
    perm = list(reversed(range(W.rank)))
    W2, image = permuted_system(W, perm)
    C2 = CanonicalBasis(InvolutionModule(W2))
    for w in I:
        A = C.a_canonical(w)
        bA = M.bar_vector(A)
        fixed.expect(bA == A, lambda: f"w={ctx.fmt(w)}: A_w={ctx.vfmt(A)}, bar={ctx.vfmt(bA)}")
        w2 = image(w)
        for y in M.lower_interval(w):
            p = C.pi(y, w)
            if y != w:
                deg.expect(p.is_zero() or p.max_exp < 0,
                           lambda: f"pi_{{y,w}}={p} at y={ctx.fmt(y)} w={ctx.fmt(w)}")
            ppm = C.ppm(y, w)
            ct.expect(ppm.coeff(0) == 1, lambda: f"P-pm={ppm} at y={ctx.fmt(y)} w={ctx.fmt(w)}")
            alts = [o.pi(y, w) for o in others] + [C2.pi(image(y), w2)]
            det.expect(all(a == p for a in alts),
                       lambda: f"y={ctx.fmt(y)} w={ctx.fmt(w)}: {p} vs {[str(a) for a in alts]}")
        for x in M.lower_interval(w):
            total = sum(M.kappa(x) * M.kappa(y) for y in M.lower_interval(w)
                        if W.bruhat_leq(x, y))
            mob.expect(total == (1 if x == w else 0),
                       lambda: f"sum kappa(x)kappa(y) for x={ctx.fmt(x)} z={ctx.fmt(w)} is {total}")
    return [fixed.done(), deg.done(), ct.done(), det.done(), mob.done()]


# the c_s action ---------------------------------------------------------------

def suite_sixthree(ctx: VerifyContext) -> list[CheckResult]:
    C, W = ctx.canonical, ctx.W
    rec = _Recorder("sixthree", "c_s A_w matches the mu-formula")
    for w in ctx.twisted():
        for s in W.generators():
            def show(w=w, s=s):
                got = C.cs_on_A(s, w)
                want = C.cs_formula(s, w)
                return (f"s={W.labels[s]} w={ctx.fmt(w)}: expansion "
                        f"{ {W.fmt(z): str(c) for z, c in got.items()} } vs formula "
                        f"{ {W.fmt(z): str(c) for z, c in want.items()} }")
            rec.guard(show, lambda: C.cs_on_A(s, w) == C.cs_formula(s, w))
    return [rec.done()]


# cosets and spherical identities ----------------------------------------------

def _finite_subsets(W: CoxeterSystem) -> list[tuple[int, ...]]:
    out = []
    for k in range(W.rank + 1):
        for K in itertools.combinations(W.generators(), k):
            if W.is_finite_parabolic(K):
                out.append(K)
    return out


def suite_spherical(ctx: VerifyContext) -> list[CheckResult]:
    M, W, C = ctx.module, ctx.W, ctx.canonical
    names = ["Kilmoyer decomposition additive", "bijection count", "chains to b",
             "rank-two case lists", "sum over W_K of T_x on a_b", "zeta sums over cosets",
             "A_d lies in M^K", "A_{w_K} for star-stable K", "coset r triangularity",
             "coset r orthogonality", "finite-group series identity"]
    R = {n: _Recorder("spherical", n) for n in names}
    L = ctx.maxlen
    for K in _finite_subsets(W):
        Kname = "{" + ",".join(W.labels[s] for s in K) + "}"
        cosets = double_cosets(M, K, L)
        nK = len(W.parabolic_elements(K))
        for c in cosets:
            cname = f"K={Kname} b={ctx.fmt(c.b)}"
            if ctx.finite:
                for x in coset_elements(W, c):
                    R[names[0]].guard(lambda: f"{cname} x={ctx.fmt(x)}",
                                      lambda: bool(decompose(W, x, c)))
            try:
                invs = coset_involutions(M, c)
            except AssertionError as exc:
                R[names[1]].expect(False, lambda: f"{cname}: {exc}")
                continue
            nJ = len(W.parabolic_elements(c.J))
            sub_tw = 1
            if c.Jprime:
                sub, _ = W.subsystem(c.Jprime, c.tau_map())
                subM = InvolutionModule(sub)
                sub_tw = sum(1 for x in sub.parabolic_elements(range(sub.rank))
                             if subM.is_twisted(x))
            R[names[1]].expect(nK // nJ * sub_tw == len(invs),
                               lambda: f"{cname}: {nK}/{nJ} * {sub_tw} != {len(invs)}")
            for x in invs:
                def chain_ok(x=x):
                    ch = chain_to_min(M, x, c)
                    cur = x
                    for s, nxt in ch:
                        if M.sdot(s, cur) != nxt or len(nxt) >= len(cur) or nxt not in invs:
                            return False
                        cur = nxt
                    return cur == c.b
                R[names[2]].guard(lambda: f"{cname} x={ctx.fmt(x)}", chain_ok)
            if len(K) == 2 and W.m(*K) != INF:
                def rank2_ok():
                    _, xi, xi2 = classify_rank2(M, c)
                    return set(xi) | set(xi2) == set(invs)
                R[names[3]].guard(lambda: f"{cname}: {classify_rank2(M, c)}", rank2_ok)
            ser = spherical_series(W, c.Jprime, c.tau_map())
            lhs = sigma_action(M, K, vec.basis(c.b))
            rhs = vec.scale(a_omega(M, c), ser.Pstar)
            R[names[4]].expect(lhs == rhs, lambda: f"{cname}: {ctx.vfmt(lhs)} vs {ctx.vfmt(rhs)}")
            z_lhs = zeta(M, a_omega(M, c))
            z_rhs = (RatFunc(subs_u_squared(W.poincare_poly(K)))
                     * RatFunc(subs_u_squared(W.poincare_poly(c.J))).inverse()
                     * zeta(M, vec.basis(c.b)) * ser.R)
            R[names[5]].expect(z_lhs == z_rhs, lambda: f"{cname}: {z_lhs} vs {z_rhs}")
            A = C.a_canonical(c.d)
            R[names[6]].expect(is_in_MK(M, A, K) and constant_on_cosets(M, A, K),
                               lambda: f"{cname}: A_d={ctx.vfmt(A)}")
        if all(W.star[s] in K for s in K):
            wK = W.longest_element(K)
            A = C.a_canonical(wK)
            want = {x: LaurentPoly.monomial(-len(wK)) for x in W.parabolic_elements(K)
                    if M.is_twisted(x)}
            R[names[7]].expect(A == want, lambda: f"K={Kname}: A={ctx.vfmt(A)}")
        for c in cosets:
            for c2 in cosets:
                r = coset_r_poly(M, c2, c)
                ok = (r == 1) if c2 == c else (not r or W.bruhat_leq(c2.d, c.d))
                R[names[8]].expect(ok, lambda: f"K={Kname} r({ctx.fmt(c2.d)},{ctx.fmt(c.d)})={r}")
            for c3 in cosets:
                tot = ZERO
                for c2 in cosets:
                    tot = tot + coset_r_poly(M, c3, c2).bar() * coset_r_poly(M, c2, c)
                R[names[9]].expect(tot == (1 if c3 == c else 0),
                                   lambda: f"K={Kname} d'={ctx.fmt(c3.d)} d={ctx.fmt(c.d)}: {tot}")
    if ctx.finite:
        ser = spherical_series(W, W.generators())
        lhs = ser.R * RatFunc(ser.Pstar)
        rhs = RatFunc(subs_u_squared(ser.P))
        R[names[10]].expect(lhs == rhs, lambda: f"{lhs} vs {rhs}")
    return [R[n].done() for n in names]


# inversion formula ------------------------------------------------------------

def suite_inversion(ctx: VerifyContext) -> list[CheckResult]:
    inv = _Recorder("inversion", "inversion sums equal delta")
    rd = _Recorder("inversion", "r duality")
    if not ctx.finite:
        return [inv.done(), rd.done()]
    dctx = diamond_system(ctx.module, ctx.canonical)
    W = ctx.W
    bad = inversion_check(dctx)
    n_pairs = sum(1 for _ in ctx.module.enumerate_twisted(len(dctx.w0))
                  for _ in ctx.module.lower_interval(_))
    inv.res.checked = n_pairs
    inv.res.failures = len(bad)
    if bad:
        y, w, val = bad[0]
        inv.res.first = f"y={W.fmt(y)!r} w={W.fmt(w)!r}: sum={val}"
    bad = r_duality_check(dctx)
    rd.res.checked = n_pairs
    rd.res.failures = len(bad)
    if bad:
        y, w, lhs, rhs = bad[0]
        rd.res.first = f"y={W.fmt(y)!r} w={W.fmt(w)!r}: {lhs} vs {rhs}"
    return [inv.done(), rd.done()]


# mod 2 ------------------------------------------------------------------------

def suite_mod2(ctx: VerifyContext) -> list[CheckResult]:
    M, W, C, H = ctx.module, ctx.W, ctx.canonical, ctx.hecke
    cong = _Recorder("mod2", "P-pm congruent to P mod 2")
    split = _Recorder("mod2", "P+ and P- are integral")
    act = _Recorder("mod2", "T_s acts as pi(t_s xi t_s*) mod 2")
    comp = _Recorder("mod2", "product action is compatible")
    barB = _Recorder("mod2", "B agrees with bar mod 2")
    rho = _Recorder("mod2", "rho by left, right and bar routes")
    for y, w in ctx.pairs():
        p, q = C.ppm(y, w), H.kl_poly(y, w)
        cong.expect(p.mod2() == q.mod2(), lambda: f"y={ctx.fmt(y)} w={ctx.fmt(w)}: P-pm={p}, P={q}")
        split.guard(lambda: f"y={ctx.fmt(y)} w={ctx.fmt(w)}", lambda: bool(C.split_pm(y, w, q)))
    model = Mod2Model(M, H)
    for w in ctx.twisted():
        xi = vec.basis(w)
        for s in W.generators():
            got, want = model.ts_odot(s, xi), vec.mod2(M.ts_action(s, xi))
            act.expect(got == want, lambda: f"s={W.labels[s]} w={ctx.fmt(w)}: "
                                            f"{ctx.vfmt(got)} vs {ctx.vfmt(want)}")
            for t in W.generators():
                st, sign = W.mul_gen((t,), s, "left")
                h = {st: ONE}
                if sign < 0:
                    continue
                lhs = model.odot(h, xi)
                rhs = model.odot({(s,): ONE}, model.odot({(t,): ONE}, xi))
                comp.expect(lhs == rhs, lambda: f"s={W.labels[s]} t={W.labels[t]} "
                                                f"w={ctx.fmt(w)}: {ctx.vfmt(lhs)} vs {ctx.vfmt(rhs)}")
        got, want = model.bar_B(xi), vec.mod2(M.bar_basis(w))
        barB.expect(got == want, lambda: f"w={ctx.fmt(w)}: {ctx.vfmt(got)} vs {ctx.vfmt(want)}")
    elems = W.enumerate_up_to(min(ctx.maxlen, 6))
    for w in elems:
        for x in elems:
            if len(x) > len(w):
                break
            a = H.rho_poly(x, w)
            rho.expect(a == H.rho_poly_right(x, w) == H.rho_from_bar(x, w),
                       lambda: f"x={ctx.fmt(x)} w={ctx.fmt(w)}: {a}, "
                               f"{H.rho_poly_right(x, w)}, {H.rho_from_bar(x, w)}")
    return [cong.done(), split.done(), act.done(), comp.done(), barB.done(), rho.done()]


SUITES: dict[str, Callable[[VerifyContext], list[CheckResult]]] = {
    "module-axioms": suite_module_axioms,
    "bar": suite_bar,
    "rpoly": suite_rpoly,
    "canonical": suite_canonical,
    "spherical": suite_spherical,
    "sixthree": suite_sixthree,
    "inversion": suite_inversion,
    "mod2": suite_mod2,
}


def run_suite(name: str, ctx: VerifyContext) -> list[CheckResult]:
    if name == "all":
        return [r for fn in SUITES.values() for r in fn(ctx)]
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}, all") from None
    return fn(ctx)


@dataclass
class SplitRow:
    y: Word
    w: Word
    ppm: LaurentPoly
    kl: LaurentPoly
    plus: LaurentPoly
    minus: LaurentPoly
    nonnegative: bool


def split_table(ctx: VerifyContext) -> list[SplitRow]:
    """P+- = (P +- P-pm)/2 for every pair y <= w; raises if a half is not integral."""
    rows = []
    for y, w in ctx.pairs():
        kl = ctx.hecke.kl_poly(y, w)
        plus, minus, ok = ctx.canonical.split_pm(y, w, kl)
        rows.append(SplitRow(y, w, ctx.canonical.ppm(y, w), kl, plus, minus, ok))
    return rows
