"""Coxeter groups with a diagram involution, exact and memoized.

Elements are tuples of generator indices holding the ShortLex-minimal
reduced word (generators ordered by index).  Canonical forms are found
by the numbers game on the contragredient representation: the vector
g = w(rho) has g_t < 0 exactly for the left descents t of w, so the
normal form is obtained by repeatedly peeling the smallest one.

Descents are decided independently by acting on simple roots in the
geometric representation, with exact coefficients in Z[2cos(pi/M)].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .laurent import DomainError, LaurentPoly
from .ring import CoeffRing

INF = math.inf
Word = tuple[int, ...]
LEFT = "left"
RIGHT = "right"


class ResourceError(RuntimeError):
    """An enumeration hit its element-count cap."""


def _parse_entry(m) -> float | int:
    if isinstance(m, str):
        if m.lower() in ("inf", "infinity", "oo"):
            return INF
        m = int(m)
    if m == INF:
        return INF
    if isinstance(m, float):
        if not m.is_integer():
            raise ValueError(f"bad Coxeter matrix entry {m}")
        m = int(m)
    return int(m)


class CoxeterSystem:
    """A Coxeter system (W, S) together with an involutive diagram automorphism."""

    def __init__(self, matrix: Sequence[Sequence], star: Sequence[int] | None = None,
                 labels: Sequence[str] | None = None, cap: int = 10**6):
        mat = tuple(tuple(_parse_entry(m) for m in row) for row in matrix)
        n = len(mat)
        if n == 0:
            raise ValueError("rank must be positive")
        for i, row in enumerate(mat):
            if len(row) != n:
                raise ValueError(f"matrix row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if mat[i][i] != 1:
                raise ValueError(f"diagonal entry m[{i}][{i}] = {mat[i][i]} is not 1")
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
                if i != j and mat[i][j] < 2:
                    raise ValueError(f"off-diagonal entry m[{i}][{j}] = {mat[i][j]} is < 2")
        if star is None:
            star = tuple(range(n))
        star = tuple(int(s) for s in star)
        if sorted(star) != list(range(n)):
            raise ValueError(f"star {star} is not a permutation of the generators")
        for i in range(n):
            if star[star[i]] != i:
                raise ValueError(f"star {star} is not an involution")
            for j in range(n):
                if mat[star[i]][star[j]] != mat[i][j]:
                    raise ValueError(f"star does not preserve the matrix at ({i},{j})")
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be distinct, one per generator")
        self.rank = n
        self.matrix = mat
        self.star = star
        self.labels = labels
        self.cap = int(cap)
        self.ring = CoeffRing(m for row in mat for m in row if m != 1)
        r = self.ring
        # cart[s][t] = 2cos(pi/m_st) off the diagonal
        self._cart = tuple(
            tuple(r.from_int(-2) if s == t else r.two_cos(mat[s][t]) for t in range(n))
            for s in range(n)
        )
        one = r.one
        self._rho: tuple = tuple(one for _ in range(n))
        self._canon: dict[Word, Word] = {}
        self._vec: dict[Word, tuple] = {(): self._rho}
        self._inv: dict[Word, Word] = {(): ()}
        self._star_cache: dict[Word, Word] = {(): ()}
        self._root: dict[tuple[Word, int], tuple] = {}
        self._descent: dict[tuple[Word, int, str], bool] = {}
        self._mul: dict[tuple[Word, int, str], tuple[Word, int]] = {}
        self._bruhat: dict[tuple[Word, Word], bool] = {}
        self._lower: dict[Word, frozenset] = {(): frozenset([()])}
        self._longest: dict[frozenset, Word] = {}

    # descriptors --------------------------------------------------------

    def with_star(self, star: Sequence[int]) -> "CoxeterSystem":
        return CoxeterSystem(self.matrix, star, self.labels, self.cap)

    def generators(self) -> range:
        return range(self.rank)

    def m(self, s: int, t: int):
        return self.matrix[s][t]

    def __repr__(self):
        return f"CoxeterSystem(labels={self.labels}, matrix={self.matrix}, star={self.star})"

    # numbers game -------------------------------------------------------

    def _act(self, s: int, g: tuple) -> tuple:
        """s acting on a contragredient vector."""
        r = self.ring
        gs = g[s]
        out = []
        cs = self._cart[s]
        for t in range(self.rank):
            if t == s:
                out.append(r.neg(gs))
            elif r.is_zero(cs[t]):
                out.append(g[t])
            else:
                out.append(r.add(g[t], r.mul(cs[t], gs)))
        return tuple(out)

    def _is_neg(self, x) -> bool:
        return self.ring.sign(x) < 0

    def _peel(self, g: tuple) -> Word:
        word = []
        while True:
            for t in range(self.rank):
                if self._is_neg(g[t]):
                    break
            else:
                return tuple(word)
            word.append(t)
            g = self._act(t, g)
            if len(word) > self.cap:
                raise ResourceError("normal-form computation exceeded the cap")

    def canonical(self, word: Iterable[int]) -> Word:
        """ShortLex normal form of the element represented by any word."""
        word = tuple(word)
        hit = self._canon.get(word)
        if hit is not None:
            return hit
        g = self._rho
        for s in reversed(word):
            g = self._act(s, g)
        nf = self._peel(g)
        # intern
        nf = self._canon.setdefault(nf, nf)
        self._canon[word] = nf
        self._vec.setdefault(nf, g)
        return nf

    def parse(self, text: str) -> Word:
        """Read a word written as labels joined by '.' (or single-char labels run together)."""
        text = text.strip()
        if text == "" or (text in ("1", "e") and text not in self.labels):
            return ()
        index = {lab: i for i, lab in enumerate(self.labels)}
        if "." in text:
            parts = text.split(".")
        elif all(len(lab) == 1 for lab in self.labels):
            parts = list(text)
        else:
            parts = [text]
        try:
            return self.canonical(index[p] for p in parts)
        except KeyError as exc:
            raise DomainError(f"unknown generator {exc.args[0]!r} in {text!r}") from None

    def fmt(self, w: Word) -> str:
        return ".".join(self.labels[i] for i in w)

    # group operations ---------------------------------------------------

    def multiply(self, *words: Word) -> Word:
        return self.canonical(itertools.chain.from_iterable(words))

    def inverse(self, w: Word) -> Word:
        hit = self._inv.get(w)
        if hit is None:
            hit = self.canonical(reversed(w))
            self._inv[w] = hit
        return hit

    def star_apply(self, w: Word) -> Word:
        hit = self._star_cache.get(w)
        if hit is None:
            hit = self.canonical(self.star[i] for i in w)
            self._star_cache[w] = hit
        return hit

    def length(self, w: Word) -> int:
        return len(w)

    def sign(self, w: Word) -> int:
        return -1 if len(w) % 2 else 1

    # root action and descents -------------------------------------------

    def _reflect_root(self, s: int, a: tuple) -> tuple:
        """s acting on a root given in simple-root coordinates."""
        r = self.ring
        acc = r.neg(a[s])
        cs = self._cart[s]
        for t in range(self.rank):
            if t != s and not r.is_zero(cs[t]) and not r.is_zero(a[t]):
                acc = r.add(acc, r.mul(cs[t], a[t]))
        return a[:s] + (acc,) + a[s + 1:]

    def root_image(self, w: Word, s: int) -> tuple:
        """Coordinates of w(alpha_s) for canonical w."""
        key = (w, s)
        hit = self._root.get(key)
        if hit is not None:
            return hit
        if not w:
            r = self.ring
            res = tuple(r.one if t == s else r.zero for t in range(self.rank))
        else:
            res = self._reflect_root(w[0], self.root_image(w[1:], s))
        self._root[key] = res
        return res

    def _root_sign(self, root: tuple) -> int:
        signs = {self.ring.sign(x) for x in root} - {0}
        if len(signs) != 1:
            raise AssertionError(f"positivity dichotomy violated for root {root}")
        return signs.pop()

    def descent(self, w: Word, s: int, side: str = LEFT) -> bool:
        """True iff l(sw) < l(w) (side=left) or l(ws) < l(w) (side=right)."""
        key = (w, s, side)
        hit = self._descent.get(key)
        if hit is not None:
            return hit
        if side == RIGHT:
            res = self._root_sign(self.root_image(w, s)) < 0
        elif side == LEFT:
            res = self._root_sign(self.root_image(self.inverse(w), s)) < 0
        else:
            raise ValueError(f"bad side {side!r}")
        self._descent[key] = res
        return res

    def left_descents(self, w: Word) -> list[int]:
        return [s for s in range(self.rank) if self.descent(w, s, LEFT)]

    def right_descents(self, w: Word) -> list[int]:
        return [s for s in range(self.rank) if self.descent(w, s, RIGHT)]

    def mul_gen(self, w: Word, s: int, side: str = LEFT) -> tuple[Word, int]:
        """(canonical sw or ws, +1 if the length rose else -1)."""
        key = (w, s, side)
        hit = self._mul.get(key)
        if hit is not None:
            return hit
        if side == LEFT:
            res = self.canonical((s,) + w)
        elif side == RIGHT:
            res = self.canonical(w + (s,))
        else:
            raise ValueError(f"bad side {side!r}")
        sign = -1 if self.descent(w, s, side) else 1
        if len(res) != len(w) + sign:
            raise AssertionError(f"exchange condition failed for {w}, {s}, {side}")
        out = (res, sign)
        self._mul[key] = out
        return out

    def lmul(self, s: int, w: Word) -> Word:
        return self.mul_gen(w, s, LEFT)[0]

    def rmul(self, w: Word, s: int) -> Word:
        return self.mul_gen(w, s, RIGHT)[0]

    # Bruhat order -------------------------------------------------------

    def bruhat_leq(self, y: Word, w: Word) -> bool:
        """Lifting recursion: for s a left descent of w, y <= w iff y <= sw or sy <= sw."""
        if len(y) > len(w):
            return False
        if len(y) == len(w):
            return y == w
        if not y:
            return True
        key = (y, w)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        # the first letter of a ShortLex word is the smallest left descent
        s, sw = w[0], w[1:]
        res = self.bruhat_leq(y, sw) or self.bruhat_leq(self.lmul(s, y), sw)
        self._bruhat[key] = res
        return res

    def lower_interval(self, w: Word) -> frozenset:
        """{y : y <= w}, built as [1,sw] union s[1,sw] for a left descent s."""
        hit = self._lower.get(w)
        if hit is not None:
            return hit
        s, sw = w[0], w[1:]
        below = self.lower_interval(sw)
        res = frozenset(below | {self.lmul(s, y) for y in below})
        self._lower[w] = res
        return res

    # enumeration --------------------------------------------------------

    def enumerate_up_to(self, L: int, gens: Iterable[int] | None = None) -> list[Word]:
        """All elements of W (or of W_K for gens=K) of length <= L, grouped by length."""
        gens = sorted(set(range(self.rank) if gens is None else gens))
        out: list[Word] = [()]
        layer = [()]
        for _ in range(L):
            nxt = set()
            for w in layer:
                for s in gens:
                    x, sign = self.mul_gen(w, s, RIGHT)
                    if sign > 0:
                        nxt.add(x)
            if not nxt:
                break
            layer = sorted(nxt)
            out.extend(layer)
            if len(out) > self.cap:
                raise ResourceError(f"more than {self.cap} elements up to length {L}")
        return out

    def is_finite_parabolic(self, K: Iterable[int]) -> bool:
        """W_K is finite iff its cosine form is positive definite."""
        K = sorted(set(K))
        if not K:
            return True
        if any(self.matrix[s][t] == INF for s in K for t in K):
            return False
        G = np.array([[-math.cos(math.pi / self.matrix[s][t]) for t in K] for s in K])
        return bool(np.linalg.eigvalsh(G).min() > 1e-9)

    def parabolic_elements(self, K: Iterable[int]) -> list[Word]:
        K = frozenset(K)
        if not self.is_finite_parabolic(K):
            raise DomainError(f"W_K is infinite for K={sorted(K)}")
        out: list[Word] = [()]
        layer = [()]
        while layer:
            nxt = set()
            for w in layer:
                for s in K:
                    x, sign = self.mul_gen(w, s, RIGHT)
                    if sign > 0:
                        nxt.add(x)
            layer = sorted(nxt)
            out.extend(layer)
            if len(out) > self.cap:
                raise DomainError(f"W_K exceeded the cap for K={sorted(K)}")
        return out

    def longest_element(self, K: Iterable[int] | None = None) -> Word:
        K = frozenset(range(self.rank) if K is None else K)
        hit = self._longest.get(K)
        if hit is not None:
            return hit
        elems = self.parabolic_elements(K)
        top = max(len(w) for w in elems)
        tops = [w for w in elems if len(w) == top]
        if len(tops) != 1:
            raise AssertionError(f"W_K has {len(tops)} elements of maximal length")
        w0 = tops[0]
        for s in K:
            assert self.descent(w0, s, LEFT) and self.descent(w0, s, RIGHT)
        self._longest[K] = w0
        return w0

    def poincare_poly(self, K: Iterable[int] | None = None) -> LaurentPoly:
        """Sum of u^l(x) over W_K, as a polynomial in u stored in v."""
        K = range(self.rank) if K is None else K
        counts: dict[int, int] = {}
        for w in self.parabolic_elements(K):
            counts[2 * len(w)] = counts.get(2 * len(w), 0) + 1
        return LaurentPoly.from_dict(counts)

    def exponents(self, K: Iterable[int] | None = None) -> list[int]:
        """Exponents of W_K from the factorization of its Poincare polynomial."""
        K = sorted(set(range(self.rank) if K is None else K))
        P = self.poincare_poly(K)
        exps = []
        while P.max_exp > 0:
            for e in range(P.u_degree(), 0, -1):
                factor = LaurentPoly.from_u([1] * (e + 1))
                try:
                    P = P.divmod_exact(factor)
                except ArithmeticError:
                    continue
                exps.append(e)
                break
            else:
                raise ArithmeticError("Poincare polynomial does not factor into [e+1]_u")
        if P != 1:
            raise ArithmeticError(f"left over factor {P}")
        if len(exps) != len(K):
            raise ArithmeticError(f"found {len(exps)} exponents for rank {len(K)}")
        return sorted(exps)

    # parabolic subsystems ----------------------------------------------

    def subsystem(self, K: Sequence[int], star: dict[int, int] | None = None
                  ) -> tuple["CoxeterSystem", dict[int, int]]:
        """W_K as a Coxeter system on its own; returns (system, index map K -> local)."""
        K = sorted(K)
        local = {s: i for i, s in enumerate(K)}
        mat = [[self.matrix[s][t] for t in K] for s in K]
        if star is None:
            star = {s: self.star[s] for s in K}
        st = [local[star[s]] for s in K]
        sub = CoxeterSystem(mat, st, [self.labels[s] for s in K], self.cap)
        return sub, local
