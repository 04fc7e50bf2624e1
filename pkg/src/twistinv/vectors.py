"""Finitely supported vectors with Laurent-polynomial coefficients.

A vector is a plain dict mapping a canonical word to a nonzero
LaurentPoly.  The helpers here keep that invariant.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import ZERO, LaurentPoly

Word = tuple[int, ...]
Vector = dict[Word, LaurentPoly]


def add_term(vec: Vector, w: Word, c: LaurentPoly) -> None:
    if not c:
        return
    cur = vec.get(w)
    if cur is None:
        vec[w] = c
        return
    new = cur + c
    if new:
        vec[w] = new
    else:
        del vec[w]


def add(a: Mapping[Word, LaurentPoly], b: Mapping[Word, LaurentPoly]) -> Vector:
    out = dict(a)
    for w, c in b.items():
        add_term(out, w, c)
    return out


def sub(a: Mapping[Word, LaurentPoly], b: Mapping[Word, LaurentPoly]) -> Vector:
    out = dict(a)
    for w, c in b.items():
        add_term(out, w, -c)
    return out


def scale(a: Mapping[Word, LaurentPoly], c: LaurentPoly | int) -> Vector:
    if isinstance(c, int):
        c = LaurentPoly.constant(c)
    if not c:
        return {}
    return {w: x * c for w, x in a.items()}


def combine(pairs: Iterable[tuple[LaurentPoly, Mapping[Word, LaurentPoly]]]) -> Vector:
    out: Vector = {}
    for c, vec in pairs:
        if c:
            for w, x in vec.items():
                add_term(out, w, x * c)
    return out


def shift(a: Mapping[Word, LaurentPoly], k: int) -> Vector:
    return {w: x.shift(k) for w, x in a.items()}


def mod2(a: Mapping[Word, LaurentPoly]) -> Vector:
    out = {}
    for w, x in a.items():
        r = x.mod2()
        if r:
            out[w] = r
    return out


def coeff(a: Mapping[Word, LaurentPoly], w: Word) -> LaurentPoly:
    return a.get(w, ZERO)


def sort_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


def basis(w: Word) -> Vector:
    return {w: LaurentPoly.constant(1)}
