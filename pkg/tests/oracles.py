"""Brute-force reference implementations that share no code with the library."""

import itertools
import math

import numpy as np


def reflection_matrices(matrix):
    """Float matrices of the geometric representation."""
    n = len(matrix)
    B = np.array([[-math.cos(math.pi / m) if m != "inf" else -1.0 for m in row]
                  for row in matrix])
    mats = []
    for s in range(n):
        S = np.eye(n)
        S[s, :] -= 2 * B[s, :]
        mats.append(S)
    return mats


def _key(M):
    return tuple(np.round(M, 6).ravel())


def element_of(mats, word):
    M = np.eye(len(mats))
    for s in word:
        M = M @ mats[s]
    return _key(M)


def group_by_length(matrix, L):
    """{key: length} for all elements of length <= L, by breadth-first words."""
    mats = reflection_matrices(matrix)
    seen = {_key(np.eye(len(mats))): 0}
    layer = [np.eye(len(mats))]
    for length in range(1, L + 1):
        nxt = []
        for M in layer:
            for S in mats:
                P = M @ S
                k = _key(P)
                if k not in seen:
                    seen[k] = length
                    nxt.append(P)
        if not nxt:
            break
        layer = nxt
    return seen


def reduced_words(matrix, word, lengths=None):
    """All reduced words for the element represented by ``word``."""
    mats = reflection_matrices(matrix)
    target = element_of(mats, word)
    if lengths is None:
        lengths = group_by_length(matrix, len(word))
    n = lengths[target]
    return [w for w in itertools.product(range(len(matrix)), repeat=n)
            if element_of(mats, w) == target]


def is_subword(small, big):
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


def bruhat_leq_subword(matrix, y, w):
    """y <= w iff a reduced word of w contains a subword representing y."""
    mats = reflection_matrices(matrix)
    ty = element_of(mats, y)
    for rw in reduced_words(matrix, w):
        for k in range(len(rw) + 1):
            for idx in itertools.combinations(range(len(rw)), k):
                if element_of(mats, [rw[i] for i in idx]) == ty:
                    return True
    return False
