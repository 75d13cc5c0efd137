"""Symmetric group combinatorics.

Permutations are tuples in one-line notation, composed as functions:
``mul(u, v)(j) = u(v(j))``.  Simple reflections are 1-indexed, ``s(i, d)``
swapping i and i+1.

>>> reduced_word((1, 3, 4, 2))
[2, 3]
>>> length(longest(4))
6
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _perms
from typing import Sequence

Perm = tuple
Composition = tuple


def identity(d: int) -> Perm:
    return tuple(range(1, d + 1))


def s(i: int, d: int) -> Perm:
    w = list(range(1, d + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def mul(u: Perm, v: Perm) -> Perm:
    return tuple(u[j - 1] for j in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, j in enumerate(w, 1):
        out[j - 1] = i
    return tuple(out)


def validate(w: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation")
    return w


@lru_cache(maxsize=None)
def length(w: Perm) -> int:
    d = len(w)
    return sum(1 for i in range(d) for j in range(i + 1, d) if w[i] > w[j])


def right_descents(w: Perm) -> set[int]:
    """i with l(w s_i) < l(w)."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def left_descents(w: Perm) -> set[int]:
    """i with l(s_i w) < l(w)."""
    return right_descents(inverse(w))


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> list[int]:
    """Canonical reduced word: peel off the smallest left descent repeatedly."""
    word = []
    d = len(w)
    while True:
        winv = inverse(w)
        i = next((i for i in range(1, d) if winv[i - 1] > winv[i]), None)
        if i is None:
            return word
        word.append(i)
        w = mul(s(i, d), w)


def from_word(word: Sequence[int], d: int) -> Perm:
    w = identity(d)
    for i in word:
        w = mul(w, s(i, d))
    return w


def perm_basics(w: Perm) -> tuple[int, list[int], set[int]]:
    return length(w), list(reduced_word(w)), right_descents(w)


def longest(d: int) -> Perm:
    return tuple(range(d, 0, -1))


def all_perms(d: int) -> list[Perm]:
    return sorted(_perms(range(1, d + 1)), key=lambda w: (length(w), w))


def act(w: Perm, vec: Sequence) -> tuple:
    """Place permutation: (w . a)_j = a_{w^{-1}(j)}."""
    out = [None] * len(vec)
    for i, j in enumerate(w):
        out[j - 1] = vec[i]
    return tuple(out)


# ---- compositions and parabolic subgroups ----------------------------------

def blocks(lam: Composition) -> list[range]:
    """Consecutive position blocks (1-based) of a composition, zeros dropped."""
    out, start = [], 1
    for p in lam:
        if p:
            out.append(range(start, start + p))
        start += p
    return out


def parabolic_gens(lam: Composition) -> list[int]:
    return [i for b in blocks(lam) for i in b if i + 1 in b]


def block_of(lam: Composition) -> list[int]:
    """Map position (0-based) -> row index of the (weak) composition."""
    out = []
    for r, p in enumerate(lam):
        out += [r] * p
    return out


def in_parabolic(w: Perm, lam: Composition) -> bool:
    b = block_of(lam)
    return all(b[w[j] - 1] == b[j] for j in range(len(w)))


@lru_cache(maxsize=None)
def parabolic(lam: Composition) -> tuple[Perm, ...]:
    d = sum(lam)
    out = [identity(d)]
    for blk in blocks(lam):
        new = []
        for p in _perms(blk):
            for w in out:
                ww = list(w)
                for a, b in zip(blk, p):
                    ww[a - 1] = w[b - 1]
                new.append(tuple(ww))
        out = new
    return tuple(sorted(out, key=lambda w: (length(w), w)))


def longest_parabolic(lam: Composition) -> Perm:
    w = list(range(1, sum(lam) + 1))
    for blk in blocks(lam):
        w[blk[0] - 1: blk[-1]] = list(blk)[::-1]
    return tuple(w)


def _increasing_on_blocks(w: Perm, lam: Composition) -> bool:
    return all(w[i - 1] < w[i] for i in parabolic_gens(lam))


def min_coset_reps(lam: Composition, side: str = "left", mu: Composition | None = None,
                   within: Composition | None = None) -> list[Perm]:
    """Minimal length coset representatives, sorted by (length, one-line).

    side="left": {w : l(s w) > l(w) for s in S_lam}; "right": {w : l(w s) > l(w)};
    "double": both, with lam on the left and mu on the right.
    ``within`` restricts to a parabolic subgroup (e.g. the set ^dSigma_mu).
    """
    d = sum(lam)
    pool = parabolic(within) if within is not None else all_perms(d)
    out = []
    for w in pool:
        winv = inverse(w)
        if side in ("left", "double") and not _increasing_on_blocks(winv, lam):
            continue
        if side == "right" and not _increasing_on_blocks(w, lam):
            continue
        if side == "double" and not _increasing_on_blocks(w, mu):
            continue
        out.append(w)
    return sorted(out, key=lambda w: (length(w), w))


def factorize_coset(w: Perm, lam: Composition) -> tuple[Perm, Perm]:
    """w = u * eta with u in S_lam and eta a minimal left coset representative."""
    # eta^{-1} sorts w^{-1} increasingly within each block of lam
    winv = list(inverse(w))
    for blk in blocks(lam):
        vals = sorted(winv[i - 1] for i in blk)
        for i, v in zip(blk, vals):
            winv[i - 1] = v
    eta = inverse(tuple(winv))
    u = mul(w, inverse(eta))
    return u, eta


def factorize_double(w: Perm, lam: Composition, mu: Composition) -> tuple[Perm, Perm, Perm]:
    """w = u g v with u in S_lam, g in ^lam S ^mu, v in ^delta S_mu, lengths adding."""
    u, rest = factorize_coset(w, lam)
    a, b = factorize_coset(inverse(rest), mu)  # rest = b^-1 a^-1
    g, v = inverse(b), inverse(a)
    dl = delta(triple_to_matrix(lam, g, mu))
    v1, v2 = factorize_coset(v, dl)
    # g v1 g^-1 lies in S_lam
    u = mul(u, mul(mul(g, v1), inverse(g)))
    return u, g, v2


# ---- theta matrices ---------------------------------------------------------

def row_col_sums(A) -> tuple[Composition, Composition]:
    lam = tuple(sum(r) for r in A)
    mu = tuple(sum(A[i][j] for i in range(len(A))) for j in range(len(A[0])))
    return lam, mu


def delta(A) -> Composition:
    """Nonzero entries read column by column, top to bottom."""
    return tuple(A[i][j] for j in range(len(A[0])) for i in range(len(A)) if A[i][j])


def matrix_to_triple(A) -> tuple[Composition, Perm, Composition, Composition]:
    lam, mu = row_col_sums(A)
    d = sum(lam)
    nxt = [sum(lam[:i]) + 1 for i in range(len(lam))]  # next free slot in row block i
    g = [0] * d
    pos = 1
    for j in range(len(mu)):
        for i in range(len(lam)):
            for _ in range(A[i][j]):
                g[pos - 1] = nxt[i]
                nxt[i] += 1
                pos += 1
    return lam, tuple(g), mu, delta(A)


def triple_to_matrix(lam: Composition, g: Perm, mu: Composition) -> list[list[int]]:
    rb, cb = block_of(lam), block_of(mu)
    A = [[0] * len(mu) for _ in lam]
    for j in range(len(g)):
        A[rb[g[j] - 1]][cb[j]] += 1
    return A


def longest_elements(A) -> tuple[Perm, Perm, Perm]:
    lam, g, mu, dl = matrix_to_triple(A)
    w_lam = longest_parabolic(lam)
    w_prime = mul(longest_parabolic(dl), longest_parabolic(mu))
    return w_lam, w_prime, mul(mul(w_lam, g), w_prime)


def theta_matrices(N: int, d: int):
    """All N x N non-negative integer matrices with entry sum d."""
    def rec(cells, left):
        if cells == 1:
            yield (left,)
            return
        for v in range(left + 1):
            for rest in rec(cells - 1, left - v):
                yield (v,) + rest
    for flat in rec(N * N, d):
        yield [list(flat[i * N:(i + 1) * N]) for i in range(N)]


def compositions(N: int, d: int):
    if N == 1:
        yield (d,)
        return
    for v in range(d + 1):
        for rest in compositions(N - 1, d - v):
            yield (v,) + rest
