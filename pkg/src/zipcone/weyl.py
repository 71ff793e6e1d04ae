"""Weyl group elements as lattice automorphisms.

Elements are canonically identified by their matrices on X*(T); the stored
word is only a carrier for the length.  Enumeration is breadth-first and
returns a deterministic order (length, then lex of the matrix).
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from . import linalg
from .errors import CapExceeded, InternalError
from .rootdata import FrobeniusDatum, RootDatum

DEFAULT_ENUM_CAP = 5_000_000


def enum_cap() -> int:
    return int(os.environ.get("ZIPCONE_ENUM_CAP", DEFAULT_ENUM_CAP))


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple
    word: tuple
    length: int

    def act(self, lam):
        return linalg.mat_vec(self.matrix, lam)

    def key(self):
        return (self.length, self.matrix)

    def to_json(self) -> dict:
        return {
            "matrix": [list(row) for row in self.matrix],
            "word": list(self.word),
            "length": self.length,
        }


def identity_element(rd: RootDatum) -> WeylElement:
    return WeylElement(linalg.mat_identity(rd.n), (), 0)


def simple_reflection(rd: RootDatum, i: int) -> WeylElement:
    return WeylElement(rd.reflection_matrix(i), (i,), 1)


def reflect(rd: RootDatum, alpha_index: int, lam):
    """s_alpha(lam) = lam - <lam, alpha^vee> alpha."""
    return linalg.mat_vec(rd.reflection_matrix(alpha_index), lam)


def act(w: WeylElement, lam):
    return w.act(lam)


def length(w: WeylElement) -> int:
    return w.length


def compose(rd: RootDatum, w1: WeylElement, w2: WeylElement) -> WeylElement:
    """w1 o w2 (apply w2 first); the stored word is the concatenation, the
    length is recomputed by inversion counting so it stays honest."""
    mat = linalg.mat_mul(w1.matrix, w2.matrix)
    word = w1.word + w2.word
    return WeylElement(mat, word, inversion_length(rd, mat))


def inversion_length(rd: RootDatum, matrix) -> int:
    """ell(w) = #{beta in Phi+ : w(beta) in Phi-}."""
    count = 0
    for root in rd.positive_roots():
        if not rd.is_positive_root_vector(linalg.mat_vec(matrix, root)):
            count += 1
    return count


def longest_element(rd: RootDatum, indices) -> WeylElement:
    """w_{0,K} by the antidominance walk from 2*rho_K."""
    idx = tuple(sorted(indices))
    if not idx:
        return identity_element(rd)
    v = tuple(0 for _ in range(rd.n))
    for root in rd.positive_roots(idx):
        v = linalg.vec_add(v, root)
    word = []
    mat = linalg.mat_identity(rd.n)
    steps = 0
    limit = len(rd.positive_roots(idx)) + 1
    while True:
        k = next((i for i in idx if linalg.dot(v, rd.simple_coroots[i]) > 0), None)
        if k is None:
            break
        v = reflect(rd, k, v)
        word.insert(0, k)
        mat = linalg.mat_mul(rd.reflection_matrix(k), mat)
        steps += 1
        if steps > limit:
            raise InternalError("antidominance walk failed to terminate")
    return WeylElement(mat, tuple(word), len(word))


def enumerate_parabolic(rd: RootDatum, indices, cap: int | None = None):
    """All of W_K by BFS on right multiplication, deduped by matrix.

    Deterministic order: (length, lex of matrix rows).
    """
    idx = tuple(sorted(indices))
    cap = enum_cap() if cap is None else cap
    ident = identity_element(rd)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for w in frontier:
            for k in idx:
                if not rd.is_positive_root_vector(
                    linalg.mat_vec(w.matrix, rd.simple_roots[k])
                ):
                    continue  # ell(w s_k) = ell(w) - 1, already seen
                mat = linalg.mat_mul(w.matrix, rd.reflection_matrix(k))
                if mat in seen:
                    continue
                nw = WeylElement(mat, w.word + (k,), w.length + 1)
                seen[mat] = nw
                new_frontier.append(nw)
                if len(seen) > cap:
                    raise CapExceeded(
                        f"W_K enumeration exceeded cap {cap}", partial_count=len(seen)
                    )
        frontier = new_frontier
    return sorted(seen.values(), key=WeylElement.key)


def sigma_fixed(elements, frob: FrobeniusDatum):
    """Elements commuting with sigma as lattice maps (W_{L_0}(F_q))."""
    out = []
    for w in elements:
        if linalg.mat_eq(
            linalg.mat_mul(frob.sigma, w.matrix), linalg.mat_mul(w.matrix, frob.sigma)
        ):
            out.append(w)
    return out


def opposition_involution(rd: RootDatum, indices):
    """The permutation tau of K with -w_{0,K}(alpha) = tau(alpha)."""
    idx = tuple(sorted(indices))
    w0 = longest_element(rd, idx)
    tau = {}
    root_index = {rd.simple_roots[i]: i for i in idx}
    for i in idx:
        img = linalg.vec_neg(w0.act(rd.simple_roots[i]))
        if img not in root_index:
            raise InternalError(f"-w_0,K(alpha_{i}) is not a simple root of K")
        tau[i] = root_index[img]
    return tau


def min_coset_reps(rd: RootDatum, indices, ambient=None, cap: int | None = None):
    """Minimal-length representatives ^K W_ambient of W_K \\ W_ambient.

    Criterion: w is minimal in its coset iff w^{-1}(alpha_k) is positive for
    all k in K.
    """
    idx = tuple(sorted(indices))
    amb = tuple(range(rd.r)) if ambient is None else tuple(sorted(ambient))
    out = []
    for w in enumerate_parabolic(rd, amb, cap=cap):
        inv = linalg.mat_inverse(w.matrix)
        if all(
            rd.is_positive_root_vector(linalg.mat_vec(inv, rd.simple_roots[k]))
            for k in idx
        ):
            out.append(w)
    return out
