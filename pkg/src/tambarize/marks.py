"""Marks (fixed-point counts) for Burnside rings of subgroups, and their inversion.

For a subgroup H of G, the Burnside ring of H is indexed by subgroups K <= H
up to H-conjugacy, each represented by its least H-conjugate (sorted tuple).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NontrivialQUnsupported
from .groups import FiniteGroup


def canonical_in(G: FiniteGroup, H, K) -> tuple:
    """Least H-conjugate of K as a sorted tuple."""
    return min(tuple(sorted(G.conj(h, K))) for h in H)


@lru_cache(maxsize=None)
def _local_classes(G: FiniteGroup, H: frozenset) -> tuple:
    reps = set()
    for K in G.all_subgroups:
        if K <= H:
            reps.add(canonical_in(G, H, K))
    return tuple(sorted(reps, key=lambda t: (len(t), t)))


def local_classes(G: FiniteGroup, H) -> tuple:
    """Subgroups of H up to H-conjugacy, ordered by (order, elements)."""
    return _local_classes(G, frozenset(H))


@lru_cache(maxsize=None)
def _mark(G: FiniteGroup, H: frozenset, L: tuple, K: tuple) -> int:
    Ls, Ks = frozenset(L), frozenset(K)
    count = 0
    for h in G.left_cosets_in(H, Ks):
        if Ls <= G.conj(h, Ks):
            count += 1
    return count


def mark(G: FiniteGroup, H, L, K) -> int:
    """|(H/K)^L| = #{hK : L <= hKh^-1}."""
    return _mark(G, frozenset(H), tuple(sorted(L)), tuple(sorted(K)))


def marks_matrix(G: FiniteGroup, H) -> list:
    """rows: L (local classes), columns: K; entry mark(L, [H/K])."""
    cls = local_classes(G, H)
    return [[mark(G, H, L, K) for K in cls] for L in cls]


def solve_marks(G: FiniteGroup, H, target: dict) -> dict:
    """Integer combination of [H/K] whose marks are ``target`` (L -> int).

    Raises ValueError if the solution is not integral.
    """
    cls = local_classes(G, H)
    coeff = {}
    # mark(L, [H/K]) is nonzero only when L is subconjugate to K, so solve from the top
    for L in reversed(cls):
        acc = Fraction(target[L])
        for K, c in coeff.items():
            acc -= c * mark(G, H, L, K)
        d = mark(G, H, L, L)
        val = acc / d
        if val.denominator != 1:
            raise ValueError(f"marks {target} are not those of a Burnside element")
        coeff[L] = int(val)
    return {K: c for K, c in coeff.items() if c}


def element_marks(T, x) -> dict:
    """Marks of an element over X: (orbit i, L) -> sum of coeff * |fibre^L|.

    Only meaningful when labels carry no data (Burnside case).
    """
    if not T.labels_trivial:
        raise NontrivialQUnsupported("marks are only defined for the unlabeled Burnside ring")
    G = T.group
    X = x.base
    out = {}
    for i, o in enumerate(X.orbits):
        H = o.stabilizer
        for L in local_classes(G, H):
            tot = 0
            for cls, c in x.terms:
                if cls.orbit == i:
                    tot += c * mark(G, H, L, cls.stab)
            out[(i, L)] = tot
    return out


def burnside_norm_of_minus_one(g) -> dict:
    """N_g(-1) in the Burnside ring over the codomain of g.

    Returned as {(orbit index, K): coefficient}.  At (L, y) the marks of the
    norm are the product over L-orbits of the fibre of the marks of -1, i.e.
    (-1) to the number of L-orbits on g^-1(y).
    """
    S, Y = g.dom, g.cod
    G = Y.group
    out = {}
    fibers = g.fibers
    for i, o in enumerate(Y.orbits):
        y = o.rep
        H = o.stabilizer
        fib = fibers[y]
        target = {}
        for L in local_classes(G, H):
            seen = set()
            n_orbits = 0
            for s in fib:
                if s in seen:
                    continue
                n_orbits += 1
                seen.update(S.act[l][s] for l in L)
            target[L] = (-1) ** n_orbits
        for K, c in solve_marks(G, H, target).items():
            out[(i, K)] = c
    return out
