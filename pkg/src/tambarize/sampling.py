"""Random small G-sets, maps and ring elements for property checks."""
from __future__ import annotations

import random

from .groups import FiniteGroup
from .gsets import GMap, GSet, coproduct_many, coset_reps, coset_space


def random_subgroup(rng: random.Random, G: FiniteGroup, within=None) -> frozenset:
    subs = [S for S in G.all_subgroups if within is None or S <= within]
    return rng.choice(subs)


def permute_points(A: GSet, perm) -> GSet:
    """The same G-set with point x renamed perm[x]."""
    n = A.size
    act = []
    for row in A.act:
        new = [0] * n
        for x in range(n):
            new[perm[x]] = perm[row[x]]
        act.append(tuple(new))
    return GSet(A.group, tuple(act))


def shuffled(rng: random.Random, p: GMap) -> GMap:
    """Random relabeling of the domain of p (same object up to isomorphism)."""
    perm = list(range(p.dom.size))
    rng.shuffle(perm)
    A2 = permute_points(p.dom, perm)
    m = [0] * p.dom.size
    for x in range(p.dom.size):
        m[perm[x]] = p.map[x]
    return GMap(A2, p.cod, m)


def random_over(rng: random.Random, Y: GSet, max_points: int, max_orbits: int = 3,
                allow_empty: bool = True, shuffle: bool = True) -> GMap:
    """Random G-map X -> Y built from orbits G/K -> G.y with K <= G_y."""
    G = Y.group
    pieces = []
    total = 0
    if allow_empty and rng.random() < 0.05:
        n_orbits = 0
    else:
        n_orbits = rng.randint(1, max_orbits)
    for _ in range(n_orbits):
        if Y.size == 0:
            break
        y = rng.randrange(Y.size)
        K = random_subgroup(rng, G, Y.stabilizers[y])
        size = G.order // len(K)
        if total + size > max_points:
            continue
        total += size
        reps = coset_reps(G, K)
        pieces.append((coset_space(G, K), [Y.act[r][y] for r in reps]))
    if not pieces:
        if not allow_empty and Y.size:
            y = rng.randrange(Y.size)
            H = Y.stabilizers[y]
            reps = coset_reps(G, H)
            pieces.append((coset_space(G, H), [Y.act[r][y] for r in reps]))
        else:
            from .gsets import from_empty

            return from_empty(Y)
    S, _ = coproduct_many([A for A, _ in pieces])
    m = [v for _, ys in pieces for v in ys]
    p = GMap(S, Y, m)
    return shuffled(rng, p) if shuffle else p


def random_gset(rng: random.Random, G: FiniteGroup, max_points: int, max_orbits: int = 2,
                allow_empty: bool = False) -> GSet:
    from .gsets import point

    return random_over(rng, point(G), max_points, max_orbits, allow_empty).dom


def random_element(rng: random.Random, T, X: GSet, max_terms: int = 2, max_coeff: int = 2,
                   signed: bool = False):
    basis = T.basis(X)
    d = {}
    if not basis:
        return T.zero(X)
    n_terms = 0 if rng.random() < 0.05 else rng.randint(1, max_terms)
    for _ in range(n_terms):
        c = rng.choice(basis)
        k = rng.randint(1, max_coeff)
        if signed and rng.random() < 0.5:
            k = -k
        d[c] = d.get(c, 0) + k
    return T.elt(X, d)


def effective_size(T, x) -> int:
    """Number of points of the G-set realising an effective element."""
    G = T.group
    return sum(k * (G.order // len(c.stab)) for c, k in x.terms)
