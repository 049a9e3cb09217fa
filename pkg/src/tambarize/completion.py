"""Norms on the ring completion.

For x = a - b with a, b effective, write x as the transfer along the fold
X + X -> X of the element (a, -b) on X + X.  The exponential axiom for the fold
then gives

    N_f(a - b) = v_+( N_{e1}(z1^* a) * N_{e2}(-1) * N_{e2}(z2^* b) )

where v: Y' -> Y is the dependent product of the fold along f, X' = X x_Y Y'
splits as X'_1 + X'_2 according to which copy a section picks, and e_k, z_k
are the restrictions of the projections X' -> Y', X' -> X.  Everything on the
right is a norm of an effective element except N_{e2}(-1), which lives in the
Burnside ring and is computed from its marks (``marks.burnside_norm_of_minus_one``)
and then mapped in by unit labels.
"""
from __future__ import annotations

from .gsets import GMap, codiagonal, coproduct, dependent_product, identity, sub_gset
from .marks import burnside_norm_of_minus_one


def fold_exponential(f: GMap):
    """Pieces of the exponential diagram of f against the fold of X + X."""
    X = f.dom
    n = X.size
    XX, _, _ = coproduct(X, X)
    fold = codiagonal(identity(X), identity(X))
    D = dependent_product(f, fold)
    first = [z for z in D.fib.points if D.lam.map[z] < n]
    second = [z for z in D.fib.points if D.lam.map[z] >= n]
    S1, inc1 = sub_gset(D.fib, first)
    S2, inc2 = sub_gset(D.fib, second)
    return {
        "D": D,
        "eta1": inc1.then(D.rho),
        "eta2": inc2.then(D.rho),
        "zeta1": inc1.then(D.pr_x),
        "zeta2": inc2.then(D.pr_x),
    }


def norm_on_ring(T, f: GMap, x):
    T._check(x, f.dom)
    if x.is_effective():
        return T.norm(f, x)
    from .tambara import RingElt

    a = x.positive_part()
    b = x.negative_part()
    E = fold_exponential(f)
    Yp = E["D"].Pi
    n1 = T.norm(E["eta1"], T.restrict(E["zeta1"], a))
    n2 = T.norm(E["eta2"], T.restrict(E["zeta2"], b))
    sign = T.from_burnside(Yp, burnside_norm_of_minus_one(E["eta2"]))
    inner = RingElt(T, Yp, n1.terms) * sign * RingElt(T, Yp, n2.terms)
    return T.transfer(E["D"].pi, inner)


def norm_cost(T, f: GMap, x) -> int:
    """Number of sections the norm of x along f enumerates (a work estimate)."""
    sizes = [0] * f.dom.size
    for cls, k in x.terms:
        p, _ = T.realize(f.dom, cls)
        for v in p.map:
            sizes[v] += abs(k)
    total = 0
    for y in f.cod.points:
        prod = 1
        for xx in f.fibers[y]:
            prod *= sizes[xx] + (1 if not x.is_effective() else 0)
        total += prod
    return total
