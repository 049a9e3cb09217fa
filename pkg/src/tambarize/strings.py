"""String rings B_Q(H), the monoid ring Z[Q], and the Witt-Burnside identification.

A string over Q is a finite H-set with a Q-valued function constant on orbits.
Transitive strings are (H/K, q) with K up to conjugacy in H, so B_Q(H) has
basis (class of K) x Q.  Products are computed by the double coset formula

    [H/K1, s1] [H/K2, s2] = sum over h in K1\\H/K2 of [H/D, s1^[K1:D] s2^[hK2h^-1:D]],
    D = K1 n hK2h^-1,

entirely inside H as a group of its own, sharing no code with the labeled-ring
classes.  ``product="pointwise"`` drops the index twists (label s1 s2).
"""
from __future__ import annotations

from .gsets import coset_space
from .groups import FiniteGroup, as_group, double_cosets
from .mackey import ell_functor
from .monoids import MonoidTable
from .presentation import RingPresentation, present
from .tambara import Tambarization


def string_ring(Q: MonoidTable, G: FiniteGroup, H=None, product: str = "twisted") -> RingPresentation:
    if product not in ("twisted", "pointwise"):
        raise ValueError(f"unknown string product {product!r}")
    H = G.elements if H is None else H
    Hg, _ = as_group(G, H)
    cl = Hg.classes
    reps = cl.reps
    nq = Q.size
    n = len(reps) * nq

    def idx(i, q):
        return i * nq + q

    mul = [[[0] * n for _ in range(n)] for _ in range(n)]
    whole = frozenset(Hg.elements)
    for i1, K1 in enumerate(reps):
        for i2, K2 in enumerate(reps):
            terms = []
            for h in double_cosets(Hg, whole, K2, K1):
                K2h = Hg.conj(h, K2)
                D = K1 & K2h
                terms.append((cl.index_of(D), len(K1) // len(D), len(K2h) // len(D)))
            for s1 in Q.elements:
                for s2 in Q.elements:
                    row = mul[idx(i1, s1)][idx(i2, s2)]
                    for d, e1, e2 in terms:
                        if product == "twisted":
                            lab = Q.mul(Q.power(s1, e1), Q.power(s2, e2))
                        else:
                            lab = Q.mul(s1, s2)
                        row[idx(d, lab)] += 1
    one = [0] * n
    one[idx(len(reps) - 1, Q.unit)] = 1
    names, basis = [], []
    hname = cl.names[-1]
    for i in range(len(reps)):
        for q in Q.elements:
            lab = None if nq == 1 else Q.names[q]
            names.append(f"[{hname}/{cl.names[i]}]" if lab is None else f"[{hname}/{cl.names[i]}; q={lab}]")
            basis.append({"stab": cl.names[i], "label": lab})
    meta = {"ring": f"B_{Q.name}({hname})", "product": product}
    return RingPresentation(names, basis, mul, one, meta)


def monoid_ring(Q: MonoidTable) -> RingPresentation:
    """Z[Q] on the basis of monoid elements."""
    n = Q.size
    mul = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in Q.elements:
        for b in Q.elements:
            mul[a][b][Q.mul(a, b)] = 1
    one = [0] * n
    one[Q.unit] = 1
    names = [str(Q.names[q]) for q in Q.elements]
    return RingPresentation(names, [{"label": s} for s in names], mul, one,
                            {"ring": f"Z[{Q.name}]"})


def elliott_iso(Q: MonoidTable, G: FiniteGroup, H):
    """(T_{L_Q}(G/H), B_Q(H), bijection) where the bijection takes a class
    (G/K -> G/H, q) to the string (fibre over eH, q) = (H/K, q)."""
    H = frozenset(H)
    T = Tambarization(ell_functor(G, Q))
    X = coset_space(G, H)
    assert X.stabilizers[X.orbits[0].rep] == H
    PT = present(T, X)
    PB = string_ring(Q, G, H)
    Hg, elems = as_group(G, H)
    pos = {g: i for i, g in enumerate(elems)}
    bij = []
    for c in T.basis(X):
        K = frozenset(pos[k] for k in c.stab)
        bij.append(Hg.classes.index_of(K) * Q.size + c.label)
    return PT, PB, bij


def witt_burnside(Q: MonoidTable, G: FiniteGroup, H=None) -> RingPresentation:
    """T_{L_Q}(G/H), presented as the Witt-Burnside ring of Z[Q] at H."""
    H = frozenset(G.elements if H is None else H)
    P = present(Tambarization(ell_functor(G, Q)), coset_space(G, H))
    hname = G.classes.names[G.classes.index_of(H)]
    coeffs = "Z" if Q.size == 1 else f"Z[{Q.name}]"
    P.metadata = {
        "ring": f"W_{{{hname}}}({coeffs})",
        "identification": f"W_{{{hname}}}({coeffs}) via T(L_{Q.name})(G/{hname}) = B_{Q.name}({hname})",
        "group": G.name,
        "monoid": Q.name,
    }
    return P
