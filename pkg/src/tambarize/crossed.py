"""Crossed Burnside rings: G-sets over X with an equivariant map to a G-monoid Q.

A crossed G-set over X is (A, p: A -> X, m: A -> Q).  Classes are recorded
like Tambarization classes, except that the label is the actual element
m(a) in Q^{G_a} (not a level coordinate).

The norm does not use a Mackey functor at all: it identifies a crossed set
with the G-set A -> X x Q, takes the ordinary Burnside norm along the
pullback of f to the dependent product Pi_f(X x Q), and pushes forward along
mu_f(y, sigma) = (y, product of the Q-parts of sigma).
"""
from __future__ import annotations

from collections import Counter

from .gsets import GMap, GSet, dependent_product, product, pullback
from .monoids import GMonoid
from .tambara import BasicClass, LabeledRing, RingElt, Tambarization


def monoid_gset(QG: GMonoid) -> GSet:
    return GSet(QG.group, QG.action)


class CrossedBurnside(LabeledRing):
    def __init__(self, QG: GMonoid, name: str | None = None):
        super().__init__(QG.group, name or f"Omega[{QG.monoid.name}]")
        self.QG = QG
        self.Q = QG.monoid
        self.labels_trivial = self.Q.size == 1
        self.Qset = monoid_gset(QG)

    def conj_label(self, g, K, q):
        return self.QG.action[g][q]

    def pull_labels(self, f, labels):
        return tuple(labels[b] for b in f.map)

    def mul_labels(self, A, u, v):
        op = self.Q.op
        return tuple(op[a][b] for a, b in zip(u, v))

    def unit_label(self, K):
        return self.Q.unit

    def labels_at(self, K):
        return self.QG.fixed(K)

    def label_name(self, K, q):
        if self.labels_trivial:
            return None
        return self.Q.names[q]

    def crossed(self, p: GMap, m) -> RingElt:
        """Class of the crossed G-set (A -p-> X, m)."""
        return self.canonicalize(p, m)

    # Omega_Q(X) = Omega(X x Q) -----------------------------------------------------
    def to_product_base(self, p: GMap, m):
        """The G-set A -> X x Q given by (p, m)."""
        X = p.cod
        XQ, _, _ = product(X, self.Qset)
        nq = self.Q.size
        return GMap(p.dom, XQ, [p.map[a] * nq + m[a] for a in p.dom.points])

    def from_product_base(self, q: GMap):
        """Inverse of ``to_product_base``: returns (p, m) over X (X recovered from X x Q)."""
        nq = self.Q.size
        return [v // nq for v in q.map], [v % nq for v in q.map]

    def norm_labeled(self, f: GMap, p: GMap, m):
        X, Y = f.dom, f.cod
        nq = self.Q.size
        XQ, pr_x, pr_q = product(X, self.Qset)
        D1 = dependent_product(f, pr_x)  # Pi_f(X x Q), e = D1.lam
        A_to_XQ = self.to_product_base(p, m)
        Ap, pr_fib, _ = pullback(D1.lam, A_to_XQ)  # e^*(A)
        D2 = dependent_product(D1.rho, pr_fib)  # Burnside norm along f'
        # mu_f : Pi_f(X x Q) -> Y x Q
        mu_y, mu_q = [], []
        for y, sig in D1.sections:
            mu_y.append(y)
            mu_q.append(self.Q.prod(v % nq for v in sig))
        S = D2.Pi
        comp = [D2.pi.map[s] for s in S.points]
        return self.classify(GMap(S, Y, [mu_y[z] for z in comp]), [mu_q[z] for z in comp])


# the comparison with the Tambarization of the fixed point functor ---------------------

def cbr_class_map(T: Tambarization, Om: CrossedBurnside, X: GSet, cls: BasicClass) -> BasicClass:
    """Image of a T_{P_Q} class: same G-set, labels read as actual elements of Q."""
    co = T.M.coords
    p, lab = T.realize(X, cls)
    m = [co.to_q(p.dom.stabilizers[a], lab[a]) for a in p.dom.points]
    out = Om.classify(p, m)
    (c, k), = out.items()
    assert k == 1
    return c


def cbr_iso(T: Tambarization, Om: CrossedBurnside, x: RingElt) -> RingElt:
    X = x.base
    d = Counter()
    for cls, k in x.terms:
        d[cbr_class_map(T, Om, X, cls)] += k
    return Om.elt(X, dict(d))


def omega_ring(QG: GMonoid, X: GSet):
    """Presentation of Omega_Q(X)."""
    from .presentation import present

    return present(CrossedBurnside(QG), X)


def omega_structure_maps(Om: CrossedBurnside, f: GMap):
    """(f^*, f_+, f_bullet) for f: X -> Y as functions on ring elements."""
    return (lambda y: Om.restrict(f, y),
            lambda x: Om.transfer(f, x),
            lambda x: Om.norm_on_ring(f, x))


def mu_push_agreement(QG: GMonoid, f: GMap) -> bool:
    """The Q-part of mu_f on each section equals the fixed point functor's push
    along rho of the Q-labels of the evaluation map, point by point."""
    from .mackey import fixed_point_functor, push

    M = fixed_point_functor(QG)
    co = M.coords
    Om = CrossedBurnside(QG)
    nq = Om.Q.size
    XQ, pr_x, _ = product(f.dom, Om.Qset)
    D = dependent_product(f, pr_x)
    stab = D.fib.stabilizers
    labels = [co.from_q(stab[z], D.lam.map[z] % nq) for z in D.fib.points]
    pushed = push(M, D.rho, labels)
    pstab = D.Pi.stabilizers
    for s, (y, sig) in enumerate(D.sections):
        if co.to_q(pstab[s], pushed[s]) != Om.Q.prod(v % nq for v in sig):
            return False
    return True


def compare_cbr(QG: GMonoid, seed: int = 0, samples: int = 50, bases=None):
    """T_{P_Q} against Omega_Q: basis bijection and structure constants on each
    base in ``bases`` (default: all G/H), then f^*, f_+, f_bullet and products on
    ``samples`` random maps f."""
    import random

    from .gsets import point
    from .mackey import Report, fixed_point_functor
    from .presentation import compare, present
    from .sampling import random_element, random_over

    G = QG.group
    T = Tambarization(fixed_point_functor(QG))
    Om = CrossedBurnside(QG)
    rep = Report(f"cbr_iso for {QG.monoid.name} on {G.name}")
    if bases is None:
        from .gsets import coset_space

        bases = [coset_space(G, R) for R in G.classes.reps]
    for X in bases:
        bT, bO = T.basis(X), Om.basis(X)
        where = {c: i for i, c in enumerate(bO)}
        bij = [where.get(cbr_class_map(T, Om, X, c), -1) for c in bT]
        rep.checks += 1
        bad = compare(present(T, X), present(Om, X), bij)
        if bad:
            rep.add("structure constants", base=X.size, problems=[str(b) for b in bad[:3]])
    I = lambda z: cbr_iso(T, Om, z)
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")
        Y = random_over(rng, point(G), 6, 2, allow_empty=False).dom
        f = random_over(rng, Y, 8, 3, allow_empty=False)
        X = f.dom
        x1 = random_element(rng, T, X, max_terms=2, max_coeff=2)
        x2 = random_element(rng, T, X, signed=True)
        y = random_element(rng, T, Y, signed=True)
        fs, fp, fn = omega_structure_maps(Om, f)

        def check(name, lhs, rhs):
            rep.checks += 1
            if lhs != rhs:
                rep.add(name, sample=s, seed=seed, lhs=Om.format(lhs), rhs=Om.format(rhs))

        check("product", I(x1 * x2), I(x1) * I(x2))
        check("restriction", I(T.restrict(f, y)), fs(I(y)))
        check("transfer", I(T.transfer(f, x2)), fp(I(x2)))
        check("norm", I(T.norm(f, x1)), fn(I(x1)))
        if rng.random() < 0.3:
            rep.checks += 1
            if not mu_push_agreement(QG, f):
                rep.add("mu_f against push", sample=s, seed=seed)
    return rep
