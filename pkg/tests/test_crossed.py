import random

import pytest

from tambarize import Tambarization, build_group, build_monoid, trivial_action, trivial_functor
from tambarize.crossed import (CrossedBurnside, compare_cbr, mu_push_agreement, omega_ring,
                               omega_structure_maps)
from tambarize.gsets import coset_map, coset_space, identity, point, product, pullback
from tambarize.monoids import sign_action
from tambarize.presentation import compare, present
from tambarize.sampling import random_element, random_over


def configs(G):
    for q in ("trivial", "cyclic:2", "cyclic:3", "nil3"):
        Q = build_monoid(q)
        yield trivial_action(G, Q)
        if Q.size > 1 and Q.is_group():
            yield sign_action(G, Q)


def test_trivial_monoid_gives_burnside():
    for name in ("cyclic:2", "symmetric:3"):
        G = build_group(name)
        Om = CrossedBurnside(trivial_action(G, build_monoid("trivial")))
        B = Tambarization(trivial_functor(G))
        X = point(G)
        P1, P2 = present(Om, X), present(B, X)
        assert compare(P1, P2, list(range(P1.rank))) == []


def test_c2_table():
    G = build_group("cyclic:2")
    P = omega_ring(trivial_action(G, build_monoid("cyclic:2")), point(G))
    assert P.names == ["[C2/e; q=1]", "[C2/e; q=w]", "[C2/C2; q=1]", "[C2/C2; q=w]"]
    t1, tw, one, w = (P.unit_vector(i) for i in range(4))
    assert P.one == one
    assert P.product(t1, t1) == [2, 0, 0, 0]
    assert P.product(tw, tw) == [2, 0, 0, 0]
    assert P.product(tw, w) == t1
    assert P.product(w, w) == one


def test_norm_on_the_fold():
    G = build_group("cyclic:2")
    Om = CrossedBurnside(trivial_action(G, build_monoid("cyclic:2")))
    f = coset_map(G, [0], G.elements, 0)
    Y = f.cod
    t1, _, one, _ = Om.basis(Y)
    assert Om.norm_on_ring(f, 2 * Om.one(f.dom)) == Om.elt(Y, {t1: 1, one: 2})
    # both points labelled w: every section multiplies to w^2 = 1
    assert Om.norm_on_ring(f, Om.crossed(identity(f.dom), [1, 1])) == Om.one(Y)


def test_product_base_round_trip():
    G = build_group("symmetric:3")
    QG = trivial_action(G, build_monoid("cyclic:3"))
    Om = CrossedBurnside(QG)
    B = Tambarization(trivial_functor(G))
    X = coset_space(G, [0, 1])
    XQ, _, _ = product(X, Om.Qset)
    images = set()
    for c in Om.basis(X):
        p, m = Om.realize(X, c)
        q = Om.to_product_base(p, m)
        back = Om.from_product_base(q)
        assert back == (list(p.map), list(m))
        (img, k), = B.canonicalize(q, [0] * q.dom.size).terms
        assert k == 1
        images.add(img)
    # additively Omega_Q(X) = Omega(X x Q)
    assert images == set(B.basis(XQ))


@pytest.mark.parametrize("name", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_restriction_of_transfer_is_base_change(name):
    G = build_group(name)
    rng = random.Random(name)
    for QG in configs(G):
        Om = CrossedBurnside(QG)
        for _ in range(10):
            Z = random_over(rng, point(G), 5, 2, allow_empty=False).dom
            f = random_over(rng, Z, 6, 2, allow_empty=False)
            g = random_over(rng, Z, 6, 2, allow_empty=False)
            x = random_element(rng, Om, f.dom, signed=True)
            P, pf, pg = pullback(f, g)
            fs, fp, _ = omega_structure_maps(Om, g)
            assert fs(Om.transfer(f, x)) == Om.transfer(pg, Om.restrict(pf, x))


@pytest.mark.parametrize("name", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_mu_push_agreement(name):
    G = build_group(name)
    rng = random.Random(name)
    for QG in configs(G):
        for _ in range(8):
            Y = random_over(rng, point(G), 6, 2, allow_empty=False).dom
            f = random_over(rng, Y, 6, 2)
            assert mu_push_agreement(QG, f)


@pytest.mark.parametrize("name", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_compare_with_tambarization(name):
    G = build_group(name)
    for QG in configs(G):
        rep = compare_cbr(QG, seed=2, samples=25)
        assert rep.ok, rep.violations[:2]
        assert rep.checks >= 25 * 4 + len(G.classes.reps)


def test_compare_reports_a_wrong_norm():
    G = build_group("cyclic:2")
    QG = trivial_action(G, build_monoid("cyclic:3"))

    class Broken(CrossedBurnside):
        def norm_labeled(self, f, p, m):
            return super().norm_labeled(f, p, [self.Q.unit] * len(m))

    import tambarize.crossed as cr

    real = cr.CrossedBurnside
    cr.CrossedBurnside = Broken
    try:
        rep = compare_cbr(QG, seed=0, samples=30)
    finally:
        cr.CrossedBurnside = real
    assert "norm" in {v.axiom for v in rep.violations}
