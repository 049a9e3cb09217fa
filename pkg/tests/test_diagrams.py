import random

import pytest

from tambarize import LemmaViolated, build_group
from tambarize.diagrams import (adjunction_instance, adjunction_suite,
                                check_exponential_adjunction, classifying_map,
                                diagram_lemma_suite, is_exponential, lemma_a, lemma_b, lemma_c,
                                normal_form, transpose_left, transpose_right)
from tambarize.gsets import (GMap, coproduct, coset_map, dependent_product, homs_over, identity,
                             point, pullback)
from tambarize.sampling import random_over


def fold_setup():
    G = build_group("cyclic:2")
    eta = coset_map(G, [0], G.elements, 0)
    return G, eta


def test_lemma_a_on_the_fold():
    G, eta = fold_setup()
    p = identity(eta.dom)
    assert lemma_a(eta, p, p)
    A, _, _ = coproduct(eta.dom, eta.dom)
    p2 = GMap(A, eta.dom, [0, 1, 0, 1])
    assert lemma_a(eta, p2, p2) and lemma_a(eta, p2, p)


def test_normal_form_is_exponential():
    G, eta = fold_setup()
    A, _, _ = coproduct(eta.dom, eta.dom)
    p = GMap(A, eta.dom, [0, 1, 0, 1])
    D = dependent_product(eta, p)
    assert is_exponential(*normal_form(D))
    c = classifying_map(*normal_form(D))
    assert c.map == tuple(range(D.Pi.size))


def test_corrupted_diagrams_are_rejected():
    G = build_group("symmetric:3")
    rng = random.Random(5)
    rejected = tried = 0
    for _ in range(60):
        Y = random_over(rng, point(G), 6, 2, allow_empty=False).dom
        eta = random_over(rng, Y, 6, 2, allow_empty=False)
        p = random_over(rng, eta.dom, 8, 2, allow_empty=False)
        D = dependent_product(eta, p)
        lam = list(D.lam.map)
        # swap two evaluation values inside one fibre of p
        for z in range(len(lam)):
            alts = [a for a in p.fibers[p.map[lam[z]]] if a != lam[z]]
            if alts:
                lam[z] = alts[0]
                break
        else:
            continue
        tried += 1
        bad = GMap(D.fib, D.p.dom, lam)
        if not is_exponential(D.eta, D.p, bad, D.rho, D.pi):
            rejected += 1
    assert tried >= 10 and rejected == tried


def test_non_pullback_is_rejected():
    G, eta = fold_setup()
    A, _, _ = coproduct(eta.dom, eta.dom)
    p = GMap(A, eta.dom, [0, 1, 0, 1])
    D = dependent_product(eta, p)
    # drop half of X' = X x_Y Pi: no longer the pullback
    assert not is_exponential(eta, p, identity(A), p, identity(eta.dom))
    assert classifying_map(eta, p, identity(A), p, identity(eta.dom)) is None
    assert is_exponential(*normal_form(D))


@pytest.mark.parametrize("name", ["trivial", "cyclic:2", "cyclic:3", "symmetric:3", "cyclic:4"])
def test_lemma_suite(name):
    rep = diagram_lemma_suite(build_group(name), seed=3, samples=40)
    assert rep.ok and rep.checks == 120


@pytest.mark.parametrize("name", ["trivial", "cyclic:2", "cyclic:3", "symmetric:3"])
def test_adjunction_suite(name):
    rep = adjunction_suite(build_group(name), seed=4, samples=60)
    assert rep.ok and rep.checks == 60


def test_transposition_round_trip_by_hand():
    G = build_group("symmetric:3")
    rng = random.Random(11)
    found = 0
    for _ in range(40):
        eta, p, q = adjunction_instance(rng, G, 12)
        res = check_exponential_adjunction(eta, p, q)
        assert res.ok
        if res.left:
            found += 1
            D = dependent_product(eta, p)
            P, pr_x, _ = pullback(eta, q)
            u = next(iter(homs_over(pr_x, p)))
            v = transpose_right(D, q, u)
            v.validate()
            assert transpose_left(D, q, v) == u
    assert found > 10


def test_lemmas_b_and_c_small():
    G = build_group("cyclic:2")
    eta = coset_map(G, [0], G.elements, 0)
    p = identity(eta.dom)
    assert lemma_b(eta, p, identity(eta.cod))
    assert lemma_b(eta, p, eta)
    assert lemma_c(eta, p, p)


def test_lemma_violation_error():
    err = LemmaViolated("A", {"sample": 1})
    assert "A" in str(err)
