import pytest

from tambarize import (Tambarization, build_group, build_monoid, ell_functor, fixed_point_functor,
                       trivial_action, trivial_functor)
from tambarize import mackey as mk
from tambarize.adjunction import (Phi, Psi, check_multiplicative_morphism, check_tambara_morphism,
                                  ell_adjunction, ell_homs, ell_round_trips, monomial_thetas,
                                  phi_from_theta, psi_round_trip, restriction_of_transfer_problems)
from tambarize.crossed import CrossedBurnside
from tambarize.gsets import coset_map
from tambarize.tambara import tambarize_morphism

GROUPS = ["cyclic:2", "cyclic:3", "symmetric:3"]


def targets(G, Q):
    yield Tambarization(trivial_functor(G))
    yield Tambarization(ell_functor(G, Q))
    yield CrossedBurnside(trivial_action(G, Q))


@pytest.mark.parametrize("name", GROUPS)
@pytest.mark.parametrize("q", ["cyclic:2", "cyclic:3", "nil3"])
def test_round_trips(name, q):
    G, Q = build_group(name), build_monoid(q)
    for T in targets(G, Q):
        rt = ell_round_trips(Q, T)
        assert rt.ok, rt.to_json()


def test_hom_counts():
    G, Q = build_group("cyclic:2"), build_monoid("cyclic:2")
    B, L, Om = targets(G, Q)
    # theta(w) = +-1 in the Burnside ring; +-1 or +-w with labels
    assert len(monomial_thetas(Q, B)) == 2
    assert len(monomial_thetas(Q, L)) == len(monomial_thetas(Q, Om)) == 4


def test_independent_psi_round_trips():
    # psi built from a Mackey morphism, not from Psi
    G = build_group("symmetric:3")
    C3, C6 = build_monoid("cyclic:3"), build_monoid("cyclic:6")
    S = Tambarization(ell_functor(G, C3))
    T6 = Tambarization(ell_functor(G, C6))
    phi = mk.ell_morphism(G, (0, 2, 4), C3, C6)
    psi = lambda x: tambarize_morphism(S, T6, phi, x)
    assert check_tambara_morphism(S, T6, psi, samples=15).ok
    assert psi_round_trip(S, T6, psi)
    rt = ell_round_trips(C3, T6, named_psis=[("doubling", psi)], check_morphisms=False)
    assert rt.ok and rt.homs == len(monomial_thetas(C3, T6)) + 1


def test_identity_round_trip():
    G = build_group("cyclic:3")
    S = Tambarization(fixed_point_functor(trivial_action(G, build_monoid("cyclic:2"))))
    assert psi_round_trip(S, S, lambda x: x)


def test_transfer_in_place_of_norm_is_not_a_morphism():
    G, Q = build_group("cyclic:2"), build_monoid("cyclic:2")
    T = Tambarization(trivial_functor(G))
    S = Tambarization(ell_functor(G, Q))
    theta = monomial_thetas(Q, T)[-1]
    e = frozenset([G.identity])
    wrong = []
    for R in G.classes.reps:
        f = coset_map(G, e, R, G.identity)
        wrong.append(tuple(T.transfer(f, theta[q]) for q in Q.elements))
    assert check_multiplicative_morphism(T, S.M, phi_from_theta(T, Q, theta)) == []
    probs = check_multiplicative_morphism(T, S.M, wrong)
    assert probs and probs[0][0] == "unit"
    rep = check_tambara_morphism(S, T, Psi(S, T, wrong), samples=20)
    assert not rep.ok
    assert not check_tambara_morphism(S, T, Psi(S, T, phi_from_theta(T, Q, theta)),
                                      samples=20).violations


def test_phi_of_identity_reads_identity_classes():
    G, Q = build_group("cyclic:2"), build_monoid("cyclic:3")
    S = Tambarization(ell_functor(G, Q))
    phi = Phi(S, S, lambda x: x)
    assert [S.format(v) for v in phi[0]] == ["[e/e; q=1]", "[e/e; q=w]", "[e/e; q=w2]"]
    assert [S.format(v) for v in phi[1]] == ["[C2/C2; q=1]", "[C2/C2; q=w]", "[C2/C2; q=w2]"]


@pytest.mark.parametrize("name", GROUPS + ["cyclic:4"])
@pytest.mark.parametrize("q", ["cyclic:2", "cyclic:3", "nil3"])
def test_ell_adjunction(name, q):
    G, Q = build_group(name), build_monoid(q)
    for M in (ell_functor(G, Q), fixed_point_functor(trivial_action(G, Q)), trivial_functor(G),
              ell_functor(G, build_monoid("cyclic:6"))):
        adj = ell_adjunction(Q, M)
        assert adj.ok, adj.to_json()
        assert adj.thetas == len(ell_homs(Q, M)) >= 1


def test_restriction_of_transfer_on_s3():
    G = build_group("symmetric:3")
    M = fixed_point_functor(trivial_action(G, build_monoid("cyclic:3")))
    assert restriction_of_transfer_problems(M) == []
    e = frozenset([G.identity])
    sites = [s for s in mk.mutation_sites(M) if s[0] == "t" and s[1][1] == e]
    assert len(sites) == 36
    assert all(restriction_of_transfer_problems(mk.mutate(M, s)) for s in sites)
