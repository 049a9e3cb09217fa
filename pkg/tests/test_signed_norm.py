import random

import pytest
from hypothesis import given, strategies as st

from oracles import all_ghosts, ghost, norm_ghost_oracle, norm_of_sum
from tambarize import (Tambarization, build_group, build_monoid, ell_functor, fixed_point_functor,
                       k0, trivial_action, trivial_functor)
from tambarize.completion import fold_exponential, norm_cost
from tambarize.gsets import coset_map, point
from tambarize.sampling import random_element, random_over


def rings(G):
    yield Tambarization(trivial_functor(G))
    for q in ("cyclic:2", "cyclic:3", "nil3"):
        Q = build_monoid(q)
        yield Tambarization(ell_functor(G, Q))
        yield Tambarization(fixed_point_functor(trivial_action(G, Q)))


def draw(rng, G, max_x=6):
    Y = random_over(rng, point(G), 6, 2, allow_empty=False).dom
    f = random_over(rng, Y, max_x, 2)
    return Y, f


def test_minus_one_on_c2():
    G = build_group("cyclic:2")
    T = Tambarization(trivial_functor(G))
    f = coset_map(G, [0], G.elements, 0)
    X, Y = f.dom, f.cod
    t, one = (T.elt(Y, {c: 1}) for c in T.basis(Y))
    n = T.norm_on_ring(f, -T.one(X))
    assert n == t - 1
    assert n * n == T.norm_on_ring(f, T.one(X)) == one
    # representation independence: 2 - 3 and 0 - 1 name the same element
    assert T.norm_on_ring(f, 2 * T.one(X) - 3 * T.one(X)) == n


def test_fold_pieces():
    G = build_group("symmetric:3")
    f = coset_map(G, [0], G.elements, 0)
    E = fold_exponential(f)
    assert E["D"].Pi.size == 2 ** 6
    assert E["eta1"].cod == E["D"].Pi and E["zeta2"].cod == f.dom


def test_norm_cost():
    G = build_group("cyclic:2")
    T = Tambarization(trivial_functor(G))
    f = coset_map(G, [0], G.elements, 0)
    assert norm_cost(T, f, 2 * T.one(f.dom)) == 4


@pytest.mark.parametrize("name", ["cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3"])
def test_marks_of_signed_norm(name):
    # trivial M: marks of N_f(x) are products of marks over L-orbits of fibres
    G = build_group(name)
    T = Tambarization(trivial_functor(G))
    rng = random.Random(name)
    for _ in range(40):
        Y, f = draw(rng, G)
        x = random_element(rng, T, f.dom, max_terms=3, max_coeff=3, signed=True)
        N = T.norm_on_ring(f, x)
        assert all_ghosts(T, Y, lambda y, L: ghost(T, N, y, L)) == \
            all_ghosts(T, Y, lambda y, L: norm_ghost_oracle(T, f, x, y, L))


@pytest.mark.parametrize("name", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_norm_of_a_sum(name):
    # N(a) = N((a - b) + b) through the fold exponential diagram, for labeled rings
    G = build_group(name)
    rng = random.Random(name)
    for T in rings(G):
        for _ in range(8):
            Y, f = draw(rng, G)
            a = random_element(rng, T, f.dom)
            b = random_element(rng, T, f.dom)
            assert norm_of_sum(T, f, a - b, b) == T.norm(f, a)
            c = random_element(rng, T, f.dom, signed=True)
            assert norm_of_sum(T, f, c, -c) == T.norm_on_ring(f, T.zero(f.dom))


@given(st.sampled_from(["cyclic:2", "cyclic:3", "symmetric:3"]), st.integers(0, 10 ** 6))
def test_signed_norm_is_multiplicative(name, seed):
    G = build_group(name)
    rng = random.Random(seed)
    T = rng.choice(list(rings(G)))
    Y, f = draw(rng, G)
    x = random_element(rng, T, f.dom, signed=True)
    y = random_element(rng, T, f.dom, signed=True)
    assert T.norm_on_ring(f, x * y) == T.norm_on_ring(f, x) * T.norm_on_ring(f, y)
    a = random_element(rng, T, f.dom)
    assert T.norm_on_ring(f, a) == k0(T.norm(f, a))
    assert T.norm_on_ring(f, a - a) == T.norm_on_ring(f, T.zero(f.dom))


@given(st.sampled_from(["cyclic:2", "symmetric:3"]), st.integers(0, 10 ** 6))
def test_signed_norm_is_natural(name, seed):
    # composite maps and restriction along pullback squares
    from tambarize.gsets import pullback

    G = build_group(name)
    rng = random.Random(seed)
    T = rng.choice(list(rings(G)))
    Z = random_over(rng, point(G), 4, 2, allow_empty=False).dom
    g = random_over(rng, Z, 5, 2, allow_empty=False)
    f = random_over(rng, g.dom, 6, 2)
    x = random_element(rng, T, f.dom, signed=True)
    assert T.norm_on_ring(f.then(g), x) == T.norm_on_ring(g, T.norm_on_ring(f, x))
    zeta = random_over(rng, Z, 5, 2, allow_empty=False)
    y = random_element(rng, T, g.dom, signed=True)
    P, pr_g, pr_z = pullback(g, zeta)
    assert T.restrict(zeta, T.norm_on_ring(g, y)) == T.norm_on_ring(pr_z, T.restrict(pr_g, y))
