"""Sampled verification of the Tambara functor identities for a labeled ring.

Each sample draws a small diagram

    Y' --zeta--> Y <--eta-- X <--xi-- A

together with elements over X and A, and checks

  (i)   eta_+ is additive                  (ii)  eta_bullet is multiplicative
  (iii) zeta^* is additive                 (iv)  zeta^* is multiplicative and unital
  (v)   zeta^* eta_+     = eta'_+ zeta'^*      on the pullback square
  (vi)  zeta^* eta_bullet = eta'_bullet zeta'^* on the pullback square
  (vii) eta_bullet xi_+  = v_+ rho_bullet lambda^* on the exponential diagram,
        also after renaming the points of the dependent product

plus functoriality of the three operations, the projection formula, and the
commutative-semiring laws at the level of X.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .gsets import GMap, dependent_product, identity, point, pullback
from .mackey import Report
from .sampling import permute_points, random_element, random_over


@dataclass
class SampleConfig:
    max_y: int = 6
    max_x: int = 8
    max_a: int = 8
    max_norm_points: int = 300


def _norm_size(eta: GMap, p_sizes) -> int:
    total = 0
    for y in eta.cod.points:
        prod = 1
        for x in eta.fibers[y]:
            prod *= p_sizes[x]
        total += prod
    return total


def _fiber_sizes(T, x):
    p, _ = T.realize_element(x)
    sizes = [0] * x.base.size
    for v in p.map:
        sizes[v] += 1
    return sizes


def _shrink(rng, T, eta, x, cfg):
    """Drop terms until the dependent product for the norm stays small."""
    while x.terms and _norm_size(eta, _fiber_sizes(T, x)) > cfg.max_norm_points:
        terms = list(x.terms)
        terms.pop(rng.randrange(len(terms)))
        x = T.elt(x.base, dict(terms))
    return x


def check_tambara_axioms(T, seed: int = 0, samples: int = 100, cfg: SampleConfig | None = None,
                         norm_override=None) -> Report:
    """Sample ``samples`` diagrams; ``norm_override(eta, x)`` replaces T.norm (mutation tests)."""
    cfg = cfg or SampleConfig()
    G = T.group
    rep = Report(f"tambara axioms for {T.name} on {G.name}")
    norm = norm_override or T.norm
    pt = point(G)
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")

        def check(name, lhs, rhs, **w):
            rep.checks += 1
            if lhs != rhs:
                rep.add(name, sample=s, seed=seed, lhs=T.format(lhs), rhs=T.format(rhs), **w)

        Y = random_over(rng, pt, cfg.max_y, 2, allow_empty=False).dom
        eta = random_over(rng, Y, cfg.max_x, 3)
        X = eta.dom
        xi = random_over(rng, X, cfg.max_a, 3)
        A = xi.dom
        zeta = random_over(rng, Y, cfg.max_y, 2)
        x1 = _shrink(rng, T, eta, random_element(rng, T, X), cfg)
        x2 = _shrink(rng, T, eta, random_element(rng, T, X), cfg)
        x3 = random_element(rng, T, X, signed=True)
        a = random_element(rng, T, A)
        y1 = random_element(rng, T, Y, signed=True)

        # semiring laws at X
        check("commutativity", x1 * x3, x3 * x1)
        check("associativity", (x1 * x2) * x3, x1 * (x2 * x3))
        check("distributivity", x1 * (x2 + x3), x1 * x2 + x1 * x3)
        check("unit", x3 * T.one(X), x3)

        # (i) transfer additive, (iii)/(iv) restriction a semiring map
        check("(i) transfer additive", T.transfer(eta, x1 + x3),
              T.transfer(eta, x1) + T.transfer(eta, x3))
        check("(i) transfer of zero", T.transfer(eta, T.zero(X)), T.zero(Y))
        ty1 = T.transfer(eta, x1)
        check("(iii) restriction additive", T.restrict(zeta, ty1 + y1),
              T.restrict(zeta, ty1) + T.restrict(zeta, y1))
        check("(iv) restriction multiplicative", T.restrict(zeta, ty1 * y1),
              T.restrict(zeta, ty1) * T.restrict(zeta, y1))
        check("(iv) restriction unital", T.restrict(zeta, T.one(Y)), T.one(zeta.dom))

        # (ii) norm multiplicative and unital
        nx1 = norm(eta, x1)
        prod = x1 * x2
        if _norm_size(eta, _fiber_sizes(T, prod)) <= 4 * cfg.max_norm_points:
            check("(ii) norm multiplicative", norm(eta, prod), nx1 * norm(eta, x2))
        check("(ii) norm unital", norm(eta, T.one(X)), T.one(Y))

        # (v), (vi) base change along the pullback of eta by zeta
        P, eta_p, zeta_p = _pullback_square(eta, zeta)
        check("(v) restriction/transfer base change", T.restrict(zeta, T.transfer(eta, x3)),
              T.transfer(eta_p, T.restrict(zeta_p, x3)))
        check("(vi) restriction/norm base change", T.restrict(zeta, nx1),
              norm(eta_p, T.restrict(zeta_p, x1)))

        # (vii) exponential diagram
        a = _shrink_exp(rng, T, eta, xi, a, cfg)
        D = dependent_product(eta, xi)
        lhs = norm(eta, T.transfer(xi, a))
        rhs = T.transfer(D.pi, norm(D.rho, T.restrict(D.lam, a)))
        check("(vii) exponential axiom", lhs, rhs)
        # an exponential diagram isomorphic to the normal form
        perm = list(range(D.Pi.size))
        rng.shuffle(perm)
        Pi2 = permute_points(D.Pi, perm)
        inv = [0] * len(perm)
        for i, j in enumerate(perm):
            inv[j] = i
        pi2 = GMap(Pi2, Y, [D.pi.map[inv[j]] for j in range(len(perm))])
        fib2, pr_x2, rho2 = pullback(eta, pi2)
        lam2 = GMap(fib2, A, [D.lam.map[_fib_index(D, x, inv[s2])]
                              for x, s2 in zip(pr_x2.map, rho2.map)])
        rhs2 = T.transfer(pi2, norm(rho2, T.restrict(lam2, a)))
        check("(vii) exponential axiom, renamed diagram", lhs, rhs2)

        # functoriality
        comp = xi.then(eta)
        check("transfer functorial", T.transfer(comp, a), T.transfer(eta, T.transfer(xi, a)))
        check("restriction functorial", T.restrict(comp, y1), T.restrict(xi, T.restrict(eta, y1)))
        a_small = _shrink_exp(rng, T, eta, xi, a, SampleConfig(max_norm_points=cfg.max_norm_points))
        if _norm_size(xi, _fiber_sizes(T, a_small)) <= cfg.max_norm_points:
            na = norm(xi, a_small)
            if _norm_size(eta, _fiber_sizes(T, na)) <= 4 * cfg.max_norm_points:
                check("norm functorial", norm(comp, a_small), norm(eta, na))
        check("transfer along identity", T.transfer(identity(X), x3), x3)
        check("restriction along identity", T.restrict(identity(X), x3), x3)
        check("norm along identity", norm(identity(X), x1), x1)

        # projection formula
        check("projection formula", T.transfer(eta, x3 * T.restrict(eta, y1)),
              T.transfer(eta, x3) * y1)
    return rep


def _pullback_square(eta: GMap, zeta: GMap):
    """For eta: X -> Y and zeta: Y' -> Y, return (X', eta': X' -> Y', zeta': X' -> X)."""
    P, pr_yp, pr_x = pullback(zeta, eta)
    return P, pr_yp, pr_x


def _fib_index(D, x, s):
    look = D.__dict__.get("_fib_lookup")
    if look is None:
        look = {(x_, s_): z for z, (x_, s_) in enumerate(zip(D.pr_x.map, D.rho.map))}
        object.__setattr__(D, "_fib_lookup", look)
    return look[(x, s)]


def _shrink_exp(rng, T, eta, xi, a, cfg):
    """Keep eta_bullet(xi_+ a) small."""
    while a.terms:
        sizes_x = [0] * xi.cod.size
        p, _ = T.realize_element(a)
        for v in p.map:
            sizes_x[xi.map[v]] += 1
        if _norm_size(eta, sizes_x) <= cfg.max_norm_points:
            return a
        terms = list(a.terms)
        terms.pop(rng.randrange(len(terms)))
        a = T.elt(a.base, dict(terms))
    return a
