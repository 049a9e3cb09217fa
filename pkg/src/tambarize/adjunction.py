"""Two adjunctions, checked by explicit round trips on finite hom-data.

1. Tambarization is left adjoint to the multiplicative forgetful functor.
   A Tambara morphism psi: S_M -> T corresponds to a Mackey morphism
   phi: M -> T^mu into the multiplicative part of T (restriction = T^*,
   transfer = norm):

       Phi(psi)_R(v)  = psi(class of (G/R --id--> G/R, v))
       Psi(phi)(A -p-> X, m) = T_+(p)(phi_A(m))

   Mackey morphisms phi are stored at the subgroup class representatives
   (``phi[i][v]`` is an element of T(G/R_i)) and transported to arbitrary
   G-sets orbit by orbit.

2. L_Q is left adjoint to M |-> M(G/e)^G.  A monoid map theta: Q -> M(G/e)^G
   gives phi_H = t^H_e . theta, and phi gives back theta = phi_e.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .gsets import GMap, GSet, coset_map, coset_space, identity
from .mackey import (Report, SemiMackeyData, all_elements, check_mackey_morphism, ell_functor,
                     extend_from_reps, pull, push)
from .monoids import MonoidTable, monoid_homs
from .sampling import random_element, random_over
from .tambara import LabeledRing, RingElt, Tambarization

# --- Tambarization adjunction -----------------------------------------------------------


def _rep_point(G, A: GSet, o):
    """Point of orbit o whose stabilizer is the class representative."""
    _, w = G.classes.class_of(o.stabilizer)
    return A.act[w][o.rep]


def transport(T: LabeledRing, M: SemiMackeyData, phi, A: GSet, vals) -> RingElt:
    """phi_A(vals) in T(A): on each orbit, phi at the representative moved along G/R = orbit."""
    G = M.group
    total = T.zero(A)
    for o in A.orbits:
        y = _rep_point(G, A, o)
        R = A.stabilizers[y]
        i = G.classes.index_of(R)
        src = coset_space(G, R)
        j = GMap(src, A, [A.act[r][y] for r in _reps(G, R)])
        total = total + T.transfer(j, phi[i][vals[y]])
    return total


def _reps(G, R):
    from .gsets import coset_reps

    return coset_reps(G, R)


def Phi(S: Tambarization, T: LabeledRing, psi) -> list:
    """Mackey morphism M -> T^mu from a Tambara morphism psi: S_M -> T."""
    M = S.M
    G = M.group
    out = []
    for i, R in enumerate(G.classes.reps):
        X = coset_space(G, R)
        row = []
        for v in M.levels[i].elements:
            lab = extend_from_reps(M, X, [v])
            row.append(psi(S.canonicalize(identity(X), lab)))
        out.append(tuple(row))
    return out


def Psi(S: Tambarization, T: LabeledRing, phi):
    """Tambara morphism S_M -> T from a Mackey morphism phi: M -> T^mu."""
    M = S.M

    def psi(x: RingElt) -> RingElt:
        X = x.base
        total = T.zero(X)
        for cls, k in x.terms:
            p, lab = S.realize(X, cls)
            total = total + T.transfer(p, transport(T, M, phi, p.dom, lab)).scale(k)
        return total

    return psi


def probe_maps(G) -> list:
    """Every G/K -> G/H sending eK to gH (covers restrictions, transfers and conjugations)."""
    reps = G.classes.reps
    subs = G.all_subgroups
    maps = []
    for K in reps:
        for H in subs:
            for g in G.elements:
                if G.conj(G.inv(g), K) <= H:
                    maps.append(coset_map(G, K, H, g))
    return maps


def check_multiplicative_morphism(T: LabeledRing, M: SemiMackeyData, phi, maps=None) -> list:
    """Problems with phi as a Mackey morphism M -> T^mu."""
    G = M.group
    problems = []
    maps = probe_maps(G) if maps is None else maps
    for i, R in enumerate(G.classes.reps):
        X = coset_space(G, R)
        L = M.levels[i]
        if phi[i][L.unit] != T.one(X):
            problems.append(("unit", i))
        for a in L.elements:
            for b in L.elements:
                if phi[i][L.op[a][b]] != phi[i][a] * phi[i][b]:
                    problems.append(("multiplicative", i, a, b))
    for f in maps:
        for vb in all_elements(M, f.cod):
            if transport(T, M, phi, f.dom, pull(M, f, vb)) != T.restrict(f, transport(T, M, phi, f.cod, vb)):
                problems.append(("restriction", f.map))
                break
        for va in all_elements(M, f.dom):
            lhs = transport(T, M, phi, f.cod, push(M, f, va))
            if lhs != T.norm_on_ring(f, transport(T, M, phi, f.dom, va)):
                problems.append(("norm", f.map))
                break
    return problems


def same_morphism(phi1, phi2) -> bool:
    return len(phi1) == len(phi2) and all(a == b for r1, r2 in zip(phi1, phi2) for a, b in zip(r1, r2))


def probe_bases(G, extra_seed: int | None = 0, extra: int = 2) -> list:
    """The levels G/H plus a few random two-orbit G-sets."""
    out = [coset_space(G, R) for R in G.classes.reps]
    if extra_seed is not None:
        from .gsets import point

        rng = random.Random(extra_seed)
        for _ in range(extra):
            out.append(random_over(rng, point(G), 8, 2, allow_empty=False).dom)
    return out


def same_on_bases(S: LabeledRing, psi1, psi2, bases) -> bool:
    for X in bases:
        for c in S.basis(X):
            x = S.elt(X, {c: 1})
            if psi1(x) != psi2(x):
                return False
    return True


def check_tambara_morphism(S: LabeledRing, T: LabeledRing, psi, seed: int = 0, samples: int = 20) -> Report:
    """Sampled compatibility of psi with products, restriction, transfer and norm."""
    G = S.group
    from .gsets import point

    rep = Report(f"tambara morphism {S.name} -> {T.name}")
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")
        Y = random_over(rng, point(G), 6, 2, allow_empty=False).dom
        f = random_over(rng, Y, 6, 2)
        X = f.dom
        x1 = random_element(rng, S, X, max_terms=2, max_coeff=1)
        x2 = random_element(rng, S, X, max_terms=2, max_coeff=2, signed=True)
        y = random_element(rng, S, Y, signed=True)

        def check(name, lhs, rhs):
            rep.checks += 1
            if lhs != rhs:
                rep.add(name, sample=s, lhs=T.format(lhs), rhs=T.format(rhs))

        check("product", psi(x1 * x2), psi(x1) * psi(x2))
        check("unit", psi(S.one(X)), T.one(X))
        check("restriction", psi(S.restrict(f, y)), T.restrict(f, psi(y)))
        check("transfer", psi(S.transfer(f, x2)), T.transfer(f, psi(x2)))
        check("norm", psi(S.norm_on_ring(f, x1)), T.norm_on_ring(f, psi(x1)))
    return rep


# enumerable hom-data: M = L_Q, phi determined by a monomial theta -------------------------

def free_orbit_action(G) -> list:
    """Right translations x -> xg of G/e, the G-action on T(G/e)."""
    E = coset_space(G, frozenset([G.identity]))
    return [GMap(E, E, [E.act[G.mul(r, g)][0] for r in _reps(G, frozenset([G.identity]))])
            for g in G.elements]


def fixed_monomials(T: LabeledRing) -> list:
    """0 and +-b for basis elements b of T(G/e) fixed by the G-action."""
    G = T.group
    E = coset_space(G, frozenset([G.identity]))
    acts = free_orbit_action(G)
    out = [T.zero(E)]
    for c in T.basis(E):
        b = T.elt(E, {c: 1})
        if all(T.restrict(a, b) == b for a in acts):
            out.extend([b, -b])
    return out


def monomial_thetas(Q: MonoidTable, T: LabeledRing) -> list:
    """Monoid maps Q -> T(G/e)^G taking values in the fixed monomials."""
    G = T.group
    E = coset_space(G, frozenset([G.identity]))
    one = T.one(E)
    cands = fixed_monomials(T)
    others = [q for q in Q.elements if q != Q.unit]
    out = []
    for pick in itertools.product(cands, repeat=len(others)):
        theta = {Q.unit: one}
        theta.update(zip(others, pick))
        if all(theta[Q.mul(a, b)] == theta[a] * theta[b] for a in Q.elements for b in Q.elements):
            out.append(tuple(theta[q] for q in Q.elements))
    return out


def phi_from_theta(T: LabeledRing, Q: MonoidTable, theta) -> list:
    """phi_R(q) = norm along G/e -> G/R of theta(q)."""
    G = T.group
    e = frozenset([G.identity])
    out = []
    for R in G.classes.reps:
        f = coset_map(G, e, R, G.identity)
        out.append(tuple(T.norm_on_ring(f, theta[q]) for q in Q.elements))
    return out


@dataclass
class RoundTrip:
    label: str
    homs: int = 0
    phi_psi_failures: list = field(default_factory=list)
    psi_phi_failures: list = field(default_factory=list)
    morphism_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.homs > 0 and not (self.phi_psi_failures or self.psi_phi_failures or self.morphism_failures)

    def to_json(self) -> dict:
        return {"label": self.label, "homs": self.homs, "ok": self.ok,
                "phi_psi_failures": len(self.phi_psi_failures),
                "psi_phi_failures": len(self.psi_phi_failures),
                "morphism_failures": len(self.morphism_failures)}


def ell_round_trips(Q: MonoidTable, T: LabeledRing, named_psis=(), seed: int = 0,
                    check_morphisms: bool = True) -> RoundTrip:
    """Round trips for S_{L_Q} -> T over every monomial theta, plus the given psi's.

    ``named_psis`` are (name, psi) pairs constructed independently of Psi.
    """
    G = T.group
    S = Tambarization(ell_functor(G, Q))
    out = RoundTrip(f"S_L_{Q.name} -> {T.name} on {G.name}")
    bases = probe_bases(G, seed)
    maps = probe_maps(G)
    for theta in monomial_thetas(Q, T):
        phi = phi_from_theta(T, Q, theta)
        out.homs += 1
        if check_morphisms:
            probs = check_multiplicative_morphism(T, S.M, phi, maps)
            if probs:
                out.morphism_failures.append((T.format(theta[0]), probs[:3]))
        psi = Psi(S, T, phi)
        if not same_morphism(Phi(S, T, psi), phi):
            out.phi_psi_failures.append([T.format(t) for t in theta])
        if not same_on_bases(S, Psi(S, T, Phi(S, T, psi)), psi, bases):
            out.psi_phi_failures.append([T.format(t) for t in theta])
    for name, psi in named_psis:
        out.homs += 1
        if not same_on_bases(S, Psi(S, T, Phi(S, T, psi)), psi, bases):
            out.psi_phi_failures.append(name)
    return out


def psi_round_trip(S: Tambarization, T: LabeledRing, psi, seed: int = 0) -> bool:
    """Psi(Phi(psi)) == psi on the test bases, and Phi(psi) is a morphism into T^mu."""
    phi = Phi(S, T, psi)
    bases = probe_bases(S.group, seed)
    return (not check_multiplicative_morphism(T, S.M, phi)
            and same_on_bases(S, Psi(S, T, phi), psi, bases))


# L_Q is left adjoint to evaluation at G/e on G-fixed points ----------------------------

def fixed_at_e(M: SemiMackeyData) -> list:
    """Elements of M(G/e) fixed by the normalizer action (all of G)."""
    L = M.levels[0]
    return [v for v in L.elements if all(tab[v] == v for tab in M.c[0].values())]


def ell_Phi(M: SemiMackeyData, Q: MonoidTable, theta) -> list:
    """phi_i = t^{R_i}_e . theta."""
    G = M.group
    e = frozenset([G.identity])
    return [tuple(M.t[(R, e)][theta[q]] for q in Q.elements) for R in G.classes.reps]


def ell_Theta(phi) -> tuple:
    return tuple(phi[0])


def ell_homs(Q: MonoidTable, M: SemiMackeyData) -> list:
    """All monoid maps theta: Q -> M(G/e)^G."""
    fixed = set(fixed_at_e(M))
    return [tuple(f) for f in monoid_homs(Q, M.levels[0]) if set(f) <= fixed]


def ell_mackey_morphisms(Q: MonoidTable, M: SemiMackeyData) -> list:
    """Every semi-Mackey morphism L_Q -> M, by brute force over levelwise monoid maps."""
    G = M.group
    L = ell_functor(G, Q)
    per_level = [monoid_homs(Q, lev) for lev in M.levels]
    out = []
    for pick in itertools.product(*per_level):
        phi = [tuple(f) for f in pick]
        if not check_mackey_morphism(L, M, phi):
            out.append(phi)
    return out


def restriction_of_transfer_problems(M: SemiMackeyData) -> list:
    """r^H_K t^H_e (m) = (t^K_e m)^[H:K] for G-fixed m in M(G/e)."""
    G = M.group
    e = frozenset([G.identity])
    probs = []
    for (H, K), r in M.r.items():
        LK = M.level_of(K)
        for m in fixed_at_e(M):
            lhs = r[M.t[(H, e)][m]]
            rhs = LK.power(M.t[(K, e)][m], len(H) // len(K))
            if lhs != rhs:
                probs.append((sorted(H), sorted(K), m))
    return probs


@dataclass
class EllAdjunction:
    thetas: int
    morphisms: int
    theta_round_trip_failures: int
    phi_round_trip_failures: int
    not_morphisms: int
    restriction_formula_failures: int

    @property
    def ok(self) -> bool:
        return (self.thetas == self.morphisms and self.theta_round_trip_failures == 0
                and self.phi_round_trip_failures == 0 and self.not_morphisms == 0
                and self.restriction_formula_failures == 0)

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def ell_adjunction(Q: MonoidTable, M: SemiMackeyData) -> EllAdjunction:
    G = M.group
    L = ell_functor(G, Q)
    thetas = ell_homs(Q, M)
    morphisms = ell_mackey_morphisms(Q, M)
    bad_theta = sum(1 for th in thetas if ell_Theta(ell_Phi(M, Q, th)) != th)
    not_morph = sum(1 for th in thetas if check_mackey_morphism(L, M, ell_Phi(M, Q, th)))
    bad_phi = sum(1 for phi in morphisms if not same_morphism(ell_Phi(M, Q, ell_Theta(phi)), phi))
    return EllAdjunction(len(thetas), len(morphisms), bad_theta, bad_phi, not_morph,
                         len(restriction_of_transfer_problems(M)))
