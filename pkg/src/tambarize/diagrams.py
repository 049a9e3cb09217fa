"""Exponential diagrams: recognition, the three diagram lemmas, and the
adjunction between pullback along eta and the dependent product Pi_eta.

A commutative diagram

    X <-xi- Z <-zeta- X' -eta'-> Y'
    |                            |
    eta ---------> Y <------- upsilon

is exponential iff X' -> X x_Y Y' is bijective and the classifying map
Y' -> Pi_eta(Z), y' |-> (upsilon(y'), x |-> zeta(x' over (x, y'))), is bijective.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import LemmaViolated
from .gsets import GMap, dependent_product, homs_over, iso_over, point, pullback
from .mackey import Report
from .sampling import random_over


def _xpos(eta: GMap) -> list:
    pos = [0] * eta.dom.size
    for fib in eta.fibers:
        for i, x in enumerate(fib):
            pos[x] = i
    return pos


def classifying_map(eta: GMap, xi: GMap, zeta: GMap, eta_p: GMap, ups: GMap, D=None):
    """The map Y' -> Pi_eta(Z), or None when X' is not the pullback of eta along upsilon."""
    if eta.cod != ups.cod:
        return None
    X_p = zeta.dom
    over = {}
    for xp in X_p.points:
        key = (xi.map[zeta.map[xp]], eta_p.map[xp])
        if key in over:
            return None
        over[key] = xp
    expected = sum(len(eta.fibers[ups.map[yp]]) for yp in ups.dom.points)
    if len(over) != expected:
        return None
    D = D or dependent_product(eta, xi)
    index = {s: i for i, s in enumerate(D.sections)}
    out = []
    for yp in ups.dom.points:
        y = ups.map[yp]
        sig = tuple(zeta.map[over[(x, yp)]] for x in eta.fibers[y])
        out.append(index[(y, sig)])
    return GMap(ups.dom, D.Pi, out)


def is_exponential(eta: GMap, xi: GMap, zeta: GMap, eta_p: GMap, ups: GMap) -> bool:
    if xi.cod != eta.dom or zeta.cod != xi.dom or eta_p.dom != zeta.dom or ups.dom != eta_p.cod:
        return False
    if zeta.then(xi).then(eta).map != eta_p.then(ups).map:
        return False
    c = classifying_map(eta, xi, zeta, eta_p, ups)
    if c is None or not c.is_bijective():
        return False
    c.validate()
    return True


def normal_form(D) -> tuple:
    """The five maps of a normal-form exponential diagram."""
    return D.eta, D.p, D.lam, D.rho, D.pi


# base change along zeta: Y' -> Y -------------------------------------------------------

class BaseChange:
    """Pulls objects over Y back along zeta: Y' -> Y, with induced maps."""

    def __init__(self, zeta: GMap):
        self.zeta = zeta
        self._cache = {}

    def obj(self, b: GMap):
        """b: B -> Y gives (B', b': B' -> Y', pr: B' -> B)."""
        key = id(b)
        if key not in self._cache:
            P, pr_b, pr_y = pullback(b, self.zeta)
            idx = {(u, v): i for i, (u, v) in enumerate(zip(pr_b.map, pr_y.map))}
            self._cache[key] = (b, P, pr_y, pr_b, idx)
        _, P, pr_y, pr_b, _ = self._cache[key]
        return P, pr_y, pr_b

    def map(self, h: GMap, b_src: GMap, b_dst: GMap) -> GMap:
        """h: B -> C over Y gives h': B' -> C'."""
        Ps, _, _ = self.obj(b_src)
        Pd, _, _ = self.obj(b_dst)
        _, _, pr_y, pr_b, _ = self._cache[id(b_src)]
        idx = self._cache[id(b_dst)][4]
        return GMap(Ps, Pd, [idx[(h.map[u], v)] for u, v in zip(pr_b.map, pr_y.map)])


# the three lemmas ----------------------------------------------------------------------

def lemma_a(eta: GMap, p1: GMap, p2: GMap) -> bool:
    """Pi_eta(A1 x_X A2) is the pullback of Pi_eta(A1) and Pi_eta(A2) over Y."""
    A, w1, w2 = pullback(p1, p2)
    p = w1.then(p1)
    D, D1, D2 = dependent_product(eta, p), dependent_product(eta, p1), dependent_product(eta, p2)
    P, q1, q2 = pullback(D1.pi, D2.pi)
    i1 = {s: i for i, s in enumerate(D1.sections)}
    i2 = {s: i for i, s in enumerate(D2.sections)}
    ip = {(a, b): i for i, (a, b) in enumerate(zip(q1.map, q2.map))}
    m = []
    for y, sig in D.sections:
        s1 = i1[(y, tuple(w1.map[a] for a in sig))]
        s2 = i2[(y, tuple(w2.map[a] for a in sig))]
        m.append(ip[(s1, s2)])
    can = GMap(D.Pi, P, m)
    can.validate()
    if not can.is_bijective():
        return False
    if iso_over(D.pi, q1.then(D1.pi)) is None:
        return False
    return is_exponential(*normal_form(D))


def lemma_b(eta: GMap, p: GMap, zeta: GMap) -> bool:
    """Pulling the exponential diagram of (eta, p) back along zeta: Y' -> Y gives one."""
    D = dependent_product(eta, p)
    bc = BaseChange(zeta)
    over_x = eta
    over_a = p.then(eta)
    over_z = D.rho.then(D.pi)
    over_pi = D.pi
    Xp, eta_p, _ = bc.obj(over_x)
    Ap, _, _ = bc.obj(over_a)
    Zp, _, _ = bc.obj(over_z)
    Pip, pi_p, _ = bc.obj(over_pi)
    p_p = bc.map(p, over_a, over_x)
    lam_p = bc.map(D.lam, over_z, over_a)
    rho_p = bc.map(D.rho, over_z, over_pi)
    if not is_exponential(eta_p, p_p, lam_p, rho_p, pi_p):
        return False
    return iso_over(pi_p, dependent_product(eta_p, p_p).pi) is not None


def lemma_c(eta: GMap, xi: GMap, p: GMap) -> bool:
    """For the exponential diagram of (eta, xi) and p: A -> Z, pulling p back to
    A' -> X' and taking Pi_{eta'}(A') gives an exponential diagram for (eta, xi.p)."""
    D = dependent_product(eta, xi)
    zeta, eta_p, ups = D.lam, D.rho, D.pi
    Ap, zeta_pp, p_p = pullback(p, zeta)  # A' = A x_Z X'
    Dp = dependent_product(eta_p, p_p)
    ok = is_exponential(eta, p.then(xi), Dp.lam.then(zeta_pp), Dp.rho, Dp.pi.then(ups))
    if not ok:
        return False
    return iso_over(Dp.pi.then(ups), dependent_product(eta, p.then(xi)).pi) is not None


# the pullback / dependent product adjunction ----------------------------------------------

def transpose_right(D, q: GMap, u: GMap) -> GMap:
    """u: X x_Y B -> A over X  gives  v: B -> Pi_eta(A) over Y."""
    eta = D.eta
    P, pr_x, pr_b = pullback(eta, q)
    idx = {(x, b): i for i, (x, b) in enumerate(zip(pr_x.map, pr_b.map))}
    index = {s: i for i, s in enumerate(D.sections)}
    v = []
    for b in q.dom.points:
        y = q.map[b]
        sig = tuple(u.map[idx[(x, b)]] for x in eta.fibers[y])
        v.append(index[(y, sig)])
    return GMap(q.dom, D.Pi, v)


def transpose_left(D, q: GMap, v: GMap) -> GMap:
    """v: B -> Pi_eta(A) over Y  gives  u: X x_Y B -> A over X."""
    P, pr_x, pr_b = pullback(D.eta, q)
    pos = _xpos(D.eta)
    return GMap(P, D.p.dom, [D.sections[v.map[b]][1][pos[x]] for x, b in zip(pr_x.map, pr_b.map)])


@dataclass
class AdjunctionCheck:
    left: int
    right: int
    failures: list

    @property
    def ok(self) -> bool:
        return self.left == self.right and not self.failures


def check_exponential_adjunction(eta: GMap, p: GMap, q: GMap) -> AdjunctionCheck:
    D = dependent_product(eta, p)
    P, pr_x, _ = pullback(eta, q)
    lefts = list(homs_over(pr_x, p))
    rights = list(homs_over(q, D.pi))
    failures = []
    right_set = set(v.map for v in rights)
    seen = set()
    for u in lefts:
        v = transpose_right(D, q, u)
        try:
            v.validate()
        except Exception as exc:  # equivariance failure is a bug witness
            failures.append(("not equivariant", str(exc)))
            continue
        if v.then(D.pi).map != q.map or v.map not in right_set:
            failures.append(("not over Y", u.map))
        if transpose_left(D, q, v) != u:
            failures.append(("left round trip", u.map))
        seen.add(v.map)
    for v in rights:
        u = transpose_left(D, q, v)
        if u.then(p).map != pr_x.map:
            failures.append(("not over X", v.map))
        if transpose_right(D, q, u) != v:
            failures.append(("right round trip", v.map))
    if seen != right_set:
        failures.append(("not surjective", len(seen), len(right_set)))
    return AdjunctionCheck(len(lefts), len(rights), failures)


# random suites ---------------------------------------------------------------------------

def _section_count(eta: GMap, p: GMap) -> int:
    sizes = [len(f) for f in p.fibers]
    total = 0
    for fib in eta.fibers:
        prod = 1
        for x in fib:
            prod *= sizes[x]
        total += prod
    return total


def _draw(rng, G, max_points: int):
    """eta: X -> Y and p: A -> X with every object (Pi included) of at most max_points."""
    for _ in range(200):
        Y = random_over(rng, point(G), max_points, 2, allow_empty=False).dom
        eta = random_over(rng, Y, max_points, 2)
        p = random_over(rng, eta.dom, max_points, 3)
        if _section_count(eta, p) <= max_points:
            return eta, p
    raise RuntimeError("could not draw a small instance")


def adjunction_instance(rng, G, max_points: int = 12):
    eta, p = _draw(rng, G, max_points)
    q = random_over(rng, eta.cod, max_points, 2)
    return eta, p, q


def diagram_lemma_suite(G, seed: int = 0, samples: int = 100, max_points: int = 12,
                        raise_on_failure: bool = False) -> Report:
    rep = Report(f"diagram lemmas on {G.name}")
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")
        eta, p1 = _draw(rng, G, max_points)
        for _ in range(50):
            p2 = random_over(rng, eta.dom, max_points, 2)
            A, _, _ = pullback(p1, p2)
            if A.size <= max_points and _section_count(eta, p2) <= max_points:
                break
        cases = []
        cases.append(("A", lambda: lemma_a(eta, p1, p2)))
        zeta = random_over(rng, eta.cod, max_points, 2)
        cases.append(("B", lambda: lemma_b(eta, p1, zeta)))
        for _ in range(50):
            pz = random_over(rng, p1.dom, max_points, 2)
            if _section_count(eta, pz.then(p1)) <= 4 * max_points:
                break
        cases.append(("C", lambda: lemma_c(eta, p1, pz)))
        for name, fn in cases:
            rep.checks += 1
            if not fn():
                witness = {"sample": s, "seed": seed, "eta": list(eta.map), "p": list(p1.map)}
                if raise_on_failure:
                    raise LemmaViolated(name, witness)
                rep.add(f"lemma {name}", **witness)
    return rep


def adjunction_suite(G, seed: int = 0, samples: int = 200, max_points: int = 12) -> Report:
    rep = Report(f"pullback/dependent product adjunction on {G.name}")
    for s in range(samples):
        rng = random.Random(f"{seed}:{s}")
        eta, p, q = adjunction_instance(rng, G, max_points)
        res = check_exponential_adjunction(eta, p, q)
        rep.checks += 1
        if not res.ok:
            rep.add("transposition", sample=s, seed=seed, left=res.left, right=res.right,
                    failures=[str(f) for f in res.failures[:3]])
    return rep
