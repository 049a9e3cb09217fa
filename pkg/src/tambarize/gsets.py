"""Finite G-sets, equivariant maps, limits/colimits and the dependent product."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import BaseMismatch, NotEquivariant, SpecError
from .groups import FiniteGroup


@dataclass(frozen=True, eq=False)
class GSet:
    """``act[g][x]`` is the image of point x under group element g."""

    group: FiniteGroup
    act: tuple

    def __post_init__(self):
        object.__setattr__(self, "act", tuple(tuple(r) for r in self.act))

    @property
    def size(self) -> int:
        return len(self.act[0]) if self.act else 0

    @property
    def points(self):
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, GSet) and other.group is self.group and other.act == self.act

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash(self.act)

    def __repr__(self):
        return f"GSet({self.group.name}, size={self.size})"

    def validate(self):
        G = self.group
        n = self.size
        if len(self.act) != G.order:
            raise SpecError("action table needs one row per group element")
        for row in self.act:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise SpecError("malformed action row")
            if len(set(row)) != n:
                raise SpecError("group elements must act by bijections")
        if any(self.act[0][x] != x for x in range(n)):
            raise SpecError("identity does not act trivially")
        for g in G.elements:
            for h in G.elements:
                gh = G.mul(g, h)
                for x in range(n):
                    if self.act[g][self.act[h][x]] != self.act[gh][x]:
                        raise SpecError(f"act({g}, act({h}, {x})) != act({gh}, {x})")
        return self

    def stabilizer(self, x: int) -> frozenset:
        return frozenset(g for g in self.group.elements if self.act[g][x] == x)

    @cached_property
    def stabilizers(self) -> tuple:
        out = [None] * self.size
        G = self.group
        for o in self.orbits:
            S = o.stabilizer
            for x, g in o.transversal.items():
                out[x] = S if g == 0 else G.conj(g, S)
        return tuple(out)

    @cached_property
    def orbits(self) -> tuple:
        return orbit_decompose(self)

    @cached_property
    def orbit_index(self) -> tuple:
        """orbit_index[x] = index of the orbit containing x."""
        out = [0] * self.size
        for i, o in enumerate(self.orbits):
            for x in o.points:
                out[x] = i
        return tuple(out)

    def fixed_points(self, L) -> list:
        return [x for x in self.points if all(self.act[l][x] == x for l in L)]


@dataclass(frozen=True)
class Orbit:
    rep: int
    points: tuple
    stabilizer: frozenset
    transversal: dict = field(compare=False, hash=False, repr=False)


def orbit_decompose(A: GSet) -> tuple:
    """Orbits in increasing order of least point, rep = least point.

    ``transversal[x]`` is the least g with g.rep = x.
    """
    seen = [False] * A.size
    out = []
    for x in A.points:
        if seen[x]:
            continue
        trans = {}
        for g in A.group.elements:
            y = A.act[g][x]
            if y not in trans:
                trans[y] = g
                seen[y] = True
        out.append(Orbit(x, tuple(sorted(trans)), A.stabilizer(x), trans))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class GMap:
    dom: GSet
    cod: GSet
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, x):
        return self.map[x]

    def __eq__(self, other):
        return (
            isinstance(other, GMap)
            and other.dom == self.dom
            and other.cod == self.cod
            and other.map == self.map
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.map))

    def __repr__(self):
        return f"GMap({self.dom.size}->{self.cod.size}, {list(self.map)})"

    def validate(self):
        if self.dom.group is not self.cod.group:
            raise BaseMismatch("domain and codomain live over different groups")
        if len(self.map) != self.dom.size or any(not 0 <= v < self.cod.size for v in self.map):
            raise SpecError("map has wrong length or out-of-range values")
        for g in self.dom.group.elements:
            for x in self.dom.points:
                if self.map[self.dom.act[g][x]] != self.cod.act[g][self.map[x]]:
                    raise NotEquivariant(f"f(g.x) != g.f(x) at g={g}, x={x}")
        return self

    def fiber(self, y: int) -> list:
        return [x for x, v in enumerate(self.map) if v == y]

    @cached_property
    def fibers(self) -> tuple:
        out = [[] for _ in range(self.cod.size)]
        for x, v in enumerate(self.map):
            out[v].append(x)
        return tuple(tuple(f) for f in out)

    def then(self, other: "GMap") -> "GMap":
        """other o self."""
        if other.dom != self.cod:
            raise BaseMismatch("cannot compose: codomain/domain differ")
        return GMap(self.dom, other.cod, [other.map[v] for v in self.map])

    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and len(set(self.map)) == self.dom.size


def identity(A: GSet) -> GMap:
    return GMap(A, A, range(A.size))


def empty(G: FiniteGroup) -> GSet:
    return GSet(G, tuple(() for _ in G.elements))


def point(G: FiniteGroup) -> GSet:
    return GSet(G, tuple((0,) for _ in G.elements))


def to_point(A: GSet) -> GMap:
    return GMap(A, point(A.group), [0] * A.size)


def from_empty(X: GSet) -> GMap:
    return GMap(empty(X.group), X, ())


_COSET_CACHE_ATTR = "_coset_spaces"


def coset_space(G: FiniteGroup, K) -> GSet:
    """G/K with points the left cosets, ordered by least element; point 0 is eK."""
    K = frozenset(K)
    cache = G.__dict__.setdefault(_COSET_CACHE_ATTR, {})
    if K in cache:
        return cache[K][0]
    reps = G.left_cosets(K)
    where = {}
    for i, g in enumerate(reps):
        for k in K:
            where[G.mul(g, k)] = i
    act = tuple(tuple(where[G.mul(g, r)] for r in reps) for g in G.elements)
    A = GSet(G, act)
    cache[K] = (A, tuple(reps), where)
    return A


def coset_reps(G: FiniteGroup, K) -> tuple:
    coset_space(G, K)
    return G.__dict__[_COSET_CACHE_ATTR][frozenset(K)][1]


def coset_point(G: FiniteGroup, K, g: int) -> int:
    """Index of the coset gK in G/K."""
    coset_space(G, K)
    return G.__dict__[_COSET_CACHE_ATTR][frozenset(K)][2][g]


def coset_map(G: FiniteGroup, K, H, g: int) -> GMap:
    """The G-map G/K -> G/H sending eK to gH; needs g^-1 K g <= H."""
    A, B = coset_space(G, K), coset_space(G, H)
    reps = coset_reps(G, K)
    return GMap(A, B, [coset_point(G, H, G.mul(r, g)) for r in reps])


# colimits and limits ----------------------------------------------------------

def _check_group(*sets):
    G = sets[0].group
    for S in sets[1:]:
        if S.group is not G:
            raise BaseMismatch("G-sets over different groups")
    return G


def coproduct(A: GSet, B: GSet):
    """(A+B, inj_A, inj_B) with A's points first."""
    G = _check_group(A, B)
    n = A.size
    act = tuple(A.act[g] + tuple(n + y for y in B.act[g]) for g in G.elements)
    S = GSet(G, act)
    return S, GMap(A, S, range(n)), GMap(B, S, range(n, n + B.size))


def coproduct_many(sets):
    """Coproduct of a list; returns (S, injections)."""
    sets = list(sets)
    if not sets:
        raise ValueError("coproduct_many needs at least one set")
    G = _check_group(*sets)
    offs = [0]
    for A in sets:
        offs.append(offs[-1] + A.size)
    act = tuple(
        tuple(offs[i] + y for i, A in enumerate(sets) for y in A.act[g]) for g in G.elements
    )
    S = GSet(G, act)
    return S, [GMap(A, S, range(offs[i], offs[i + 1])) for i, A in enumerate(sets)]


def coproduct_over(p1: GMap, p2: GMap):
    """(A1+A2 -> X, inj1, inj2)."""
    if p1.cod != p2.cod:
        raise BaseMismatch("coproduct over different bases")
    S, i1, i2 = coproduct(p1.dom, p2.dom)
    return GMap(S, p1.cod, p1.map + p2.map), i1, i2


def codiagonal(f: GMap, g: GMap) -> GMap:
    """[f, g] : A+B -> X."""
    if f.cod != g.cod:
        raise BaseMismatch("codiagonal needs a common codomain")
    S, _, _ = coproduct(f.dom, g.dom)
    return GMap(S, f.cod, f.map + g.map)


def pullback(f: GMap, g: GMap):
    """(P, pr_A, pr_B) with P = {(a, b) : f(a) = g(b)} in lexicographic order."""
    if f.cod != g.cod:
        raise BaseMismatch("pullback needs a common codomain")
    G = _check_group(f.dom, g.dom)
    A, B = f.dom, g.dom
    gfib = g.fibers
    pairs = [(a, b) for a in A.points for b in gfib[f.map[a]]]
    index = {pr: i for i, pr in enumerate(pairs)}
    act = tuple(
        tuple(index[(A.act[h][a], B.act[h][b])] for a, b in pairs) for h in G.elements
    )
    P = GSet(G, act)
    return P, GMap(P, A, [a for a, _ in pairs]), GMap(P, B, [b for _, b in pairs])


def product(A: GSet, B: GSet):
    return pullback(to_point(A), to_point(B))


def sub_gset(A: GSet, pts):
    """Invariant subset as a G-set with its inclusion (points in sorted order)."""
    pts = sorted(set(pts))
    index = {x: i for i, x in enumerate(pts)}
    try:
        act = tuple(tuple(index[A.act[g][x]] for x in pts) for g in A.group.elements)
    except KeyError:
        raise ValueError("subset is not G-invariant")
    S = GSet(A.group, act)
    return S, GMap(S, A, pts)


def restrict_map(f: GMap, incl: GMap) -> GMap:
    """f o incl."""
    return incl.then(f)


# dependent product ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ExponentialDiagram:
    """Normal-form exponential diagram for eta: X -> Y and p: A -> X.

    ``Pi`` has points (y, sigma) with sigma a tuple over the sorted fibre of y;
    ``fib`` = X x_Y Pi with ``lam`` (evaluation into A), ``rho`` (projection to
    Pi) and ``pr_x`` (projection to X).
    """

    eta: GMap
    p: GMap
    Pi: GSet
    pi: GMap
    sections: tuple
    fib: GSet
    lam: GMap
    rho: GMap
    pr_x: GMap

    @property
    def b_count_available(self) -> bool:
        return False

    def section(self, s: int) -> dict:
        y, sig = self.sections[s]
        return dict(zip(self.eta.fibers[y], sig))


def dependent_product(eta: GMap, p: GMap) -> ExponentialDiagram:
    if p.cod != eta.dom:
        raise BaseMismatch("p must land in the domain of eta")
    X, Y, A = eta.dom, eta.cod, p.dom
    G = _check_group(X, Y, A)
    xfib = eta.fibers
    afib = p.fibers
    sections = []
    for y in Y.points:
        xs = xfib[y]
        for sig in itertools.product(*(afib[x] for x in xs)):
            sections.append((y, sig))
    index = {s: i for i, s in enumerate(sections)}
    xpos = [0] * X.size
    for y in Y.points:
        for i, x in enumerate(xfib[y]):
            xpos[x] = i
    act = []
    for g in G.elements:
        gi = G.inv(g)
        row = []
        for y, sig in sections:
            y2 = Y.act[g][y]
            # sigma'(x') = g . sigma(g^-1 x')
            sig2 = tuple(A.act[g][sig[xpos[X.act[gi][x2]]]] for x2 in xfib[y2])
            row.append(index[(y2, sig2)])
        act.append(tuple(row))
    Pi = GSet(G, tuple(act))
    pi = GMap(Pi, Y, [y for y, _ in sections])
    fib, pr_x, rho = pullback(eta, pi)
    lam = GMap(fib, A, [sections[s][1][xpos[x]] for x, s in zip(pr_x.map, rho.map)])
    return ExponentialDiagram(eta, p, Pi, pi, tuple(sections), fib, lam, rho, pr_x)


# morphism enumeration and isomorphism over a base ----------------------------

def homs_over(q: GMap, p: GMap):
    """All equivariant u: C -> A with p o u = q, where q: C -> X and p: A -> X."""
    if q.cod != p.cod:
        raise BaseMismatch("homs_over needs a common base")
    C, A = q.dom, p.dom
    choices = []
    for o in C.orbits:
        c = o.rep
        cands = [a for a in p.fibers[q.map[c]] if o.stabilizer <= A.stabilizer(a)]
        choices.append(cands)
    for pick in itertools.product(*choices):
        u = [0] * C.size
        for o, a in zip(C.orbits, pick):
            for x, g in o.transversal.items():
                u[x] = A.act[g][a]
        yield GMap(C, A, u)


def iso_over(f1: GMap, f2: GMap, labels1=None, labels2=None):
    """An isomorphism A1 -> A2 over X, or None.

    Optional per-point label sequences must agree along the isomorphism.
    Orbits are matched by backtracking, pruned by base orbit and stabilizer.
    """
    if f1.cod != f2.cod:
        raise BaseMismatch("iso_over needs a common base")
    A1, A2 = f1.dom, f2.dom
    if A1.size != A2.size or len(A1.orbits) != len(A2.orbits):
        return None
    o1s, o2s = A1.orbits, A2.orbits

    def candidates(o):
        c = o.rep
        out = []
        for j, o2 in enumerate(o2s):
            if len(o2.points) != len(o.points):
                continue
            for a in o2.points:
                if f2.map[a] != f1.map[c] or A2.stabilizer(a) != o.stabilizer:
                    continue
                if labels1 is not None:
                    if any(
                        labels1[x] != labels2[A2.act[g][a]] for x, g in o.transversal.items()
                    ):
                        continue
                out.append((j, a))
        return out

    cands = [candidates(o) for o in o1s]
    order = sorted(range(len(o1s)), key=lambda i: len(cands[i]))
    used = [False] * len(o2s)
    pick = {}

    def search(k):
        if k == len(order):
            return True
        i = order[k]
        for j, a in cands[i]:
            if used[j]:
                continue
            used[j] = True
            pick[i] = a
            if search(k + 1):
                return True
            used[j] = False
        return False

    if not search(0):
        return None
    u = [0] * A1.size
    for i, o in enumerate(o1s):
        for x, g in o.transversal.items():
            u[x] = A2.act[g][pick[i]]
    return GMap(A1, A2, u)


# JSON ------------------------------------------------------------------------

def gset_to_json(A: GSet, group_ref=None) -> dict:
    return {"group": group_ref, "size": A.size, "act": [list(r) for r in A.act]}


def gset_from_json(G: FiniteGroup, obj) -> GSet:
    try:
        size = obj["size"]
        act = obj["act"]
    except (KeyError, TypeError):
        raise SpecError("G-set JSON needs 'size' and 'act'")
    if size == 0:
        return empty(G)
    A = GSet(G, act)
    if A.size != size:
        raise SpecError("declared size does not match the action table")
    return A.validate()


def gmap_from_json(G: FiniteGroup, obj) -> GMap:
    try:
        dom = gset_from_json(G, obj["dom"])
        cod = gset_from_json(G, obj["cod"])
        return GMap(dom, cod, obj["map"]).validate()
    except (KeyError, TypeError):
        raise SpecError("G-map JSON needs 'dom', 'cod' and 'map'")
