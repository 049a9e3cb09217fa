"""Semi-Mackey functors in subgroup-indexed form.

Data layout
-----------
* ``levels[i]``: the monoid M(G/R_i) at the i-th class representative R_i.
* Elements of M(G/K) for an arbitrary subgroup K are written in the
  coordinates of its class representative: ``x`` is stored as ``c_w(x)`` where
  ``w K w^-1 = R`` is the witness from the class table.
* ``r[(H, K)]`` / ``t[(H, K)]``: value tables for every pair K <= H of
  subgroups (frozensets), in those coordinates.
* ``c[i][n]``: the action of n in N_G(R_i) on ``levels[i]``.  Conjugation
  between arbitrary subgroups is routed through these (``conj_map``).

A G-map G/K -> G/H, eK -> gH, acts by restriction from ``g^-1 H g`` after
conjugating; on point-valued elements this is automatic because every point
carries the value at its own stabilizer.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BaseMismatch, NotAMackeyMorphism, SpecError
from .groups import FiniteGroup, double_cosets
from .gsets import GMap, GSet
from .monoids import GMonoid, MonoidTable, is_hom, submonoid, trivial_monoid


class SemiMackeyData:
    def __init__(self, G: FiniteGroup, levels, r, t, c, name="M"):
        self.group = G
        self.classes = G.classes
        self.levels = tuple(levels)
        self.r = dict(r)
        self.t = dict(t)
        self.c = tuple(dict(ci) for ci in c)
        self.name = name
        self._conj_cache = {}

    def __repr__(self):
        return f"SemiMackeyData({self.name} on {self.group.name})"

    def level_of(self, K) -> MonoidTable:
        return self.levels[self.classes.index_of(K)]

    def conj_map(self, g: int, K) -> tuple:
        """Table for c_g : M(G/K) -> M(G/gKg^-1) in class coordinates."""
        key = (g, K)
        hit = self._conj_cache.get(key)
        if hit is not None:
            return hit
        G = self.group
        i, wK = self.classes.class_of(K)
        _, wgK = self.classes.class_of(G.conj(g, K))
        n = G.mul(G.mul(wgK, g), G.inv(wK))
        tab = self.c[i][n]
        self._conj_cache[key] = tab
        return tab

    def copy(self, name=None) -> "SemiMackeyData":
        return SemiMackeyData(
            self.group, self.levels, dict(self.r), dict(self.t),
            [dict(ci) for ci in self.c], name or self.name,
        )

    def is_trivial(self) -> bool:
        return all(L.size == 1 for L in self.levels)


def subgroup_pairs(G: FiniteGroup):
    """All (H, K) with K <= H, as frozensets, in a fixed order."""
    subs = G.all_subgroups
    return [(H, K) for H in subs for K in subs if K <= H]


def tabulate(G: FiniteGroup, levels, r_fn, t_fn, c_fn, name="M") -> SemiMackeyData:
    """Build data from functions on class coordinates.

    ``r_fn(H, K, v)`` and ``t_fn(H, K, v)`` act on coordinates;
    ``c_fn(i, n, v)`` is the normalizer action at representative i.
    """
    CT = G.classes
    r, t = {}, {}
    for H, K in subgroup_pairs(G):
        i, j = CT.index_of(H), CT.index_of(K)
        r[(H, K)] = tuple(r_fn(H, K, v) for v in levels[i].elements)
        t[(H, K)] = tuple(t_fn(H, K, v) for v in levels[j].elements)
    c = []
    for i, N in enumerate(CT.normalizers):
        c.append({n: tuple(c_fn(i, n, v) for v in levels[i].elements) for n in sorted(N)})
    return SemiMackeyData(G, levels, r, t, c, name)


# concrete functors ------------------------------------------------------------

def trivial_functor(G: FiniteGroup) -> SemiMackeyData:
    Q = trivial_monoid()
    n = len(G.classes)
    return tabulate(G, [Q] * n, lambda H, K, v: 0, lambda H, K, v: 0, lambda i, n, v: 0, "trivial")


def ell_functor(G: FiniteGroup, Q: MonoidTable) -> SemiMackeyData:
    """Every level Q, restriction = power by the index, transfer and conjugation identity."""
    n = len(G.classes)
    return tabulate(
        G, [Q] * n,
        lambda H, K, v: Q.power(v, len(H) // len(K)),
        lambda H, K, v: v,
        lambda i, n, v: v,
        f"L_{Q.name}",
    )


class FixedPointCoords:
    """Coordinates for the fixed point functor: level i is Q^{R_i} (sorted)."""

    def __init__(self, QG: GMonoid):
        G = QG.group
        self.QG = QG
        self.levels = []
        self.embed = []
        self.pos = []
        for R in G.classes.reps:
            sub, emb = submonoid(QG.monoid, QG.fixed(R), name=f"{QG.monoid.name}^R")
            self.levels.append(sub)
            self.embed.append(emb)
            self.pos.append({q: k for k, q in enumerate(emb)})

    def to_q(self, K, v) -> int:
        """The actual element of Q^K represented by coordinate v."""
        G = self.QG.group
        i, w = G.classes.class_of(K)
        return self.QG.act(G.inv(w), self.embed[i][v])

    def from_q(self, K, q) -> int:
        G = self.QG.group
        i, w = G.classes.class_of(K)
        return self.pos[i][self.QG.act(w, q)]


def fixed_point_functor(QG: GMonoid) -> SemiMackeyData:
    G = QG.group
    Q = QG.monoid
    co = FixedPointCoords(QG)

    def r_fn(H, K, v):
        return co.from_q(K, co.to_q(H, v))

    def t_fn(H, K, v):
        q = co.to_q(K, v)
        return co.from_q(H, Q.prod(QG.act(h, q) for h in G.left_cosets_in(H, K)))

    def c_fn(i, n, v):
        return co.pos[i][QG.act(n, co.embed[i][v])]

    M = tabulate(G, co.levels, r_fn, t_fn, c_fn, f"P_{Q.name}")
    M.coords = co
    return M


# axiom checking ------------------------------------------------------------------

@dataclass
class Violation:
    axiom: str
    witness: dict

    def to_json(self):
        return {"axiom": self.axiom, "witness": _jsonable(self.witness)}


def _jsonable(x):
    if isinstance(x, frozenset):
        return sorted(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    name: str
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, **witness):
        self.violations.append(Violation(axiom, witness))

    def merge(self, other: "Report"):
        self.checks += other.checks
        self.violations.extend(other.violations)
        return self

    def to_json(self):
        return {
            "name": self.name,
            "checks": self.checks,
            "violations": [v.to_json() for v in self.violations],
        }


def check_axioms(M: SemiMackeyData, stop_early: bool = False) -> Report:
    """Exhaustive check of the subgroup-indexed Mackey functor identities."""
    G = M.group
    CT = M.classes
    rep = Report(f"mackey axioms for {M.name} on {G.name}")
    lv = lambda K: M.levels[CT.index_of(K)]

    def done():
        return stop_early and rep.violations

    # homomorphisms
    for (H, K), tab in M.r.items():
        rep.checks += 1
        if not is_hom(tab, lv(H), lv(K)):
            rep.add("r is a monoid homomorphism", H=H, K=K)
    for (H, K), tab in M.t.items():
        rep.checks += 1
        if not is_hom(tab, lv(K), lv(H)):
            rep.add("t is a monoid homomorphism", H=H, K=K)
    for i, ci in enumerate(M.c):
        for n, tab in ci.items():
            rep.checks += 1
            if not is_hom(tab, M.levels[i], M.levels[i]):
                rep.add("c is a monoid homomorphism", cls=i, g=n)
    if done():
        return rep

    subs = G.all_subgroups
    # identities on the diagonal
    for H in subs:
        ident = tuple(lv(H).elements)
        rep.checks += 2
        if M.r[(H, H)] != ident:
            rep.add("r^H_H = id", H=H)
        if M.t[(H, H)] != ident:
            rep.add("t^H_H = id", H=H)

    # transitivity
    for H in subs:
        for K in subs:
            if not K <= H:
                continue
            for L in subs:
                if not L <= K:
                    continue
                rep.checks += 2
                rHK, rKL, rHL = M.r[(H, K)], M.r[(K, L)], M.r[(H, L)]
                if any(rKL[rHK[v]] != rHL[v] for v in lv(H).elements):
                    rep.add("r transitivity", H=H, K=K, L=L)
                tHK, tKL, tHL = M.t[(H, K)], M.t[(K, L)], M.t[(H, L)]
                if any(tHK[tKL[v]] != tHL[v] for v in lv(L).elements):
                    rep.add("t transitivity", H=H, K=K, L=L)
    if done():
        return rep

    # conjugation: unit, cocycle, inner triviality
    for i, R in enumerate(CT.reps):
        ci = M.c[i]
        ident = tuple(M.levels[i].elements)
        for n1 in ci:
            if n1 in R:
                rep.checks += 1
                if ci[n1] != ident:
                    rep.add("inner conjugation is identity", cls=i, g=n1)
            for n2 in ci:
                rep.checks += 1
                a, b, ab = ci[n1], ci[n2], ci[G.mul(n1, n2)]
                if any(a[b[v]] != ab[v] for v in ident):
                    rep.add("conjugation cocycle", cls=i, g1=n1, g2=n2)
    if done():
        return rep

    # conjugation commutes with r and t
    for g in G.elements:
        for H in subs:
            gH = G.conj(g, H)
            cH = M.conj_map(g, H)
            for K in subs:
                if not K <= H:
                    continue
                gK = G.conj(g, K)
                cK = M.conj_map(g, K)
                rep.checks += 2
                r1, r2 = M.r[(H, K)], M.r[(gH, gK)]
                if any(cK[r1[v]] != r2[cH[v]] for v in lv(H).elements):
                    rep.add("c commutes with r", g=g, H=H, K=K)
                t1, t2 = M.t[(H, K)], M.t[(gH, gK)]
                if any(cH[t1[v]] != t2[cK[v]] for v in lv(K).elements):
                    rep.add("c commutes with t", g=g, H=H, K=K)
    if done():
        return rep

    # Mackey double coset formula
    for H in subs:
        for K in subs:
            if not K <= H:
                continue
            for L in subs:
                if not L <= H:
                    continue
                rep.checks += 1
                bad = mackey_formula_mismatch(M, H, K, L)
                if bad is not None:
                    rep.add("Mackey formula", H=H, K=K, L=L, value=bad)
    return rep


def mackey_formula_mismatch(M: SemiMackeyData, H, K, L):
    """First v in M(G/K) where r^H_L t^H_K(v) differs from the double coset sum."""
    G = M.group
    QL = M.level_of(L)
    tHK, rHL = M.t[(H, K)], M.r[(H, L)]
    terms = []
    for h in double_cosets(G, H, K, L):
        hi = G.inv(h)
        Lh = G.conj(hi, L)  # h^-1 L h
        D = Lh & K
        hD = G.conj(h, D)  # = L & hKh^-1
        terms.append((M.r[(K, D)], M.conj_map(h, D), M.t[(L, hD)]))
    for v in M.level_of(K).elements:
        lhs = rHL[tHK[v]]
        rhs = QL.prod(t[c[r[v]]] for r, c, t in terms)
        if lhs != rhs:
            return {"v": v, "lhs": lhs, "rhs": rhs}
    return None


# point-valued elements on arbitrary G-sets -----------------------------------------

def point_classes(M: SemiMackeyData, A: GSet) -> tuple:
    return tuple(M.classes.index_of(S) for S in A.stabilizers)


def unit_element(M: SemiMackeyData, A: GSet) -> tuple:
    return tuple(M.levels[i].unit for i in point_classes(M, A))


def extend_from_reps(M: SemiMackeyData, A: GSet, rep_vals) -> tuple:
    """Point values from one value per orbit representative."""
    vals = [0] * A.size
    for o, v in zip(A.orbits, rep_vals):
        K = o.stabilizer
        for x, g in o.transversal.items():
            vals[x] = M.conj_map(g, K)[v]
    return tuple(vals)


def rep_values(A: GSet, vals) -> tuple:
    return tuple(vals[o.rep] for o in A.orbits)


def is_consistent(M: SemiMackeyData, A: GSet, vals) -> bool:
    G = M.group
    for x in A.points:
        K = A.stabilizers[x]
        for g in G.elements:
            if vals[A.act[g][x]] != M.conj_map(g, K)[vals[x]]:
                return False
    return True


def all_elements(M: SemiMackeyData, A: GSet):
    """Every element of M(A)."""
    choices = [M.level_of(o.stabilizer).elements for o in A.orbits]
    for pick in itertools.product(*choices):
        yield extend_from_reps(M, A, pick)


def multiply(M: SemiMackeyData, A: GSet, u, v) -> tuple:
    cls = point_classes(M, A)
    return tuple(M.levels[i].op[a][b] for i, a, b in zip(cls, u, v))


def pull(M: SemiMackeyData, f: GMap, vals) -> tuple:
    """M^*(f): values on the codomain to values on the domain."""
    if len(vals) != f.cod.size:
        raise BaseMismatch("element does not live on the codomain")
    sa, sb = f.dom.stabilizers, f.cod.stabilizers
    return tuple(M.r[(sb[b], sa[a])][vals[b]] for a, b in enumerate(f.map))


def push(M: SemiMackeyData, f: GMap, vals) -> tuple:
    """M_*(f): for each b, product over G_b-orbits of the fibre of transfers."""
    if len(vals) != f.dom.size:
        raise BaseMismatch("element does not live on the domain")
    A, B = f.dom, f.cod
    sa, sb = A.stabilizers, B.stabilizers
    out = []
    fibers = f.fibers
    for b in B.points:
        Gb = sb[b]
        Q = M.level_of(Gb)
        acc = Q.unit
        seen = set()
        for a in fibers[b]:
            if a in seen:
                continue
            seen.update(A.act[h][a] for h in Gb)
            acc = Q.op[acc][M.t[(Gb, sa[a])][vals[a]]]
        out.append(acc)
    return tuple(out)


# morphisms ------------------------------------------------------------------------

def check_mackey_morphism(M: SemiMackeyData, N: SemiMackeyData, phi) -> list:
    """Problems with ``phi[i]`` (tables level_i(M) -> level_i(N)) as a morphism."""
    if M.group is not N.group:
        raise BaseMismatch("functors over different groups")
    CT = M.classes
    problems = []
    for i in range(len(CT)):
        if not is_hom(phi[i], M.levels[i], N.levels[i]):
            problems.append(("not a homomorphism", i))
        for n, tab in M.c[i].items():
            if any(phi[i][tab[v]] != N.c[i][n][phi[i][v]] for v in M.levels[i].elements):
                problems.append(("conjugation", i, n))
    for (H, K) in M.r:
        iH, iK = CT.index_of(H), CT.index_of(K)
        rM, rN, tM, tN = M.r[(H, K)], N.r[(H, K)], M.t[(H, K)], N.t[(H, K)]
        if any(phi[iK][rM[v]] != rN[phi[iH][v]] for v in M.levels[iH].elements):
            problems.append(("restriction", H, K))
        if any(phi[iH][tM[v]] != tN[phi[iK][v]] for v in M.levels[iK].elements):
            problems.append(("transfer", H, K))
    return problems


def require_mackey_morphism(M, N, phi):
    problems = check_mackey_morphism(M, N, phi)
    if problems:
        raise NotAMackeyMorphism(f"{problems[:3]}")
    return phi


def apply_morphism(M: SemiMackeyData, phi, A: GSet, vals) -> tuple:
    return tuple(phi[i][v] for i, v in zip(point_classes(M, A), vals))


def morphism_to_trivial(M: SemiMackeyData) -> list:
    return [tuple(0 for _ in L.elements) for L in M.levels]


def identity_morphism(M: SemiMackeyData) -> list:
    return [tuple(L.elements) for L in M.levels]


def ell_morphism(G: FiniteGroup, f, Q1: MonoidTable, Q2: MonoidTable) -> list:
    """A monoid map Q1 -> Q2 induces L_Q1 -> L_Q2 levelwise."""
    return [tuple(f) for _ in G.classes.reps]


# mutation fuzzing -------------------------------------------------------------------

def mutation_sites(M: SemiMackeyData) -> list:
    """Every single-entry change of an r, t or c table."""
    sites = []
    for kind, tables in (("r", M.r), ("t", M.t)):
        for key, tab in tables.items():
            H, K = key
            cod = M.level_of(K if kind == "r" else H)
            for pos, old in enumerate(tab):
                for new in cod.elements:
                    if new != old:
                        sites.append((kind, key, pos, new))
    for i, ci in enumerate(M.c):
        for n, tab in ci.items():
            for pos, old in enumerate(tab):
                for new in M.levels[i].elements:
                    if new != old:
                        sites.append(("c", (i, n), pos, new))
    return sites


def mutate(M: SemiMackeyData, site) -> SemiMackeyData:
    kind, key, pos, new = site
    out = M.copy(name=f"{M.name}*")
    if kind == "c":
        i, n = key
        tab = list(out.c[i][n])
        tab[pos] = new
        out.c[i][n] = tuple(tab)
    else:
        tables = out.r if kind == "r" else out.t
        tab = list(tables[key])
        tab[pos] = new
        tables[key] = tuple(tab)
    return out


# JSON ---------------------------------------------------------------------------------

def mackey_to_json(M: SemiMackeyData) -> dict:
    return {
        "name": M.name,
        "levels": [L.to_json() for L in M.levels],
        "r": [{"H": sorted(H), "K": sorted(K), "map": list(v)} for (H, K), v in sorted(
            M.r.items(), key=lambda kv: (sorted(kv[0][0]), sorted(kv[0][1])))],
        "t": [{"H": sorted(H), "K": sorted(K), "map": list(v)} for (H, K), v in sorted(
            M.t.items(), key=lambda kv: (sorted(kv[0][0]), sorted(kv[0][1])))],
        "c": [{"class": i, "g": n, "map": list(v)} for i, ci in enumerate(M.c)
              for n, v in sorted(ci.items())],
    }


def mackey_from_json(G: FiniteGroup, obj) -> SemiMackeyData:
    from .monoids import build_monoid

    try:
        levels = [build_monoid(L) for L in obj["levels"]]
        if len(levels) != len(G.classes):
            raise SpecError("need one level per subgroup class")
        r = {(frozenset(e["H"]), frozenset(e["K"])): tuple(e["map"]) for e in obj["r"]}
        t = {(frozenset(e["H"]), frozenset(e["K"])): tuple(e["map"]) for e in obj["t"]}
        c = [dict() for _ in levels]
        for e in obj["c"]:
            c[e["class"]][e["g"]] = tuple(e["map"])
    except (KeyError, TypeError, IndexError) as exc:
        raise SpecError(f"malformed functor JSON: {exc}")
    pairs = set(subgroup_pairs(G))
    if set(r) != pairs or set(t) != pairs:
        raise SpecError("r and t must be given for every pair K <= H of subgroups")
    for i, N in enumerate(G.classes.normalizers):
        if set(c[i]) != set(N):
            raise SpecError(f"c must be given for every element normalizing class {i}")
    return SemiMackeyData(G, levels, r, t, c, obj.get("name", "explicit"))
