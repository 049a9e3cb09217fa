"""Finite groups given by Cayley tables, their subgroups and subgroup classes.

Conventions used throughout the package: element 0 is the identity, and
conjugation of a subgroup is written ``conj(g, K) = g K g^-1``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    GroupTooLarge,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotASubgroup,
    NotContained,
    SpecError,
)

DEFAULT_MAX_ORDER = 120


def max_group_order() -> int:
    raw = os.environ.get("TAMBARIZE_MAX_GROUP_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"TAMBARIZE_MAX_GROUP_ORDER must be an integer, got {raw!r}")


class FiniteGroup:
    """A group on the elements 0..order-1 with identity 0.

    Instances compare by identity; two separately built copies of C2 are
    different ambient groups.
    """

    def __init__(self, mul, name: str = "G", _checked: bool = False):
        self.mul_table = tuple(tuple(row) for row in mul)
        self.order = len(self.mul_table)
        self.name = name
        self.identity = 0
        if not _checked:
            _validate_table(self.mul_table)
        inv = [0] * self.order
        for a in range(self.order):
            row = self.mul_table[a]
            inv[a] = row.index(0)
        self.inv_table = tuple(inv)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def conj_elt(self, g: int, x: int) -> int:
        return self.mul_table[self.mul_table[g][x]][self.inv_table[g]]

    def conj(self, g: int, K) -> frozenset:
        """g K g^-1 as a frozenset of element indices."""
        m, gi = self.mul_table, self.inv_table[g]
        return frozenset(m[m[g][k]][gi] for k in _elems(K))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul_table[x][a]
            n += 1
        return n

    def is_abelian(self) -> bool:
        m = self.mul_table
        return all(m[a][b] == m[b][a] for a in self.elements for b in range(a))

    # subgroups ---------------------------------------------------------

    def closure(self, gens) -> frozenset:
        """Subgroup generated by ``gens``."""
        m = self.mul_table
        found = {0}
        frontier = [0]
        gens = list(set(gens))
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = m[x][g]
                    if y not in found:
                        found.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(found)

    def subgroup(self, elements) -> "Subgroup":
        s = frozenset(elements)
        check_subgroup(self, s)
        return Subgroup(self, tuple(sorted(s)))

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))

    @cached_property
    def all_subgroups(self) -> tuple:
        """Every subgroup, as frozensets, by closure over cyclic subgroups."""
        cyclic = {self.closure([g]) for g in self.elements}
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            nxt = []
            for S in frontier:
                for C in cyclic:
                    if C <= S:
                        continue
                    J = self.closure(S | C)
                    if J not in found:
                        found.add(J)
                        nxt.append(J)
            frontier = nxt
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    @cached_property
    def classes(self) -> "SubgroupClassTable":
        return subgroup_classes(self)

    def normalizer(self, K) -> frozenset:
        K = frozenset(_elems(K))
        return frozenset(g for g in self.elements if self.conj(g, K) == K)

    def left_cosets(self, H) -> list:
        """Left coset representatives g of G/H, least element of each coset."""
        H = sorted(_elems(H))
        seen = set()
        reps = []
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(self.mul_table[g][h] for h in H)
        return reps

    def left_cosets_in(self, H, K) -> list:
        """Representatives of H/K for K <= H, least element of each coset."""
        seen = set()
        reps = []
        for h in sorted(_elems(H)):
            if h in seen:
                continue
            reps.append(h)
            seen.update(self.mul_table[h][k] for k in _elems(K))
        return reps


def _elems(K):
    if isinstance(K, Subgroup):
        return K.elements
    return K


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FiniteGroup
    elements: tuple

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.group is self.group
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.as_set

    @cached_property
    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)


def check_subgroup(G: FiniteGroup, S) -> None:
    S = frozenset(S)
    if 0 not in S or any(not (0 <= s < G.order) for s in S):
        raise NotASubgroup(f"{sorted(S)} does not contain the identity of {G.name}")
    if G.order % len(S):
        raise NotASubgroup(f"order {len(S)} does not divide {G.order}")
    for a in S:
        if G.inv(a) not in S:
            raise NotASubgroup(f"{sorted(S)} not closed under inverses")
        for b in S:
            if G.mul(a, b) not in S:
                raise NotASubgroup(f"{sorted(S)} not closed under multiplication")


def _validate_table(mul) -> None:
    n = len(mul)
    if n == 0:
        raise MalformedTable("empty table")
    for row in mul:
        if len(row) != n:
            raise MalformedTable("table is not square")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"entry {v!r} out of range 0..{n - 1}")
    ids = [e for e in range(n) if all(mul[e][x] == x and mul[x][e] == x for x in range(n))]
    if not ids:
        raise NoIdentity("no two-sided identity")
    if ids[0] != 0:
        raise MalformedTable("identity must be element 0 (use from_table to renormalise)")
    for a in range(n):
        if not any(mul[a][b] == 0 and mul[b][a] == 0 for b in range(n)):
            raise NoInverse(f"element {a} has no inverse")
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise NonAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})")


# builders ---------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("cyclic group needs n >= 1")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}", _checked=True)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element r^i s^j has index i + n*j."""
    if n < 2:
        raise SpecError("dihedral group needs n >= 2")

    def mul(x, y):
        i, a = x % n, x // n
        k, b = y % n, y // n
        return (i + (k if a == 0 else -k)) % n + n * ((a + b) % 2)

    N = 2 * n
    return FiniteGroup([[mul(x, y) for y in range(N)] for x in range(N)], f"D{n}", _checked=True)


def symmetric(n: int) -> FiniteGroup:
    """Permutations of n letters in lexicographic order; (ab)(i) = a(b(i))."""
    if not 1 <= n <= 5:
        raise SpecError("symmetric group needs 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    G = FiniteGroup(mul, f"S{n}", _checked=True)
    G.permutations = tuple(perms)
    return G


def from_table(mul, name: str | None = None) -> FiniteGroup:
    """Validate an explicit table, moving the identity to index 0 if needed."""
    try:
        rows = [list(r) for r in mul]
    except TypeError:
        raise MalformedTable("table must be a list of rows")
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise MalformedTable("table is not square")
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"entry {v!r} out of range")
    ids = [e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))]
    if not ids:
        raise NoIdentity("no two-sided identity")
    e = ids[0]
    if e != 0:
        swap = list(range(n))
        swap[0], swap[e] = e, 0
        rows = [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
    return FiniteGroup(rows, name or f"G{n}")


def build_group(spec) -> FiniteGroup:
    """Build from a GroupSpec dict or a short string like ``cyclic:4``."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, str):
        kind, _, arg = spec.partition(":")
        if kind == "trivial" and not arg:
            return cyclic(1)
        try:
            spec = {"kind": kind, "n": int(arg)}
        except ValueError:
            raise SpecError(f"cannot parse group spec {spec!r}")
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError(f"group spec must be an object with a 'kind', got {spec!r}")
    kind = spec["kind"]
    if kind == "table":
        if "mul" not in spec:
            raise MalformedTable("table group spec needs 'mul'")
        return from_table(spec["mul"], spec.get("name"))
    builders = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
    if kind not in builders:
        raise SpecError(f"unknown group kind {kind!r}")
    n = spec.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise SpecError(f"group spec {spec!r} needs an integer 'n'")
    return builders[kind](n)


# subgroup classes -----------------------------------------------------------

class SubgroupClassTable:
    """Conjugacy classes of subgroups with canonical representatives.

    Classes are ordered by (order, sorted elements of the representative);
    the representative is the lexicographically least conjugate.
    """

    def __init__(self, G: FiniteGroup):
        self.group = G
        found = {}
        reps = []
        for S in G.all_subgroups:
            if S in found:
                continue
            conjugates = {}
            for g in G.elements:
                C = G.conj(g, S)
                conjugates.setdefault(C, g)
            rep = min(conjugates, key=lambda s: sorted(s))
            reps.append((rep, conjugates))
            found.update(dict.fromkeys(conjugates))
        reps.sort(key=lambda rc: (len(rc[0]), sorted(rc[0])))
        self.reps = tuple(rc[0] for rc in reps)
        self._class_of = {}
        for idx, (rep, conjugates) in enumerate(reps):
            # conjugates[C] = g0 with g0 S g0^-1 = C; re-base to rep
            g_rep = conjugates[rep]
            for C, g in conjugates.items():
                # want w with w C w^-1 = rep: w = g_rep g^-1 maps C -> S -> rep
                w = G.mul(g_rep, G.inv(g))
                self._class_of[C] = (idx, w)
        self.normalizers = tuple(G.normalizer(R) for R in self.reps)
        self.names = self._make_names()

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    @property
    def representatives(self):
        return [Subgroup(self.group, tuple(sorted(r))) for r in self.reps]

    def class_of(self, K):
        """(class index, w) with w K w^-1 equal to the representative."""
        K = frozenset(_elems(K))
        try:
            return self._class_of[K]
        except KeyError:
            raise NotASubgroup(f"{sorted(K)} is not a subgroup of {self.group.name}")

    def index_of(self, K) -> int:
        return self.class_of(K)[0]

    def size(self, i: int) -> int:
        return len(self.reps[i])

    @cached_property
    def inclusion_up_to_conj(self):
        """incl[i][j] is True when rep i is contained in some conjugate of rep j."""
        G = self.group
        n = len(self.reps)
        out = [[False] * n for _ in range(n)]
        for j, R in enumerate(self.reps):
            for g in G.elements:
                C = G.conj(g, R)
                for i, S in enumerate(self.reps):
                    if not out[i][j] and S <= C:
                        out[i][j] = True
        return out

    def _make_names(self):
        G = self.group
        raw = []
        for R in self.reps:
            raw.append(_iso_name(G, R))
        counts = {}
        for r in raw:
            counts[r] = counts.get(r, 0) + 1
        seen = {}
        names = []
        for r in raw:
            if counts[r] > 1:
                seen[r] = seen.get(r, 0) + 1
                names.append(f"{r}#{seen[r]}")
            else:
                names.append(r)
        return tuple(names)

    def name(self, i: int) -> str:
        return self.names[i]

    def lookup_name(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise SpecError(f"no subgroup class named {name!r} in {self.group.name}")


def _iso_name(G: FiniteGroup, R: frozenset) -> str:
    n = len(R)
    if n == 1:
        return "e"
    if n == G.order:
        return G.name
    orders = [G.element_order(g) for g in R]
    if max(orders) == n:
        return f"C{n}"
    abelian = all(G.mul(a, b) == G.mul(b, a) for a in R for b in R)
    if abelian and max(orders) == 2:
        return f"V{n}"
    if n == 6 and not abelian:
        return "S3"
    if not abelian and n % 2 == 0 and orders.count(n // 2) >= 1 and orders.count(2) >= n // 2:
        return f"D{n // 2}"
    return f"H{n}"


def subgroup_classes(G: FiniteGroup) -> SubgroupClassTable:
    bound = max_group_order()
    if G.order > bound:
        raise GroupTooLarge(f"|G| = {G.order} exceeds bound {bound}")
    if "classes" in G.__dict__:
        return G.__dict__["classes"]
    table = SubgroupClassTable(G)
    G.__dict__["classes"] = table
    return table


def normalizer(G: FiniteGroup, K) -> Subgroup:
    K = frozenset(_elems(K))
    check_subgroup(G, K)
    return Subgroup(G, tuple(sorted(G.normalizer(K))))


def double_cosets(G: FiniteGroup, H, K, L) -> list:
    """Representatives h of L\\H/K, each the least element of its double coset."""
    H, K, L = (frozenset(_elems(x)) for x in (H, K, L))
    if not K <= H or not L <= H:
        raise NotContained("double cosets need K <= H and L <= H")
    seen = set()
    reps = []
    m = G.mul_table
    for h in sorted(H):
        if h in seen:
            continue
        reps.append(h)
        seen.update(m[m[l][h]][k] for l in L for k in K)
    return reps


def double_coset(G: FiniteGroup, L, h: int, K) -> frozenset:
    m = G.mul_table
    return frozenset(m[m[l][h]][k] for l in _elems(L) for k in _elems(K))


def as_group(G: FiniteGroup, H, name: str | None = None):
    """H as a FiniteGroup of its own; returns (group, index list into G)."""
    elems = sorted(_elems(H))
    pos = {g: i for i, g in enumerate(elems)}
    mul = [[pos[G.mul(a, b)] for b in elems] for a in elems]
    if name is None:
        name = _iso_name(G, frozenset(elems)) if len(elems) != G.order else G.name
    return FiniteGroup(mul, name, _checked=True), elems
