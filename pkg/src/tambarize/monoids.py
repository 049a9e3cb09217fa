"""Finite commutative monoids by table, G-monoids, and monoid homomorphisms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import MonoidError, SpecError
from .groups import FiniteGroup


@dataclass(frozen=True, eq=False)
class MonoidTable:
    op: tuple
    unit: int = 0
    names: tuple = None
    name: str = "Q"

    def __post_init__(self):
        object.__setattr__(self, "op", tuple(tuple(r) for r in self.op))
        if self.names is None:
            object.__setattr__(self, "names", tuple(str(i) for i in range(len(self.op))))
        else:
            object.__setattr__(self, "names", tuple(self.names))

    def __eq__(self, other):
        return isinstance(other, MonoidTable) and other.op == self.op and other.unit == self.unit

    def __hash__(self):
        return hash((self.op, self.unit))

    def __repr__(self):
        return f"MonoidTable({self.name}, size={self.size})"

    @property
    def size(self) -> int:
        return len(self.op)

    @property
    def elements(self):
        return range(len(self.op))

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def prod(self, items) -> int:
        out = self.unit
        for q in items:
            out = self.op[out][q]
        return out

    def power(self, q: int, n: int) -> int:
        out = self.unit
        for _ in range(n):
            out = self.op[out][q]
        return out

    def validate(self):
        n = self.size
        if n == 0:
            raise MonoidError("empty monoid")
        for row in self.op:
            if len(row) != n or any(not isinstance(v, int) or not 0 <= v < n for v in row):
                raise MonoidError("malformed monoid table")
        if not 0 <= self.unit < n:
            raise MonoidError("unit out of range")
        op = self.op
        for a in range(n):
            if op[self.unit][a] != a:
                raise MonoidError(f"unit law fails at {a}")
            for b in range(a):
                if op[a][b] != op[b][a]:
                    raise MonoidError(f"not commutative at ({a}, {b})")
        for a, b, c in itertools.product(range(n), repeat=3):
            if op[op[a][b]][c] != op[a][op[b][c]]:
                raise MonoidError(f"not associative at ({a}, {b}, {c})")
        return self

    @cached_property
    def inverses(self):
        """inverse table if every element is invertible, else None."""
        inv = []
        for a in self.elements:
            cands = [b for b in self.elements if self.op[a][b] == self.unit]
            if not cands:
                return None
            inv.append(cands[0])
        return tuple(inv)

    def is_group(self) -> bool:
        return self.inverses is not None

    def to_json(self) -> dict:
        return {"size": self.size, "op": [list(r) for r in self.op], "unit": self.unit}


def is_hom(f, Q1: MonoidTable, Q2: MonoidTable) -> bool:
    if f[Q1.unit] != Q2.unit:
        return False
    return all(f[Q1.op[a][b]] == Q2.op[f[a]][f[b]] for a in Q1.elements for b in Q1.elements)


def monoid_homs(Q1: MonoidTable, Q2: MonoidTable) -> list:
    """All monoid homomorphisms Q1 -> Q2 as value tuples."""
    out = []
    n = Q1.size
    # assign values in element order, checking every product whose factors are set
    f = [None] * n

    def ok(k):
        for a in range(k + 1):
            for b in range(k + 1):
                c = Q1.op[a][b]
                if f[c] is not None and f[a] is not None and f[b] is not None:
                    if f[c] != Q2.op[f[a]][f[b]]:
                        return False
        return True

    def rec(k):
        if k == n:
            t = tuple(f)
            if is_hom(t, Q1, Q2):
                out.append(t)
            return
        if k == Q1.unit:
            vals = [Q2.unit]
        else:
            vals = Q2.elements
        for v in vals:
            f[k] = v
            if ok(k):
                rec(k + 1)
        f[k] = None

    rec(0)
    return out


def submonoid(Q: MonoidTable, elems, name=None):
    """Sub-table on a multiplicatively closed subset containing the unit.

    Returns (table, embedding tuple); the unit becomes whatever index it has
    in the sorted subset.
    """
    elems = sorted(set(elems))
    pos = {q: i for i, q in enumerate(elems)}
    try:
        op = [[pos[Q.op[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise MonoidError("subset not closed under multiplication")
    if Q.unit not in pos:
        raise MonoidError("subset does not contain the unit")
    sub = MonoidTable(op, pos[Q.unit], tuple(Q.names[q] for q in elems), name or Q.name)
    return sub, tuple(elems)


# builtins ----------------------------------------------------------------------

def trivial_monoid() -> MonoidTable:
    return MonoidTable(((0,),), 0, ("1",), "trivial")


def cyclic_monoid(n: int) -> MonoidTable:
    """The cyclic group of order n written multiplicatively: 1, w, w^2, ..."""
    if n < 1:
        raise SpecError("cyclic monoid needs n >= 1")
    names = ["1", "w"] + [f"w{i}" for i in range(2, n)]
    return MonoidTable(
        [[(a + b) % n for b in range(n)] for a in range(n)], 0, tuple(names[:n]), f"C{n}"
    )


def absorbing_monoid() -> MonoidTable:
    """{1, z} with z*z = z."""
    return MonoidTable(((0, 1), (1, 1)), 0, ("1", "z"), "bool")


def nil_monoid() -> MonoidTable:
    """{1, a, 0} with a*a = 0."""
    return MonoidTable(((0, 1, 2), (1, 2, 2), (2, 2, 2)), 0, ("1", "a", "0"), "nil3")


def idempotent_monoid() -> MonoidTable:
    """{1, a, 0} with a*a = a."""
    return MonoidTable(((0, 1, 2), (1, 1, 2), (2, 2, 2)), 0, ("1", "a", "0"), "idem3")


def zmod_monoid(n: int) -> MonoidTable:
    """Z/n under multiplication; element k is residue k, unit is 1."""
    if n < 2:
        raise SpecError("zmod monoid needs n >= 2")
    return MonoidTable(
        [[(a * b) % n for b in range(n)] for a in range(n)], 1, tuple(str(k) for k in range(n)),
        f"Z/{n}",
    )


BUILTIN_MONOIDS = {
    "trivial": trivial_monoid,
    "bool": absorbing_monoid,
    "nil3": nil_monoid,
    "idem3": idempotent_monoid,
}


def build_monoid(spec) -> MonoidTable:
    if isinstance(spec, MonoidTable):
        return spec
    if isinstance(spec, str):
        if spec in BUILTIN_MONOIDS:
            return BUILTIN_MONOIDS[spec]()
        kind, _, arg = spec.partition(":")
        try:
            n = int(arg)
        except ValueError:
            raise SpecError(f"unknown monoid {spec!r}")
        if kind == "cyclic":
            return cyclic_monoid(n)
        if kind == "zmod":
            return zmod_monoid(n)
        raise SpecError(f"unknown monoid {spec!r}")
    if isinstance(spec, dict):
        try:
            Q = MonoidTable(spec["op"], spec.get("unit", 0), spec.get("names"), spec.get("name", "Q"))
        except (KeyError, TypeError):
            raise SpecError("monoid JSON needs 'op'")
        if spec.get("size", Q.size) != Q.size:
            raise SpecError("declared monoid size does not match its table")
        return Q.validate()
    raise SpecError(f"cannot build a monoid from {spec!r}")


# G-monoids -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GMonoid:
    """A monoid with G acting by automorphisms: ``action[g][q]``."""

    group: FiniteGroup
    monoid: MonoidTable
    action: tuple = field(default=None)

    def __post_init__(self):
        if self.action is None:
            act = tuple(tuple(self.monoid.elements) for _ in self.group.elements)
        else:
            act = tuple(tuple(r) for r in self.action)
        object.__setattr__(self, "action", act)

    def act(self, g: int, q: int) -> int:
        return self.action[g][q]

    @property
    def is_trivial_action(self) -> bool:
        return all(r == tuple(self.monoid.elements) for r in self.action)

    def fixed(self, H) -> list:
        return [q for q in self.monoid.elements if all(self.action[h][q] == q for h in H)]

    def validate(self):
        G, Q = self.group, self.monoid
        if len(self.action) != G.order:
            raise MonoidError("action needs one row per group element")
        for g in G.elements:
            row = self.action[g]
            if len(row) != Q.size or sorted(row) != list(Q.elements):
                raise MonoidError(f"element {g} does not act by a bijection")
            if not is_hom(row, Q, Q):
                raise MonoidError(f"element {g} does not act by a monoid automorphism")
            for h in G.elements:
                gh = G.mul(g, h)
                if any(row[self.action[h][q]] != self.action[gh][q] for q in Q.elements):
                    raise MonoidError("not a group action")
        if any(self.action[0][q] != q for q in Q.elements):
            raise MonoidError("identity acts nontrivially")
        return self


def trivial_action(G: FiniteGroup, Q: MonoidTable) -> GMonoid:
    return GMonoid(G, Q)


def index_two_subgroup(G: FiniteGroup):
    """Least index-2 subgroup (by class order), or None."""
    for R in G.classes.reps:
        if 2 * len(R) == G.order:
            return R
    return None


def sign_action(G: FiniteGroup, Q: MonoidTable) -> GMonoid:
    """Elements outside an index-2 subgroup act by inversion (Q an abelian group).

    Falls back to the trivial action when G has no index-2 subgroup.
    """
    N = index_two_subgroup(G)
    inv = Q.inverses
    if inv is None:
        raise MonoidError("sign action needs every element of Q invertible")
    if N is None:
        return GMonoid(G, Q)
    ident = tuple(Q.elements)
    return GMonoid(G, Q, tuple(ident if g in N else inv for g in G.elements)).validate()


def gmonoid_from_json(G: FiniteGroup, spec) -> GMonoid:
    Q = build_monoid(spec)
    action = spec.get("action") if isinstance(spec, dict) else None
    return GMonoid(G, Q, action).validate()
