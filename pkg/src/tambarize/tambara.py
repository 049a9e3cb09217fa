"""Rings of labeled G-sets over a base, and the Tambarization of a semi-Mackey functor.

An element over X is an integer combination of *classes*.  A class is one
transitive labeled G-set over X, recorded canonically as

* ``orbit``: index of the X-orbit it lies over (rep x_i, stabilizer H),
* ``stab``:  the stabilizer K <= H of a point over x_i, as the least
  H-conjugate (sorted tuple),
* ``label``: the label at that point, least over all h in H that realise the
  same ``stab``.

``LabeledRing`` implements everything that only depends on how labels are
pulled back, multiplied, conjugated and normed; ``Tambarization`` fills these
in from a semi-Mackey functor.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BaseMismatch, GroupMismatch
from .groups import FiniteGroup
from .gsets import (
    GMap,
    GSet,
    coproduct_many,
    coset_reps,
    coset_space,
    dependent_product,
    pullback,
)
from . import mackey as mk


@dataclass(frozen=True, order=True)
class BasicClass:
    orbit: int
    stab: tuple
    label: int

    def sort_key(self):
        return (self.orbit, len(self.stab), self.stab, self.label)


def _sorted_terms(d) -> tuple:
    return tuple(sorted(((c, k) for c, k in d.items() if k), key=lambda ck: ck[0].sort_key()))


class RingElt:
    """Integer combination of canonical classes over a base G-set."""

    __slots__ = ("owner", "base", "terms", "_hash")

    def __init__(self, owner, base: GSet, terms):
        self.owner = owner
        self.base = base
        if isinstance(terms, dict):
            terms = _sorted_terms(terms)
        self.terms = tuple(terms)
        self._hash = None

    # container-ish
    def as_dict(self) -> dict:
        return dict(self.terms)

    def coeff(self, cls) -> int:
        return self.as_dict().get(cls, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        return all(k > 0 for _, k in self.terms)

    def positive_part(self):
        return RingElt(self.owner, self.base, {c: k for c, k in self.terms if k > 0})

    def negative_part(self):
        """b >= 0 with self = positive_part - b."""
        return RingElt(self.owner, self.base, {c: -k for c, k in self.terms if k < 0})

    def __eq__(self, other):
        if not isinstance(other, RingElt):
            return NotImplemented
        return self.base == other.base and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, self.terms))
        return self._hash

    def __repr__(self):
        return f"RingElt({self.owner.format(self)})"

    def _coerce(self, other):
        if isinstance(other, RingElt):
            if other.base != self.base:
                raise BaseMismatch("elements over different bases")
            return other
        if isinstance(other, int):
            return self.owner.one(self.base).scale(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = Counter(self.as_dict())
        for c, k in other.terms:
            d[c] += k
        return RingElt(self.owner, self.base, dict(d))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.owner.mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = self.owner.one(self.base)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, k: int):
        return RingElt(self.owner, self.base, {c: k * v for c, v in self.terms})


class SemiRingElt(RingElt):
    """Effective element (all coefficients positive); sums and products stay effective."""

    __slots__ = ()

    def __init__(self, owner, base, terms):
        super().__init__(owner, base, terms)
        if any(k < 0 for _, k in self.terms):
            raise ValueError("semiring elements have nonnegative multiplicities")

    def __add__(self, other):
        out = RingElt.__add__(self, other)
        if isinstance(other, SemiRingElt):
            return SemiRingElt(out.owner, out.base, out.terms)
        return out

    def __mul__(self, other):
        out = RingElt.__mul__(self, other)
        if isinstance(other, SemiRingElt) or (isinstance(other, int) and other >= 0):
            return SemiRingElt(out.owner, out.base, out.terms)
        return out


def k0(s: RingElt) -> RingElt:
    """Image in the ring completion (forgets effectiveness)."""
    return RingElt(s.owner, s.base, s.terms)


class LabeledRing:
    """Base for rings of labeled G-sets; subclasses define the label calculus."""

    labels_trivial = False

    def __init__(self, G: FiniteGroup, name: str):
        self.group = G
        self.name = name
        self._canon_cache = {}
        self._realize_cache = {}
        self._mul_cache = {}
        self._res_cache = {}

    # label calculus (override) ------------------------------------------------
    def conj_label(self, g: int, K: frozenset, v):
        raise NotImplementedError

    def pull_labels(self, f: GMap, labels) -> tuple:
        raise NotImplementedError

    def mul_labels(self, A: GSet, u, v) -> tuple:
        raise NotImplementedError

    def unit_label(self, K: frozenset):
        raise NotImplementedError

    def norm_labeled(self, eta: GMap, p: GMap, labels) -> dict:
        raise NotImplementedError

    def label_name(self, K, v) -> str:
        return str(v)

    # canonical forms ---------------------------------------------------------------
    def _canon(self, H: frozenset, K: frozenset, v):
        key = (H, K, v)
        hit = self._canon_cache.get(key)
        if hit is not None:
            return hit
        G = self.group
        best = None
        for h in sorted(H):
            cand = (tuple(sorted(G.conj(h, K))), self.conj_label(h, K, v))
            if best is None or cand < best:
                best = cand
        self._canon_cache[key] = best
        return best

    def classify(self, p: GMap, labels) -> Counter:
        """Multiset of canonical classes of a labeled object (A -p-> X, labels)."""
        X, A = p.cod, p.dom
        G = self.group
        out = Counter()
        for o in A.orbits:
            a = o.rep
            x = p.map[a]
            i = X.orbit_index[x]
            xo = X.orbits[i]
            g = xo.transversal[x]
            a2 = A.act[G.inv(g)][a]
            stab, lab = self._canon(xo.stabilizer, A.stabilizers[a2], labels[a2])
            out[BasicClass(i, stab, lab)] += 1
        return out

    def canonicalize(self, p: GMap, labels) -> SemiRingElt:
        return SemiRingElt(self, p.cod, dict(self.classify(p, labels)))

    def realize(self, X: GSet, cls: BasicClass):
        """(p: G/K -> X, labels) representing the class."""
        key = (X, cls)
        hit = self._realize_cache.get(key)
        if hit is not None:
            return hit
        G = self.group
        K = frozenset(cls.stab)
        A = coset_space(G, K)
        xi = X.orbits[cls.orbit].rep
        reps = coset_reps(G, K)
        p = GMap(A, X, [X.act[r][xi] for r in reps])
        labels = tuple(self.conj_label(r, K, cls.label) for r in reps)
        out = (p, labels)
        self._realize_cache[key] = out
        return out

    def realize_element(self, x: RingElt):
        """A single labeled object for an effective element."""
        if not x.is_effective():
            raise ValueError("only effective elements are realised by G-sets")
        X = x.base
        parts = []
        for cls, k in x.terms:
            parts.extend([self.realize(X, cls)] * k)
        if not parts:
            from .gsets import from_empty

            return from_empty(X), ()
        S, injs = coproduct_many([p.dom for p, _ in parts])
        pmap = []
        labels = []
        for p, lab in parts:
            pmap.extend(p.map)
            labels.extend(lab)
        return GMap(S, X, pmap), tuple(labels)

    # construction ----------------------------------------------------------------
    def elt(self, X: GSet, terms) -> RingElt:
        return RingElt(self, X, terms)

    def zero(self, X: GSet) -> RingElt:
        return RingElt(self, X, ())

    def one(self, X: GSet) -> SemiRingElt:
        return SemiRingElt(self, X, {self.unit_class(X, i): 1 for i in range(len(X.orbits))})

    def unit_class(self, X: GSet, i: int) -> BasicClass:
        H = X.orbits[i].stabilizer
        return BasicClass(i, tuple(sorted(H)), self.unit_label(H))

    def burnside_class(self, i: int, K) -> BasicClass:
        """Class of G/K over orbit i carrying the unit label."""
        return BasicClass(i, tuple(sorted(K)), self.unit_label(frozenset(K)))

    def from_burnside(self, X: GSet, coeffs: dict) -> RingElt:
        """Embed {(orbit, K): n} via unit labels."""
        d = Counter()
        for (i, K), n in coeffs.items():
            d[self.burnside_class(i, K)] += n
        return RingElt(self, X, dict(d))

    # ring operations ----------------------------------------------------------------
    def _check(self, x: RingElt, X: GSet):
        if x.base != X:
            raise BaseMismatch("element does not live over the expected base")

    def class_mul(self, X: GSet, c1: BasicClass, c2: BasicClass) -> Counter:
        if c2.sort_key() < c1.sort_key():
            c1, c2 = c2, c1
        key = (X, c1, c2)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        p1, l1 = self.realize(X, c1)
        p2, l2 = self.realize(X, c2)
        P, pr1, pr2 = pullback(p1, p2)
        labels = self.mul_labels(P, self.pull_labels(pr1, l1), self.pull_labels(pr2, l2))
        out = self.classify(pr1.then(p1), labels)
        self._mul_cache[key] = out
        return out

    def add(self, x: RingElt, y: RingElt) -> RingElt:
        return x + y

    def mul(self, x: RingElt, y: RingElt) -> RingElt:
        if x.base != y.base:
            raise BaseMismatch("product of elements over different bases")
        X = x.base
        d = Counter()
        for c1, k1 in x.terms:
            for c2, k2 in y.terms:
                for c, k in self.class_mul(X, c1, c2).items():
                    d[c] += k1 * k2 * k
        cls = SemiRingElt if x.is_effective() and y.is_effective() else RingElt
        return cls(self, X, dict(d))

    def restrict(self, zeta: GMap, x: RingElt) -> RingElt:
        """zeta^* along zeta: Y -> X."""
        self._check(x, zeta.cod)
        Y = zeta.dom
        d = Counter()
        for cls, k in x.terms:
            key = (zeta, cls)
            hit = self._res_cache.get(key)
            if hit is None:
                p, lab = self.realize(zeta.cod, cls)
                P, pr_y, pr_a = pullback(zeta, p)
                hit = self.classify(pr_y, self.pull_labels(pr_a, lab))
                self._res_cache[key] = hit
            for c, n in hit.items():
                d[c] += k * n
        return type(x)(self, Y, dict(d)) if x.is_effective() else RingElt(self, Y, dict(d))

    def transfer(self, xi: GMap, x: RingElt) -> RingElt:
        """xi_+ along xi: X -> Y."""
        self._check(x, xi.dom)
        d = Counter()
        for cls, k in x.terms:
            p, lab = self.realize(xi.dom, cls)
            for c, n in self.classify(p.then(xi), lab).items():
                d[c] += k * n
        return type(x)(self, xi.cod, dict(d)) if x.is_effective() else RingElt(self, xi.cod, dict(d))

    def norm(self, eta: GMap, x: RingElt) -> SemiRingElt:
        """eta_bullet on an effective element, via the exponential diagram."""
        self._check(x, eta.dom)
        p, labels = self.realize_element(x)
        return SemiRingElt(self, eta.cod, dict(self.norm_labeled(eta, p, labels)))

    def norm_on_ring(self, eta: GMap, x: RingElt) -> RingElt:
        from .completion import norm_on_ring

        return norm_on_ring(self, eta, x)

    def cross_product(self, x: RingElt, y: RingElt) -> RingElt:
        """x x y over X x Y: product of the pullbacks along both projections."""
        if x.base.group is not y.base.group:
            raise GroupMismatch("cross product of elements over different groups")
        from .gsets import product

        P, prx, pry = product(x.base, y.base)
        return self.restrict(prx, x) * self.restrict(pry, y)

    # presentation -----------------------------------------------------------------
    def basis(self, X: GSet) -> list:
        """All classes over X, in canonical order (enumerates labels per stabilizer)."""
        G = self.group
        from .marks import local_classes

        out = []
        for i, o in enumerate(X.orbits):
            H = o.stabilizer
            for K in local_classes(G, H):
                labels = set()
                for v in self.labels_at(frozenset(K)):
                    labels.add(self._canon(H, frozenset(K), v)[1])
                for v in sorted(labels):
                    out.append(BasicClass(i, K, v))
        return out

    def labels_at(self, K: frozenset):
        raise NotImplementedError

    def class_name(self, X: GSet, cls: BasicClass) -> str:
        G = self.group
        H = X.orbits[cls.orbit].stabilizer
        hname = _subgroup_name(G, H)
        kname = _subgroup_name(G, frozenset(cls.stab))
        lab = self.label_name(frozenset(cls.stab), cls.label)
        base = f"[{hname}/{kname}" if len(X.orbits) == 1 else f"[{hname}/{kname} @{cls.orbit}"
        if lab is None:
            return base + "]"
        return f"{base}; q={lab}]"

    def format(self, x: RingElt) -> str:
        if not x.terms:
            return "0"
        parts = []
        for c, k in x.terms:
            name = self.class_name(x.base, c)
            parts.append(name if k == 1 else f"{k}*{name}")
        return " + ".join(parts)


def _subgroup_name(G: FiniteGroup, K: frozenset) -> str:
    return G.classes.names[G.classes.index_of(K)]


class Tambarization(LabeledRing):
    """Ring of M-labeled G-sets over each base, with restriction, transfer and norm."""

    def __init__(self, M: mk.SemiMackeyData, name: str | None = None):
        super().__init__(M.group, name or f"T[{M.name}]")
        self.M = M
        self.labels_trivial = M.is_trivial()

    def conj_label(self, g, K, v):
        return self.M.conj_map(g, K)[v]

    def pull_labels(self, f, labels):
        return mk.pull(self.M, f, labels)

    def push_labels(self, f, labels):
        return mk.push(self.M, f, labels)

    def mul_labels(self, A, u, v):
        return mk.multiply(self.M, A, u, v)

    def unit_label(self, K):
        return self.M.level_of(K).unit

    def labels_at(self, K):
        return self.M.level_of(K).elements

    def label_name(self, K, v):
        if self.labels_trivial:
            return None
        return self.M.level_of(K).names[v]

    def norm_labeled(self, eta, p, labels):
        D = dependent_product(eta, p)
        lab = mk.push(self.M, D.rho, mk.pull(self.M, D.lam, labels))
        return self.classify(D.pi, lab)

    def labeled(self, p: GMap, labels) -> SemiRingElt:
        """Class of an arbitrary labeled object; labels must be consistent."""
        return self.canonicalize(p, labels)


def tambarize_morphism(S: Tambarization, T: Tambarization, phi, x: RingElt) -> RingElt:
    """Apply the map induced by a Mackey morphism phi: S.M -> T.M."""
    mk.require_mackey_morphism(S.M, T.M, phi)
    d = Counter()
    for cls, k in x.terms:
        p, lab = S.realize(x.base, cls)
        new = mk.apply_morphism(S.M, phi, p.dom, lab)
        for c, n in T.classify(p, new).items():
            d[c] += k * n
    cls_ = SemiRingElt if x.is_effective() else RingElt
    return cls_(T, x.base, dict(d))


def level_set(G: FiniteGroup, H) -> GSet:
    """G/H, the base of the level T(G/H)."""
    return coset_space(G, frozenset(H))
