"""Finite ring presentations: a basis and integer structure constants.

mul[i][j] is the coefficient vector of basis[i] * basis[j].  Every ring in the
package (T_M(X), Omega_Q(X), B_Q(H), Z[Q]) can be exported to this form so that
tables are compared entry by entry.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class RingPresentation:
    names: list
    basis: list  # JSON-able descriptions, e.g. {"stab": "C2", "label": "w"}
    mul: list
    one: list
    metadata: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.names)

    def product(self, u, v) -> list:
        n = self.rank
        out = [0] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                row = self.mul[i][j]
                for k in range(n):
                    out[k] += a * b * row[k]
        return out

    def unit_vector(self, i: int) -> list:
        v = [0] * self.rank
        v[i] = 1
        return v

    def to_json(self) -> dict:
        d = {"basis": self.basis, "mul": self.mul, "one": self.one}
        if self.metadata:
            d["metadata"] = self.metadata
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1, ensure_ascii=False)

    def format_vector(self, v) -> str:
        parts = []
        for k, c in enumerate(v):
            if c == 0:
                continue
            parts.append(self.names[k] if c == 1 else f"{c}*{self.names[k]}")
        return " + ".join(parts) if parts else "0"

    def to_text(self) -> str:
        lines = []
        for key in sorted(self.metadata):
            lines.append(f"# {key}: {self.metadata[key]}")
        lines.append(f"rank {self.rank}")
        lines.append("basis: " + ", ".join(self.names))
        lines.append("one = " + self.format_vector(self.one))
        w = max((len(s) for s in self.names), default=1)
        for i in range(self.rank):
            for j in range(i, self.rank):
                lhs = f"{self.names[i]:>{w}} * {self.names[j]:<{w}}"
                lines.append(f"{lhs} = {self.format_vector(self.mul[i][j])}")
        return "\n".join(lines) + "\n"


def present(T, X) -> RingPresentation:
    """Presentation of T(X) for a labeled ring T, in canonical basis order."""
    basis = T.basis(X)
    index = {c: i for i, c in enumerate(basis)}
    n = len(basis)

    def vec(x):
        v = [0] * n
        for c, k in x.terms:
            v[index[c]] = k
        return v

    mul = [[None] * n for _ in range(n)]
    for i, c1 in enumerate(basis):
        for j in range(i, n):
            prod = T.elt(X, dict(T.class_mul(X, c1, basis[j])))
            mul[i][j] = mul[j][i] = vec(prod)
    G = T.group
    descr = []
    for c in basis:
        d = {"stab": G.classes.names[G.classes.index_of(frozenset(c.stab))],
             "label": T.label_name(frozenset(c.stab), c.label)}
        if len(X.orbits) > 1:
            d["orbit"] = c.orbit
        descr.append(d)
    names = [T.class_name(X, c) for c in basis]
    return RingPresentation(names, descr, mul, vec(T.one(X)))


def compare(P1: RingPresentation, P2: RingPresentation, bij) -> list:
    """Mismatches of structure constants under the basis bijection i -> bij[i]."""
    out = []
    if P1.rank != P2.rank:
        return [("rank", P1.rank, P2.rank)]
    if sorted(bij) != list(range(P1.rank)):
        return [("not a bijection", list(bij))]
    for i in range(P1.rank):
        if P2.one[bij[i]] != P1.one[i]:
            out.append(("one", i))
        for j in range(P1.rank):
            a = P1.mul[i][j]
            b = P2.mul[bij[i]][bij[j]]
            if any(a[k] != b[bij[k]] for k in range(P1.rank)):
                out.append(("mul", i, j))
    return out
