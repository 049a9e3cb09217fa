"""Twisted against pointwise string products, next to T_{L_Q}(G/G).

Counts ring maps to Z/m for each ring: isomorphic rings have equal counts, so a
mismatch shows the pointwise product gives a different ring.

    python scripts/string_conflict.py --group cyclic:2 --monoid cyclic:2
"""
import argparse
import itertools
from dataclasses import dataclass

from tambarize import build_group, build_monoid
from tambarize.strings import elliott_iso, string_ring


@dataclass
class ConflictConfig:
    group: str = "cyclic:2"
    monoid: str = "cyclic:2"
    moduli: tuple = (2, 3, 4)


def homs_mod(P, m: int) -> int:
    n, count = P.rank, 0
    for v in itertools.product(range(m), repeat=n):
        if sum(a * b for a, b in zip(P.one, v)) % m != 1 % m:
            continue
        if all((sum(a * b for a, b in zip(P.mul[i][j], v)) - v[i] * v[j]) % m == 0
               for i in range(n) for j in range(i, n)):
            count += 1
    return count


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", default=ConflictConfig.group)
    ap.add_argument("--monoid", default=ConflictConfig.monoid)
    args = ap.parse_args()
    cfg = ConflictConfig(args.group, args.monoid)
    G, Q = build_group(cfg.group), build_monoid(cfg.monoid)
    PT, twisted, _ = elliott_iso(Q, G, G.elements)
    pointwise = string_ring(Q, G, product="pointwise")
    for label, P in (("T_L", PT), ("twisted", twisted), ("pointwise", pointwise)):
        counts = {m: homs_mod(P, m) for m in cfg.moduli}
        print(f"{label:>9}: rank {P.rank}, maps to Z/m {counts}")
    print()
    print("twisted product:")
    print(twisted.to_text())
    print("pointwise product:")
    print(pointwise.to_text())


if __name__ == "__main__":
    main()
