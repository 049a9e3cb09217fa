"""Single-entry mutation fuzz of the r/t/c tables of the builtin Mackey functors.

Reports, per functor, how many mutants check_axioms rejects and lists the ones it
accepts.  On groups of prime order a few mutants are themselves valid functors.

    python scripts/mutation_fuzz.py --groups cyclic:2 symmetric:3 --limit 200
"""
import argparse
import random
from dataclasses import dataclass, field

from tambarize import build_group, build_monoid, ell_functor, fixed_point_functor, trivial_action
from tambarize import mackey as mk


@dataclass
class FuzzConfig:
    groups: list = field(default_factory=lambda: ["cyclic:2", "cyclic:3", "cyclic:4",
                                                  "symmetric:3", "dihedral:4"])
    monoids: list = field(default_factory=lambda: ["cyclic:2", "cyclic:3", "nil3"])
    limit: int = 0  # mutations per functor, 0 = all
    seed: int = 0


def fuzz(M, cfg: FuzzConfig):
    sites = mk.mutation_sites(M)
    if cfg.limit and len(sites) > cfg.limit:
        sites = random.Random(cfg.seed).sample(sites, cfg.limit)
    survivors = [s for s in sites if mk.check_axioms(mk.mutate(M, s), stop_early=True).ok]
    return len(sites), survivors


def describe(site) -> str:
    kind, key, pos, new = site
    if kind == "c":
        return f"c[level {key[0]}, element {key[1]}] entry {pos} -> {new}"
    H, K = key
    return f"{kind}[{sorted(H)} > {sorted(K)}] entry {pos} -> {new}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*")
    ap.add_argument("--monoids", nargs="*")
    ap.add_argument("--limit", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = FuzzConfig(limit=args.limit, seed=args.seed)
    cfg.groups = args.groups or cfg.groups
    cfg.monoids = args.monoids or cfg.monoids
    total = caught = 0
    for name in cfg.groups:
        G = build_group(name)
        for q in cfg.monoids:
            Q = build_monoid(q)
            for M in (ell_functor(G, Q), fixed_point_functor(trivial_action(G, Q))):
                n, surv = fuzz(M, cfg)
                total += n
                caught += n - len(surv)
                print(f"{G.name:>4} {M.name:<8} {n - len(surv):4d}/{n:<4d} caught")
                for site in surv:
                    print(f"       accepted: {describe(site)}")
    print(f"{caught}/{total} mutations caught")


if __name__ == "__main__":
    main()
