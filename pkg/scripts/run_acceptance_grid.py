"""Tambara axiom grid: every (G, M) cell with M trivial, L_Q or P_Q, |Q| <= 3.

    python scripts/run_acceptance_grid.py --samples 100 --out grid.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from tambarize import (Tambarization, build_group, build_monoid, ell_functor, fixed_point_functor,
                       trivial_action, trivial_functor)
from tambarize.axioms import check_tambara_axioms
from tambarize.monoids import sign_action

C2_PLUS_ONE = {"op": [[0, 1, 2], [1, 1, 2], [2, 2, 1]], "names": ["1", "e", "s"], "name": "C2+1"}


@dataclass
class GridConfig:
    groups: list = field(default_factory=lambda: ["cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3"])
    monoids: list = field(default_factory=lambda: ["trivial", "cyclic:2", "bool", "cyclic:3",
                                                   "zmod:3", "nil3", "idem3", C2_PLUS_ONE])
    samples: int = 100
    seed: int = 4


def cells(cfg: GridConfig):
    for name in cfg.groups:
        G = build_group(name)
        yield G, trivial_functor(G)
        for spec in cfg.monoids:
            Q = build_monoid(spec)
            yield G, ell_functor(G, Q)
            yield G, fixed_point_functor(trivial_action(G, Q))
            if Q.size > 1 and Q.is_group():
                yield G, fixed_point_functor(sign_action(G, Q))


def run(cfg: GridConfig) -> dict:
    rows = []
    t0 = time.time()
    for G, M in cells(cfg):
        t = time.time()
        rep = check_tambara_axioms(Tambarization(M), seed=cfg.seed, samples=cfg.samples)
        rows.append({"group": G.name, "functor": M.name, "checks": rep.checks,
                     "violations": len(rep.violations), "seconds": round(time.time() - t, 2)})
        print(f"{G.name:>4} {M.name:<14} {rep.checks:6d} checks  {len(rep.violations)} violations")
    total = sum(r["violations"] for r in rows)
    print(f"{len(rows)} cells, {total} violations, {time.time() - t0:.1f}s")
    return {"config": asdict(cfg), "cells": rows, "violations": total}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=GridConfig.samples)
    ap.add_argument("--seed", type=int, default=GridConfig.seed)
    ap.add_argument("--groups", nargs="*")
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = GridConfig(samples=args.samples, seed=args.seed)
    if args.groups:
        cfg.groups = args.groups
    result = run(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result, fh, indent=1, sort_keys=True)
    return 0 if result["violations"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
