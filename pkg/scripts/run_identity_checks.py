#!/usr/bin/env python3
"""Run every identity suite over a seeded corpus and print one line per check.

This is the library-level version of `higherchar verify`, convenient for
sweeping many complexes and parameter combinations at once.

    python scripts/run_identity_checks.py --complexes 10 --seed-base 1
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from higherchar import characteristics as ch
from higherchar.cli import random_open_set
from higherchar.generators import SplitMix64, random_whitney
from higherchar.linalg import connection_matrix, det, green_matrix, identity_matrix, mat_mul


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--complexes", type=int, default=10)
    ap.add_argument("--vertices", type=int, default=9)
    ap.add_argument("--edges", type=int, default=15)
    ap.add_argument("--seed-base", type=int, default=1)
    ap.add_argument("--pairs", type=int, default=50, help="valuation pairs per complex")
    args = ap.parse_args()

    failures = 0
    t_start = time.time()
    for i in range(args.complexes):
        seed = args.seed_base + i
        g = random_whitney(args.vertices, args.edges, seed)
        print(f"-- complex seed={seed} n={len(g)} f={g.f_vector}")
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                for rep in (ch.energy_sum(g, m, k),
                            ch.energy_sum(g, m, k, variant="ball")):
                    print(f"   {rep.suite:12s} m={m} k={k} lhs={rep.lhs:4d} "
                          f"rhs={rep.rhs:4d} {'ok' if rep.passed else 'FAIL'}")
                    failures += not rep.passed
        for m in (1, 2):
            for k in (1, 2, 3):
                for rep in (ch.sphere_sum(g, m, k), ch.dual_sphere_sum(g, m, k)):
                    print(f"   {rep.suite:12s} m={m} k={k} sum={rep.rhs:4d} "
                          f"{'ok' if rep.passed else 'FAIL'}")
                    failures += not rep.passed
        rng = SplitMix64(seed)
        bad = 0
        for _ in range(args.pairs):
            u = random_open_set(g, rng)
            v = random_open_set(g, rng)
            bad += sum(not ch.valuation_check(u, v, m).passed for m in (1, 2, 3))
        print(f"   valuation    {args.pairs} open pairs, m<=3: "
              f"{'ok' if bad == 0 else f'{bad} FAIL'}")
        failures += bad
        n = len(g)
        ok = (mat_mul(connection_matrix(g), green_matrix(g)) == identity_matrix(n)
              and det(connection_matrix(g)) == ch.fermi(g))
        print(f"   matrices     L*g = 1 and det(L) = fermi: {'ok' if ok else 'FAIL'}")
        failures += not ok
    print(f"-- done in {time.time() - t_start:.1f}s, failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
