"""Sweeps, objective and certified upper bound of the low-rank solver on random graphs."""

import argparse

from intervalcut.generators import gen_random_graph
from intervalcut.sdp import dual_upper_bound, solve_sdp


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 30, 100, 300])
    ap.add_argument("--density", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()

    print(f"{'n':>5} {'m':>6} {'rank':>4} {'sweeps':>6} {'objective':>14} {'upper bound':>14} {'gap':>9}")
    for n in a.sizes:
        g = gen_random_graph(n, a.density, a.seed)
        sol = solve_sdp(g, seed=a.seed)
        ub = dual_upper_bound(sol)
        print(f"{n:>5} {g.m:>6} {sol.rank:>4} {sol.sweeps:>6} {sol.objective:>14.6f} {ub:>14.6f} {ub - sol.objective:>9.2e}")


if __name__ == "__main__":
    main()
