"""Cut fractions on the layered (segment-tree) interval family.

For each depth k: edge count, the best "bottom t layers" cut, the pipeline's
cut, and the exact optimum where the oracle budget allows.
"""

import argparse

from intervalcut.generators import gen_segment_tree
from intervalcut.oracle import exact_maxcut
from intervalcut.rounding import RoundingConfig, pipeline_solve


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=9)
    ap.add_argument("--trials", type=int, default=200)
    a = ap.parse_args()

    print(f"{'k':>2} {'n':>5} {'m':>6} {'layered':>8} {'t*':>3} {'pipeline':>8} {'exact':>6} {'frac':>7}")
    for k in range(2, a.kmax + 1):
        m = gen_segment_tree(k)
        g = m.graph
        layered, t_best = max(((2**k - 2 ** (k - t)) * (k - t), t) for t in range(k))
        res = pipeline_solve(g, m, RoundingConfig(trials=a.trials))
        exact = exact_maxcut(g)[0] if g.n <= 16 else None
        print(f"{k:>2} {g.n:>5} {g.m:>6} {layered:>8} {t_best:>3} {res.cut.size:>8} "
              f"{'-' if exact is None else exact:>6} {res.cut.size / g.m:>7.4f}")


if __name__ == "__main__":
    main()
