"""Monte-Carlo table of single-edge cut probabilities, plain vs perturbed rounding."""

import argparse
import math

from intervalcut.rounding import estimate_cut_probabilities


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()

    thetas = [0.0, 0.1, 0.5, 1.0, math.pi / 2, 2.0, 2.5, 3.0, math.pi]
    print(f"{'theta':>6} {'eta':>5} {'theta/pi':>9} {'plain':>8} {'perturbed':>9} {'diff':>8} {'3se':>7}")
    for eta in (0.01, 0.05, 0.1):
        for th in thetas:
            e = estimate_cut_probabilities(th, eta, a.samples, a.seed)
            se3 = 3 * math.hypot(e.se_plain, e.se_perturbed)
            print(f"{th:6.3f} {eta:5.2f} {th / math.pi:9.5f} {e.p_plain:8.5f} {e.p_perturbed:9.5f} "
                  f"{e.p_perturbed - e.p_plain:+8.5f} {se3:7.5f}")


if __name__ == "__main__":
    main()
