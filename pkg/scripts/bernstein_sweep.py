"""Bernstein residuals over a grid of lambda and window sizes for several parameter sets."""
import argparse
from itertools import product

from qwreath.qwp import WreathAlgebra
from qwreath.scalar import Params


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--E", type=int, default=2, help="lambda entries in [-E, E]")
    ap.add_argument("--J", type=int, default=8)
    args = ap.parse_args()
    for q, n, k in [(5, 1, 0), (5, 2, 0), (5, 2, 2), (7, 3, 0), (13, 2, 0)]:
        W = WreathAlgebra(Params(q=q, n=n, k=k, d=2))
        bad = []
        lams = list(product(range(-args.E, args.E + 1), repeat=2))
        for lam in lams:
            if not W.bernstein_residual(1, lam, args.J).is_zero():
                bad.append(lam)
        print(f"(q,n,k)=({q},{n},{k}): {len(lams) - len(bad)}/{len(lams)} zero residuals"
              + (f", nonzero at {bad}" if bad else ""))


if __name__ == "__main__":
    main()
