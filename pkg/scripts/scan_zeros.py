"""Scan the critical line for zeros and print t, E = -2t and the residuals."""

import argparse

from zetaspec.spectral import boundary_residual, find_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-min", type=float, default=0.0)
    ap.add_argument("--t-max", type=float, default=50.0)
    ap.add_argument("--step", type=float, default=0.1)
    args = ap.parse_args()
    print(f"{'n':>3} {'t':>20} {'E':>22} {'|zeta|':>9} {'boundary':>9}")
    for r in find_zeros(args.t_min, args.t_max, args.step):
        print(f"{r.index:>3} {r.t:>20.15f} {r.E.real:>22.15f} {r.residual:>9.1e} {boundary_residual(r):>9.1e}")


if __name__ == "__main__":
    main()
