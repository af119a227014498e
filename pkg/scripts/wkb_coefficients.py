"""Fit the large-x expansion of exp(S2) and set it beside the series and printed triples."""

import argparse

from zetaspec.wkb import printed_coefficients, series_coefficients, wkb_asymptotic_coeffs


def fmt(c):
    return f"{c.real:+.10f}{c.imag:+.10f}i"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--E", type=float, nargs="+", default=[-28.269450283469, 14.0, 50.0])
    args = ap.parse_args()
    for E in args.E:
        fit = wkb_asymptotic_coeffs(E)
        print(f"E = {E}  (fit cond {fit.cond:.1e}, rms misfit {fit.residual:.1e})")
        rows = [("fitted", (fit.c0, fit.c1, fit.c2)), ("series", series_coefficients(E)),
                ("printed", printed_coefficients(E))]
        for name, cs in rows:
            print(f"  {name:<8}" + "  ".join(fmt(c) for c in cs))


if __name__ == "__main__":
    main()
