"""Print the Bernoulli-series term magnitudes of the eigen-relation and where they turn over."""

import argparse

from zetaspec.hurwitz import psi
from zetaspec.operators import hamiltonian_series
from zetaspec.report import parse_complex
from zetaspec.values import SpectralPoint


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", default="0.5+14.134725141734695i")
    ap.add_argument("--x", type=float, nargs="+", default=[5.0, 10.0, 20.0])
    args = ap.parse_args()
    sp = SpectralPoint.from_z(parse_complex(args.z))
    for x in args.x:
        r = hamiltonian_series(sp, x)
        gap = abs(r.value - sp.E * psi(sp, x).value)
        print(f"x={x}: k*={r.diagnostics['k_star']}  estimate={r.error:.2e}  |H psi - E psi|={gap:.2e}")
        row = r.diagnostics["log10_terms"][::4]
        print("  " + " ".join(f"{k}:{v:.1f}" for k, v in row))


if __name__ == "__main__":
    main()
