"""Compare the two S-indexings of the antisymmetric norm formula.

For each n the direct value <h, h>_k is the reference; the alternative
indexing (closed_norm_as_printed) disagrees for every n.
"""
import argparse

from dunklharm.dunkl import DunklContext
from dunklharm.scalars import format_scalar
from dunklharm.structure import closed_norm, closed_norm_as_printed, direct_norm


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-vars", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    ctx = DunklContext(args.n_vars)
    for n in range(1, args.max_degree + 1):
        ref = direct_norm(ctx, n, "-")
        fixed = closed_norm(ctx, n, "-") == ref
        shown = closed_norm_as_printed(ctx, n, "-") == ref
        print(f"n={n}  corrected={'ok' if fixed else 'MISMATCH'}  alternative={'ok' if shown else 'mismatch'}")
        print(f"      <h^-,h^-> = {format_scalar(ref)}")


if __name__ == "__main__":
    main()
