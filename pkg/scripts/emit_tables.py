"""Write harmonics and constants tables for several N into one directory.

    python scripts/emit_tables.py --out tables --max-degree 6 --n-vars 2 3 4
"""
import argparse
from pathlib import Path

from dunklharm.cli import RunConfig, cmd_constants, cmd_harmonics


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tables")
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("--n-vars", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--kappa", default="symbolic")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    tag = args.kappa.replace("/", "over")
    for N in args.n_vars:
        for fmt in ("json", "csv"):
            base = dict(N=N, kappa=args.kappa, max_degree=args.max_degree, format=fmt)
            cmd_harmonics(RunConfig(**base, out=str(out / f"harmonics_N{N}_{tag}.{fmt}")))
            cmd_constants(RunConfig(**base, out=str(out / f"constants_N{N}_{tag}.{fmt}")))
        print(f"N={N}: written to {out}/")


if __name__ == "__main__":
    main()
