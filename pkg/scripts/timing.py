"""Wall time of the main computations against degree and N.

Prints one row per (N, n): building h_n^+- in x-variables, the Dunkl
Laplacian check, and the closed-form vs direct norm.
"""
import argparse
import time
from dataclasses import dataclass

from dunklharm.dunkl import DunklContext, apply_laplacian
from dunklharm.planar import harmonic
from dunklharm.structure import closed_norm, direct_norm


@dataclass(frozen=True)
class TimingConfig:
    n_vars: tuple = (2, 3, 4, 5)
    max_degree: int = 8
    norms_up_to: int = 6


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def run(cfg: TimingConfig):
    print(f"{'N':>2} {'n':>2} {'expand':>8} {'laplace':>8} {'norms':>8}  ok")
    for N in cfg.n_vars:
        ctx = DunklContext(N)
        for n in range(1, cfg.max_degree + 1):
            xs, t_expand = timed(lambda: [harmonic(ctx, n, s).x_rep() for s in "+-"])
            zero, t_lap = timed(lambda: all(apply_laplacian(ctx, x).is_zero() for x in xs))
            if n <= cfg.norms_up_to:
                same, t_norm = timed(lambda: all(closed_norm(ctx, n, s) == direct_norm(ctx, n, s) for s in "+-"))
            else:
                same, t_norm = True, float("nan")
            print(f"{N:>2} {n:>2} {t_expand:8.3f} {t_lap:8.3f} {t_norm:8.3f}  {zero and same}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=TimingConfig.max_degree)
    ap.add_argument("--n-vars", type=int, nargs="+", default=list(TimingConfig.n_vars))
    a = ap.parse_args()
    run(TimingConfig(n_vars=tuple(a.n_vars), max_degree=a.max_degree))
