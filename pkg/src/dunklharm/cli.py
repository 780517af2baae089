"""Command line entry point: ``dunklharm {harmonics,constants,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from dataclasses import dataclass
from typing import Sequence

from .dunkl import DEFAULT_DEGREE_CAP, DunklContext
from .planar import harmonic
from .polyengine import from_json_obj, to_json_obj
from .scalars import PoleError, format_scalar, parse_rational, parse_scalar
from .structure import closed_norm, sphere_norm_factor
from .verify import SUITES, run_suites

ENV_MAX_DEGREE = "DUNKLHARM_MAX_DEGREE"
FORMATS = ("json", "csv")


@dataclass(frozen=True)
class RunConfig:
    N: int = 3
    kappa: str = "symbolic"
    max_degree: int = 6
    format: str = "json"
    suite: tuple = ("all",)
    out: str | None = None

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("--n-vars must be at least 2")
        if self.max_degree < 0:
            raise ValueError("--max-degree must be nonnegative")
        if self.format not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")
        self.kappa_value()  # reject malformed kappa early
        for s in self.suite:
            if s != "all" and s not in SUITES:
                raise ValueError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")

    def kappa_value(self):
        """None for symbolic, otherwise the exact rational."""
        if self.kappa == "symbolic":
            return None
        return parse_rational(self.kappa)

    def context(self) -> DunklContext:
        cap = max(self.max_degree + 1, DEFAULT_DEGREE_CAP)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return DunklContext(self.N, self.kappa_value(), degree_cap=cap)


def default_max_degree() -> int:
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None:
        return 6
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# table builders (pure: config -> list of records)
# ---------------------------------------------------------------------------


def _pole_message(cfg: RunConfig, exc: Exception) -> str:
    return f"pole at k = {cfg.kappa}: {exc}"


def harmonic_records(cfg: RunConfig) -> list[dict]:
    ctx = cfg.context()
    records = []
    for n in range(cfg.max_degree + 1):
        for sign in "+-":
            if sign == "-" and n == 0:
                continue  # h_0^- = 0
            rec = {"n": n, "sign": sign}
            try:
                h = harmonic(ctx, n, sign)
                rec["kind"] = h.kind
                rec["basis"] = [{"j": j, "coeff": format_scalar(c)} for j, c in sorted(h.basis.items())]
                rec["p_rep"] = to_json_obj(h.p_rep)
            except PoleError as exc:
                rec["error"] = _pole_message(cfg, exc)
            records.append(rec)
    return records


def constant_records(cfg: RunConfig) -> list[dict]:
    ctx = cfg.context()
    records = []
    for n in range(cfg.max_degree + 1):
        for sign in "+-":
            if sign == "-" and n == 0:
                continue
            rec = {"N": cfg.N, "n": n, "sign": sign}
            try:
                norm = closed_norm(ctx, n, sign)
                factor = sphere_norm_factor(ctx, n)
                rec["kappa_norm"] = format_scalar(norm)
                rec["sphere_factor"] = format_scalar(factor)
                rec["sphere_norm"] = format_scalar(norm / factor)
            except PoleError as exc:
                rec["error"] = _pole_message(cfg, exc)
            records.append(rec)
    return records


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

HARMONIC_CSV = ("n", "sign", "kind", "form", "index", "coeff", "error")
CONSTANT_CSV = ("N", "n", "sign", "kappa_norm", "sphere_factor", "sphere_norm", "error")


def _header(cfg: RunConfig) -> dict:
    return {"N": cfg.N, "kappa": cfg.kappa, "max_degree": cfg.max_degree}


def emit(records: list[dict], cfg: RunConfig, table: str) -> str:
    if cfg.format == "json":
        return json.dumps({**_header(cfg), "table": table, "entries": records}, indent=1) + "\n"
    buf = io.StringIO()
    if table == "harmonics":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HARMONIC_CSV)
        for r in records:
            if "error" in r:
                w.writerow([r["n"], r["sign"], "", "", "", "", r["error"]])
                continue
            for b in r["basis"]:
                w.writerow([r["n"], r["sign"], r["kind"], "basis", b["j"], b["coeff"], ""])
            for t in r["p_rep"]["terms"]:
                w.writerow([r["n"], r["sign"], r["kind"], "p_rep", ";".join(map(str, t["exp"])), t["coeff"], ""])
    else:
        w = csv.DictWriter(buf, CONSTANT_CSV, lineterminator="\n", restval="")
        w.writeheader()
        w.writerows(records)
    return buf.getvalue()


def parse_harmonics(text: str, fmt: str, N: int | None = None) -> list[dict]:
    """Inverse of ``emit`` for the harmonics table, as parsed objects."""
    out = []
    if fmt == "json":
        for r in json.loads(text)["entries"]:
            rec = {"n": r["n"], "sign": r["sign"]}
            if "error" in r:
                rec["error"] = r["error"]
            else:
                rec["kind"] = r["kind"]
                rec["basis"] = {b["j"]: parse_scalar(b["coeff"]) for b in r["basis"]}
                rec["p_rep"] = from_json_obj(r["p_rep"])
            out.append(rec)
        return out
    if N is None:
        raise ValueError("CSV harmonics need N to rebuild P-polynomials")
    from .polyengine import MultiPoly

    by_key: dict = {}
    for row in csv.DictReader(io.StringIO(text)):
        key = (int(row["n"]), row["sign"])
        rec = by_key.setdefault(key, {"n": key[0], "sign": key[1]})
        if row["error"]:
            rec["error"] = row["error"]
            continue
        rec["kind"] = row["kind"]
        basis = rec.setdefault("basis", {})
        terms = rec.setdefault("_terms", {})
        if row["form"] == "basis":
            basis[int(row["index"])] = parse_scalar(row["coeff"])
        else:
            terms[tuple(int(x) for x in row["index"].split(";"))] = parse_scalar(row["coeff"])
    for rec in by_key.values():
        if "_terms" in rec:
            rec["p_rep"] = MultiPoly(rec.pop("_terms"), N, "P")
        out.append(rec)
    return out


def parse_constants(text: str, fmt: str) -> list[dict]:
    rows = json.loads(text)["entries"] if fmt == "json" else list(csv.DictReader(io.StringIO(text)))
    out = []
    for r in rows:
        rec = {"N": int(r["N"]), "n": int(r["n"]), "sign": r["sign"]}
        if r.get("error"):
            rec["error"] = r["error"]
        else:
            for key in ("kappa_norm", "sphere_factor", "sphere_norm"):
                rec[key] = parse_scalar(r[key])
        out.append(rec)
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_harmonics(cfg: RunConfig) -> int:
    _write(emit(harmonic_records(cfg), cfg, "harmonics"), cfg.out)
    return 0


def cmd_constants(cfg: RunConfig) -> int:
    _write(emit(constant_records(cfg), cfg, "constants"), cfg.out)
    return 0


def verify_report(cfg: RunConfig) -> tuple[str, bool]:
    checks = run_suites(cfg.context(), cfg.max_degree, list(cfg.suite))
    lines = [c.line() for c in checks]
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", failed == 0


def cmd_verify(cfg: RunConfig) -> int:
    text, ok = verify_report(cfg)
    _write(text, cfg.out)
    return 0 if ok else 1


COMMANDS = {"harmonics": cmd_harmonics, "constants": cmd_constants, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunklharm", description="Exact planar Dunkl harmonics of type A.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("harmonics", "emit h_n^+/- in basis and P forms"),
        ("constants", "emit norms and sphere factors"),
        ("verify", "run identity suites"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n-vars", type=int, default=3, dest="N")
        p.add_argument("--kappa", default="symbolic", help='"symbolic" or an exact rational such as -7/3')
        p.add_argument("--max-degree", type=int, default=None,
                       help=f"defaults to ${ENV_MAX_DEGREE} or 6")
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--suite", action="append", default=None,
                       help="suite name (repeatable); one of: all, " + ", ".join(SUITES))
        p.add_argument("--out", default=None, help="output file (default stdout)")
    return parser


def _glue_kappa(argv: list[str]) -> list[str]:
    # argparse reads "-7/3" as an option flag; bind it to --kappa explicitly
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--kappa":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--kappa={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_kappa(argv))
    max_degree = args.max_degree if args.max_degree is not None else default_max_degree()
    try:
        cfg = RunConfig(
            N=args.N,
            kappa=args.kappa,
            max_degree=max_degree,
            format=args.format,
            suite=tuple(args.suite or ("all",)),
            out=args.out,
        )
    except (ValueError, TypeError) as exc:
        print(f"dunklharm: error: {exc}", file=sys.stderr)
        return 2
    return COMMANDS[args.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
