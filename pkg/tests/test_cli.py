import json

import pytest

from dunklharm import cli, planar
from dunklharm.cli import RunConfig, constant_records, emit, harmonic_records, main, parse_constants, parse_harmonics
from dunklharm.dunkl import DunklContext
from dunklharm.planar import harmonic
from dunklharm.scalars import KappaPoly, specialize_kappa


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_harmonics_degree_one(capsys):
    code, out = run(capsys, "harmonics", "--n-vars", "3", "--max-degree", "1")
    assert code == 0
    doc = json.loads(out.out)
    entries = {(e["n"], e["sign"]): e for e in doc["entries"]}
    assert set(entries) == {(0, "+"), (1, "+"), (1, "-")}
    assert entries[(1, "-")]["basis"] == [{"j": 0, "coeff": "1"}]
    assert entries[(1, "-")]["kind"] == "psi"


def test_symbolic_coefficients_are_strings(capsys):
    _, out = run(capsys, "harmonics", "--max-degree", "2")
    doc = json.loads(out.out)
    h2 = next(e for e in doc["entries"] if (e["n"], e["sign"]) == (2, "+"))
    assert h2["basis"][1]["coeff"] == "1/3 + 1/3*k | 2/3 + 1*k"


def test_output_is_deterministic(capsys):
    for fmt in ("json", "csv"):
        _, a = run(capsys, "harmonics", "--max-degree", "4", "--format", fmt)
        _, b = run(capsys, "harmonics", "--max-degree", "4", "--format", fmt)
        assert a.out == b.out


def test_pole_reported_per_entry(capsys):
    # N = 3, k = -7/3: (3k + m + 2)_j = (m - 5)_j vanishes first at n = 7
    code, out = run(capsys, "harmonics", "--kappa", "-7/3", "--max-degree", "7")
    assert code == 0
    doc = json.loads(out.out)
    errors = {(e["n"], e["sign"]) for e in doc["entries"] if "error" in e}
    assert (7, "-") in errors
    assert all(n >= 7 for n, _ in errors)
    assert any(e["n"] == 6 and "basis" in e for e in doc["entries"])


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_harmonics_round_trip(fmt):
    cfg = RunConfig(N=3, max_degree=4, format=fmt)
    parsed = parse_harmonics(emit(harmonic_records(cfg), cfg, "harmonics"), fmt, N=3)
    ctx = DunklContext(3)
    for rec in parsed:
        h = harmonic(ctx, rec["n"], rec["sign"])
        assert rec["basis"] == h.basis
        assert rec["p_rep"] == h.p_rep


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_constants_round_trip(fmt):
    cfg = RunConfig(N=2, max_degree=3, format=fmt, kappa="-7/3")
    text = emit(constant_records(cfg), cfg, "constants")
    again = emit([{k: (v if k in ("N", "n", "sign", "error") else cli.format_scalar(v)) for k, v in r.items()}
                  for r in parse_constants(text, fmt)], cfg, "constants")
    assert again == text


def test_constants_first_row(capsys):
    _, out = run(capsys, "constants", "--max-degree", "2", "--format", "csv")
    lines = out.out.splitlines()
    assert lines[0] == "N,n,sign,kappa_norm,sphere_factor,sphere_norm,error"
    assert lines[1] == "3,0,+,1,1,1,"


def test_constants_specialize_consistently():
    sym = parse_constants(emit(constant_records(RunConfig(N=3, max_degree=4)), RunConfig(), "constants"), "json")
    one = parse_constants(emit(constant_records(RunConfig(N=3, max_degree=4, kappa="1")), RunConfig(), "constants"), "json")
    for a, b in zip(sym, one):
        for key in ("kappa_norm", "sphere_factor", "sphere_norm"):
            assert specialize_kappa(a[key], 1) == b[key].constant_value()


def test_decimal_kappa_rejected(capsys):
    code, out = run(capsys, "constants", "--kappa", "0.5")
    assert code == 2 and "decimal" in out.err


def test_unknown_suite_rejected(capsys):
    code, out = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_env_degree_cap(monkeypatch, capsys):
    monkeypatch.setenv(cli.ENV_MAX_DEGREE, "1")
    _, out = run(capsys, "constants", "--format", "csv")
    assert len(out.out.splitlines()) == 1 + 3
    _, out = run(capsys, "constants", "--format", "csv", "--max-degree", "2")
    assert len(out.out.splitlines()) == 1 + 5


def test_verify_default_passes(capsys):
    code, out = run(capsys, "verify", "--max-degree", "3")
    assert code == 0
    assert "FAIL" not in out.out
    for name in ("harmonicity", "tth-action", "val1pI", "genfunS", "norms", "monogenics"):
        assert f"] {name}:" in out.out


def test_verify_selector(capsys):
    code, out = run(capsys, "verify", "--suite", "genfunS", "--max-degree", "4")
    body = out.out.splitlines()[:-1]
    assert code == 0 and body and all("] genfunS:" in line for line in body)


def test_verify_catches_perturbed_g(monkeypatch, capsys):
    original = planar.g_poly

    def perturbed(kind, n):
        p = original(kind, n)
        return p + KappaPoly([1]) if (kind, n) == ("o", 2) else p

    monkeypatch.setattr(planar, "g_poly", perturbed)
    code, out = run(capsys, "verify", "--suite", "harmonicity", "--max-degree", "5")
    assert code == 1
    assert "[FAIL] harmonicity" in out.out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "h.json"
    assert main(["harmonics", "--max-degree", "1", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["max_degree"] == 1
