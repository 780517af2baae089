"""Clifford-valued polynomials, the type-A Dirac operator and planar monogenics.

Blades are sorted index tuples (1-based) in Cl_N with e_i^2 = -1 and
e_i e_j = -e_j e_i.  A ``CliffordPoly`` maps blades to X-polynomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .dunkl import DunklContext, apply_dunkl_x, apply_laplacian
from .planar import harmonic
from .polyengine import MultiPoly, from_json_obj, to_json_obj
from .scalars import KappaScalar

SCALAR_BLADE: tuple = ()


def blade_product(a: tuple, b: tuple) -> tuple[int, tuple]:
    """e_a e_b = sign * e_result for sorted index tuples a, b."""
    seq = list(a) + list(b)
    sign = 1
    # bubble sort, counting adjacent swaps of distinct generators
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    out: list = []
    for x in seq:
        if out and out[-1] == x:
            out.pop()
            sign = -sign  # e_x^2 = -1
        else:
            out.append(x)
    return sign, tuple(out)


def _check_blade(blade, N: int) -> tuple:
    blade = tuple(blade)
    if list(blade) != sorted(set(blade)) or any(not 1 <= i <= N for i in blade):
        raise ValueError(f"blade {blade} is not a sorted subset of 1..{N}")
    return blade


@dataclass
class CliffordPoly:
    nvars: int
    components: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for blade, p in self.components.items():
            blade = _check_blade(blade, self.nvars)
            if p.nvars != self.nvars or p.rep != "X":
                raise ValueError("components must be X-polynomials in nvars variables")
            if p:
                clean[blade] = p
        self.components = dict(sorted(clean.items(), key=lambda t: (len(t[0]), t[0])))

    @classmethod
    def scalar(cls, p: MultiPoly) -> "CliffordPoly":
        return cls(p.nvars, {SCALAR_BLADE: p})

    def is_zero(self) -> bool:
        return not self.components

    def component(self, blade) -> MultiPoly:
        return self.components.get(tuple(blade), MultiPoly.zero(self.nvars))

    def __eq__(self, other):
        if not isinstance(other, CliffordPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.components == other.components

    def __add__(self, other: "CliffordPoly") -> "CliffordPoly":
        out = dict(self.components)
        for b, p in other.components.items():
            out[b] = out[b] + p if b in out else p
        return CliffordPoly(self.nvars, out)

    def __neg__(self):
        return CliffordPoly(self.nvars, {b: -p for b, p in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CliffordPoly":
        return CliffordPoly(self.nvars, {b: p.scale(c) for b, p in self.components.items()})

    def left_mul_blade(self, blade) -> "CliffordPoly":
        """e_blade * self."""
        out: dict = {}
        for b, p in self.components.items():
            sign, r = blade_product(tuple(blade), b)
            term = p if sign > 0 else -p
            out[r] = out[r] + term if r in out else term
        return CliffordPoly(self.nvars, out)

    def map_components(self, fn) -> "CliffordPoly":
        return CliffordPoly(self.nvars, {b: fn(p) for b, p in self.components.items()})


def dirac(ctx: DunklContext, f: CliffordPoly) -> CliffordPoly:
    """D f = sum_i e_i T_i f, the generator multiplying from the left."""
    out = CliffordPoly(f.nvars, {})
    for i in range(1, ctx.N + 1):
        ti = f.map_components(lambda p, i=i: apply_dunkl_x(ctx, i, p))
        if not ti.is_zero():
            out = out + ti.left_mul_blade((i,))
    return out


def laplacian_componentwise(ctx: DunklContext, f: CliffordPoly) -> CliffordPoly:
    return f.map_components(lambda p: apply_laplacian(ctx, p))


def monogenic_epsilon(ctx: DunklContext, n: int) -> KappaScalar:
    """Scalar multiplying e_1 e_2 h_n^- in the degree-n monogenic."""
    if n < 1:
        raise ValueError("monogenics are defined for n >= 1")
    if n % 2:
        return KappaScalar.coerce(1)
    m = n // 2
    return (ctx.k * (ctx.N - 1) + m) / ((ctx.k * ctx.N + (m + 1)) * 2)


def monogenic(ctx: DunklContext, n: int) -> CliffordPoly:
    """h_n^+ + e_1 e_2 * eps_n * h_n^-, annihilated by the Dirac operator."""
    eps = monogenic_epsilon(ctx, n)
    plus = harmonic(ctx, n, "+").x_rep()
    minus = harmonic(ctx, n, "-").x_rep().scale(eps)
    return CliffordPoly(ctx.N, {SCALAR_BLADE: plus, (1, 2): minus})


def to_json_obj_clifford(f: CliffordPoly) -> dict:
    return {
        "nvars": f.nvars,
        "blades": [{"indices": list(b), "poly": to_json_obj(p)} for b, p in f.components.items()],
    }


def from_json_obj_clifford(obj: dict) -> CliffordPoly:
    comps = {}
    nvars = obj.get("nvars")
    for entry in obj["blades"]:
        p = from_json_obj(entry["poly"])
        nvars = p.nvars if nvars is None else nvars
        comps[tuple(entry["indices"])] = p
    if nvars is None:
        raise ValueError("cannot infer nvars from an empty blade list")
    return CliffordPoly(nvars, comps)


def clifford_to_json(f: CliffordPoly) -> str:
    return json.dumps(to_json_obj_clifford(f), separators=(",", ":"))


def clifford_from_json(s: str) -> CliffordPoly:
    return from_json_obj_clifford(json.loads(s))
