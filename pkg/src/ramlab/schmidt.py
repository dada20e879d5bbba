"""Desk-scale model of a discrete valuation ring whose integral closure is
not module-finite, built from a factorially sparse ("gap") power series.

The base field is K = F_p(t, s) with s mapped to c^p for the truncated gap
series c = 1 + t + t^2 + t^6 + t^24 + ...; the extension is L = K[x]/(x^p - s).
Over the completion F_p((t)) the defining polynomial collapses to (x - c)^p,
so the semisimple quotient has dimension 1, while [L:K] = p: the classical
degree identity fails strictly, the completion-side identity holds with
equality, and a chain of polynomial approximants to c witnesses e = f = 1
for the unique extension at every finite level.

Transcendence of the gap series cannot be certified from a truncation; every
report carries the caveat line."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import GF, Poly
from .errors import PrecisionTooSmall, ValidationError
from .localfield import LocalPolynomial, SeriesContext, radical_degree

CAVEAT = "finite-precision model; transcendence of c assumed"

_SUPPORTED_PRIMES = (2, 3, 5, 7)


def gap_exponents(bound: int):
    """{0} together with the factorials k! <= bound."""
    out = [0]
    k = 1
    while math.factorial(k) <= bound:
        e = math.factorial(k)
        if e not in out:
            out.append(e)
        k += 1
    return out


@dataclass(frozen=True)
class SchmidtModel:
    p: int
    precision: int
    ctx: SeriesContext
    c: object  # SeriesElement: truncated gap series
    s: object  # SeriesElement: c^p

    @property
    def degree(self):
        return self.p


def build_model(p: int, precision: int) -> SchmidtModel:
    """Truncated gap series c and its p-th power s = c^p (Frobenius: digits
    are p-powered in place, exponents multiply by p)."""
    if p not in _SUPPORTED_PRIMES:
        raise ValidationError(f"p must be one of {_SUPPORTED_PRIMES}")
    if precision < 6 * p:
        raise PrecisionTooSmall(f"need precision >= {6 * p} for p = {p}")
    field_p = GF(p)
    t = Poly([0, 1], field_p, "t")
    # digits run through exponent `precision` inclusive
    ctx = SeriesContext(field_p, t, precision + 1)
    exps = gap_exponents(precision)
    c_poly = Poly(
        [1 if i in exps else 0 for i in range(max(exps) + 1)], field_p, "t"
    )
    c = ctx.from_base_poly(c_poly)
    s = c.frobenius()
    # cross-check the Frobenius shortcut against plain multiplication
    acc = c
    for _ in range(p - 1):
        acc = acc * c
    if not (acc - s).is_fuzzy_zero():
        raise ValidationError("frobenius power disagrees with iterated product")
    return SchmidtModel(p, precision, ctx, c, s)


def defining_local_poly(model: SchmidtModel) -> LocalPolynomial:
    """x^p - s over the completion (the image of the defining polynomial)."""
    ctx = model.ctx
    coeffs = [-model.s] + [ctx.zero()] * (model.p - 1) + [ctx.one()]
    return LocalPolynomial(coeffs, ctx)


def tensor_split(model: SchmidtModel):
    """Splitting of L tensor F_p((t)): verifies x^p - s = (x - c)^p at the
    working precision and returns (semisimple dimension, description)."""
    ctx = model.ctx
    F = defining_local_poly(model)
    X = LocalPolynomial([ctx.zero(), ctx.one()], ctx)
    C = LocalPolynomial([model.c], ctx)
    expanded = (X - C) ** model.p
    if not (expanded - F).is_fuzzy_zero_poly():
        raise ValidationError("binomial collapse failed at this precision")
    deg, rad, certified = radical_degree(F, ctx)
    if deg != 1 or not certified:
        raise ValidationError("semisimple dimension of the model must be 1")
    if not (rad - (X - C)).is_fuzzy_zero_poly():
        raise ValidationError("radical is not x - c at this precision")
    return 1, f"(x - c)^{model.p} with c = {model.c.to_sparse_str()}"


@dataclass(frozen=True)
class ResidueWitness:
    level: int
    approximant: Poly  # truncation of c, a polynomial in t
    valuation_bound: int  # certified lower bound for w(u - y)
    verified: bool


def residue_witness(model: SchmidtModel, m: int) -> ResidueWitness:
    """Approximant y_m = (c truncated to degree m) with w(u - y_m) >= m,
    computed from (u - y_m)^p = s - y_m^p; u denotes the class of x.

    The chain shows the residue field stays F_p and the value group stays Z
    at every finite level, so e = f = 1 for the unique extension."""
    if not 0 <= m <= model.precision:
        raise ValidationError("witness level out of range")
    field_p = GF(model.p)
    exps = [e for e in gap_exponents(model.precision) if e <= m]
    y = Poly([1 if i in exps else 0 for i in range(max(exps) + 1)], field_p, "t")
    y_emb = model.ctx.from_base_poly(y)
    delta = model.s - y_emb.frobenius()
    if delta.is_exact_zero():
        bound = model.precision + 1
    else:
        bound = delta.val  # exact valuation, or the weak-zero lower bound
    w_bound = bound // model.p
    return ResidueWitness(m, y, w_bound, w_bound >= m)


@dataclass
class SchmidtReport:
    p: int
    precision: int
    degree: int
    lhs: int
    rhs: int
    radical_dim: int
    unique_prime: tuple  # (e, f)
    classical_holds: bool
    eq11_holds: bool
    inequality_holds: bool
    witness_levels: list
    split_description: str
    caveats: list = field(default_factory=lambda: [CAVEAT])

    def to_json(self):
        return {
            "p": self.p,
            "precision": self.precision,
            "degree": self.degree,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "radical_dim": self.radical_dim,
            "primes": [{"e": self.unique_prime[0], "f": self.unique_prime[1]}],
            "verdicts": {
                "eq11": self.eq11_holds,
                "classical": self.classical_holds,
                "inequality": self.inequality_holds,
            },
            "witness_levels": [
                {"m": w.level, "w_lower_bound": w.valuation_bound, "ok": w.verified}
                for w in self.witness_levels
            ],
            "caveats": list(self.caveats),
        }

    def to_text(self):
        w_max = max((w.level for w in self.witness_levels), default=0)
        lines = [
            f"model: p={self.p}, precision={self.precision}",
            f"splitting over F_{self.p}((t)): {self.split_description}",
            f"[L:K] = {self.degree}",
            f"unique prime: e={self.unique_prime[0]} f={self.unique_prime[1]} "
            f"(witness chain verified through level {w_max})",
            f"sum e*f = {self.lhs}"
            + (
                f" < {self.degree} = [L:K]: classical identity FAILS"
                if not self.classical_holds
                else f" = {self.degree}"
            ),
            f"completion identity: {self.lhs} = {self.rhs} "
            + ("OK" if self.eq11_holds else "FAIL"),
            f"fundamental inequality: {self.lhs} <= {self.degree} "
            + ("OK" if self.inequality_holds else "FAIL"),
            f"radical dimension = {self.radical_dim}",
        ]
        for c in self.caveats:
            lines.append(f"caveat: {c}")
        return "\n".join(lines)


def strict_inequality_report(model: SchmidtModel) -> SchmidtReport:
    """Full demonstration: sum e*f = 1 < p = [L:K] while the completion-side
    identity holds with equality and the fundamental inequality is satisfied."""
    rhs, description = tensor_split(model)
    witnesses = []
    for m in range(0, model.precision // model.p + 1):
        w = residue_witness(model, m)
        if not w.verified:
            raise ValidationError(f"witness chain failed at level {m}")
        witnesses.append(w)
    lhs = 1  # unique prime with e = f = 1, witnessed by the chain
    return SchmidtReport(
        p=model.p,
        precision=model.precision,
        degree=model.p,
        lhs=lhs,
        rhs=rhs,
        radical_dim=model.p - rhs,
        unique_prime=(1, 1),
        classical_holds=(lhs == model.p),
        eq11_holds=(lhs == rhs),
        inequality_holds=(lhs <= model.p),
        witness_levels=witnesses,
        split_description=description,
    )
