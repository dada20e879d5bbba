"""Both sides of the local-global dimension identity, with verdicts.

For a monic irreducible f over the base ring and a prime p, the left side is
sum e_i f_i over the primes above p (computed by order arithmetic); the right
side is the dimension of the maximal semisimple quotient of L tensor K_p^*,
computed as the certified radical degree of f over the completion.  The
report also carries the classical degree identity, the fundamental
inequality, and the two module-finiteness conditions (residue dimension of
O/pO, and the initial-index form of the sum, which routes epsilon = e
through the ordered-group machinery)."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import valgroup
from .arith import Poly, render_poly
from .errors import ValidationError
from .globalorder import (
    EquationOrder,
    FunctionFieldBase,
    IntegerBase,
    decompose_prime,
    dim_quotient_mod_p,
    factor_finite_field,
    round2_pmaximal,
)
from .localfield import embed, radical_degree


@dataclass
class IdentityReport:
    problem: str
    degree: int
    lhs: int
    rhs: int
    radical_dim: int
    primes: list
    verdict_eq11: bool
    verdict_classical: bool
    verdict_inequality: bool
    e5_c: bool
    e5_d: bool
    semisimple: bool
    certified: bool
    caveats: list = field(default_factory=list)

    def all_verdicts(self) -> bool:
        return (
            self.verdict_eq11
            and self.verdict_classical
            and self.verdict_inequality
            and self.e5_c
            and self.e5_d
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "radical_dim": self.radical_dim,
            "primes": [pr.to_json() for pr in self.primes],
            "verdicts": {
                "eq11": self.verdict_eq11,
                "classical": self.verdict_classical,
                "inequality": self.verdict_inequality,
                "e5_c": self.e5_c,
                "e5_d": self.e5_d,
            },
            "certified": self.certified,
            "caveats": list(self.caveats),
        }

    def to_text(self) -> str:
        lines = [f"problem: {self.problem}", f"[L:K] = {self.degree}"]
        lines.append("primes:")
        for i, pr in enumerate(self.primes):
            lines.append("  " + pr.render(i))
        cert = "certified" if self.certified else "UNCERTIFIED"
        lines.append(f"lhs  (sum e*f)       = {self.lhs}")
        lines.append(f"rhs  (ss dimension)  = {self.rhs}  [{cert}]")
        lines.append(f"radical dimension    = {self.radical_dim}")

        def ok(b):
            return "OK" if b else "FAIL"

        lines.append(
            "verdicts: completion-identity=%s classical=%s inequality=%s "
            "finiteness-c=%s finiteness-d=%s"
            % (
                ok(self.verdict_eq11),
                ok(self.verdict_classical),
                ok(self.verdict_inequality),
                ok(self.e5_c),
                ok(self.e5_d),
            )
        )
        if self.caveats:
            for c in self.caveats:
                lines.append(f"caveat: {c}")
        return "\n".join(lines)


def _witness_irreducible(f: Poly, base) -> bool:
    """Screen irreducibility by reduction at a few primes: one prime modulo
    which f stays irreducible proves irreducibility over the fraction field."""
    if f.degree == 1:
        return True
    if isinstance(base, FunctionFieldBase) and _binomial_not_pth_power(f, base):
        # x^{p^k} - a is irreducible exactly when a is not a p-th power
        return True
    if isinstance(base, IntegerBase):
        candidates = base.primes_upto(60)
    else:
        candidates = base.monic_irreducibles(2)
    for p in candidates[:24]:
        try:
            fbar = base.reduce_poly(f, p)
        except Exception:
            continue
        if fbar.degree != f.degree:
            continue
        facs = factor_finite_field(fbar, 0)
        if len(facs) == 1 and facs[0][1] == 1:
            return True
    return False


def _binomial_not_pth_power(f: Poly, base: FunctionFieldBase) -> bool:
    p = base.char()
    n = f.degree
    m = n
    while m and m % p == 0:
        m //= p
    if m != 1 or n < p:
        return False
    ring = base.ring
    if any(not ring.is_zero(f.coeff(i)) for i in range(1, n)):
        return False
    a = -f.coeff(0)
    # a in F_q[t] is a p-th power iff every t-exponent is divisible by p
    return any(i % p and not a.coeff(i).is_zero() for i in range(a.degree + 1))


def lhs_sum(f: Poly, p, base):
    """Sum of e_i f_i over the primes above p, with the prime list."""
    order = EquationOrder(base, f)
    maximal = round2_pmaximal(order, p)
    primes = decompose_prime(maximal)
    return sum(pr.e * pr.f for pr in primes), primes


def rhs_dim(f: Poly, p, base, precision: int = 64):
    """Dimension of the maximal semisimple quotient of L tensor K_p^*:
    the certified radical degree of f over the completion."""
    if precision < 4:
        raise ValidationError("precision must be at least 4")
    ctx = base.completion(p, precision)
    F = embed(f, ctx)
    deg, _rad, certified = radical_degree(F, ctx)
    return deg, certified


def _initial_index_of_e(e: int) -> int:
    """epsilon(Z, eZ) through the ordered-group machinery (= e for discrete
    value groups)."""
    group = valgroup.lex_z(1)
    sub = valgroup.subgroup(group, [[e]])
    return valgroup.initial_index(group, sub).epsilon


def problem_label(f, p, base, precision):
    prime_str = base.render_elem(p) if not isinstance(p, int) else str(p)
    return f"{render_poly(f)} over {base!r} at prime ({prime_str}), precision {precision}"


def check_identity(f: Poly, p, base, precision: int = 64) -> IdentityReport:
    """Assemble the full report; any certification failure raises rather than
    emitting an unverified equality claim."""
    order = EquationOrder(base, f)
    p = base.validate_prime(p)
    n = order.degree
    caveats = []
    if not _witness_irreducible(f, base):
        caveats.append("irreducibility assumed (no witness prime found)")
    lhs, primes = lhs_sum(f, p, base)
    rhs, certified = rhs_dim(f, p, base, precision)
    maximal = round2_pmaximal(order, p)
    dim = dim_quotient_mod_p(maximal)
    e5_c = dim == n
    e5_d = sum(_initial_index_of_e(pr.e) * pr.f for pr in primes) == n
    radical_dim = n - rhs
    return IdentityReport(
        problem=problem_label(f, p, base, precision),
        degree=n,
        lhs=lhs,
        rhs=rhs,
        radical_dim=radical_dim,
        primes=primes,
        verdict_eq11=(lhs == rhs),
        verdict_classical=(lhs == n),
        verdict_inequality=(lhs <= n),
        e5_c=e5_c,
        e5_d=e5_d,
        semisimple=(radical_dim == 0),
        certified=certified,
        caveats=caveats,
    )
