"""Discrete-valuation completions at finite precision.

Two completion kinds are supported behind one interface:

  * p-adic numbers: elements are p^val * unit with the unit tracked as an
    integer modulo p^prec;
  * Laurent series over a finite residue field at a monic irreducible pi(t):
    elements are u^val * (digit expansion), where u is the uniformizer and the
    residue field is F_q[t]/(pi).

Elements use a capped-relative model: ``prec`` counts known uniformizer
digits, an exact zero has valuation None, and a "weak zero" (prec == 0) is a
quantity only known to satisfy v(x) >= val.  All degree decisions made on
weak zeros are recorded, and the radical/gcd entry points certify their
answers by resultant checks plus re-runs at doubled precision (re-embedding
from the exact source polynomial attached by ``embed``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    GF,
    Poly,
    PolyRing,
    QQ,
    ZZ,
    FiniteField,
    factor_finite_field,
    is_prime_int,
    poly_xgcd,
    resultant,
)
from .errors import (
    ComputationError,
    MixedInseparableCase,
    NotAPthPower,
    NotCoprime,
    PrecisionUnderflow,
    RadicalInconclusive,
    ValidationError,
)

_DEFAULT_MAX_PRECISION = 512

# certification levels for individual pipeline steps
_CERT_AIRTIGHT = 2  # provably correct from the tracked balls alone
_CERT_HEURISTIC = 1  # passed the resultant-valuation check at this precision
_CERT_FAIL = 0


def _max_precision_default():
    try:
        return int(os.environ.get("RAMLAB_MAX_PRECISION", _DEFAULT_MAX_PRECISION))
    except ValueError:
        return _DEFAULT_MAX_PRECISION


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class _LocalElement:
    """Shared behaviour of p-adic and series elements."""

    __slots__ = ("ctx", "val", "prec")

    def is_exact_zero(self):
        return self.val is None

    def is_weak(self):
        return self.val is not None and self.prec == 0

    def is_fuzzy_zero(self):
        """Indistinguishable from zero: exact zero or weak zero."""
        return self.val is None or self.prec == 0

    @property
    def valuation(self):
        """Valuation, +inf for the exact zero, lower bound for weak zeros."""
        return float("inf") if self.val is None else self.val

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return self.render()


class PadicElement(_LocalElement):
    __slots__ = ("unit",)

    def __init__(self, ctx, val, unit, prec):
        self.ctx = ctx
        self.val = val
        self.unit = unit
        self.prec = prec

    def _abs_known(self):
        return self.val + self.prec

    def __add__(self, other):
        ctx = self.ctx
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        v = min(self.val, other.val)
        bound = min(self._abs_known(), other._abs_known())
        window = bound - v
        if window <= 0:
            return PadicElement(ctx, v, 0, 0)
        mod = ctx.p ** window
        rep = 0
        if not self.is_weak():
            rep += self.unit * ctx.p ** (self.val - v)
        if not other.is_weak():
            rep += other.unit * ctx.p ** (other.val - v)
        rep %= mod
        if rep == 0:
            return PadicElement(ctx, bound, 0, 0)
        shift = 0
        while rep % ctx.p == 0:
            rep //= ctx.p
            shift += 1
        prec = min(window - shift, ctx.N)
        return PadicElement(ctx, v + shift, rep % ctx.p ** prec, prec)

    def __neg__(self):
        if self.is_fuzzy_zero():
            return self
        return PadicElement(
            self.ctx, self.val, (-self.unit) % self.ctx.p ** self.prec, self.prec
        )

    def __mul__(self, other):
        ctx = self.ctx
        if self.is_exact_zero() or other.is_exact_zero():
            return ctx.zero()
        if self.is_weak() or other.is_weak():
            return PadicElement(ctx, self.val + other.val, 0, 0)
        prec = min(self.prec, other.prec, ctx.N)
        unit = self.unit * other.unit % ctx.p ** prec
        return PadicElement(ctx, self.val + other.val, unit, prec)

    def __truediv__(self, other):
        ctx = self.ctx
        if other.is_exact_zero():
            raise ZeroDivisionError("division by exact zero")
        if other.is_weak():
            raise PrecisionUnderflow("division by a weak zero")
        if self.is_exact_zero():
            return ctx.zero()
        if self.is_weak():
            return PadicElement(ctx, self.val - other.val, 0, 0)
        prec = min(self.prec, other.prec, ctx.N)
        mod = ctx.p ** prec
        unit = self.unit * pow(other.unit, -1, mod) % mod
        return PadicElement(ctx, self.val - other.val, unit, prec)

    def scale_int(self, k: int):
        ctx = self.ctx
        if k == 0 or self.is_exact_zero():
            return ctx.zero()
        if self.is_weak():
            return self
        v = 0
        while k % ctx.p == 0:
            k //= ctx.p
            v += 1
        mod = ctx.p ** self.prec
        return PadicElement(ctx, self.val + v, self.unit * k % mod, self.prec)

    def shift(self, k: int):
        if self.is_exact_zero():
            return self
        return PadicElement(self.ctx, self.val + k, self.unit, self.prec)

    def residue(self):
        ctx = self.ctx
        if self.is_exact_zero():
            return ctx.residue_field.zero()
        if self.is_weak():
            if self.val >= 1:
                return ctx.residue_field.zero()
            raise PrecisionUnderflow("residue of a weak zero at valuation 0")
        if self.val < 0:
            raise ValidationError("residue of a non-integral element")
        if self.val > 0:
            return ctx.residue_field.zero()
        return ctx.residue_field.coerce(self.unit % ctx.p)

    def frobenius(self):
        raise ValidationError("Frobenius is only available in characteristic p")

    def digits(self):
        out = []
        u = self.unit
        for _ in range(self.prec):
            u, d = divmod(u, self.ctx.p)
            out.append(d)
        return out

    def render(self):
        if self.is_exact_zero():
            return "INF |"
        if self.is_weak():
            return f"{self.val}+ |"
        ds = self.digits()
        while len(ds) > 1 and ds[-1] == 0:
            ds.pop()
        return f"{self.val} | " + " ".join(str(d) for d in ds)


class SeriesElement(_LocalElement):
    __slots__ = ("coeffs",)

    def __init__(self, ctx, val, coeffs, prec):
        self.ctx = ctx
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    def _abs_known(self):
        return self.val + self.prec

    def __add__(self, other):
        ctx = self.ctx
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        v = min(self.val, other.val)
        bound = min(self._abs_known(), other._abs_known())
        window = bound - v
        if window <= 0:
            return SeriesElement(ctx, v, (), 0)
        k = ctx.residue_field
        rep = [k.zero()] * window
        for e in (self, other):
            if e.is_weak():
                continue
            off = e.val - v
            for i, d in enumerate(e.coeffs):
                if off + i < window:
                    rep[off + i] = rep[off + i] + d
        shift = 0
        while shift < window and rep[shift].is_zero():
            shift += 1
        if shift == window:
            return SeriesElement(ctx, bound, (), 0)
        prec = min(window - shift, ctx.N)
        return SeriesElement(ctx, v + shift, rep[shift : shift + prec], prec)

    def __neg__(self):
        if self.is_fuzzy_zero():
            return self
        return SeriesElement(self.ctx, self.val, tuple(-d for d in self.coeffs), self.prec)

    def __mul__(self, other):
        ctx = self.ctx
        if self.is_exact_zero() or other.is_exact_zero():
            return ctx.zero()
        if self.is_weak() or other.is_weak():
            return SeriesElement(ctx, self.val + other.val, (), 0)
        prec = min(self.prec, other.prec, ctx.N)
        k = ctx.residue_field
        rep = [k.zero()] * prec
        for i, a in enumerate(self.coeffs):
            if i >= prec or a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= prec:
                    break
                rep[i + j] = rep[i + j] + a * b
        return SeriesElement(ctx, self.val + other.val, rep, prec)

    def __truediv__(self, other):
        ctx = self.ctx
        if other.is_exact_zero():
            raise ZeroDivisionError("division by exact zero")
        if other.is_weak():
            raise PrecisionUnderflow("division by a weak zero")
        if self.is_exact_zero():
            return ctx.zero()
        if self.is_weak():
            return SeriesElement(ctx, self.val - other.val, (), 0)
        prec = min(self.prec, other.prec, ctx.N)
        inv = _series_inverse(other.coeffs, prec, ctx.residue_field)
        prod = _series_mul(self.coeffs, inv, prec, ctx.residue_field)
        return SeriesElement(ctx, self.val - other.val, prod, prec)

    def scale_int(self, k: int):
        ctx = self.ctx
        c = ctx.residue_field.coerce(k)
        if c.is_zero() or self.is_exact_zero():
            return ctx.zero()
        if self.is_weak():
            return self
        return SeriesElement(ctx, self.val, tuple(d * c for d in self.coeffs), self.prec)

    def shift(self, k: int):
        if self.is_exact_zero():
            return self
        return SeriesElement(self.ctx, self.val + k, self.coeffs, self.prec)

    def residue(self):
        ctx = self.ctx
        if self.is_exact_zero():
            return ctx.residue_field.zero()
        if self.is_weak():
            if self.val >= 1:
                return ctx.residue_field.zero()
            raise PrecisionUnderflow("residue of a weak zero at valuation 0")
        if self.val < 0:
            raise ValidationError("residue of a non-integral element")
        if self.val > 0:
            return ctx.residue_field.zero()
        return self.coeffs[0]

    def frobenius(self):
        """x -> x^p: digits are Frobenius-powered, exponents multiply by p."""
        ctx = self.ctx
        p = ctx.residue_field.p
        if self.is_exact_zero():
            return self
        if self.is_weak():
            return SeriesElement(ctx, self.val * p, (), 0)
        prec = min(self.prec * p - (p - 1), ctx.N)
        k = ctx.residue_field
        rep = [k.zero()] * prec
        for i, d in enumerate(self.coeffs):
            if p * i < prec:
                rep[p * i] = d ** p
        return SeriesElement(ctx, self.val * p, rep, prec)

    def nonzero_exponents(self):
        if self.is_fuzzy_zero():
            return []
        return [self.val + i for i, d in enumerate(self.coeffs) if not d.is_zero()]

    def render(self):
        if self.is_exact_zero():
            return "INF |"
        if self.is_weak():
            return f"{self.val}+ |"
        ds = list(self.coeffs)
        while len(ds) > 1 and ds[-1].is_zero():
            ds.pop()
        return f"{self.val} | " + " ".join(_digit_str(d) for d in ds)

    def to_sparse_str(self, var="t"):
        if self.is_exact_zero():
            return "0"
        if self.is_weak():
            return f"O({var}^{self.val})"
        parts = []
        for i, d in enumerate(self.coeffs):
            if d.is_zero():
                continue
            e = self.val + i
            head = "1" if e == 0 else (var if e == 1 else f"{var}^{e}")
            ds = _digit_str(d)
            if e == 0:
                parts.append(ds)
            elif ds == "1":
                parts.append(head)
            else:
                parts.append(f"{ds}*{head}")
        return " + ".join(parts) if parts else "0"


def _digit_str(d):
    s = repr(d)
    return f"({s})" if ("+" in s or "*" in s) else s


def _series_mul(a, b, k, field):
    out = [field.zero()] * k
    for i, x in enumerate(a):
        if i >= k or x.is_zero():
            continue
        for j, y in enumerate(b):
            if i + j >= k:
                break
            out[i + j] = out[i + j] + x * y
    return out


def _series_inverse(a, k, field):
    inv0 = field.one() / a[0]
    out = [inv0] + [field.zero()] * (k - 1)
    for j in range(1, k):
        acc = field.zero()
        for i in range(1, j + 1):
            if i < len(a):
                acc = acc + a[i] * out[j - i]
        out[j] = -inv0 * acc
    return out


# ---------------------------------------------------------------------------
# contexts
# ---------------------------------------------------------------------------


class PadicContext:
    kind = "p-adic"

    def __init__(self, p, precision=64, max_precision=None):
        if not is_prime_int(p):
            raise ValidationError(f"{p} is not prime")
        if precision < 4:
            raise ValidationError("precision must be at least 4")
        self.p = p
        self.N = precision
        self.max_precision = max_precision or _max_precision_default()
        self.residue_field = GF(p)
        self.field_char = 0  # Q_p has characteristic zero

    def with_precision(self, precision):
        return PadicContext(self.p, precision, self.max_precision)

    def zero(self):
        return PadicElement(self, None, 0, 0)

    def one(self):
        return self.from_int(1)

    def uniformizer(self):
        return self.from_int(self.p)

    def from_int(self, n: int):
        if n == 0:
            return self.zero()
        v = 0
        while n % self.p == 0:
            n //= self.p
            v += 1
        return PadicElement(self, v, n % self.p ** self.N, self.N)

    def from_fraction(self, q):
        q = Fraction(q)
        if q == 0:
            return self.zero()
        num = self.from_int(q.numerator)
        den = self.from_int(q.denominator)
        return num / den

    def from_residue(self, c):
        return self.from_int(c.to_int())

    def coerce_coefficient(self, c):
        if isinstance(c, int):
            return self.from_int(c)
        if isinstance(c, Fraction):
            return self.from_fraction(c)
        raise ValidationError(f"cannot embed coefficient {c!r} p-adically")

    def uniformizer_str(self):
        return str(self.p)

    # raw arithmetic: representatives of Z/p^K
    def raw_zero(self, K):
        return 0

    def raw_one(self, K):
        return 1

    def raw_is_zero(self, r, K):
        return r % self.p ** K == 0

    def raw_add(self, a, b, K):
        return (a + b) % self.p ** K

    def raw_sub(self, a, b, K):
        return (a - b) % self.p ** K

    def raw_mul(self, a, b, K):
        return a * b % self.p ** K

    def raw_from_residue(self, c, K):
        return c.to_int()

    def raw_from_element(self, e, K):
        if e.is_exact_zero():
            return 0
        if e.val + e.prec < K:
            raise PrecisionUnderflow(
                f"coefficient only known modulo p^{e.val + e.prec}, need p^{K}"
            )
        if e.is_weak():
            return 0
        return e.unit * self.p ** e.val % self.p ** K

    def element_from_raw(self, rep, K):
        rep %= self.p ** K
        if rep == 0:
            return PadicElement(self, K, 0, 0)
        v = 0
        while rep % self.p == 0:
            rep //= self.p
            v += 1
        prec = min(K - v, self.N)
        return PadicElement(self, v, rep % self.p ** prec, prec)

    def __repr__(self):
        return f"Q_{self.p} (precision {self.N})"


class SeriesContext:
    kind = "series"

    def __init__(self, coeff_field: FiniteField, pi: Poly, precision=64,
                 max_precision=None):
        if precision < 4:
            raise ValidationError("precision must be at least 4")
        if pi.ring != coeff_field or not pi.is_monic() or pi.degree < 1:
            raise ValidationError("uniformizer must be a monic polynomial over F_q")
        if pi.degree > 1:
            facs = factor_finite_field(pi, 0)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ValidationError(f"{pi!r} is not irreducible")
        self.coeff_field = coeff_field
        self.pi = pi
        self.N = precision
        self.max_precision = max_precision or _max_precision_default()
        self.field_char = coeff_field.p
        if pi.degree == 1:
            self.residue_field = coeff_field
        else:
            self.residue_field = coeff_field.extension(pi, gen_name="w")
        self._tau = self._expand_t()

    def _expand_t(self):
        """Digit expansion of t in the completion: solves pi(tau) = u."""
        k = self.residue_field
        N = self.N
        if self.pi.degree == 1:
            root = -self.pi.coeff(0)
            tau = [k.coerce(root)] + [k.zero()] * (N - 1)
            if N >= 2:
                tau[1] = k.one()
            return tau
        omega = k.gen()
        pi_k = [k.coerce(c) for c in self.pi.coeffs]
        dpi_k = [i * pi_k[i] for i in range(1, len(pi_k))]
        tau = [omega] + [k.zero()] * (N - 1)
        u = [k.zero()] * N
        if N >= 2:
            u[1] = k.one()
        steps = 1
        while steps < 2 * N:
            val = self._eval_digits(pi_k, tau)
            err = [a - b for a, b in zip(val, u)]
            if all(d.is_zero() for d in err):
                break
            dval = self._eval_digits(dpi_k, tau)
            dinv = _series_inverse(dval, N, k)
            corr = _series_mul(err, dinv, N, k)
            tau = [a - b for a, b in zip(tau, corr)]
            steps *= 2
        check = self._eval_digits(pi_k, tau)
        if any((a - b) and not (a - b).is_zero() for a, b in zip(check, u)):
            raise ComputationError("uniformizer expansion failed to converge")
        return tau

    def _eval_digits(self, poly_coeffs, x_digits):
        k = self.residue_field
        acc = [k.zero()] * self.N
        for c in reversed(poly_coeffs):
            acc = _series_mul(acc, x_digits, self.N, k)
            acc[0] = acc[0] + c
        return acc

    def with_precision(self, precision):
        return SeriesContext(self.coeff_field, self.pi, precision, self.max_precision)

    def zero(self):
        return SeriesElement(self, None, (), 0)

    def one(self):
        k = self.residue_field
        return SeriesElement(self, 0, [k.one()] + [k.zero()] * (self.N - 1), self.N)

    def uniformizer(self):
        k = self.residue_field
        return SeriesElement(self, 1, [k.one()] + [k.zero()] * (self.N - 1), self.N)

    def from_residue(self, c):
        k = self.residue_field
        c = k.coerce(c)
        if c.is_zero():
            return self.zero()
        return SeriesElement(self, 0, [c] + [k.zero()] * (self.N - 1), self.N)

    def from_base_poly(self, a: Poly):
        """Embed a in F_q[t] via the digit expansion of t; exact valuation."""
        if a.ring != self.coeff_field or a.var != self.pi.var:
            raise ValidationError(f"{a!r} is not an element of the base ring")
        if a.is_zero():
            return self.zero()
        v = 0
        while True:
            q, r = divmod(a, self.pi)
            if not r.is_zero():
                break
            a = q
            v += 1
        k = self.residue_field
        digits = self._eval_digits([k.coerce(c) for c in a.coeffs], self._tau)
        if digits[0].is_zero():
            raise ComputationError("unit part lost its constant term")
        return SeriesElement(self, v, digits, self.N)

    def coerce_coefficient(self, c):
        if isinstance(c, int):
            return self.from_residue(self.coeff_field.coerce(c))
        if isinstance(c, Poly) and c.ring == self.coeff_field:
            return self.from_base_poly(c)
        if isinstance(c, Poly) and isinstance(c.ring, FiniteField):
            return self.from_base_poly(c.map_coeffs(self.coeff_field.coerce,
                                                    self.coeff_field, self.pi.var))
        from .arith import FFElement

        if isinstance(c, FFElement):
            return self.from_residue(self.coeff_field.coerce(c))
        raise ValidationError(f"cannot embed coefficient {c!r} into the series field")

    def uniformizer_str(self):
        from .arith import render_poly

        return render_poly(self.pi)

    # raw arithmetic: digit lists of length K over the residue field
    def raw_zero(self, K):
        return tuple([self.residue_field.zero()] * K)

    def raw_one(self, K):
        k = self.residue_field
        return tuple([k.one()] + [k.zero()] * (K - 1))

    def raw_is_zero(self, r, K):
        return all(d.is_zero() for d in r[:K])

    def raw_add(self, a, b, K):
        return tuple(x + y for x, y in zip(a[:K], b[:K]))

    def raw_sub(self, a, b, K):
        return tuple(x - y for x, y in zip(a[:K], b[:K]))

    def raw_mul(self, a, b, K):
        return tuple(_series_mul(list(a[:K]), list(b[:K]), K, self.residue_field))

    def raw_from_residue(self, c, K):
        k = self.residue_field
        return tuple([k.coerce(c)] + [k.zero()] * (K - 1))

    def raw_from_element(self, e, K):
        k = self.residue_field
        if e.is_exact_zero():
            return self.raw_zero(K)
        if e.val + e.prec < K:
            raise PrecisionUnderflow(
                f"coefficient only known modulo u^{e.val + e.prec}, need u^{K}"
            )
        if e.is_weak():
            return self.raw_zero(K)
        out = [k.zero()] * K
        for i, d in enumerate(e.coeffs):
            if 0 <= e.val + i < K:
                out[e.val + i] = d
        return tuple(out)

    def element_from_raw(self, rep, K):
        rep = list(rep[:K])
        shift = 0
        while shift < K and rep[shift].is_zero():
            shift += 1
        if shift == K:
            return SeriesElement(self, K, (), 0)
        prec = min(K - shift, self.N)
        return SeriesElement(self, shift, rep[shift : shift + prec], prec)

    def __repr__(self):
        return f"GF({self.coeff_field.order})(({self.uniformizer_str()})) (precision {self.N})"


def completion_context(base, prime, precision=64, max_precision=None):
    """Context factory: base 'Z' with an integer prime, or a FiniteField with
    a monic irreducible pi(t)."""
    if base == "Z" or base is ZZ:
        return PadicContext(int(prime), precision, max_precision)
    if isinstance(base, FiniteField):
        return SeriesContext(base, prime, precision, max_precision)
    raise ValidationError(f"unsupported base {base!r}")


# ---------------------------------------------------------------------------
# local polynomials
# ---------------------------------------------------------------------------


class LocalPolynomial:
    """Dense polynomial with local-element coefficients.

    ``source`` (optional) is the exact base polynomial this was embedded
    from; it lets the certification layer re-embed at doubled precision.
    """

    __slots__ = ("ctx", "coeffs", "source")

    def __init__(self, coeffs, ctx, source=None):
        cs = list(coeffs)
        while cs and cs[-1].is_exact_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.ctx = ctx
        self.source = source

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero()

    def lc(self):
        if not self.coeffs:
            return self.ctx.zero()
        return self.coeffs[-1]

    def is_zero_poly(self):
        return not self.coeffs

    def is_fuzzy_zero_poly(self):
        return all(c.is_fuzzy_zero() for c in self.coeffs)

    def is_exactly_zero_poly(self):
        return all(c.is_exact_zero() for c in self.coeffs)

    def _wrap(self, coeffs, source=None):
        return LocalPolynomial(coeffs, self.ctx, source)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero_poly() or other.is_zero_poly():
            return self._wrap([])
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_exact_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_exact_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return self._wrap(out)

    def __pow__(self, e):
        result = self._wrap([self.ctx.one()])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, elem):
        return self._wrap([c * elem for c in self.coeffs])

    def deriv(self):
        if self.degree < 1:
            return self._wrap([])
        return self._wrap(
            [self.coeffs[i].scale_int(i) for i in range(1, len(self.coeffs))]
        )

    def evaluate(self, x):
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def chop_weak(self):
        """Drop weak-zero leading coefficients; returns (poly, chopped_any)."""
        cs = list(self.coeffs)
        chopped = False
        while cs and cs[-1].is_fuzzy_zero():
            if cs[-1].is_weak():
                chopped = True
            cs.pop()
        return self._wrap(cs), chopped

    def is_monic_known(self):
        lc = self.lc()
        return not lc.is_fuzzy_zero() and lc.val == 0

    def make_monic(self):
        lc = self.lc()
        if lc.is_fuzzy_zero():
            raise PrecisionUnderflow("cannot normalize by an uncertain leading coefficient")
        return self._wrap([c / lc for c in self.coeffs])

    def shift_content(self):
        """(poly / u^m, m) with m the minimal coefficient valuation bound."""
        vals = [c.val for c in self.coeffs if not c.is_exact_zero()]
        if not vals:
            return self, 0
        m = min(vals)
        if m == 0:
            return self, 0
        return self._wrap([c.shift(-m) if not c.is_exact_zero() else c
                           for c in self.coeffs]), m

    def residue_poly(self) -> Poly:
        field = self.ctx.residue_field
        return Poly([c.residue() for c in self.coeffs], field)

    def min_known(self):
        """Smallest absolute precision over the coefficients."""
        out = None
        for c in self.coeffs:
            if c.is_exact_zero():
                continue
            b = c.val + c.prec
            out = b if out is None else min(out, b)
        return out

    def render(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c.is_exact_zero():
                continue
            head = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(f"({c.render()})*{head}" if i else f"({c.render()})")
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


def embed(f: Poly, ctx) -> LocalPolynomial:
    """Coefficientwise image of f in the completion, truncated at precision N;
    exact-source provenance is attached for later re-embedding.

    Raises PrecisionUnderflow when a coefficient has valuation below -N."""
    coeffs = []
    for c in f.coeffs:
        e = ctx.coerce_coefficient(c)
        if not e.is_exact_zero() and e.val < -ctx.N:
            raise PrecisionUnderflow(
                f"coefficient valuation {e.val} below -{ctx.N}"
            )
        coeffs.append(e)
    return LocalPolynomial(coeffs, ctx, source=f)


# ---------------------------------------------------------------------------
# newton polygon
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    segments: tuple  # ((slope: Fraction, length: int), ...)

    def slopes(self):
        return [s for s, _ in self.segments]

    def total_length(self):
        return sum(length for _, length in self.segments)


def newton_polygon(F: LocalPolynomial) -> NewtonPolygon:
    """Lower convex hull of (i, v(a_i)); slopes strictly increasing."""
    F, _ = F.chop_weak()
    if F.is_zero_poly():
        raise ValidationError("newton polygon of the zero polynomial")
    pts = []
    weak = []
    for i, c in enumerate(F.coeffs):
        if c.is_exact_zero():
            continue
        if c.is_weak():
            weak.append((i, c.val))
        else:
            pts.append((i, c.val))
    if not pts:
        raise PrecisionUnderflow("no certain coefficients for the polygon")
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it lies on or above the new chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    for i, bound in weak:
        if i < hull[0][0]:
            raise PrecisionUnderflow(
                f"coefficient {i} unknown below the polygon support"
            )
        y = _hull_height(hull, i)
        if y is not None and Fraction(bound) < y:
            raise PrecisionUnderflow(
                f"coefficient {i} known only above valuation {bound}, hull needs {y}"
            )
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments))


def _hull_height(hull, x):
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
    return None


# ---------------------------------------------------------------------------
# hensel lifting
# ---------------------------------------------------------------------------


def _raw_trim(ctx, coeffs, K):
    cs = list(coeffs)
    while cs and ctx.raw_is_zero(cs[-1], K):
        cs.pop()
    return cs


def _raw_poly_add(ctx, a, b, K):
    n = max(len(a), len(b))
    z = ctx.raw_zero(K)
    return _raw_trim(
        ctx,
        [ctx.raw_add(a[i] if i < len(a) else z, b[i] if i < len(b) else z, K)
         for i in range(n)],
        K,
    )


def _raw_poly_sub(ctx, a, b, K):
    n = max(len(a), len(b))
    z = ctx.raw_zero(K)
    return _raw_trim(
        ctx,
        [ctx.raw_sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z, K)
         for i in range(n)],
        K,
    )


def _raw_poly_mul(ctx, a, b, K):
    if not a or not b:
        return []
    z = ctx.raw_zero(K)
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = ctx.raw_add(out[i + j], ctx.raw_mul(x, y, K), K)
    return _raw_trim(ctx, out, K)


def _raw_poly_divmod_monic(ctx, a, b, K):
    """Divide by a monic raw polynomial (leading coefficient raw one)."""
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _raw_trim(ctx, rem, K)
    z = ctx.raw_zero(K)
    quo = [z] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        top = rem[i + db]
        if ctx.raw_is_zero(top, K):
            continue
        quo[i] = top
        for j in range(db + 1):
            rem[i + j] = ctx.raw_sub(rem[i + j], ctx.raw_mul(top, b[j], K), K)
    return _raw_trim(ctx, quo, K), _raw_trim(ctx, rem[:db], K)


def hensel_lift(F: LocalPolynomial, g0: Poly, h0: Poly, target: int):
    """Quadratic lift of a coprime residue factorization F = g0*h0 (mod m)
    to F = G*H (mod m^target); G, H reduce to g0, h0 and stay monic.

    Raises NotCoprime when Res(g0, h0) = 0 in the residue field and
    PrecisionUnderflow when target exceeds the context precision."""
    ctx = F.ctx
    if target < 1:
        raise ValidationError("target precision must be >= 1")
    if target > ctx.N:
        raise PrecisionUnderflow(f"target {target} exceeds context precision {ctx.N}")
    lc = F.lc()
    if lc.is_fuzzy_zero() or lc.val != 0:
        raise ValidationError("hensel lifting expects a unit leading coefficient")
    g0 = g0.monic()
    h0 = h0.monic()
    if g0.degree + h0.degree != F.degree:
        raise ValidationError("degrees of residue factors must add up to deg F")
    if F.residue_poly().monic() != (g0 * h0).monic():
        raise ValidationError("g0*h0 is not the residue of F")
    if resultant(g0, h0).is_zero():
        raise NotCoprime("residue factors share a root")
    one, s, t = poly_xgcd(g0, h0)
    if one.degree != 0:
        raise NotCoprime("residue factors share a factor")

    K = target
    fr = [ctx.raw_from_element(c, K) for c in F.coeffs]

    def from_res(poly):
        return [ctx.raw_from_residue(c, K) for c in poly.coeffs]

    g = from_res(g0)
    h = from_res(h0)
    sr = from_res(s)
    tr = from_res(t)
    k = 1
    while k < target:
        k = min(2 * k, target)
        e = _raw_poly_sub(ctx, fr, _raw_poly_mul(ctx, g, h, K), K)
        q, r = _raw_poly_divmod_monic(ctx, _raw_poly_mul(ctx, sr, e, K), h, K)
        g_new = _raw_poly_add(
            ctx, g, _raw_poly_add(ctx, _raw_poly_mul(ctx, tr, e, K),
                                  _raw_poly_mul(ctx, q, g, K), K), K
        )
        h_new = _raw_poly_add(ctx, h, r, K)
        b = _raw_poly_sub(
            ctx,
            _raw_poly_add(ctx, _raw_poly_mul(ctx, sr, g_new, K),
                          _raw_poly_mul(ctx, tr, h_new, K), K),
            [ctx.raw_one(K)],
            K,
        )
        c, d = _raw_poly_divmod_monic(ctx, _raw_poly_mul(ctx, sr, b, K), h_new, K)
        sr = _raw_poly_sub(ctx, sr, d, K)
        tr = _raw_poly_sub(
            ctx, tr, _raw_poly_add(ctx, _raw_poly_mul(ctx, tr, b, K),
                                   _raw_poly_mul(ctx, c, g_new, K), K), K
        )
        g, h = g_new, h_new

    def wrap(raw, deg):
        z = ctx.raw_zero(K)
        cs = list(raw) + [z] * (deg + 1 - len(raw))
        return LocalPolynomial([ctx.element_from_raw(c, K) for c in cs], ctx)

    G = wrap(g, g0.degree)
    H = wrap(h, h0.degree)
    return G, H


# ---------------------------------------------------------------------------
# p-th roots
# ---------------------------------------------------------------------------


def pth_root(a: SeriesElement, ctx: SeriesContext) -> SeriesElement:
    """The b with b^p = a, to precision floor(prec/p); requires every exponent
    carrying a nonzero digit to be divisible by p (NotAPthPower otherwise)."""
    if ctx.field_char == 0:
        raise ValidationError("p-th roots live in positive characteristic")
    p = ctx.field_char
    if a.is_exact_zero():
        return a
    if a.is_weak():
        raise PrecisionUnderflow("p-th root of a weak zero")
    if a.val % p:
        raise NotAPthPower(a.val)
    for e in a.nonzero_exponents():
        if e % p:
            raise NotAPthPower(e)
    k = ctx.residue_field
    prec = max(a.prec // p, 1)
    digits = [k.zero()] * prec
    for i, d in enumerate(a.coeffs):
        if d.is_zero():
            continue
        e = a.val + i
        j = e // p - a.val // p
        if j < prec:
            digits[j] = d.pth_root()
    return SeriesElement(ctx, a.val // p, digits, prec)


# ---------------------------------------------------------------------------
# local resultants (certification support)
# ---------------------------------------------------------------------------


def local_resultant(F: LocalPolynomial, G: LocalPolynomial):
    """Sylvester determinant with minimum-valuation pivoting."""
    ctx = F.ctx
    F, _ = F.chop_weak()
    G, _ = G.chop_weak()
    if F.is_zero_poly() or G.is_zero_poly():
        return ctx.zero()
    n, m = F.degree, G.degree
    if n == 0 and m == 0:
        return ctx.one()
    size = n + m
    rows = []
    fc = list(reversed(F.coeffs))
    gc = list(reversed(G.coeffs))
    z = ctx.zero()
    for i in range(m):
        rows.append([z] * i + fc + [z] * (size - n - 1 - i))
    for i in range(n):
        rows.append([z] * i + gc + [z] * (size - m - 1 - i))
    det = ctx.one()
    sign = 1
    for col in range(size):
        best = None
        for r in range(col, size):
            e = rows[r][col]
            if e.is_fuzzy_zero():
                continue
            if best is None or e.val < rows[best][col].val:
                best = r
        if best is None:
            # column of weak zeros: the determinant itself is uncertain
            bound = min(
                (rows[r][col].val for r in range(col, size)
                 if not rows[r][col].is_exact_zero()),
                default=None,
            )
            if bound is None:
                return ctx.zero()
            total = (0 if det.is_fuzzy_zero() else det.val) + bound
            if ctx.kind == "p-adic":
                return PadicElement(ctx, total, 0, 0)
            return SeriesElement(ctx, total, (), 0)
        if best != col:
            rows[col], rows[best] = rows[best], rows[col]
            sign = -sign
        pivot = rows[col][col]
        det = det * pivot
        for r in range(col + 1, size):
            e = rows[r][col]
            if e.is_exact_zero():
                continue
            factor = e / pivot
            rows[r] = [
                a - factor * b for a, b in zip(rows[r], rows[col])
            ]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# certified gcd
# ---------------------------------------------------------------------------


class _StepLog:
    """Collects per-step certification levels for one pipeline run."""

    def __init__(self):
        self.levels = []

    def push(self, level):
        self.levels.append(level)

    @property
    def airtight(self):
        return all(l == _CERT_AIRTIGHT for l in self.levels)

    @property
    def passed(self):
        return all(l >= _CERT_HEURISTIC for l in self.levels)


def _divmod_local(A: LocalPolynomial, B: LocalPolynomial):
    ctx = A.ctx
    B, _ = B.chop_weak()
    if B.is_zero_poly():
        raise ZeroDivisionError("local polynomial division by zero")
    lc = B.lc()
    if lc.is_fuzzy_zero():
        raise PrecisionUnderflow("division by polynomial with uncertain lead")
    rem = list(A.coeffs)
    dq = len(rem) - len(B.coeffs)
    if dq < 0:
        return LocalPolynomial([], ctx), A
    quo = [ctx.zero()] * (dq + 1)
    for i in range(dq, -1, -1):
        top = rem[i + B.degree]
        if top.is_exact_zero():
            continue
        q = top / lc
        quo[i] = q
        for j, b in enumerate(B.coeffs):
            rem[i + j] = rem[i + j] - q * b
    return LocalPolynomial(quo, ctx), LocalPolynomial(rem[: B.degree], ctx)


def _euclid_gcd(F: LocalPolynomial, G: LocalPolynomial):
    """Euclidean remainder sequence with content stripping; returns the monic
    candidate gcd (weak leading coefficients are chopped as zeros)."""
    A, _ = F.chop_weak()
    B, _ = G.chop_weak()
    A, _ = A.shift_content()
    B, _ = B.shift_content()
    if A.is_zero_poly():
        return B.make_monic() if not B.is_zero_poly() else B
    if B.is_zero_poly():
        return A.make_monic()
    if A.degree < B.degree:
        A, B = B, A
    while True:
        _, r = _divmod_local(A, B)
        r, _ = r.chop_weak()
        if r.is_zero_poly():
            return B.make_monic()
        r, _ = r.shift_content()
        A, B = B, r
        if B.degree == 0:
            return B.make_monic()


def _divide_checked(A: LocalPolynomial, B: LocalPolynomial, log: _StepLog):
    """A / B, verifying the remainder is indistinguishable from zero."""
    if B.degree == 0:
        log.push(_CERT_AIRTIGHT)
        return A.scale(A.ctx.one() / B.coeff(0))
    q, r = _divmod_local(A, B)
    if not r.is_fuzzy_zero_poly():
        log.push(_CERT_FAIL)
    else:
        log.push(_CERT_HEURISTIC)
    return q


def _resultant_check(Q1: LocalPolynomial, Q2: LocalPolynomial, ctx):
    R = local_resultant(Q1, Q2)
    return (not R.is_fuzzy_zero()) and R.val < ctx.N


def _inner_gcd(F: LocalPolynomial, G: LocalPolynomial, log: _StepLog):
    """One gcd at the current precision, with its certification level.

    Degree-0 candidates whose cofactor resultant is provably nonzero are
    airtight: the resultant of the true inputs lies in the computed ball, so
    gcd = 1 follows rigorously.  Anything of positive degree is at best
    heuristic at a single precision and relies on the doubling policy."""
    ctx = F.ctx
    Fc, _ = F.chop_weak()
    Gc, _ = G.chop_weak()
    if Fc.is_zero_poly() and Gc.is_zero_poly():
        log.push(_CERT_AIRTIGHT)
        return LocalPolynomial([], ctx)
    if Fc.is_zero_poly():
        log.push(_CERT_AIRTIGHT)
        return Gc.make_monic()
    if Gc.is_zero_poly():
        log.push(_CERT_AIRTIGHT)
        return Fc.make_monic()
    if Fc.degree == 0 or Gc.degree == 0:
        log.push(_CERT_AIRTIGHT)
        return LocalPolynomial([ctx.one()], ctx)
    g = _euclid_gcd(Fc, Gc)
    if g.degree == 0:
        log.push(_CERT_AIRTIGHT if _resultant_check(Fc, Gc, ctx) else _CERT_FAIL)
        return LocalPolynomial([ctx.one()], ctx)
    q1, r1 = _divmod_local(Fc, g)
    q2, r2 = _divmod_local(Gc, g)
    if not (r1.is_fuzzy_zero_poly() and r2.is_fuzzy_zero_poly()):
        log.push(_CERT_FAIL)
        return g
    log.push(_CERT_HEURISTIC if _resultant_check(q1, q2, ctx) else _CERT_FAIL)
    return g


def certified_gcd(F: LocalPolynomial, G: LocalPolynomial, ctx=None):
    """Monic gcd over the completion with a certification flag.

    certified follows the doubling policy: the candidate's degree must be
    stable across two precision doublings (re-embedding from the exact
    sources) and the cofactor resultant must have valuation below the working
    precision.  Degree-zero results certify directly from the resultant of
    the inputs.  Raises PrecisionUnderflow when doubling would exceed the
    configured maximum precision."""
    ctx = ctx or F.ctx
    log = _StepLog()
    g = _inner_gcd(F, G, log)
    if log.airtight:
        return g, True
    if F.source is None or G.source is None:
        return g, False
    best = g
    degs = [g.degree if log.passed else None]
    prec = ctx.N
    while True:
        if (
            len(degs) >= 3
            and degs[-1] is not None
            and degs[-1] == degs[-2] == degs[-3]
        ):
            return best, True
        prec *= 2
        if prec > ctx.max_precision:
            raise PrecisionUnderflow(
                f"doubling beyond the configured maximum precision "
                f"{ctx.max_precision}"
            )
        ctx2 = ctx.with_precision(prec)
        F2 = embed(F.source, ctx2)
        G2 = embed(G.source, ctx2)
        log2 = _StepLog()
        g2 = _inner_gcd(F2, G2, log2)
        degs.append(g2.degree if log2.passed else None)
        if log2.passed:
            best = g2


# ---------------------------------------------------------------------------
# radical degree (the completion side of the identity)
# ---------------------------------------------------------------------------


def _contract(F: LocalPolynomial, p: int) -> LocalPolynomial:
    """H with F(x) = H(x^p); indices not divisible by p must hold exact zeros."""
    coeffs = []
    for i in range(0, F.degree + 1, p):
        coeffs.append(F.coeff(i))
    for i in range(F.degree + 1):
        if i % p:
            c = F.coeff(i)
            if c.is_exact_zero():
                continue
            if c.is_weak():
                raise PrecisionUnderflow("uncertain coefficient blocks contraction")
            raise ComputationError("contraction of a polynomial with F' != 0")
    return LocalPolynomial(coeffs, F.ctx)


def _expand(H: LocalPolynomial, p: int) -> LocalPolynomial:
    """Inverse of _contract: coefficient of y^i goes to x^{p*i}."""
    out = [H.ctx.zero()] * (p * H.degree + 1)
    for i, c in enumerate(H.coeffs):
        out[p * i] = c
    return LocalPolynomial(out, H.ctx)


def _poly_coeff_pth_root(H: LocalPolynomial, ctx) -> LocalPolynomial:
    return LocalPolynomial([pth_root(c, ctx) if not c.is_exact_zero() else c
                            for c in H.coeffs], ctx)


def _is_p_power_binomial(F: LocalPolynomial, p: int) -> bool:
    """x^{p^k} - a with exact-zero middle coefficients and a certain constant."""
    n = F.degree
    if n < p:
        return False
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        return False
    if F.coeff(0).is_fuzzy_zero():
        return False
    return all(F.coeff(i).is_exact_zero() for i in range(1, n))


def _class_decompose(H: LocalPolynomial, ctx):
    """Split H = sum_i u^i * (coefficientwise p-th power of E_i) by grouping
    every digit of every coefficient by its exponent class modulo p.
    Returns the list of E_i (possibly zero polynomials)."""
    p = ctx.field_char
    k = ctx.residue_field
    parts = []
    for cls in range(p):
        coeffs = []
        for c in H.coeffs:
            if c.is_exact_zero():
                coeffs.append(ctx.zero())
                continue
            if c.is_weak():
                coeffs.append(SeriesElement(ctx, (c.val - cls + p - 1) // p, (), 0))
                continue
            sel = [
                (e, d)
                for e, d in zip(range(c.val, c.val + c.prec), c.coeffs)
                if e % p == cls and not d.is_zero()
            ]
            if not sel:
                bound = (c.val + c.prec - cls + p - 1) // p
                coeffs.append(SeriesElement(ctx, bound, (), 0))
                continue
            v = (sel[0][0] - cls) // p
            known_to = (c.val + c.prec - cls + p - 1) // p
            digits = [k.zero()] * (known_to - v)
            for e, d in sel:
                digits[(e - cls) // p - v] = d.pth_root()
            prec = min(known_to - v, ctx.N)
            coeffs.append(SeriesElement(ctx, v, digits[:prec], prec))
        parts.append(LocalPolynomial(coeffs, ctx))
    return parts


def _frobenius_poly(D: LocalPolynomial) -> LocalPolynomial:
    return LocalPolynomial([c.frobenius() if not c.is_exact_zero() else c
                            for c in D.coeffs], D.ctx)


def _radical_once(F: LocalPolynomial, ctx, log: _StepLog) -> LocalPolynomial:
    F, chopped = F.chop_weak()
    if chopped:
        log.push(_CERT_FAIL)
    if F.is_zero_poly():
        raise ValidationError("radical of the zero polynomial")
    F = F.make_monic()
    if F.degree == 0:
        return F
    Fp = F.deriv()
    if Fp.is_exactly_zero_poly():
        return _radical_contracted(F, ctx, log)
    if Fp.is_fuzzy_zero_poly():
        raise PrecisionUnderflow("derivative indistinguishable from zero")
    g = _inner_gcd(F, Fp, log)
    if g.degree == 0:
        return F
    w = _divide_checked(F, g, log)
    if ctx.field_char == 0:
        return w
    # strip the separable prime-to-p part from the cofactor
    r = g
    while r.degree > 0:
        d = _inner_gcd(r, w, log)
        if d.degree == 0:
            break
        r = _divide_checked(r, d, log)
    if r.degree == 0:
        return w
    rp = r.deriv()
    if not rp.is_exactly_zero_poly():
        if rp.is_fuzzy_zero_poly():
            raise PrecisionUnderflow("inseparable part uncertain")
        raise PrecisionUnderflow("inseparable part has nonvanishing derivative")
    return w * _radical_contracted(r.make_monic(), ctx, log)


def _radical_contracted(F: LocalPolynomial, ctx, log: _StepLog) -> LocalPolynomial:
    """Radical of F with F' = 0, i.e. F = H(x^p) in characteristic p."""
    p = ctx.field_char
    if p == 0:
        raise ComputationError("zero derivative for a nonconstant char-0 polynomial")
    H = _contract(F, p)
    try:
        E = _poly_coeff_pth_root(H, ctx)
    except NotAPthPower:
        E = None
    if E is not None:
        # F = E^p exactly; the p-th power test is digitwise-exact
        log.push(_CERT_AIRTIGHT)
        return _radical_once(E, ctx, log)
    if _is_p_power_binomial(F, p):
        # x^{p^k} - a with a not a p-th power is irreducible
        log.push(_CERT_AIRTIGHT)
        return F
    if H.degree == 1:
        log.push(_CERT_AIRTIGHT)
        return F
    Hp = H.deriv()
    if Hp.is_exactly_zero_poly():
        raise MixedInseparableCase(
            "doubly inseparable non-binomial contraction is out of supported range"
        )
    if Hp.is_fuzzy_zero_poly():
        raise PrecisionUnderflow("contraction derivative uncertain")
    g = _inner_gcd(H, Hp, log)
    if g.degree > 0:
        raise MixedInseparableCase(
            "contraction with repeated factors needs per-factor p-th power tests"
        )
    # H separable: split off the divisor with p-th-power coefficients
    parts = [E_i for E_i in _class_decompose(H, ctx)]
    nonzero = [P for P in parts if not P.chop_weak()[0].is_zero_poly()]
    D = nonzero[0]
    for P in nonzero[1:]:
        D = _inner_gcd(D, P, log)
    D, _ = D.chop_weak()
    if D.degree == 0:
        return F
    D = D.make_monic()
    C = _divide_checked(H, _frobenius_poly(D), log)
    return _expand(C, p) * D


def radical_degree(F: LocalPolynomial, ctx=None):
    """Degree of the product of the distinct monic irreducible factors of F
    over the completion, together with that radical and a certification flag.

    Certification: runs whose every step is airtight certify immediately;
    otherwise the whole pipeline is re-run at doubled precisions (from the
    exact source) until the degree is stable across two doublings.  Raises
    RadicalInconclusive when the doubling policy is exhausted and
    MixedInseparableCase for unsupported inseparable shapes."""
    ctx = ctx or F.ctx
    for c in F.coeffs:
        if not c.is_exact_zero() and c.val is not None and c.val < 0:
            raise ValidationError("radical_degree expects integral coefficients")
    first_error = None
    try:
        log = _StepLog()
        rad = _radical_once(F, ctx, log)
        if log.airtight:
            return rad.degree, rad, True
        base_deg = rad.degree if log.passed else None
    except (PrecisionUnderflow, ComputationError) as exc:
        first_error = exc
        base_deg = None
        rad = None
    if F.source is None:
        raise RadicalInconclusive(
            "cannot certify: no exact source available for precision doubling"
        ) from first_error
    degs = [base_deg]
    prec = ctx.N
    while True:
        if (
            len(degs) >= 3
            and degs[-1] is not None
            and degs[-1] == degs[-2] == degs[-3]
        ):
            return rad.degree, rad, True
        prec *= 2
        if prec > ctx.max_precision:
            raise RadicalInconclusive(
                f"degree did not stabilize within max precision {ctx.max_precision}"
            )
        ctx2 = ctx.with_precision(prec)
        F2 = embed(F.source, ctx2)
        try:
            log2 = _StepLog()
            rad2 = _radical_once(F2, ctx2, log2)
            if log2.airtight:
                return rad2.degree, rad2, True
            degs.append(rad2.degree if log2.passed else None)
            if log2.passed:
                rad = rad2
        except (PrecisionUnderflow, ComputationError):
            degs.append(None)
