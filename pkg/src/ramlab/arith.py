"""Exact arithmetic kernel: rationals, finite fields, dense univariate polynomials.

Coefficient domains are plain Python ints (Z), fractions.Fraction (Q),
FFElement (F_q for prime powers q <= 81 via a fixed table of irreducibles,
plus relative extensions for residue fields), and Poly itself (F_q[t] as a
coefficient ring).  Everything is immutable and safe to share.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import ComputationError, ParseError, ValidationError

# ---------------------------------------------------------------------------
# coefficient rings
# ---------------------------------------------------------------------------


class Ring:
    """Minimal coefficient-ring interface used by Poly."""

    is_field = False
    char = 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def div(self, a, b):
        """Exact division a/b; raises if b does not divide a."""
        raise NotImplementedError

    # Euclidean structure (Z and F_q[t]); fields trivially support it.
    def euc_divmod(self, a, b):
        raise NotImplementedError

    def euc_norm(self, a):
        raise NotImplementedError

    def gcd(self, a, b):
        raise NotImplementedError

    def normalize_unit(self, a):
        """Return (canonical associate of a, unit u) with canonical = a/u."""
        raise NotImplementedError


class IntegerRing(Ring):
    char = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into Z")

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ComputationError(f"inexact division {a} / {b} in Z")
        return q

    def euc_divmod(self, a, b):
        return divmod(a, b)

    def euc_norm(self, a):
        return abs(a)

    def gcd(self, a, b):
        return math.gcd(a, b)

    def normalize_unit(self, a):
        if a < 0:
            return -a, -1
        return a, 1

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(Ring):
    is_field = True
    char = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def euc_divmod(self, a, b):
        return self.div(a, b), Fraction(0)

    def euc_norm(self, a):
        return 0 if a == 0 else 1

    def gcd(self, a, b):
        if a == 0 and b == 0:
            return Fraction(0)
        return Fraction(1)

    def normalize_unit(self, a):
        if a == 0:
            return Fraction(0), Fraction(1)
        return Fraction(1), Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


ZZ = IntegerRing()
QQ = RationalField()


# Fixed irreducibles (coefficients low -> high, monic) defining the canonical
# F_{p^k} for every non-prime prime power q <= 81.
_IRREDUCIBLE_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime_int(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FFElement:
    """Element of a FiniteField; rep is an int (prime field) or a tuple of
    base-field elements (extension field)."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def __add__(self, other):
        other = self.field.coerce(other)
        return FFElement(self.field, self.field._add(self.rep, other.rep))

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.coerce(other)
        return FFElement(self.field, self.field._sub(self.rep, other.rep))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __mul__(self, other):
        other = self.field.coerce(other)
        return FFElement(self.field, self.field._mul(self.rep, other.rep))

    __rmul__ = __mul__

    def __neg__(self):
        return FFElement(self.field, self.field._neg(self.rep))

    def __truediv__(self, other):
        other = self.field.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in finite field")
        # x^(q-2) = x^(-1); cheap at the field sizes in play
        return self ** (self.field.order - 2)

    def pth_root(self):
        """Inverse Frobenius: the unique y with y^p = x (fields are perfect)."""
        return self ** (self.field.order // self.field.p)

    def is_zero(self):
        return self.field._is_zero_rep(self.rep)

    def to_int(self):
        """Canonical integer encoding in [0, q), compatible with sorting."""
        return self.field._rep_to_int(self.rep)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.coerce(other)
        return (
            isinstance(other, FFElement)
            and self.field == other.field
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.field.order, self.to_int()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return self.field._rep_str(self.rep)


class FiniteField(Ring):
    """F_q as a ring descriptor and element factory.

    Prime fields hold ints mod p.  Extensions hold coefficient tuples over
    their base field modulo a fixed monic irreducible.  GF(q) builds the
    canonical field from the shipped irreducible table; ``extension`` builds
    relative extensions (used for residue fields of non-linear primes).
    """

    is_field = True

    def __init__(self, p, _base=None, _modulus=None, _gen_name="a"):
        if _base is None:
            if not is_prime_int(p):
                raise ValidationError(f"{p} is not prime")
            self.p = p
            self.base = None
            self.modulus = None
            self.degree = 1
            self.order = p
        else:
            self.p = _base.p
            self.base = _base
            self.modulus = _modulus  # tuple of base elements, monic, low->high
            self.degree = len(_modulus) - 1
            self.order = _base.order ** self.degree
        self.char = self.p
        self.gen_name = _gen_name

    # -- construction helpers -------------------------------------------------

    def zero(self):
        return FFElement(self, self._zero_rep())

    def one(self):
        return FFElement(self, self._one_rep())

    def gen(self):
        if self.base is None:
            raise ValidationError("prime field has no extension generator")
        rep = tuple(
            self.base.one() if i == 1 else self.base.zero()
            for i in range(self.degree)
        )
        return FFElement(self, rep)

    def coerce(self, x):
        if isinstance(x, FFElement):
            if x.field == self:
                return x
            if self.base is not None and x.field == self.base:
                rep = (x,) + tuple(self.base.zero() for _ in range(self.degree - 1))
                return FFElement(self, rep)
            if self.base is not None:
                return self.coerce(self.base.coerce(x))
            raise TypeError(f"cannot coerce {x!r} into {self!r}")
        if isinstance(x, int):
            if self.base is None:
                return FFElement(self, x % self.p)
            c = self.base.coerce(x)
            rep = (c,) + tuple(self.base.zero() for _ in range(self.degree - 1))
            return FFElement(self, rep)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def from_int(self, n):
        """Decode the canonical integer encoding (inverse of to_int)."""
        n %= self.order
        if self.base is None:
            return FFElement(self, n)
        digits = []
        for _ in range(self.degree):
            n, r = divmod(n, self.base.order)
            digits.append(self.base.from_int(r))
        return FFElement(self, tuple(digits))

    def elements(self):
        for n in range(self.order):
            yield self.from_int(n)

    def extension(self, modulus, gen_name="w"):
        """Relative extension self[z]/(modulus); modulus a monic irreducible Poly."""
        if modulus.ring != self:
            raise ValidationError("modulus must have coefficients in this field")
        if not modulus.is_monic() or modulus.degree < 2:
            raise ValidationError("modulus must be monic of degree >= 2")
        facs = factor_finite_field(modulus, 0)
        if len(facs) != 1 or facs[0][1] != 1:
            raise ValidationError("modulus is not irreducible")
        return FiniteField(self.p, _base=self, _modulus=tuple(modulus.coeffs),
                           _gen_name=gen_name)

    def div(self, a, b):
        return a / b

    def euc_divmod(self, a, b):
        return a / b, self.zero()

    def euc_norm(self, a):
        return 0 if a.is_zero() else 1

    def gcd(self, a, b):
        if a.is_zero() and b.is_zero():
            return self.zero()
        return self.one()

    def normalize_unit(self, a):
        if a.is_zero():
            return self.zero(), self.one()
        return self.one(), a

    # -- internal rep arithmetic ----------------------------------------------

    def _zero_rep(self):
        if self.base is None:
            return 0
        return tuple(self.base.zero() for _ in range(self.degree))

    def _one_rep(self):
        if self.base is None:
            return 1
        return (self.base.one(),) + tuple(
            self.base.zero() for _ in range(self.degree - 1)
        )

    def _is_zero_rep(self, rep):
        if self.base is None:
            return rep == 0
        return all(c.is_zero() for c in rep)

    def _add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        return tuple(x + y for x, y in zip(a, b))

    def _sub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        return tuple(x - y for x, y in zip(a, b))

    def _neg(self, a):
        if self.base is None:
            return (-a) % self.p
        return tuple(-x for x in a)

    def _mul(self, a, b):
        if self.base is None:
            return a * b % self.p
        k = self.degree
        prod = [self.base.zero()] * (2 * k - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                prod[i + j] = prod[i + j] + x * y
        # reduce modulo the defining irreducible: z^k = -(lower part)
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c.is_zero():
                continue
            for j in range(k):
                prod[i - k + j] = prod[i - k + j] - c * self.modulus[j]
        return tuple(prod[:k])

    def _rep_to_int(self, rep):
        if self.base is None:
            return rep
        n = 0
        for c in reversed(rep):
            n = n * self.base.order + c.to_int()
        return n

    def _rep_str(self, rep):
        if self.base is None:
            return str(rep)
        terms = []
        for i in range(self.degree - 1, -1, -1):
            c = rep[i]
            if c.is_zero():
                continue
            g = self.gen_name
            if i == 0:
                terms.append(repr(c))
            else:
                head = g if i == 1 else f"{g}^{i}"
                cs = repr(c)
                terms.append(head if cs == "1" else f"{cs}*{head}")
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return False
        if self.base is None and other.base is None:
            return self.p == other.p
        if (self.base is None) != (other.base is None):
            return False
        return self.base == other.base and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.order, self.degree))

    def __repr__(self):
        return f"GF({self.order})"


_GF_CACHE: dict[int, FiniteField] = {}


def GF(q: int) -> FiniteField:
    """The canonical finite field with q elements, q = p^k a prime power <= 81
    (prime q of any size is allowed)."""
    if q in _GF_CACHE:
        return _GF_CACHE[q]
    if is_prime_int(q):
        field = FiniteField(q)
    else:
        found = None
        for (p, k), coeffs in _IRREDUCIBLE_TABLE.items():
            if p ** k == q:
                found = (p, k, coeffs)
                break
        if found is None:
            raise ValidationError(f"{q} is not a supported prime power (q <= 81)")
        p, k, coeffs = found
        prime = GF(p)
        field = FiniteField(p, _base=prime,
                            _modulus=tuple(prime.coerce(c) for c in coeffs))
    _GF_CACHE[q] = field
    return field


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over a Ring.  Immutable."""

    __slots__ = ("coeffs", "ring", "var")

    def __init__(self, coeffs, ring, var="x"):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring
        self.var = var

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if self.is_zero():
            return self.ring.zero()
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def is_monic(self):
        return not self.is_zero() and self.lc() == self.ring.one()

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        lc = self.lc()
        return Poly([self.ring.div(c, lc) for c in self.coeffs], self.ring, self.var)

    def _wrap(self, coeffs):
        return Poly(coeffs, self.ring, self.var)

    def _coerce_other(self, other):
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        return Poly([self.ring.coerce(other)], self.ring, self.var)

    def __add__(self, other):
        other = self._coerce_other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._wrap([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce_other(other)
        if self.is_zero() or other.is_zero():
            return self._wrap([])
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = self._wrap([self.ring.one()])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        """Division with remainder; requires field coefficients or monic divisor."""
        other = self._coerce_other(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lc = other.lc()
        if not (self.ring.is_field or lc == self.ring.one()):
            raise ComputationError("divmod needs field coefficients or monic divisor")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return self._wrap([]), self
        quo = [self.ring.zero()] * (dq + 1)
        for i in range(dq, -1, -1):
            top = rem[i + other.degree]
            if self.ring.is_zero(top):
                continue
            q = top if lc == self.ring.one() else self.ring.div(top, lc)
            quo[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - q * b
        return self._wrap(quo), self._wrap(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def deriv(self):
        # i * c goes through coefficient coercion, so char-p kills p | i terms
        if self.degree < 1:
            return self._wrap([])
        return self._wrap([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def evaluate(self, a):
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def map_coeffs(self, fn, ring, var=None):
        return Poly([fn(c) for c in self.coeffs], ring, var or self.var)

    def shift_var(self, k):
        """Multiply by var^k."""
        if self.is_zero():
            return self
        return self._wrap([self.ring.zero()] * k + list(self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(_canonical_key(c) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if self.degree > 0:
                return False
            other = self._coerce_other(other)
        return (
            self.ring == other.ring
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return render_poly(self)


def _canonical_key(c):
    if isinstance(c, FFElement):
        return c.to_int()
    if isinstance(c, Poly):
        return c.sort_key()
    if isinstance(c, Fraction):
        return (c.numerator, c.denominator)
    return c


class PolyRing(Ring):
    """Poly-of-var over a coefficient ring, used as a coefficient ring itself
    (F_q[t] for function-field bases)."""

    def __init__(self, coeff_ring, var):
        self.coeff_ring = coeff_ring
        self.var = var
        self.char = coeff_ring.char

    def zero(self):
        return Poly([], self.coeff_ring, self.var)

    def one(self):
        return Poly([self.coeff_ring.one()], self.coeff_ring, self.var)

    def coerce(self, x):
        if isinstance(x, Poly) and x.ring == self.coeff_ring and x.var == self.var:
            return x
        if isinstance(x, Poly):
            raise TypeError(f"cannot coerce {x!r} into {self!r}")
        return Poly([self.coeff_ring.coerce(x)], self.coeff_ring, self.var)

    def is_zero(self, a):
        return a.is_zero()

    def div(self, a, b):
        q, r = divmod(a, b)
        if not r.is_zero():
            raise ComputationError(f"inexact division {a} / {b} in {self!r}")
        return q

    def euc_divmod(self, a, b):
        return divmod(a, b)

    def euc_norm(self, a):
        return a.degree + 1  # 0 exactly for the zero polynomial

    def gcd(self, a, b):
        return poly_gcd(a, b)

    def normalize_unit(self, a):
        if a.is_zero():
            return a, self.coeff_ring.one()
        return a.monic(), a.lc()

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.coeff_ring == other.coeff_ring
            and self.var == other.var
        )

    def __hash__(self):
        return hash(("polyring", self.var))

    def __repr__(self):
        return f"{self.coeff_ring!r}[{self.var}]"


# ---------------------------------------------------------------------------
# gcd machinery
# ---------------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    if not a.ring.is_field:
        raise ValidationError("poly_gcd needs field coefficients")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic."""
    ring = a.ring
    zero = Poly([], ring, a.var)
    one = Poly([ring.one()], ring, a.var)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc()
    inv = ring.div(ring.one(), lc)
    scale = Poly([inv], ring, a.var)
    return r0.monic(), s0 * scale, t0 * scale


def pseudo_divmod(a: Poly, b: Poly):
    """Pseudo-division over a domain: lc(b)^k * a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    ring = a.ring
    d = b.degree
    lc = b.lc()
    q = Poly([], ring, a.var)
    r = a
    while not r.is_zero() and r.degree >= d:
        shift = r.degree - d
        term = Poly([r.lc()], ring, a.var).shift_var(shift)
        q = q * lc + term
        r = r * lc - term * b
    return q, r


def poly_content(a: Poly):
    """gcd of the coefficients, in the (Euclidean) coefficient ring."""
    ring = a.ring
    c = ring.zero()
    for x in a.coeffs:
        c = ring.gcd(c, x)
    return c


def poly_primitive(a: Poly):
    """(content, primitive part) with canonically normalized content."""
    ring = a.ring
    if a.is_zero():
        return ring.zero(), a
    c = poly_content(a)
    canon, _unit = ring.normalize_unit(c)
    return canon, Poly([ring.div(x, canon) for x in a.coeffs], ring, a.var)


def exact_div_domain(a: Poly, b: Poly) -> Poly:
    """Exact division a/b over a domain with Euclidean coefficient ring."""
    ring = a.ring
    if ring.is_field:
        q, r = divmod(a, b)
        if not r.is_zero():
            raise ComputationError("inexact polynomial division")
        return q
    q, r = pseudo_divmod(a, b)
    if not r.is_zero():
        raise ComputationError("inexact polynomial division")
    k = a.degree - b.degree + 1 if not a.is_zero() else 0
    scale = b.lc()
    denom = ring.one()
    for _ in range(k):
        denom = denom * scale
    return Poly([ring.div(c, denom) for c in q.coeffs], ring, a.var)


def gcd_primitive(a: Poly, b: Poly) -> Poly:
    """gcd over a domain with Euclidean coefficients (primitive PRS);
    result is primitive with unit-normalized leading coefficient."""
    ring = a.ring
    if a.is_zero():
        return _unit_normalize_poly(b)
    if b.is_zero():
        return _unit_normalize_poly(a)
    ca, pa = poly_primitive(a)
    cb, pb = poly_primitive(b)
    cont = ring.gcd(ca, cb)
    f, g = pa, pb
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        _, r = pseudo_divmod(f, g)
        f = g
        if r.is_zero():
            g = r
        else:
            _, g = poly_primitive(r)
    result = Poly([c * cont for c in f.coeffs], ring, a.var)
    return _unit_normalize_poly(result)


def _unit_normalize_poly(a: Poly) -> Poly:
    if a.is_zero():
        return a
    ring = a.ring
    _, unit = ring.normalize_unit(a.lc())
    if unit == ring.one():
        return a
    return Poly([ring.div(c, unit) for c in a.coeffs], ring, a.var)


def _gcd_any(a: Poly, b: Poly) -> Poly:
    if a.ring.is_field:
        return poly_gcd(a, b)
    return gcd_primitive(a, b)


def _exact_div_any(a: Poly, b: Poly) -> Poly:
    return exact_div_domain(a, b)


# ---------------------------------------------------------------------------
# squarefree decomposition
# ---------------------------------------------------------------------------


def squarefree_decomposition(f: Poly):
    """Write f = lc(f) * prod g_i^{m_i} with the g_i monic squarefree and
    pairwise coprime, the m_i distinct.  Returns [(g_i, m_i)] sorted by m_i.

    Characteristic 0 uses Yun's algorithm; positive characteristic uses the
    perfect-field descent (finite fields, or F_q[t] coefficients where the
    descent takes p-th roots of t-exponents as well)."""
    if f.is_zero():
        raise ValidationError("squarefree decomposition of the zero polynomial")
    if f.ring.char == 0:
        work = f
        if work.ring == ZZ:
            work = work.map_coeffs(Fraction, QQ)
        return _squarefree_char0(work.monic())
    return sorted(_squarefree_charp(_make_monic_any(f)), key=lambda gm: gm[1])


def _make_monic_any(f: Poly) -> Poly:
    if f.ring.is_field:
        return f.monic()
    # F_q[t] coefficients: leading coefficient must be a unit for the cases
    # in scope (defining polynomials are monic); normalize by its inverse.
    lc = f.lc()
    if lc.degree != 0:
        raise ValidationError("cannot normalize: leading coefficient is not a unit")
    inv = lc.ring.div(lc.ring.one(), lc.coeffs[0])
    return Poly([c * inv for c in f.coeffs], f.ring, f.var)


def _squarefree_char0(f: Poly):
    out = []
    g = poly_gcd(f, f.deriv())
    w = f // g
    y = f.deriv() // g
    z = y - w.deriv()
    i = 1
    while not (w.degree == 0):
        gi = poly_gcd(w, z)
        if gi.degree > 0:
            out.append((gi, i))
        w = w // gi
        y = z // gi
        z = y - w.deriv()
        i += 1
    return out


def _poly_pth_root(f: Poly) -> Poly:
    """p-th root of a polynomial that is a p-th power (perfect coefficients)."""
    p = f.ring.char
    out = []
    for i in range(0, f.degree + 1, p):
        out.append(_coeff_pth_root(f.coeff(i)))
    for i in range(f.degree + 1):
        if i % p and not f.ring.is_zero(f.coeff(i)):
            raise ComputationError("polynomial is not a p-th power")
    return Poly(out, f.ring, f.var)


def _coeff_pth_root(c):
    if isinstance(c, FFElement):
        return c.pth_root()
    if isinstance(c, Poly):
        # F_q[t]: exponents must be multiples of p, coefficients get rooted
        p = c.ring.char
        out = []
        for i in range(0, c.degree + 1, p):
            out.append(c.coeff(i).pth_root())
        for i in range(c.degree + 1):
            if i % p and not c.coeff(i).is_zero():
                raise ComputationError(f"{c!r} is not a p-th power")
        return Poly(out, c.ring, c.var)
    raise TypeError(f"no p-th root for {c!r}")


def _squarefree_charp(f: Poly):
    p = f.ring.char
    out = []
    d = f.deriv()
    if d.is_zero():
        return [(g, p * m) for g, m in _squarefree_charp(_poly_pth_root(f))]
    c = _gcd_any(f, d)
    w = _exact_div_any(f, c)
    i = 1
    while w.degree > 0:
        y = _gcd_any(w, c)
        z = _exact_div_any(w, y)
        if z.degree > 0:
            out.append((_make_monic_any(z), i))
        i += 1
        w = y
        c = _exact_div_any(c, y)
    if c.degree > 0:
        root = _poly_pth_root(c)
        out.extend((g, p * m) for g, m in _squarefree_charp(root))
    return out


# ---------------------------------------------------------------------------
# factorization over finite fields
# ---------------------------------------------------------------------------


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly([base.ring.one()], base.ring, base.var)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def factor_finite_field(f: Poly, seed: int = 0):
    """Full factorization over F_q into monic irreducibles with multiplicities.

    Distinct-degree splitting first, then seeded equal-degree splitting, so a
    fixed seed gives bit-identical output.  Product of factors (with
    multiplicities) times lc(f) equals f."""
    field = f.ring
    if not isinstance(field, FiniteField):
        raise ValidationError("factor_finite_field needs finite-field coefficients")
    if f.is_zero():
        raise ValidationError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f.monic()):
        for part, d in _distinct_degree(g):
            for irr in _equal_degree(part, d, rng):
                out.append((irr, m))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def _distinct_degree(g: Poly):
    field = g.ring
    q = field.order
    x = Poly([field.zero(), field.one()], field, g.var)
    h = x
    rem = g
    d = 0
    out = []
    while rem.degree > 0:
        d += 1
        if 2 * d > rem.degree:
            out.append((rem, rem.degree))
            break
        h = pow_mod(h, q, rem)
        part = poly_gcd(h - x, rem)
        if part.degree > 0:
            out.append((part, d))
            rem = rem // part
            h = h % rem
    return out


def _equal_degree(h: Poly, d: int, rng) -> list:
    field = h.ring
    r = h.degree // d
    if r == 1:
        return [h.monic()]
    q = field.order
    while True:
        a = Poly(
            [field.from_int(rng.randrange(q)) for _ in range(h.degree)],
            field,
            h.var,
        )
        if a.degree < 1:
            continue
        if field.p == 2:
            # trace map splits in characteristic 2
            k = _int_log(q, 2) * d
            c = a
            acc = a
            for _ in range(k - 1):
                c = c * c % h
                acc = (acc + c) % h
            g = poly_gcd(acc, h)
        else:
            b = pow_mod(a, (q ** d - 1) // 2, h)
            g = poly_gcd(b - Poly([field.one()], field, h.var), h)
        if 0 < g.degree < h.degree:
            return sorted(
                _equal_degree(g, d, rng) + _equal_degree(h // g, d, rng),
                key=lambda p: p.sort_key(),
            )


def _int_log(q: int, p: int) -> int:
    k = 0
    while q > 1:
        q //= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def resultant(f: Poly, g: Poly, formal_deg_g: int | None = None):
    """Res(f, g) via fraction-free elimination on the Sylvester matrix.

    formal_deg_g pads g with zero leading coefficients, matching the
    conventional discriminant formula when deg f' < deg f - 1."""
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return ring.zero()
    n = f.degree
    m = g.degree if formal_deg_g is None else formal_deg_g
    if m < g.degree:
        raise ValidationError("formal degree below actual degree")
    if n == 0:
        acc = ring.one()
        for _ in range(m):
            acc = acc * f.coeffs[0]
        return acc
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = [ring.zero()] * (m - g.degree) + list(reversed(g.coeffs))
    for i in range(m):
        rows.append([ring.zero()] * i + fc + [ring.zero()] * (size - n - 1 - i))
    for i in range(n):
        rows.append([ring.zero()] * i + gc + [ring.zero()] * (size - m - 1 - i))
    return _det_bareiss(rows, ring)


def _det_bareiss(rows, ring):
    """Exact determinant over an integral domain (Bareiss elimination)."""
    n = len(rows)
    sign = 1
    prev = ring.one()
    m = [row[:] for row in rows]
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            pivot = next(
                (i for i in range(k + 1, n) if not ring.is_zero(m[i][k])), None
            )
            if pivot is None:
                return ring.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = ring.div(num, prev)
            m[i][k] = ring.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def discriminant(f: Poly):
    """disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
    if f.degree < 1:
        raise ValidationError("discriminant needs degree >= 1")
    n = f.degree
    r = resultant(f, f.deriv(), formal_deg_g=n - 1)
    if (n * (n - 1) // 2) % 2:
        r = -r
    return f.ring.div(r, f.lc())


# ---------------------------------------------------------------------------
# polynomial text grammar (shared repo-wide)
# ---------------------------------------------------------------------------
#
# Sums of flat monomials: integer or rational coefficients, `^` powers,
# `*` optional, indeterminate `x`, with `t` allowed inside coefficients
# for function-field bases.  Examples: "x^3 - x^2 - 2*x - 8", "x^3 - t".


def _tokenize_poly(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "xt":
            tokens.append(("var", ch, i))
            i += 1
            continue
        if ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line=1, column=i + 1)
    return tokens


def parse_poly_terms(text: str):
    """Parse the polynomial grammar into {(x_exp, t_exp): Fraction}."""
    tokens = _tokenize_poly(text)
    if not tokens:
        raise ParseError("empty polynomial", line=1, column=1)
    terms: dict[tuple[int, int], Fraction] = {}
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text))

    def parse_exponent(default=1):
        nonlocal pos
        if peek()[0] == "^":
            pos += 1
            kind, value, col = peek()
            if kind != "int":
                raise ParseError("expected integer exponent", line=1, column=col + 1)
            pos += 1
            return value
        return default

    while pos < len(tokens):
        sign = 1
        while peek()[0] in ("+", "-"):
            if peek()[0] == "-":
                sign = -sign
            pos += 1
        coeff = Fraction(1)
        xe = te = 0
        saw_factor = False
        while True:
            kind, value, col = peek()
            if kind == "int":
                pos += 1
                c = Fraction(value)
                if peek()[0] == "/":
                    pos += 1
                    k2, v2, c2 = peek()
                    if k2 != "int":
                        raise ParseError("expected denominator", line=1, column=c2 + 1)
                    if v2 == 0:
                        raise ParseError("zero denominator", line=1, column=c2 + 1)
                    pos += 1
                    c /= v2
                coeff *= c ** parse_exponent(1)
            elif kind == "var":
                pos += 1
                e = parse_exponent()
                if value == "x":
                    xe += e
                else:
                    te += e
            else:
                if not saw_factor:
                    raise ParseError("expected a term", line=1, column=col + 1)
                break
            saw_factor = True
            if peek()[0] == "*":
                pos += 1
        key = (xe, te)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    return {k: v for k, v in terms.items() if v != 0}


def poly_from_terms_z(terms, var="x"):
    """Materialize grammar terms over Z (or Q if denominators appear)."""
    if any(te for (_, te) in terms):
        raise ValidationError("indeterminate t is not allowed over base Z")
    deg = max((xe for (xe, _) in terms), default=0)
    coeffs = [terms.get((i, 0), Fraction(0)) for i in range(deg + 1)]
    if all(c.denominator == 1 for c in coeffs):
        return Poly([int(c) for c in coeffs], ZZ, var)
    return Poly(coeffs, QQ, var)


def poly_from_terms_fq(terms, field: FiniteField, var="x", tvar="t"):
    """Materialize grammar terms over F_q[t] (coefficients are t-polynomials)."""
    ring = PolyRing(field, tvar)
    degx = max((xe for (xe, _) in terms), default=0)
    coeffs = []
    for i in range(degx + 1):
        tmax = max((te for (xe, te) in terms if xe == i), default=-1)
        tc = []
        for j in range(tmax + 1):
            c = terms.get((i, j), Fraction(0))
            if c.denominator % field.p == 0:
                raise ValidationError(
                    f"coefficient {c} has denominator divisible by {field.p}"
                )
            val = field.coerce(c.numerator) / field.coerce(c.denominator)
            tc.append(val)
        coeffs.append(Poly(tc, field, tvar))
    return Poly(coeffs, ring, var)


def parse_poly(text: str, base, var="x"):
    """Parse polynomial text over base ZZ/QQ or a FiniteField (F_q[t] coeffs)."""
    terms = parse_poly_terms(text)
    if base in (ZZ, QQ) or base == "Z":
        return poly_from_terms_z(terms, var)
    if isinstance(base, FiniteField):
        return poly_from_terms_fq(terms, base, var)
    raise ValidationError(f"unsupported base {base!r}")


def parse_base_element(text: str, field: FiniteField, tvar="t"):
    """Parse an element of F_q[t] (no x allowed), e.g. a prime like t^2+t+1."""
    terms = parse_poly_terms(text)
    if any(xe for (xe, _) in terms):
        raise ValidationError("x is not allowed in a base-ring element")
    shifted = {(te, 0): c for (xe, te), c in terms.items()}
    as_x = poly_from_terms_fq(shifted, field, var=tvar, tvar="_")
    return Poly([c.coeff(0) for c in as_x.coeffs], field, tvar)


def render_poly(poly: Poly) -> str:
    """Canonical flat rendering compatible with the grammar (for int/Fraction
    and F_q[t] coefficients); other coefficient types render readably."""
    if poly.is_zero():
        return "0"
    monos = []  # (x_exp, t_exp_or_None, coeff)
    for i in range(poly.degree, -1, -1):
        c = poly.coeff(i)
        if poly.ring.is_zero(c):
            continue
        if isinstance(c, Poly):
            for j in range(c.degree, -1, -1):
                cj = c.coeff(j)
                if not c.ring.is_zero(cj):
                    monos.append((i, (j, c.var), cj))
        else:
            monos.append((i, None, c))
    parts = []
    for xe, tinfo, c in monos:
        neg = False
        if isinstance(c, (int, Fraction)):
            neg = c < 0
            if neg:
                c = -c
        body = []
        cs = str(c)
        factors = []
        if tinfo is not None:
            j, tv = tinfo
            if j == 1:
                factors.append(tv)
            elif j > 1:
                factors.append(f"{tv}^{j}")
        if xe == 1:
            factors.append(poly.var)
        elif xe > 1:
            factors.append(f"{poly.var}^{xe}")
        if not factors or cs != "1":
            body.append(cs)
        body.extend(factors)
        term = "*".join(body)
        parts.append(("-" if neg else "+", term))
    sign0, term0 = parts[0]
    out = ("-" if sign0 == "-" else "") + term0
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out
