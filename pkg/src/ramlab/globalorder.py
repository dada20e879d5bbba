"""Equation orders over Z and F_q[t], p-maximality, and prime decomposition.

The pipeline is: test the equation order A[theta] with the Dedekind
criterion, enlarge it to a p-maximal order by iterating the
radical/ring-of-multipliers step, then split the quotient algebra O/pO by
lifting the idempotents of its semisimple quotient.  Each prime over p comes
out with its ramification index e (nilpotency length of the block radical)
and residue degree f (dimension of the block residue field).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    GF,
    Poly,
    PolyRing,
    ZZ,
    FFElement,
    FiniteField,
    discriminant,
    factor_finite_field,
    is_prime_int,
    poly_gcd,
    squarefree_decomposition,
)
from .errors import (
    ComputationError,
    NonSquarefreeInput,
    ValidationError,
)
from .linalg import (
    det_bareiss,
    hnf_rows,
    in_span,
    kernel_basis,
    rref,
    solve_cramer,
    span_rows,
)
from .localfield import PadicContext, SeriesContext


# ---------------------------------------------------------------------------
# base rings
# ---------------------------------------------------------------------------


class IntegerBase:
    """The rational integers as the coefficient ring."""

    tag = "Z"

    def __init__(self):
        self.ring = ZZ

    def validate_prime(self, p):
        if not isinstance(p, int) or not is_prime_int(abs(p)):
            raise ValidationError(f"{p!r} is not a prime of Z")
        return abs(p)

    def residue_field(self, p):
        return GF(p)

    def reduce(self, a, p):
        return GF(p).coerce(a % p)

    def lift(self, c):
        return c.to_int()

    def reduce_poly(self, f: Poly, p) -> Poly:
        k = GF(p)
        return f.map_coeffs(lambda a: k.coerce(a % p), k)

    def lift_poly(self, g: Poly) -> Poly:
        return g.map_coeffs(lambda c: c.to_int(), ZZ)

    def valuation(self, a, p):
        if a == 0:
            raise ValidationError("valuation of zero")
        v = 0
        while a % p == 0:
            a //= p
            v += 1
        return v

    def completion(self, p, precision=64):
        return PadicContext(p, precision)

    def char(self):
        return 0

    def primes_upto(self, bound):
        return [n for n in range(2, bound + 1) if is_prime_int(n)]

    def render_elem(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntegerBase)

    def __hash__(self):
        return hash("base-Z")

    def __repr__(self):
        return "Z"


class FunctionFieldBase:
    """F_q[t] as the coefficient ring; primes are monic irreducibles."""

    tag = "Fq[t]"

    def __init__(self, q):
        self.q = q
        self.field = GF(q)
        self.ring = PolyRing(self.field, "t")

    def validate_prime(self, pi):
        if not isinstance(pi, Poly) or pi.ring != self.field or pi.var != "t":
            raise ValidationError(f"{pi!r} is not an element of F_{self.q}[t]")
        if not pi.is_monic() or pi.degree < 1:
            raise ValidationError("prime must be monic of degree >= 1")
        if pi.degree > 1:
            facs = factor_finite_field(pi, 0)
            if len(facs) != 1 or facs[0][1] != 1:
                raise ValidationError(f"{pi!r} is not irreducible")
        return pi

    def residue_field(self, pi):
        if pi.degree == 1:
            return self.field
        return self.field.extension(pi, gen_name="w")

    def reduce(self, a, pi):
        k = self.residue_field(pi)
        if pi.degree == 1:
            return a.evaluate(-pi.coeff(0))
        r = a % pi
        rep = tuple(r.coeff(i) for i in range(pi.degree))
        return FFElement(k, rep)

    def lift(self, c):
        if c.field == self.field:
            return Poly([c], self.field, "t")
        return Poly(list(c.rep), self.field, "t")

    def reduce_poly(self, f: Poly, pi) -> Poly:
        k = self.residue_field(pi)
        return f.map_coeffs(lambda a: self.reduce(a, pi), k)

    def lift_poly(self, g: Poly) -> Poly:
        return g.map_coeffs(self.lift, self.ring)

    def valuation(self, a, pi):
        if a.is_zero():
            raise ValidationError("valuation of zero")
        v = 0
        while True:
            q, r = divmod(a, pi)
            if not r.is_zero():
                return v
            a = q
            v += 1

    def completion(self, pi, precision=64):
        return SeriesContext(self.field, pi, precision)

    def char(self):
        return self.field.p

    def monic_irreducibles(self, max_degree):
        out = []
        for a in self.field.elements():
            out.append(Poly([a, self.field.one()], self.field, "t"))
        if max_degree >= 2:
            for n0 in range(self.field.order):
                for n1 in range(self.field.order):
                    pi = Poly(
                        [self.field.from_int(n0), self.field.from_int(n1),
                         self.field.one()],
                        self.field,
                        "t",
                    )
                    if all(not pi.evaluate(a).is_zero() for a in self.field.elements()):
                        out.append(pi)
        return out

    def render_elem(self, a):
        from .arith import render_poly

        return render_poly(a)

    def __eq__(self, other):
        return isinstance(other, FunctionFieldBase) and self.q == other.q

    def __hash__(self):
        return hash(("base-Fq", self.q))

    def __repr__(self):
        return f"F_{self.q}[t]"


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def _is_pure_p_power_binomial(f: Poly, p: int) -> bool:
    n = f.degree
    if p == 0 or n < p:
        return False
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        return False
    ring = f.ring
    return all(ring.is_zero(f.coeff(i)) for i in range(1, n))


@dataclass(frozen=True)
class EquationOrder:
    """A[theta] = A[x]/(f), f monic over the base ring.

    Defining polynomials must be squarefree over the fraction field
    (nonzero discriminant); the single admitted inseparable shape is
    x^{p^k} - a in characteristic p."""

    base: object
    f: Poly

    def __post_init__(self):
        base, f = self.base, self.f
        if f.ring != base.ring or f.degree < 1 or not f.is_monic():
            raise ValidationError("defining polynomial must be monic over the base ring")
        disc = discriminant(f) if f.degree >= 1 else None
        if f.degree >= 2 and base.ring.is_zero(disc):
            if not _is_pure_p_power_binomial(f, base.char()):
                raise NonSquarefreeInput(
                    "defining polynomial has repeated factors over the base field"
                )

    @property
    def degree(self):
        return self.f.degree

    @property
    def inseparable_mode(self):
        return self.base.char() > 0 and _is_pure_p_power_binomial(self.f, self.base.char())


@dataclass(frozen=True)
class DedekindResult:
    maximal: bool
    witness: Poly | None  # common factor certifying non-maximality

    def __repr__(self):
        if self.maximal:
            return "Maximal"
        return f"NotMaximal(witness={self.witness!r})"


def dedekind_criterion(order: EquationOrder, p) -> DedekindResult:
    """p-maximality test for the equation order A[theta].

    Writes fbar = gbar * hbar with gbar the radical of fbar, lifts both, and
    checks gcd(Tbar, gbar, hbar) for T = (g*h - f)/p."""
    base = order.base
    p = base.validate_prime(p)
    fbar = base.reduce_poly(order.f, p)
    gbar = fbar._wrap([fbar.ring.one()])
    for part, _m in squarefree_decomposition(fbar):
        gbar = gbar * part
    hbar = fbar // gbar
    g = base.lift_poly(gbar)
    h = base.lift_poly(hbar)
    diff = g * h - order.f
    ring = base.ring
    T = diff.map_coeffs(lambda c: ring.div(c, ring.coerce(p)), ring)
    Tbar = base.reduce_poly(T, p)
    U = poly_gcd(Tbar, poly_gcd(gbar, hbar))
    if U.degree == 0:
        return DedekindResult(True, None)
    return DedekindResult(False, U)


@dataclass(frozen=True)
class LocalMaximalOrder:
    """A p-maximal order containing A[theta], with basis rows over A divided
    by a common p-power denominator (triangular-in-powers Hermite form)."""

    base: object
    f: Poly
    p: object
    mat: tuple  # n x n rows over A; basis_i = (sum_j mat[i][j] theta^j) / den
    den: object  # p-power in A

    @property
    def degree(self):
        return self.f.degree

    def index_valuation(self):
        """v_p of the index [O : A[theta]]."""
        base = self.base
        n = self.degree
        det = det_bareiss([list(r) for r in self.mat], base.ring)
        vden = base.valuation(self.den, self.p) if not _is_one(base.ring, self.den) else 0
        return n * vden - base.valuation(det, self.p)

    def basis_strings(self):
        out = []
        base = self.base
        ring = base.ring
        for row in self.mat:
            den = self.den
            row = list(row)
            # cancel denominator factors common to the whole row
            while not _is_one(ring, den):
                g = den
                for c in row:
                    g = ring.gcd(g, c)
                g, _unit = ring.normalize_unit(g)
                if _is_one(ring, g):
                    break
                row = [ring.div(c, g) for c in row]
                den = ring.div(den, g)
            terms = []
            for j, c in enumerate(row):
                if ring.is_zero(c):
                    continue
                cs = base.render_elem(c)
                if j == 0:
                    terms.append(cs)
                else:
                    head = "theta" if j == 1 else f"theta^{j}"
                    terms.append(head if cs == "1" else f"{cs}*{head}")
            s = " + ".join(terms) if terms else "0"
            if not _is_one(ring, den):
                if " + " in s:
                    s = f"({s})"
                s = f"{s}/{base.render_elem(den)}"
            out.append(s)
        return out


def _is_one(ring, a):
    return ring.is_zero(a - ring.one())


def _identity_rows(ring, n):
    return [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]


class _QuotientAlgebra:
    """O/pO as a residue-field algebra with its structure table.

    Rows/vectors are coordinates in the order basis; multiplication re-expands
    basis products exactly over A and reduces mod p.  Exactness of the
    re-expansion is the closure-under-multiplication check."""

    def __init__(self, base, f: Poly, p, mat, den):
        self.base = base
        self.f = f
        self.p = p
        self.mat = [list(r) for r in mat]
        self.den = den
        self.n = f.degree
        self.k = base.residue_field(p)
        ring = base.ring
        n = self.n
        matT = [[self.mat[r][c] for r in range(n)] for c in range(n)]
        self._matT = matT
        self._det = det_bareiss([row[:] for row in matT], ring)
        if ring.is_zero(self._det):
            raise ComputationError("order basis is singular")
        self.table = [[None] * n for _ in range(n)]
        for i in range(n):
            row_i = Poly(self.mat[i], ring, "x")
            for j in range(i, n):
                row_j = Poly(self.mat[j], ring, "x")
                prod = (row_i * row_j) % f
                w = [prod.coeff(c) for c in range(n)]
                coords = self._express(w, scale_den=True)
                vec = tuple(base.reduce(c, p) for c in coords)
                self.table[i][j] = vec
                self.table[j][i] = vec
        self.one_vec = self._coords_of_power_vector(
            [ring.one()] + [ring.zero()] * (n - 1)
        )
        self.theta_vec = self._coords_of_power_vector(
            [ring.zero(), ring.one()] + [ring.zero()] * (n - 2)
        ) if n >= 2 else self.one_vec

    def _express(self, w, scale_den=False):
        """Coordinates in the order basis of the power-basis vector w/den^2
        (scale_den) or w/1; must land in A."""
        ring = self.base.ring
        nums, det = solve_cramer([row[:] for row in self._matT], list(w), ring)
        out = []
        for num in nums:
            denom = det * self.den if scale_den else det
            out.append(ring.div(num, denom))
        return out

    def _coords_of_power_vector(self, w):
        ring = self.base.ring
        scaled = [c * self.den for c in w]
        coords = self._express(scaled)
        return tuple(self.base.reduce(c, self.p) for c in coords)

    # -- k-algebra operations ------------------------------------------------

    def mul(self, a, b):
        k = self.k
        out = [k.zero()] * self.n
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if y.is_zero():
                    continue
                c = x * y
                for s, tval in enumerate(self.table[i][j]):
                    out[s] = out[s] + c * tval
        return tuple(out)

    def power(self, a, e):
        result = self.one_vec
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius_matrix(self):
        """Rows: coordinates of (basis_i)^Q, so x -> x^Q is x . M."""
        Q = self.k.order
        rows = []
        for i in range(self.n):
            e_i = tuple(
                self.k.one() if s == i else self.k.zero() for s in range(self.n)
            )
            rows.append(list(self.power(e_i, Q)))
        return rows

    def radical_basis(self):
        """Kernel of x -> x^(Q^m) with Q^m >= n: the nilradical of O/pO."""
        Q = self.k.order
        m = 1
        while Q ** m < self.n:
            m += 1
        M = self.frobenius_matrix()
        P = M
        for _ in range(m - 1):
            P = _mat_mul(P, M, self.k)
        Pt = [[P[r][c] for r in range(self.n)] for c in range(self.n)]
        return [tuple(v) for v in kernel_basis(Pt, self.k, ncols=self.n)]

    def lift_vec(self, vec):
        """A-lift of a k(p)-coordinate vector."""
        return [self.base.lift(c) for c in vec]


def _mat_mul(A, B, field):
    n = len(A)
    m = len(B[0])
    out = [[field.zero()] * m for _ in range(n)]
    for i in range(n):
        for s in range(len(B)):
            a = A[i][s]
            if a.is_zero():
                continue
            for j in range(m):
                out[i][j] = out[i][j] + a * B[s][j]
    return out


def _enlarge_once(base, f, p, mat, den):
    """One radical / ring-of-multipliers step; returns (mat, den, changed)."""
    ring = base.ring
    n = f.degree
    p_elem = ring.coerce(p) if base.tag == "Z" else p
    alg = _QuotientAlgebra(base, f, p, mat, den)
    rad = alg.radical_basis()
    if not rad:
        return mat, den, False
    # radical ideal I (contains pO), as rows in order-basis coordinates
    ideal_rows = [alg.lift_vec(v) for v in rad]
    ideal_rows += [
        [p_elem if i == j else ring.zero() for j in range(n)] for i in range(n)
    ]
    ideal_rows, _ = hnf_rows(ideal_rows, ring, rightmost_pivots=True)
    # U/pO = {y in O : y I <= p I}: rows indexed by basis elements, columns
    # by (ideal generator, ideal coordinate)
    idealT = [[ideal_rows[r][c] for r in range(n)] for c in range(n)]
    constraint_rows = []
    for i in range(n):
        row = []
        for jgen in range(n):
            prod = _mul_in_order(alg, i, ideal_rows[jgen])
            nums, det = solve_cramer([r[:] for r in idealT], prod, ring)
            for num in nums:
                row.append(base.reduce(ring.div(num, det), p))
        constraint_rows.append(row)
    Ct = [[constraint_rows[r][c] for r in range(n)]
          for c in range(len(constraint_rows[0]))]
    multipliers = kernel_basis(Ct, alg.k, ncols=n)
    new_rows = [[c * p_elem for c in row] for row in mat]
    for u in multipliers:
        lift = alg.lift_vec(u)
        row = [ring.zero()] * n
        for i, ui in enumerate(lift):
            for j in range(n):
                row[j] = row[j] + ui * mat[i][j]
        new_rows.append(row)
    new_den = den * p_elem
    h, _ = hnf_rows(new_rows, ring, rightmost_pivots=True)
    if len(h) != n:
        raise ComputationError("order basis lost rank during enlargement")
    # strip common p factors from (matrix, denominator)
    while not _is_one(ring, new_den):
        q, r = ring.euc_divmod(new_den, p_elem)
        if not ring.is_zero(r):
            break
        if not all(
            ring.is_zero(ring.euc_divmod(c, p_elem)[1]) for row in h for c in row
        ):
            break
        h = [[ring.div(c, p_elem) for c in row] for row in h]
        new_den = q
    changed = _index_val(base, h, new_den, p) != _index_val(base, mat, den, p)
    if not changed:
        return mat, den, False
    return [list(r) for r in h], new_den, True


def round2_pmaximal(order: EquationOrder, p) -> LocalMaximalOrder:
    """Enlarge A[theta] to a p-maximal order by iterating the radical /
    ring-of-multipliers step until it fixes the order."""
    base = order.base
    p = base.validate_prime(p)
    ring = base.ring
    f = order.f
    n = f.degree
    mat = _identity_rows(ring, n)
    den = ring.one()
    disc = discriminant(f)
    if base.ring.is_zero(disc):
        max_iters = n * n + 4  # inseparable binomial mode
    else:
        max_iters = base.valuation(disc, p) + 2
    for _ in range(max_iters):
        mat, den, changed = _enlarge_once(base, f, p, mat, den)
        if not changed:
            break
    else:
        raise ComputationError("p-maximal enlargement did not stabilize")
    return LocalMaximalOrder(
        base, f, p, tuple(tuple(r) for r in mat), den
    )


def _mul_in_order(alg: _QuotientAlgebra, i: int, y_row):
    """b_i * y in order coordinates, for y given in order coordinates over A."""
    ring = alg.base.ring
    f = alg.f
    n = alg.n
    row_i = Poly(alg.mat[i], ring, "x")
    y_power = [ring.zero()] * n
    for s, ys in enumerate(y_row):
        if ring.is_zero(ys):
            continue
        for j in range(n):
            y_power[j] = y_power[j] + ys * alg.mat[s][j]
    prod = (row_i * Poly(y_power, ring, "x")) % f
    w = [prod.coeff(c) for c in range(n)]
    nums, det = solve_cramer([r[:] for r in alg._matT], w, ring)
    return [ring.div(num, det * alg.den) for num in nums]


def _index_val(base, mat, den, p):
    ring = base.ring
    det = det_bareiss([list(r) for r in mat], ring)
    vden = 0 if _is_one(ring, den) else base.valuation(den, p)
    return len(mat) * vden - base.valuation(det, p)


# ---------------------------------------------------------------------------
# prime decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RamifiedPrime:
    """One prime over p: ramification index e, residue degree f, and the
    minimal polynomial of theta's image in the block residue field."""

    e: int
    f: int
    residue_poly: Poly
    block_dim: int

    def render(self, i):
        return f"P[{i}]: e={self.e} f={self.f}"

    def to_json(self):
        from .arith import render_poly

        return {"e": self.e, "f": self.f, "residue_poly": render_poly(self.residue_poly)}


class _AlgebraView:
    """A unital subalgebra of O/pO given by a spanning set, with coordinate
    maps for minimal polynomials and splitting."""

    def __init__(self, alg, basis_rows, unit):
        self.alg = alg
        self.k = alg.k
        red, pivots = rref(basis_rows, self.k)
        self.basis = red[: len(pivots)]
        self.pivots = pivots
        self.unit = unit

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, vec):
        v = list(vec)
        out = [self.k.zero()] * self.dim
        for r, c in enumerate(self.pivots):
            if not v[c].is_zero():
                factor = v[c]
                out[r] = factor
                v = [a - factor * b for a, b in zip(v, self.basis[r])]
        if any(not x.is_zero() for x in v):
            raise ComputationError("vector escapes the subalgebra")
        return out

    def min_poly(self, vec, modulo_rows=None):
        """Minimal polynomial of vec acting in the view, optionally modulo a
        subspace (for residue-field computations)."""
        k = self.k
        rows = []
        power = self.unit
        extra = list(modulo_rows) if modulo_rows else []
        while True:
            cand = extra + rows + [list(power)]
            red, piv = rref(cand, k)
            if len(piv) < len(cand):
                # dependency found: solve for the combination
                coeffs = self._dependency(rows, power, extra)
                return Poly(coeffs + [k.one()], k)
            rows.append(list(power))
            power = self.alg.mul(tuple(power), tuple(vec))

    def _dependency(self, rows, power, extra):
        k = self.k
        n = len(power)
        cols = []
        for r in rows:
            cols.append(list(r))
        for r in extra:
            cols.append(list(r))
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
        rhs = list(power)
        from .linalg import solve_field

        sol = solve_field(mat, rhs, k)
        if sol is None:
            raise ComputationError("dependency solve failed")
        return [-sol[i] for i in range(len(rows))]


def _split_idempotents(alg: _QuotientAlgebra, radical_rows):
    """Primitive orthogonal idempotents of O/pO.

    Frobenius-fixed vectors x (x^Q = x) are semisimple with eigenvalues in
    k(p); any non-scalar one splits its block through the distinct roots of
    its minimal polynomial.  Lagrange projectors of a fixed vector are exact
    idempotents, and commutative idempotent lifts are unique, so orthogonality
    and the partition of unity come out exactly (and are verified)."""
    k = alg.k
    n = alg.n
    Q = k.order

    def split_view(basis_rows, unit):
        view = _AlgebraView(alg, basis_rows, unit)
        if view.dim == 1:
            return [tuple(unit)]
        coord_rows = []
        for b in view.basis:
            img = alg.power(tuple(b), Q)
            diff = [x - y for x, y in zip(img, b)]
            coord_rows.append(view.coords(diff))
        Ct = [[coord_rows[r][c] for r in range(view.dim)] for c in range(view.dim)]
        fixed = kernel_basis(Ct, k, ncols=view.dim)
        for coeffs in fixed:
            v = [k.zero()] * n
            for ci, b in zip(coeffs, view.basis):
                if ci.is_zero():
                    continue
                v = [x + ci * y for x, y in zip(v, b)]
            mp = view.min_poly(tuple(v))
            roots = [a for a in k.elements() if mp.evaluate(a).is_zero()]
            if len(roots) < 2:
                continue
            out = []
            for a in roots:
                e = tuple(unit)
                for b in roots:
                    if b == a:
                        continue
                    shifted = [x - b * u for x, u in zip(v, unit)]
                    scale = (a - b).inverse()
                    e = alg.mul(e, tuple(x * scale for x in shifted))
                if alg.mul(e, e) != tuple(e):
                    raise ComputationError("projector failed to be idempotent")
                sub_basis = [list(alg.mul(e, tuple(bb))) for bb in view.basis]
                out.extend(split_view(sub_basis, list(e)))
            return out
        return [tuple(unit)]

    one = alg.one_vec
    idems = split_view(_std_basis(alg), list(one))
    total = [k.zero()] * n
    for e in idems:
        total = [x + y for x, y in zip(total, e)]
        if alg.mul(e, e) != tuple(e):
            raise ComputationError("non-idempotent block unit")
    if tuple(total) != tuple(one):
        raise ComputationError("idempotents do not sum to one")
    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            prod = alg.mul(idems[i], idems[j])
            if any(not c.is_zero() for c in prod):
                raise ComputationError("idempotents are not orthogonal")
    return idems


def _std_basis(alg):
    k = alg.k
    return [
        [k.one() if j == i else k.zero() for j in range(alg.n)] for i in range(alg.n)
    ]


def decompose_prime(order: LocalMaximalOrder, p=None):
    """Split p in the p-maximal order: one RamifiedPrime per block of O/pO,
    sorted canonically.  Across the blocks, sum e_i f_i equals dim O/pO."""
    p = order.p if p is None else p
    alg = _QuotientAlgebra(order.base, order.f, p, order.mat, order.den)
    k = alg.k
    n = alg.n
    rad = alg.radical_basis()
    idems = _split_idempotents(alg, rad)
    primes = []
    for e_vec in idems:
        block_rows = [list(alg.mul(e_vec, tuple(b))) for b in _std_basis(alg)]
        block = span_rows(block_rows, k)
        block_dim = len(block)
        rad_rows = [list(alg.mul(e_vec, tuple(r))) for r in rad]
        block_rad = span_rows(rad_rows, k) if rad_rows else []
        block_rad = [r for r in block_rad if any(not c.is_zero() for c in r)]
        fdeg = block_dim - len(block_rad)
        # e = nilpotency order of the block radical (length of the primary
        # filtration): smallest e with radical^e = 0
        ecount = 1
        power = [list(r) for r in block_rad]
        while power:
            ecount += 1
            products = []
            for a in power:
                for b in block_rad:
                    products.append(list(alg.mul(tuple(a), tuple(b))))
            power = [
                r
                for r in (span_rows(products, k) if products else [])
                if any(not c.is_zero() for c in r)
            ]
        if ecount * fdeg != block_dim:
            raise ComputationError(
                f"block invariants disagree: e={ecount} f={fdeg} dim={block_dim}"
            )
        theta_s = alg.mul(e_vec, alg.theta_vec)
        view = _AlgebraView(alg, [list(r) for r in block], e_vec)
        mp = view.min_poly(theta_s, modulo_rows=[list(r) for r in block_rad] or None)
        primes.append(RamifiedPrime(ecount, fdeg, mp, block_dim))
    if sum(pr.block_dim for pr in primes) != n:
        raise ComputationError("block dimensions do not add up")
    primes.sort(key=lambda pr: (pr.e, pr.f, pr.residue_poly.sort_key()))
    return primes


def dim_quotient_mod_p(order: LocalMaximalOrder, p=None) -> int:
    """Residue dimension of O/pO: the rank of the free A-module O."""
    p = order.p if p is None else p
    base = order.base
    det = det_bareiss([list(r) for r in order.mat], base.ring)
    if base.ring.is_zero(det):
        raise ComputationError("order basis is singular")
    return order.degree
