"""Totally ordered abelian groups of finite height and initial indices.

Two variants are supported: Z^n with the lexicographic order, and Z^2
order-embedded in R via (x, y) -> x + y*sqrt(d) for a fixed non-square d > 0.
Elements are plain integer tuples.  Finite-index subgroups are given by
integer matrices whose columns generate the subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ZZ
from .errors import NotIsolated, ValidationError
from .linalg import det_bareiss, hnf_rows

LT, EQ, GT = -1, 0, 1


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


class OrderedGroup:
    """Either LexZ(n) or RealEmbedded(d); see module docstring."""

    def __init__(self, kind, n=None, d=None):
        if kind == "lex":
            if n is None or n < 1:
                raise ValidationError("LexZ needs rank n >= 1")
            self.n = n
            self.d = None
        elif kind == "real":
            if d is None or d <= 0 or _is_square(d):
                raise ValidationError("RealEmbedded needs a non-square d > 0")
            self.n = 2
            self.d = d
        else:
            raise ValidationError(f"unknown ordered group kind {kind!r}")
        self.kind = kind

    def __eq__(self, other):
        return (
            isinstance(other, OrderedGroup)
            and self.kind == other.kind
            and self.n == other.n
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.d))

    def __repr__(self):
        if self.kind == "lex":
            return f"Z^{self.n}lex"
        return f"Z+Z*sqrt({self.d})"

    def check_element(self, g):
        if len(g) != self.n:
            raise ValidationError(f"element {g} has wrong length for {self!r}")
        return tuple(int(x) for x in g)


def lex_z(n: int) -> OrderedGroup:
    return OrderedGroup("lex", n=n)


def real_embedded(d: int) -> OrderedGroup:
    return OrderedGroup("real", d=d)


def sign_real_embedded(d: int, a: int, b: int) -> int:
    """Exact sign of a + b*sqrt(d)."""
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    if a > 0:  # b < 0: positive iff a^2 > b^2 d (equality impossible, d non-square)
        return 1 if a * a > b * b * d else -1
    return 1 if b * b * d > a * a else -1


def compare(group: OrderedGroup, g, h) -> int:
    """Total-order comparison; returns LT, EQ or GT."""
    g = group.check_element(g)
    h = group.check_element(h)
    if group.kind == "lex":
        for x, y in zip(g, h):
            if x != y:
                return GT if x > y else LT
        return EQ
    s = sign_real_embedded(group.d, g[0] - h[0], g[1] - h[1])
    return {0: EQ, 1: GT, -1: LT}[s]


def is_positive(group: OrderedGroup, g) -> bool:
    return compare(group, g, (0,) * group.n) == GT


@dataclass(frozen=True)
class FiniteIndexSubgroup:
    """Subgroup of finite index, generated by the columns of ``basis``."""

    parent: OrderedGroup
    basis: tuple  # rows of an n x n integer matrix; columns generate

    def __post_init__(self):
        n = self.parent.n
        rows = [list(r) for r in self.basis]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValidationError(f"basis must be {n}x{n}")
        if det_bareiss(rows, ZZ) == 0:
            raise ValidationError("subgroup basis has determinant zero")

    @property
    def index(self) -> int:
        return abs(det_bareiss([list(r) for r in self.basis], ZZ))

    def generators(self):
        n = self.parent.n
        return [tuple(self.basis[i][j] for i in range(n)) for j in range(n)]

    def contains(self, g) -> bool:
        coords = _solve_fraction(self.basis, g)
        return all(c.denominator == 1 for c in coords)


def subgroup(group: OrderedGroup, matrix) -> FiniteIndexSubgroup:
    return FiniteIndexSubgroup(group, tuple(tuple(int(x) for x in r) for r in matrix))


def _solve_fraction(rows, rhs):
    """Solve M c = rhs exactly over Q (M given by rows)."""
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        pivot = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


class IsolatedSubgroup:
    """The suffix subgroup {0}^k x Z^(n-k) of LexZ(n)."""

    def __init__(self, parent: OrderedGroup, k: int):
        if parent.kind != "lex":
            raise ValidationError("isolated chain is only computed for LexZ")
        if not 0 <= k <= parent.n:
            raise ValidationError("suffix index out of range")
        self.parent = parent
        self.k = k  # number of leading zero coordinates

    @property
    def rank(self) -> int:
        return self.parent.n - self.k

    def contains(self, g) -> bool:
        g = self.parent.check_element(g)
        return all(x == 0 for x in g[: self.k])

    def generators(self):
        n = self.parent.n
        return [
            tuple(1 if i == j else 0 for i in range(n))
            for j in range(self.k, n)
        ]

    def as_group(self) -> OrderedGroup:
        if self.rank == 0:
            raise ValidationError("the trivial subgroup carries no group variant")
        return lex_z(self.rank)

    def __eq__(self, other):
        return (
            isinstance(other, IsolatedSubgroup)
            and self.parent == other.parent
            and self.k == other.k
        )

    def __repr__(self):
        return f"{{0}}^{self.k} x Z^{self.rank}"


def _convexity_spot_check(group: OrderedGroup, sub: IsolatedSubgroup):
    """Defining property on generator-derived samples: 0 <= y <= x in H
    forces y in H.  Cheap window around the generators."""
    zero = (0,) * group.n
    samples = [zero]
    for g in sub.generators():
        samples.append(g)
        samples.append(tuple(-c for c in g))
    for x in samples:
        if not is_positive(group, x) or not sub.contains(x):
            continue
        for y in _window_below(group, x):
            if not sub.contains(y):
                raise NotIsolated(f"{sub!r} misses {y} with 0 <= {y} <= {x}")


def _window_below(group: OrderedGroup, x):
    """Small set of candidates y with 0 <= y <= x (lexicographic)."""
    n = group.n
    out = []
    for j in range(n):
        for delta in (-1, 0, 1):
            y = list(x)
            y[j] += delta
            y = tuple(y)
            if compare(group, y, (0,) * n) != LT and compare(group, y, x) != GT:
                out.append(y)
    return out


def isolated_subgroups(group: OrderedGroup):
    """The full chain of isolated subgroups of LexZ(n), increasing:
    0, {0}^(n-1) x Z, ..., Z^n  (n + 1 entries)."""
    if group.kind != "lex":
        raise ValidationError("isolated_subgroups expects LexZ")
    chain = [IsolatedSubgroup(group, k) for k in range(group.n, -1, -1)]
    for sub in chain:
        _convexity_spot_check(group, sub)
    return chain


def height(group: OrderedGroup) -> int:
    """Number of isolated subgroups distinct from the whole group."""
    if group.kind == "lex":
        return len(isolated_subgroups(group)) - 1
    # dense order-embedding in R: only 0 is a proper isolated subgroup
    return 1


def _suffix_index_of(group: OrderedGroup, matrix_rows) -> int | None:
    """If the integer columns of the matrix generate {0}^k x Z^(n-k),
    return k; else None."""
    n = group.n
    rows = [list(r) for r in matrix_rows]
    gens = [[rows[i][j] for i in range(n)] for j in range(len(rows[0]))]
    h, pivots = hnf_rows(gens, ZZ)
    k = n - len(h)
    if pivots != list(range(k, n)):
        return None
    for r, row in enumerate(h):
        expected = [1 if c == k + r else 0 for c in range(n)]
        if row != expected:
            return None
    return k


def quotient_order(group: OrderedGroup, sub) -> OrderedGroup:
    """Ordered quotient G/H for an isolated H = {0}^k x Z^(n-k); returns
    LexZ(k).  Raises NotIsolated if H fails the convexity requirement."""
    if group.kind != "lex":
        raise ValidationError("quotient_order expects LexZ")
    if isinstance(sub, IsolatedSubgroup):
        k = sub.k
    else:
        k = _suffix_index_of(group, sub)
        if k is None:
            raise NotIsolated("subgroup is not isolated in the lexicographic order")
    if k == 0:
        raise ValidationError("quotient by the whole group is trivial")
    return lex_z(k)


@dataclass(frozen=True)
class InitialIndexResult:
    epsilon: int
    least_positive: tuple | None
    index: int

    def __post_init__(self):
        if self.index % self.epsilon:
            raise ValidationError("initial index must divide the group index")


def initial_index(group: OrderedGroup, sub: FiniteIndexSubgroup) -> InitialIndexResult:
    """Initial index of H in G: the count of major (upward-closed) subsets
    squeezed between the positive cones of H and G.

    Computed by the least-positive-element dichotomy: when G_{>0} has no
    least element the answer is 1; otherwise it is the index of H inside the
    cyclic group generated by the least positive element.
    """
    index = sub.index
    if group.kind == "real":
        # Z + Z*sqrt(d) is dense in R: no least positive element
        return InitialIndexResult(1, None, index)
    n = group.n
    e_n = tuple(1 if i == n - 1 else 0 for i in range(n))
    gens = [list(g) for g in sub.generators()]
    h, _pivots = hnf_rows(gens, ZZ)
    eps = abs(h[n - 1][n - 1])
    return InitialIndexResult(eps, e_n, index)


def major_subsets_window_count(m: int, exhaustive: bool = False) -> int:
    """Test oracle for G = Z, H = mZ: count major subsets M of the window
    [1, 3m] with (mZ)_{>0} within M within Z_{>0}, checking the major
    property by definition.  With exhaustive=True the full power set of the
    window is enumerated (tiny m only)."""
    if m < 1:
        raise ValidationError("m must be positive")
    window = list(range(1, 3 * m + 1))
    required = set(range(m, 3 * m + 1, m))

    def is_major(subset):
        return all(y in subset for x in subset for y in window if y >= x)

    if exhaustive:
        count = 0
        for mask in range(1 << len(window)):
            subset = {window[i] for i in range(len(window)) if mask >> i & 1}
            if required <= subset and is_major(subset):
                count += 1
        return count
    count = 0
    for lo in range(1, 3 * m + 2):
        subset = set(range(lo, 3 * m + 1))
        if required <= subset and is_major(subset):
            count += 1
    return count
