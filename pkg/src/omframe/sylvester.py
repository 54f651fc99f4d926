"""Sylvester-type coefficient system and its partial Gauss-Jordan reduction.

For a nonzero row vector ``a`` of length n and degree d, the system matrix A
is (2d+1) x n(d+1): d+1 horizontal copies of the (d+1) x n coefficient block
of ``a``, each copy shifted down one row.  Under the sharp/flat coefficient
isomorphisms, A realizes the map h -> a*h on polynomial vectors of degree at
most d.  The augmented matrix is W = [A | e1].

``partial_rref`` classifies the columns of A (pivotal / basic non-pivotal /
periodic non-pivotal) and records, for every basic non-pivotal column and for
the augmented column, its coordinates over the preceding pivotal columns.
Periodic non-pivotal columns are skipped without arithmetic: once an index j
is non-pivotal, so is every j + k*n.  Instead of materializing W, a row
transformation accumulator T is maintained so each candidate column is
reduced as T*A_col on demand.
"""

from __future__ import annotations

from .poly import PolyError, PolyVec, flat


class SylvesterSystem:
    """The augmented coefficient system W = [A | e1] for a row vector."""

    __slots__ = ("field", "n", "d", "coeff_rows", "comp_cols")

    def __init__(self, field, n, d, coeff_rows):
        self.field = field
        self.n = n
        self.d = d
        # coeff_rows[i][r] = coefficient of s^i in component r+1
        self.coeff_rows = tuple(tuple(row) for row in coeff_rows)
        # per-component coefficient columns, handy for lazy A-column assembly
        self.comp_cols = tuple(tuple(self.coeff_rows[i][r] for i in range(d + 1)) for r in range(n))

    @property
    def nrows(self):
        return 2 * self.d + 1

    @property
    def ncols_a(self):
        return self.n * (self.d + 1)

    @property
    def ncols(self):
        return self.ncols_a + 1

    def column(self, j: int):
        """Column j of A (1-based), as a dense list of length 2d+1."""
        if not 1 <= j <= self.ncols_a:
            raise PolyError(f"column index {j} out of range 1..{self.ncols_a}")
        block, r = divmod(j - 1, self.n)
        col = [self.field.zero] * self.nrows
        comp = self.comp_cols[r]
        for i in range(self.d + 1):
            col[block + i] = comp[i]
        return col

    def aug_column(self):
        """The appended column e1."""
        col = [self.field.zero] * self.nrows
        col[0] = self.field.one
        return col

    def dense(self, augmented=True):
        """Materialize the matrix row-wise (mostly for tests and display)."""
        cols = [self.column(j) for j in range(1, self.ncols_a + 1)]
        if augmented:
            cols.append(self.aug_column())
        return [[c[i] for c in cols] for i in range(self.nrows)]

    def apply(self, v):
        """The product A*v for a flat coefficient vector v of length n(d+1)."""
        v = list(v)
        if len(v) != self.ncols_a:
            raise PolyError(f"expected vector of length {self.ncols_a}, got {len(v)}")
        F = self.field
        out = [F.zero] * self.nrows
        n, d = self.n, self.d
        for block in range(d + 1):
            for r in range(n):
                x = v[block * n + r]
                if F.is_zero(x):
                    continue
                comp = self.comp_cols[r]
                for i in range(d + 1):
                    c = comp[i]
                    if not F.is_zero(c):
                        out[block + i] = F.add(out[block + i], F.mul(c, x))
        return out


def build_system(a: PolyVec) -> SylvesterSystem:
    """Build the augmented system for a nonzero row vector of length > 1."""
    if len(a) <= 1:
        raise PolyError("need a vector of length n > 1")
    if a.is_zero():
        raise PolyError("zero vector has no coefficient system")
    d = a.degree
    rows = [[e.coeff(i) for e in a.entries] for i in range(d + 1)]
    return SylvesterSystem(a.field, len(a), d, rows)


class PivotProfile:
    """Column classification of A plus reduced coordinates.

    ``pivots``, ``basic`` and ``periodic`` are 1-based, strictly increasing
    column index tuples.  ``coords[j]`` holds, for a basic non-pivotal j, the
    unique coefficients of A_j over the pivotal columns preceding j.
    ``target_coords`` holds the coefficients of e1 over all pivotal columns,
    or None when e1 is outside the column span (exactly the case gcd != 1,
    reported via ``gcd_nontrivial`` instead of an exception).
    """

    __slots__ = ("field", "n", "d", "pivots", "basic", "periodic", "coords", "target_coords", "gcd_nontrivial")

    def __init__(self, field, n, d, pivots, basic, periodic, coords, target_coords, gcd_nontrivial):
        self.field = field
        self.n = n
        self.d = d
        self.pivots = tuple(pivots)
        self.basic = tuple(basic)
        self.periodic = tuple(periodic)
        self.coords = {j: tuple(c) for j, c in coords.items()}
        self.target_coords = None if target_coords is None else tuple(target_coords)
        self.gcd_nontrivial = gcd_nontrivial

    @property
    def non_pivotal(self):
        return tuple(sorted(self.basic + self.periodic))

    def __repr__(self):
        ts = self.field.to_str
        parts = [
            f"pivots={list(self.pivots)}",
            f"basic={list(self.basic)}",
            f"periodic={list(self.periodic)}",
            "coords={"
            + ", ".join(f"{j}: ({', '.join(map(ts, c))})" for j, c in sorted(self.coords.items()))
            + "}",
            "target=" + ("none" if self.target_coords is None else f"({', '.join(map(ts, self.target_coords))})"),
            f"gcd_nontrivial={self.gcd_nontrivial}",
        ]
        return "PivotProfile(" + ", ".join(parts) + ")"


def partial_rref(system: SylvesterSystem) -> PivotProfile:
    """Partial Gauss-Jordan reduction of W = [A | e1].

    Scans the columns of A left to right.  A column whose residue class
    mod n already produced a non-pivotal index is periodic and is skipped
    outright.  Any other column is reduced through the accumulated row
    transformation; a zero residual classifies it as basic non-pivotal (its
    reduced coordinates are recorded), otherwise it becomes the next pivot
    and the accumulator is updated (normalization plus elimination above and
    below, so recorded coordinates match the reduced row-echelon form).
    """
    F = system.field
    n = system.n
    rows = system.nrows
    ncols = system.ncols_a

    T = [[F.one if i == j else F.zero for j in range(rows)] for i in range(rows)]
    pivots: list[int] = []
    basic: list[int] = []
    periodic: list[int] = []
    coords: dict[int, tuple] = {}
    blocked = set()  # residue classes (j-1) % n with a known non-pivotal index

    is_zero = F.is_zero
    dot = F.dot
    d1 = system.d + 1

    for j in range(1, ncols + 1):
        cls = (j - 1) % n
        if cls in blocked:
            periodic.append(j)
            continue
        block, r = divmod(j - 1, n)
        comp = system.comp_cols[r]
        hi = block + d1
        w = [dot(trow[block:hi], comp) for trow in T]
        k = len(pivots)
        piv_row = None
        for i in range(k, rows):
            if not is_zero(w[i]):
                piv_row = i
                break
        if piv_row is None:
            basic.append(j)
            coords[j] = tuple(w[:k])
            blocked.add(cls)
            continue
        if piv_row != k:
            T[k], T[piv_row] = T[piv_row], T[k]
            w[k], w[piv_row] = w[piv_row], w[k]
        if w[k] != F.one:
            T[k] = F.scaled(T[k], F.inv(w[k]))
        tk = T[k]
        for i in range(rows):
            if i != k and not is_zero(w[i]):
                T[i] = F.sub_scaled(T[i], w[i], tk)
        pivots.append(j)

    # reduce the augmented column e1: T*e1 is the first column of T
    k = len(pivots)
    w = [trow[0] for trow in T]
    in_span = all(is_zero(w[i]) for i in range(k, rows))
    target = tuple(w[:k]) if in_span else None
    return PivotProfile(F, n, system.d, pivots, basic, periodic, coords, target, not in_span)


def reconstruct_column(system: SylvesterSystem, profile: PivotProfile, j: int):
    """Rebuild A_j from its recorded expansion (testing hook for exactness)."""
    if j not in profile.coords:
        raise PolyError(f"column {j} has no recorded coordinates")
    F = system.field
    out = [F.zero] * system.nrows
    for alpha, p in zip(profile.coords[j], profile.pivots):
        if F.is_zero(alpha):
            continue
        col = system.column(p)
        for i in range(system.nrows):
            out[i] = F.add(out[i], F.mul(alpha, col[i]))
    return out


def flat_solution(system: SylvesterSystem, profile: PivotProfile) -> PolyVec:
    """The solution of A*v = e1 supported on pivotal slots, as a polynomial vector."""
    if profile.target_coords is None:
        raise PolyError("no solution: gcd is nontrivial")
    F = system.field
    v = [F.zero] * system.ncols_a
    for alpha, p in zip(profile.target_coords, profile.pivots):
        v[p - 1] = alpha
    return flat(F, v, system.n)
