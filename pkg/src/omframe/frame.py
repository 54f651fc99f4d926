"""Degree-optimal moving frames assembled from a pivot profile.

For a nonzero row vector ``a`` (length n > 1) a moving frame is an invertible
polynomial matrix P with a*P = [gcd(a), 0, ..., 0]; it is degree-optimal when
its first column is a Bezout vector of minimal degree and the remaining
columns form a degree-ordered mu-basis of the syzygy module.  Both parts are
read off a single partial reduction of the Sylvester-type system: the
coordinates of e1 over the pivotal columns give the Bezout vector, and the
coordinates of each basic non-pivotal column give one mu-basis element.
"""

from __future__ import annotations

import itertools

from .fields import QQ
from .poly import (
    NEG_INF,
    Poly,
    PolyError,
    PolyMatrix,
    PolyVec,
    format_poly,
    row_times_matrix,
    scalar_matrix_det,
    scalar_matrix_rank,
    vec_gcd,
)
from .sylvester import PivotProfile, build_system, partial_rref


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class MovingFrame:
    """An n x n frame, its gcd, and the canonical column degrees.

    ``beta`` is the degree of the first column (the minimal Bezout degree of
    a/gcd); ``mu`` lists the degrees of columns 2..n in nondecreasing order
    (the mu-type).  ``profile`` retains the pivot data the frame was read
    from, when it was produced by the main construction.
    """

    __slots__ = ("matrix", "gcd", "beta", "mu", "profile")

    def __init__(self, matrix: PolyMatrix, gcd: Poly, beta: int, mu, profile: PivotProfile | None = None):
        self.matrix = matrix
        self.gcd = gcd
        self.beta = beta
        self.mu = tuple(mu)
        self.profile = profile

    @property
    def field(self):
        return self.matrix.field

    @property
    def n(self):
        return self.matrix.nrows

    @property
    def degree(self):
        return self.matrix.degree

    def column_degrees(self):
        return (self.beta,) + self.mu

    def bezout_vector(self) -> PolyVec:
        return self.matrix.col(0)

    def mu_basis(self) -> list[PolyVec]:
        return [self.matrix.col(j) for j in range(1, self.n)]

    def __eq__(self, other):
        if not isinstance(other, MovingFrame):
            return NotImplemented
        return self.matrix == other.matrix and self.gcd == other.gcd

    def __repr__(self):
        return f"MovingFrame(n={self.n}, gcd={format_poly(self.gcd)}, beta={self.beta}, mu={self.mu})"


def _column_entries(profile: PivotProfile):
    """Sparse (component, power) -> coefficient maps for the n frame columns."""
    F = profile.field
    n = profile.n
    cols: list[dict] = [dict() for _ in range(n)]
    for j0, qt in enumerate(profile.basic, start=1):
        r, k = (qt - 1) % n, (qt - 1) // n
        cols[j0][(r, k)] = F.one
    for i, p in enumerate(profile.pivots):
        r, k = (p - 1) % n, (p - 1) // n
        alpha = profile.target_coords[i]
        if not F.is_zero(alpha):
            cols[0][(r, k)] = alpha
        for j0, qt in enumerate(profile.basic, start=1):
            if p < qt:
                c = profile.coords[qt][i]
                if not F.is_zero(c):
                    cols[j0][(r, k)] = F.neg(c)
    return cols


def _materialize(field, n, cols) -> PolyMatrix:
    zero = Poly.zero(field)
    rows = [[zero] * n for _ in range(n)]
    for j, entries in enumerate(cols):
        per_comp: dict[int, dict[int, object]] = {}
        for (r, k), val in entries.items():
            per_comp.setdefault(r, {})[k] = val
        for r, powers in per_comp.items():
            top = max(powers)
            rows[r][j] = Poly(field, [powers.get(k, field.zero) for k in range(top + 1)])
    return PolyMatrix(field, rows)


def bezout_from_profile(profile: PivotProfile) -> PolyVec:
    """Minimal-degree Bezout vector read off the reduced augmented column."""
    if profile.gcd_nontrivial:
        raise PolyError("requires gcd 1")
    F = profile.field
    n = profile.n
    entries = [dict() for _ in range(n)]
    for alpha, p in zip(profile.target_coords, profile.pivots):
        if not F.is_zero(alpha):
            r, k = (p - 1) % n, (p - 1) // n
            entries[r][k] = alpha
    polys = []
    for r in range(n):
        powers = entries[r]
        if powers:
            top = max(powers)
            polys.append(Poly(F, [powers.get(k, F.zero) for k in range(top + 1)]))
        else:
            polys.append(Poly.zero(F))
    return PolyVec(F, polys, row=False)


def mu_basis_from_profile(profile: PivotProfile) -> list[PolyVec]:
    """Degree-ordered mu-basis columns read off the basic non-pivotal data."""
    if profile.gcd_nontrivial:
        raise PolyError("requires gcd 1")
    cols = _column_entries(profile)
    mat = _materialize(profile.field, profile.n, cols)
    return [mat.col(j) for j in range(1, profile.n)]


def profile_beta(profile: PivotProfile) -> int:
    """Minimal Bezout degree: ceil(p_k/n) - 1 for the last pivot carrying weight."""
    if profile.gcd_nontrivial:
        raise PolyError("requires gcd 1")
    F = profile.field
    last = None
    for alpha, p in zip(profile.target_coords, profile.pivots):
        if not F.is_zero(alpha):
            last = p
    if last is None:
        raise PolyError("empty expansion of the unit column")
    return _ceil_div(last, profile.n) - 1


def profile_mu(profile: PivotProfile):
    """The mu-type: ceil(q/n) - 1 over the basic non-pivotal indices q."""
    return tuple(_ceil_div(q, profile.n) - 1 for q in profile.basic)


def optimal_moving_frame(a: PolyVec) -> MovingFrame:
    """Compute a degree-optimal moving frame at a nonzero row vector.

    A common factor g = gcd(a) is divided out first; the frame computed for
    a/g satisfies a*P = [g, 0, ..., 0] as well.
    """
    if len(a) <= 1:
        raise PolyError("need a vector of length n > 1")
    if a.is_zero():
        raise PolyError("no frame at the zero vector")
    if not a.row:
        raise PolyError("input must be a row vector")
    g = vec_gcd(a)
    reduced = a if g.is_one() else a.exact_div(g)
    profile = partial_rref(build_system(reduced))
    if profile.gcd_nontrivial:  # cannot happen once the gcd is divided out
        raise PolyError("internal: unit column outside the column span")
    matrix = _materialize(profile.field, profile.n, _column_entries(profile))
    return MovingFrame(matrix, g, profile_beta(profile), profile_mu(profile), profile)


class CheckResult:
    __slots__ = ("name", "ok", "detail")

    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = bool(ok)
        self.detail = detail

    def __repr__(self):
        status = "ok" if self.ok else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


class VerificationReport:
    """Outcome of the frame checks; failures are entries, not exceptions."""

    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failed(self):
        return [c for c in self.checks if not c.ok]

    def as_dict(self):
        return {c.name: {"ok": c.ok, "detail": c.detail} for c in self.checks}

    def __str__(self):
        return "\n".join(map(repr, self.checks))


def _det_points(field, count):
    if field is QQ:
        ints = itertools.chain([0], itertools.chain.from_iterable((k, -k) for k in itertools.count(1)))
        return [field.from_int(k) for k in itertools.islice(ints, count)]
    if count > field.characteristic:
        return None
    return list(range(count))


def det_is_nonzero_constant(m: PolyMatrix):
    """Exact constancy check for det(m) by multipoint evaluation.

    det has degree at most the sum B of column degrees; equal nonzero values
    at B+1 distinct points prove it is that constant.  Falls back to the
    fraction-free determinant when the field has too few points.
    """
    col_degs = m.column_degrees()
    if any(d == NEG_INF for d in col_degs):
        return False, "a column is zero"
    bound = sum(col_degs)
    F = m.field
    points = _det_points(F, bound + 1)
    if points is None:
        d = m.det()
        if d.is_zero():
            return False, "determinant is zero"
        if not d.is_constant():
            return False, "determinant is nonconstant"
        return True, f"det = {format_poly(d)}"
    first = None
    for x in points:
        rows = [[e(x) for e in row] for row in m.rows]
        val = scalar_matrix_det(F, rows)
        if first is None:
            if F.is_zero(val):
                return False, "determinant vanishes at a sample point"
            first = val
        elif val != first:
            return False, "determinant is nonconstant"
    return True, f"det = {F.to_str(first)}"


def verify_frame(a: PolyVec, frame) -> VerificationReport:
    """Run the full battery of frame checks for a claimed frame at ``a``.

    Accepts a MovingFrame or a bare PolyMatrix.  The degree-bound and
    degree-sum checks compare against deg(a/gcd(a)), which coincides with
    deg(a) whenever gcd(a) = 1.
    """
    m = frame.matrix if isinstance(frame, MovingFrame) else frame
    if len(a) != m.nrows or m.nrows != m.ncols:
        raise PolyError("dimension mismatch between vector and frame")
    F = a.field
    n = len(a)
    g = vec_gcd(a)
    d_eff = a.degree - g.degree  # degree of a/gcd(a)
    checks = []

    product = row_times_matrix(a, m)
    expect = PolyVec(F, [g] + [Poly.zero(F)] * (n - 1), row=True)
    checks.append(
        CheckResult(
            "product",
            product == expect,
            f"a*P = {product}",
        )
    )

    ok, detail = det_is_nonzero_constant(m)
    checks.append(CheckResult("det-constant", ok, detail))

    col_degs = [m.col(j).degree for j in range(n)]
    beta, trailing = col_degs[0], col_degs[1:]
    checks.append(
        CheckResult(
            "mu-ordered",
            all(x <= y for x, y in zip(trailing, trailing[1:])),
            f"trailing degrees {trailing}",
        )
    )

    deg_m = m.degree
    lower = _ceil_div(d_eff, n - 1)
    checks.append(
        CheckResult(
            "degree-bounds",
            lower <= deg_m <= d_eff,
            f"{lower} <= deg(P) = {deg_m} <= {d_eff}",
        )
    )

    if d_eff == 0:
        bez_ok = all(dg == 0 for dg in col_degs)
        bez_detail = "constant input: all column degrees must be 0"
    else:
        bez_ok = trailing and beta < max(trailing)
        bez_detail = f"deg(col 1) = {beta}, max trailing = {max(trailing) if trailing else None}"
    checks.append(CheckResult("bezout-degree", bez_ok, bez_detail))

    checks.append(
        CheckResult(
            "mu-sum",
            sum(trailing) == d_eff,
            f"sum of trailing degrees = {sum(trailing)}, expected {d_eff}",
        )
    )

    lv_ok = False
    if all(dg != NEG_INF for dg in trailing):
        lvs = [m.col(j).leading_vector() for j in range(1, n)]
        lv_ok = scalar_matrix_rank(F, lvs) == n - 1
    checks.append(CheckResult("leading-vectors", lv_ok, "independence of trailing leading vectors"))

    return VerificationReport(checks)
