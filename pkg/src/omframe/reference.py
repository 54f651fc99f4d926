"""Brute-force oracles, a non-optimal baseline frame, and witness generators.

Everything here exists to check the main construction from the outside:

* degree-incremental brute-force search for a minimal Bezout vector;
* recovery of the mu-type from kernel dimensions of coefficient maps;
* a classical frame built from an extended-Euclid step plus column
  operations (valid, but with no degree guarantee);
* explicit witness families realizing every (beta, mu) combination, the
  sharp frame-degree bounds, and a nonsingular principal coefficient block.

The dense linear solves use their own textbook Gauss-Jordan routine and
their own coefficient-matrix builder, deliberately sharing nothing with the
pivot-profile machinery they are meant to cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import QQ
from .poly import Poly, PolyError, PolyMatrix, PolyVec, flat, poly_ext_gcd, poly_gcd, vec_gcd


# --- independent dense linear algebra -------------------------------------


def solve_dense(field, rows, rhs):
    """One solution of M x = rhs (free variables set to zero), or None."""
    if not rows:
        return None
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(rows[0])
    piv_cols = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if not field.is_zero(m[i][col]):
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        m[rank] = field.scaled(m[rank], field.inv(m[rank][col]))
        for i in range(nrows):
            if i != rank and not field.is_zero(m[i][col]):
                m[i] = field.sub_scaled(m[i], m[i][col], m[rank])
        piv_cols.append(col)
        rank += 1
        if rank == nrows:
            break
    for i in range(rank, nrows):
        if not field.is_zero(m[i][ncols]):
            return None
    x = [field.zero] * ncols
    for r, col in enumerate(piv_cols):
        x[col] = m[r][ncols]
    return x


def rank_dense(field, rows) -> int:
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if not field.is_zero(m[i][col]):
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][col])
        for i in range(rank + 1, nrows):
            if not field.is_zero(m[i][col]):
                m[i] = field.sub_scaled(m[i], field.mul(m[i][col], inv), m[rank])
        rank += 1
        if rank == nrows:
            break
    return rank


def coeff_map_matrix(a: PolyVec, t: int):
    """Matrix of h -> a*h on degree <= t vectors, rows ascending by power.

    Shape (d+t+1) x n(t+1); the column for slot k*n + r carries the
    coefficients of s^k * a_{r+1}, matching the flat coefficient layout.
    """
    F = a.field
    n = len(a)
    d = a.degree
    nrows = d + t + 1
    rows = [[F.zero] * (n * (t + 1)) for _ in range(nrows)]
    for k in range(t + 1):
        for r in range(n):
            col = k * n + r
            coeffs = a.entries[r].coeffs
            for i, c in enumerate(coeffs):
                rows[k + i][col] = c
    return rows


def _unit_rhs(field, length, position):
    rhs = [field.zero] * length
    rhs[position] = field.one
    return rhs


# --- oracles ----------------------------------------------------------------


def brute_min_bezout(a: PolyVec):
    """(degree, vector) of a minimal-degree Bezout vector, by exhaustive degree search.

    Tries degrees t = 0, 1, 2, ... and solves the corresponding dense linear
    system for the constant polynomial 1.  Termination at t <= deg(a) is a
    theorem; exceeding it signals a bug, not an input condition.
    """
    g = vec_gcd(a)
    if not g.is_one():
        raise PolyError("requires gcd 1")
    F = a.field
    n = len(a)
    d = a.degree
    for t in range(d + 1):
        rows = coeff_map_matrix(a, t)
        sol = solve_dense(F, rows, _unit_rhs(F, d + t + 1, 0))
        if sol is not None:
            return t, flat(F, sol, n)
    raise AssertionError("no Bezout vector of degree <= deg(a) found")


def brute_mu_type(a: PolyVec):
    """Recover the mu-type from syzygy-space dimensions.

    With k_t = dim ker of the degree-t coefficient map, the running count
    k_t - k_{t-1} equals the number of mu-degrees <= t; differencing twice
    recovers the multiset.  The recovered degrees must sum to deg(a).
    """
    g = vec_gcd(a)
    if not g.is_one():
        raise PolyError("requires gcd 1")
    F = a.field
    n = len(a)
    d = a.degree
    mu = []
    prev_kernel = 0
    prev_count = 0
    for t in range(d + 1):
        rows = coeff_map_matrix(a, t)
        kernel = n * (t + 1) - rank_dense(F, rows)
        count = kernel - prev_kernel
        mu.extend([t] * (count - prev_count))
        prev_kernel, prev_count = kernel, count
    if len(mu) != n - 1 or sum(mu) != d:
        raise AssertionError(f"inconsistent kernel dimensions: mu={mu}, d={d}")
    return tuple(mu)


def monomial_representation(a: PolyVec, i: int) -> PolyVec:
    """Some h with a*h = s^i and deg(h) <= deg(a), for 0 <= i <= 2*deg(a)."""
    g = vec_gcd(a)
    if not g.is_one():
        raise PolyError("requires gcd 1")
    d = a.degree
    if not 0 <= i <= 2 * d:
        raise PolyError(f"exponent {i} out of range 0..{2 * d}")
    F = a.field
    rows = coeff_map_matrix(a, d)
    sol = solve_dense(F, rows, _unit_rhs(F, 2 * d + 1, i))
    if sol is None:
        raise AssertionError("representation must exist when the gcd is 1")
    return flat(F, sol, len(a))


# --- baseline frame ---------------------------------------------------------


def euclidean_frame(a: PolyVec, rng=None, attempts: int = 100) -> PolyMatrix:
    """Classical frame from one extended-Euclid step; no degree guarantee.

    Finds constants k_3..k_n with gcd(a_1 + k_3 a_3 + ... + k_n a_n, a_2) = 1,
    runs the extended Euclidean algorithm on that pair, and assembles the
    frame as a product of three structured matrices.  The constants are
    searched starting from all zeros, then uniformly in [-5, 5]; failure
    after the attempt budget raises.
    """
    g = vec_gcd(a)
    if not g.is_one():
        raise PolyError("requires gcd 1")
    n = len(a)
    if n < 2:
        raise PolyError("need a vector of length n >= 2")
    F = a.field
    if rng is None:
        rng = random.Random(0)

    a1, a2 = a.entries[0], a.entries[1]
    ks = None
    a1p = None
    for attempt in range(attempts):
        trial = (
            [F.zero] * (n - 2)
            if attempt == 0
            else [F.from_int(rng.randint(-5, 5)) for _ in range(n - 2)]
        )
        cand = a1
        for k, ai in zip(trial, a.entries[2:]):
            if not F.is_zero(k):
                cand = cand + ai.scale(k)
        if cand.is_zero() and a2.is_zero():
            continue
        if poly_gcd(cand, a2).is_one():
            ks, a1p = trial, cand
            break
    if ks is None:
        raise PolyError("no combining constants found; input resists the Euclid step")

    g0, f1, f2 = poly_ext_gcd(a1p, a2)
    assert g0.is_one()

    one, zero = Poly.one(F), Poly.zero(F)

    def identity_rows():
        return [[one if i == j else zero for j in range(n)] for i in range(n)]

    m1 = identity_rows()
    for i, k in enumerate(ks, start=2):
        m1[i][0] = Poly.constant(F, k) if not F.is_zero(k) else zero
    m2 = identity_rows()
    m2[0][0], m2[0][1] = f1, -a2
    m2[1][0], m2[1][1] = f2, a1p
    m3 = identity_rows()
    for j in range(2, n):
        m3[0][j] = -a.entries[j]
    return PolyMatrix(F, m1) * PolyMatrix(F, m2) * PolyMatrix(F, m3)


# --- witness generators -------------------------------------------------------


@dataclass(frozen=True)
class WitnessSpec:
    """Parameters of one explicit witness family.

    kinds: ``beta-mu`` (prescribed minimal Bezout degree j and mu-type),
    ``lower-bound`` / ``upper-bound`` (frame degree exactly ceil(d/(n-1)),
    resp. exactly d), ``detc`` (nonsingular principal coefficient block).
    """

    kind: str
    n: int
    d: int | None = None
    mu: tuple[int, ...] | None = None
    j: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise PolyError("witness needs n >= 2")
        if self.kind == "beta-mu":
            if self.mu is None or self.j is None:
                raise PolyError("beta-mu witness needs mu and j")
            mu = tuple(self.mu)
            if len(mu) != self.n - 1:
                raise PolyError(f"mu must have n-1 = {self.n - 1} entries")
            if any(m < 0 for m in mu) or any(x > y for x, y in zip(mu, mu[1:])):
                raise PolyError("mu must be nondecreasing and nonnegative")
            if mu[-1] == 0:
                raise PolyError("largest mu entry must be nonzero")
            if not 0 <= self.j <= mu[-1] - 1:
                raise PolyError(f"j must lie in 0..{mu[-1] - 1}")
        elif self.kind in ("lower-bound", "upper-bound", "detc"):
            if self.d is None or self.d <= 0:
                raise PolyError(f"{self.kind} witness needs degree d > 0")
        else:
            raise PolyError(f"unknown witness kind {self.kind!r}")


def _monomial_vec(field, exponents, bump_last=False) -> PolyVec:
    entries = []
    for idx, e in enumerate(exponents):
        if e is None:
            entries.append(Poly.zero(field))
        elif bump_last and idx == len(exponents) - 1:
            entries.append(Poly.monomial(field, e) + Poly.one(field))
        else:
            entries.append(Poly.monomial(field, e))
    return PolyVec(field, entries, row=True)


def gen_witness(spec: WitnessSpec, field=QQ) -> PolyVec:
    """The explicit witness vector for ``spec``; its gcd is 1 by construction."""
    n = spec.n
    if spec.kind == "beta-mu":
        mu, j = tuple(spec.mu), spec.j
        if n == 2:
            return _monomial_vec(field, [mu[0] - j, mu[0]], bump_last=True)
        head = mu[-1] - j
        exps = [head]
        acc = head
        for m in mu[:-1]:
            acc += m
            exps.append(acc)
        exps.append(sum(mu))
        return _monomial_vec(field, exps, bump_last=True)

    d = spec.d
    if spec.kind == "upper-bound":
        return _monomial_vec(field, [0] + [None] * (n - 2) + [d])
    if spec.kind == "lower-bound":
        c = -(-d // (n - 1))
        k = -(-d // c) - 1  # largest k with d > k*c
        exps = [0] + [None] * (n - k - 2) + [d - i * c for i in range(k, -1, -1)]
        return _monomial_vec(field, exps)

    # detc: nonsingular principal d+k+1 coefficient block
    k, r = divmod(d, n - 1)
    if n - 1 > d:
        exps = list(range(d, -1, -1)) + [0] * (n - d - 1)
    elif r == 0:
        exps = [d - i * k for i in range(n)]
    else:
        exps = [d] + [d - i * (k + 1) for i in range(1, r + 1)] + [d - (i * k + r) for i in range(r + 1, n)]
    return _monomial_vec(field, exps)


def principal_block(a: PolyVec):
    """The principal (d+k+1)-square submatrix of the coefficient system, k = quo(d, n-1)."""
    n = len(a)
    d = a.degree
    size = d + d // (n - 1) + 1
    rows = coeff_map_matrix(a, d)
    return [row[:size] for row in rows[:size]]


def principal_block_nonsingular(a: PolyVec) -> bool:
    block = principal_block(a)
    return rank_dense(a.field, block) == len(block)


# --- random inputs ---------------------------------------------------------


def random_poly_vec(field, n, d, rng, bound=10, gcd_one=False) -> PolyVec:
    """Random row vector of exact degree d; optionally resampled until gcd = 1."""
    while True:
        rows = [[field.random(rng, bound) for _ in range(d + 1)] for _ in range(n)]
        if all(field.is_zero(rows[r][d]) for r in range(n)):
            continue  # pin the degree at exactly d
        vec = PolyVec(field, [Poly(field, c) for c in rows], row=True)
        if vec.is_zero():
            continue
        if gcd_one and not vec_gcd(vec).is_one():
            continue
        return vec
