"""Dense univariate polynomials, polynomial vectors and matrices over a field.

Conventions:
  * coefficients are stored dense ascending by power, trailing zeros trimmed;
  * the zero polynomial has an empty coefficient tuple and degree ``NEG_INF``;
  * a polynomial vector carries an orientation tag (row or column);
  * ``sharp``/``flat`` convert between degree-bounded polynomial vectors and
    flat coefficient vectors, blocked so that slot ``k*m + r`` holds the
    coefficient of ``s^k`` in component ``r+1``.
"""

from __future__ import annotations

from .fields import QQ

NEG_INF = float("-inf")  # degree of the zero polynomial


class PolyError(ValueError):
    pass


def _same_field(a, b):
    if a.field is not b.field:
        raise PolyError(f"mixed fields: {a.field.name} vs {b.field.name}")


class Poly:
    """Immutable dense univariate polynomial in ``s`` over a field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=(), trim=True):
        if trim:
            coeffs = list(coeffs)
            while coeffs and field.is_zero(coeffs[-1]):
                coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(k) for k in ints])

    @classmethod
    def constant(cls, field, value):
        return cls(field, [value])

    @classmethod
    def zero(cls, field):
        return cls(field, (), trim=False)

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,), trim=False)

    @classmethod
    def monomial(cls, field, power, coeff=None):
        if coeff is None:
            coeff = field.one
        if field.is_zero(coeff):
            return cls.zero(field)
        c = [field.zero] * power + [coeff]
        return cls(field, c, trim=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    @property
    def lc(self):
        if not self.coeffs:
            raise PolyError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __add__(self, other):
        _same_field(self, other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __sub__(self, other):
        _same_field(self, other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        out = list(a) + [F.zero] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = F.sub(out[i], c)
        return Poly(F, out)

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs], trim=False)

    def __mul__(self, other):
        _same_field(self, other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        rb = b[::-1]
        la, lb = len(a), len(b)
        out = []
        for k in range(la + lb - 1):
            lo = max(0, k - lb + 1)
            hi = min(la - 1, k)
            out.append(F.dot(a[lo : hi + 1], rb[lb - 1 - k + lo : lb - k + hi]))
        return Poly(F, out)

    def scale(self, c):
        F = self.field
        if F.is_zero(c):
            return Poly.zero(F)
        return Poly(F, [F.mul(x, c) for x in self.coeffs], trim=False)

    def shift(self, k):
        """Multiply by s^k."""
        if not self.coeffs or k == 0:
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs, trim=False)

    def monic(self):
        if not self.coeffs:
            raise PolyError("cannot normalize the zero polynomial")
        F = self.field
        if self.coeffs[-1] == F.one:
            return self
        return self.scale(F.inv(self.coeffs[-1]))

    def divmod(self, other):
        """Quotient and remainder; ``other`` must be nonzero."""
        _same_field(self, other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly.zero(F), self
        inv_lb = F.inv(other.coeffs[-1])
        quot = [F.zero] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            q = F.mul(c, inv_lb)
            quot[i - db] = q
            for t in range(db + 1):
                rem[i - db + t] = F.sub(rem[i - db + t], F.mul(q, bc[t]))
        return Poly(F, quot), Poly(F, rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolyError("inexact polynomial division")
        return q

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.field.name}, [{', '.join(map(self.field.to_str, self.coeffs))}])"


def format_poly(p: Poly) -> str:
    """Render ascending by power, in the grammar the parser accepts."""
    if p.is_zero():
        return "0"
    F = p.field
    parts = []
    for k, c in enumerate(p.coeffs):
        if F.is_zero(c):
            continue
        cs = F.to_str(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if k == 0:
            term = mag
        elif mag == "1":
            term = "s" if k == 1 else f"s^{k}"
        else:
            term = f"{mag}*s" if k == 1 else f"{mag}*s^{k}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


class PolyVec:
    """Vector of polynomials with an orientation tag."""

    __slots__ = ("field", "entries", "row")

    def __init__(self, field, entries, row=True):
        entries = tuple(entries)
        if not entries:
            raise PolyError("polynomial vector must have at least one entry")
        for e in entries:
            if e.field is not field:
                raise PolyError("entry field mismatch")
        self.field = field
        self.entries = entries
        self.row = row

    @classmethod
    def from_int_lists(cls, field, lists, row=True):
        return cls(field, [Poly.from_ints(field, c) for c in lists], row=row)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, PolyVec):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    @property
    def orientation(self):
        return "row" if self.row else "column"

    @property
    def degree(self):
        return max(e.degree for e in self.entries)

    def leading_vector(self):
        """Coefficients of s^deg across components; defined for nonzero vectors."""
        d = self.degree
        if d == NEG_INF:
            raise PolyError("leading vector of the zero vector")
        return [e.coeff(d) for e in self.entries]

    def transposed(self):
        return PolyVec(self.field, self.entries, row=not self.row)

    def scale_poly(self, p: Poly):
        return PolyVec(self.field, [e * p for e in self.entries], row=self.row)

    def exact_div(self, p: Poly):
        return PolyVec(self.field, [e.exact_div(p) for e in self.entries], row=self.row)

    def dot(self, other: "PolyVec") -> Poly:
        if len(self) != len(other):
            raise PolyError("dimension mismatch in dot product")
        _same_field(self, other)
        acc = Poly.zero(self.field)
        for x, y in zip(self.entries, other.entries):
            acc = acc + x * y
        return acc

    def __str__(self):
        return "[" + ", ".join(format_poly(e) for e in self.entries) + "]"

    def __repr__(self):
        return f"PolyVec({self.field.name}, {self.orientation}, {self})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; raises on the (0, 0) input."""
    _same_field(f, g)
    if f.is_zero() and g.is_zero():
        raise PolyError("gcd of zero vector undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.field is QQ:
        return _gcd_rational(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _int_content(ints):
    from math import gcd as igcd

    acc = 0
    for v in ints:
        acc = igcd(acc, abs(v))
        if acc == 1:
            break
    return acc


def _to_primitive(p: Poly):
    """Integer primitive part of a rational polynomial, as an int list."""
    dens = [c.denominator for c in p.coeffs]
    lcm = 1
    from math import gcd as igcd

    for d in dens:
        lcm = lcm * d // igcd(lcm, d)
    ints = [int(c.numerator) * (lcm // int(c.denominator)) for c in p.coeffs]
    cont = _int_content(ints)
    return [v // cont for v in ints]


def _gcd_rational(f: Poly, g: Poly) -> Poly:
    # primitive pseudo-remainder sequence over the integers
    a = _to_primitive(f)
    b = _to_primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while True:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            # r <- lb*r - c*s^(i-db)*b, which zeroes position i exactly
            if lb != 1:
                for t in range(i):
                    r[t] *= lb
            for t in range(db):
                r[i - db + t] -= c * b[t]
            r[i] = 0
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return Poly.from_ints(QQ, b).monic()
        cont = _int_content(r)
        a, b = b, [v // cont for v in r]


def poly_ext_gcd(f: Poly, g: Poly):
    """(g0, u, v) with u*f + v*g = g0 and g0 the monic gcd."""
    _same_field(f, g)
    F = f.field
    if f.is_zero() and g.is_zero():
        raise PolyError("gcd of zero vector undefined")
    r0, r1 = f, g
    u0, u1 = Poly.one(F), Poly.zero(F)
    v0, v1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = Poly.constant(F, F.inv(r0.lc))
    return r0.monic(), u0 * lead, v0 * lead


def vec_gcd(a: PolyVec) -> Poly:
    """Monic gcd of all components of a nonzero vector."""
    if a.is_zero():
        raise PolyError("gcd of zero vector undefined")
    F = a.field
    acc = Poly.zero(F)
    for e in a.entries:
        if e.is_zero():
            continue
        acc = e.monic() if acc.is_zero() else poly_gcd(acc, e)
        if acc.is_one():
            return acc
    return acc


def sharp(h: PolyVec, t: int):
    """Flatten a degree <= t polynomial vector into m(t+1) coefficients."""
    if h.degree > t:
        raise PolyError(f"degree bound violated: deg {h.degree} > {t}")
    out = []
    for k in range(t + 1):
        for e in h.entries:
            out.append(e.coeff(k))
    return tuple(out)


def flat(field, values, m: int, row=False) -> PolyVec:
    """Inverse of sharp: regroup a flat coefficient vector into m polynomials."""
    values = list(values)
    if m < 1 or len(values) % m != 0:
        raise PolyError(f"length {len(values)} not divisible by {m}")
    return PolyVec(field, [Poly(field, values[r::m]) for r in range(m)], row=row)


class PolyMatrix:
    """Dense matrix of polynomials, stored row-major."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise PolyError("empty matrix")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise PolyError("ragged matrix")
            for e in r:
                if e.field is not field:
                    raise PolyError("entry field mismatch")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field, n):
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_lists(cls, field, rows):
        return cls(field, [[Poly.from_ints(field, e) for e in r] for r in rows])

    @classmethod
    def from_scalars(cls, field, rows):
        """Constant matrix from raw field scalars."""
        return cls(field, [[Poly(field, [c]) for c in r] for r in rows])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def entry(self, i, j):
        return self.rows[i][j]

    def col(self, j) -> PolyVec:
        return PolyVec(self.field, [r[j] for r in self.rows], row=False)

    def row_vec(self, i) -> PolyVec:
        return PolyVec(self.field, self.rows[i], row=True)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def column_degrees(self):
        return tuple(self.col(j).degree for j in range(self.ncols))

    @property
    def degree(self):
        return max(e.degree for r in self.rows for e in r)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.field is other.field and self.rows == other.rows

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise PolyError("matrix dimension mismatch")
        F = self.field
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = Poly.zero(F)
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(F, out)

    def det(self) -> Poly:
        """Exact determinant by fraction-free (Bareiss) elimination over K[s]."""
        if self.nrows != self.ncols:
            raise PolyError("determinant of a non-square matrix")
        F = self.field
        n = self.nrows
        m = [list(r) for r in self.rows]
        sign = 1
        prev = Poly.one(F)
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Poly.zero(F)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = num.exact_div(prev)
                m[i][k] = Poly.zero(F)
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return -d if sign < 0 else d

    def __str__(self):
        cells = [[format_poly(e) for e in r] for r in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        lines = []
        for r in cells:
            lines.append("[ " + "   ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]")
        return "\n".join(lines)


def row_times_matrix(a: PolyVec, m: PolyMatrix) -> PolyVec:
    """Exact product of a row vector and a polynomial matrix."""
    if not a.row:
        raise PolyError("left factor must be a row vector")
    if len(a) != m.nrows:
        raise PolyError("dimension mismatch")
    _same_field(a, m)
    F = a.field
    out = []
    for j in range(m.ncols):
        acc = Poly.zero(F)
        for i, e in enumerate(a.entries):
            acc = acc + e * m.rows[i][j]
        out.append(acc)
    return PolyVec(F, out, row=True)


def scalar_matrix_det(field, rows) -> object:
    """Determinant of a small matrix of raw field scalars (Gaussian elimination)."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not field.is_zero(m[i][k]):
                piv = i
                break
        if piv is None:
            return field.zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = field.neg(det)
        det = field.mul(det, m[k][k])
        inv = field.inv(m[k][k])
        for i in range(k + 1, n):
            c = m[i][k]
            if field.is_zero(c):
                continue
            c = field.mul(c, inv)
            m[i] = field.sub_scaled(m[i], c, m[k])
    return det


def scalar_matrix_rank(field, rows) -> int:
    """Rank of a matrix of raw field scalars."""
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
        m[rank] = field.scaled(m[rank], inv)
        for i in range(nrows):
            if i != rank and not field.is_zero(m[i][col]):
                m[i] = field.sub_scaled(m[i], m[i][col], m[rank])
        rank += 1
        if rank == nrows:
            break
    return rank


def invert_scalar_matrix(field, rows):
    """Exact inverse of a square matrix of raw field scalars."""
    n = len(rows)
    m = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not field.is_zero(m[i][k]):
                piv = i
                break
        if piv is None:
            raise PolyError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        inv = field.inv(m[k][k])
        m[k] = field.scaled(m[k], inv)
        for i in range(n):
            if i != k and not field.is_zero(m[i][k]):
                m[i] = field.sub_scaled(m[i], m[i][k], m[k])
    return [r[n:] for r in m]
