import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omframe.fields import GF, QQ
from omframe.parser import parse_poly, parse_vector
from omframe.poly import (
    NEG_INF,
    Poly,
    PolyError,
    PolyMatrix,
    PolyVec,
    flat,
    format_poly,
    poly_ext_gcd,
    poly_gcd,
    row_times_matrix,
    scalar_matrix_det,
    sharp,
    vec_gcd,
)

def P(text, field=QQ):
    return parse_poly(text, field)


# --- polynomials -------------------------------------------------------------


def test_trim_and_degree():
    p = Poly.from_ints(QQ, [1, 2, 0, 0])
    assert p.coeffs == (QQ.one, QQ.from_int(2))
    assert p.degree == 1
    z = Poly.from_ints(QQ, [0, 0])
    assert z.is_zero() and z.degree == NEG_INF
    assert NEG_INF < -(10**9)


def test_arithmetic_golden():
    assert P("(1+s)^2") == P("1 + 2*s + s^2")
    assert P("(1+s)*(1-s)") == P("1 - s^2")
    assert P("s^3") - P("s^3") == Poly.zero(QQ)
    assert P("1/2 + s").scale(QQ.from_int(2)) == P("1 + 2*s")
    assert P("s+1").shift(2) == P("s^3 + s^2")


def test_mixed_fields_rejected():
    with pytest.raises(PolyError):
        P("s") + P("s", GF(7))


def test_divmod():
    q, r = P("s^3 + 2*s + 1").divmod(P("s^2 + 1"))
    assert q == P("s") and r == P("s + 1")
    assert P("s^2 - 1").exact_div(P("s - 1")) == P("s + 1")
    with pytest.raises(PolyError):
        P("s^2").exact_div(P("s - 1"))
    with pytest.raises(ZeroDivisionError):
        P("s").divmod(Poly.zero(QQ))


def test_evaluate():
    p = P("2 - s + 3*s^2")
    assert p(QQ.from_int(2)) == QQ.from_int(12)
    F = GF(7)
    assert P("s^6", F)(F.from_int(3)) == 1  # Fermat


def _coeff_lists(field):
    return st.lists(st.integers(-30, 30), min_size=0, max_size=7).map(lambda c: Poly.from_ints(field, c))


@given(_coeff_lists(QQ), _coeff_lists(QQ))
def test_degree_of_product_adds(f, g):
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree == f.degree + g.degree


@given(_coeff_lists(GF(101)), _coeff_lists(GF(101)), _coeff_lists(GF(101)))
def test_poly_ring_laws_gf(f, g, h):
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f + (-f) == Poly.zero(GF(101))


# --- gcd ---------------------------------------------------------------------


def test_gcd_golden_division_both_ways():
    g = poly_gcd(P("s^2 + s"), P("s^2"))
    assert g == P("s")
    assert P("s^2 + s").exact_div(g) == P("s + 1")
    assert P("s^2").exact_div(g) == P("s")


def test_gcd_with_zero_is_monic():
    assert poly_gcd(P("2*s + 2"), Poly.zero(QQ)) == P("s + 1")
    with pytest.raises(PolyError):
        poly_gcd(Poly.zero(QQ), Poly.zero(QQ))


def _sylvester_resultant(f, g):
    # classical resultant determinant, as an independent coprimality oracle
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([QQ.zero] * i + fc + [QQ.zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([QQ.zero] * i + gc + [QQ.zero] * (size - i - n - 1))
    return scalar_matrix_det(QQ, rows)


def test_gcd_coprime_by_resultant_oracle():
    f, g = P("2 + s + s^4"), P("3 + s^2 + s^4")
    assert not QQ.is_zero(_sylvester_resultant(f, g))
    assert poly_gcd(f, g).is_one()


def test_gcd_matches_over_prime_field():
    rng = random.Random(3)
    F = GF(101)
    for _ in range(50):
        f = Poly(F, [F.random(rng) for _ in range(rng.randint(1, 7))])
        g = Poly(F, [F.random(rng) for _ in range(rng.randint(1, 7))])
        if f.is_zero() and g.is_zero():
            continue
        d = poly_gcd(f, g)
        if not f.is_zero():
            assert f.divmod(d)[1].is_zero()
        if not g.is_zero():
            assert g.divmod(d)[1].is_zero()
        assert d.lc == F.one


@given(_coeff_lists(QQ), _coeff_lists(QQ))
def test_gcd_divides_and_bezout_identity(f, g):
    if f.is_zero() and g.is_zero():
        return
    d, u, v = poly_ext_gcd(f, g)
    assert u * f + v * g == d
    if not f.is_zero():
        assert f.divmod(d)[1].is_zero()
    if not g.is_zero():
        assert g.divmod(d)[1].is_zero()
    # the primitive-sequence gcd agrees with the monic-Euclid route
    assert poly_gcd(f, g) == d


def test_vec_gcd_examples(running_vec):
    assert vec_gcd(running_vec).is_one()
    assert vec_gcd(parse_vector("s^2+s, s^2")) == P("s")
    assert vec_gcd(PolyVec(QQ, [P("7")])) == P("1")
    with pytest.raises(PolyError):
        vec_gcd(PolyVec(QQ, [Poly.zero(QQ), Poly.zero(QQ)]))


def test_vec_gcd_divides_components():
    rng = random.Random(9)
    for _ in range(30):
        lam = Poly.from_ints(QQ, [rng.randint(-4, 4) for _ in range(3)] + [1])
        base = parse_vector("1 + s, s^2, 3 - s")
        vec = base.scale_poly(lam)
        g = vec_gcd(vec)
        reduced = vec.exact_div(g)
        assert vec_gcd(reduced).is_one()
        assert lam.divmod(g)[1].is_zero()  # the planted factor is recovered


# --- sharp / flat -----------------------------------------------------------


def test_sharp_golden():
    h = parse_vector("9 - 12*s - s^2, 8 + 15*s, -7 - 5*s + s^2")
    assert sharp(h, 2) == tuple(QQ.from_int(v) for v in [9, 8, -7, -12, 15, -5, -1, 0, 1])


def test_sharp_zero_and_basis():
    z = PolyVec(QQ, [Poly.zero(QQ)] * 2)
    assert sharp(z, 2) == (QQ.zero,) * 6
    assert sharp(parse_vector("1, s"), 1) == tuple(QQ.from_int(v) for v in [1, 0, 0, 1])


def test_sharp_degree_bound_error():
    with pytest.raises(PolyError):
        sharp(parse_vector("s^3, 1"), 2)


def test_flat_golden():
    vals = [QQ.from_int(v) for v in [9, 8, -7, -12, 15, -5, -1, 0, 1]]
    assert flat(QQ, vals, 3) == parse_vector("9 - 12*s - s^2, 8 + 15*s, -7 - 5*s + s^2").transposed()
    vals = [QQ.from_int(v) for v in range(1, 16)]
    expected = parse_vector(
        "1 + 4*s + 7*s^2 + 10*s^3 + 13*s^4, 2 + 5*s + 8*s^2 + 11*s^3 + 14*s^4, 3 + 6*s + 9*s^2 + 12*s^3 + 15*s^4"
    )
    assert flat(QQ, vals, 3) == expected.transposed()
    assert flat(QQ, [QQ.zero] * 6, 3).is_zero()
    with pytest.raises(PolyError):
        flat(QQ, vals[:7], 3)


@given(
    st.lists(st.lists(st.integers(-20, 20), min_size=0, max_size=5), min_size=1, max_size=4),
    st.integers(0, 3),
)
def test_sharp_flat_mutual_inverse(lists, extra):
    h = PolyVec(QQ, [Poly.from_ints(QQ, c) for c in lists])
    t = max(0 if h.is_zero() else int(h.degree), 0) + extra
    assert flat(QQ, sharp(h, t), len(h)) == h.transposed()
    m = len(h)
    vals = sharp(h, t)
    assert sharp(flat(QQ, vals, m), t) == vals


# --- vectors and matrices ----------------------------------------------------


def test_leading_vector():
    h = parse_vector("9 - 12*s - s^2, 8 + 15*s, -7 - 5*s + s^2")
    assert h.degree == 2
    assert h.leading_vector() == [QQ.from_int(-1), QQ.zero, QQ.one]
    with pytest.raises(PolyError):
        PolyVec(QQ, [Poly.zero(QQ)]).leading_vector()


def test_row_times_matrix_golden(running_vec, running_frame_matrix):
    prod = row_times_matrix(running_vec, running_frame_matrix)
    assert prod == parse_vector("1, 0, 0")
    ident = PolyMatrix.identity(QQ, 3)
    assert row_times_matrix(running_vec, ident) == running_vec
    m = PolyMatrix(QQ, [[P("-1"), P("s+1")], [P("1"), P("-s")]])
    assert row_times_matrix(parse_vector("s, s+1"), m) == parse_vector("1, 0")


def test_row_times_matrix_errors(running_vec):
    with pytest.raises(PolyError):
        row_times_matrix(running_vec, PolyMatrix.identity(QQ, 2))
    with pytest.raises(PolyError):
        row_times_matrix(running_vec.transposed(), PolyMatrix.identity(QQ, 3))


def _cofactor_det(m: PolyMatrix) -> Poly:
    n = m.nrows
    if n == 1:
        return m.rows[0][0]
    acc = Poly.zero(m.field)
    for j in range(n):
        minor = PolyMatrix(m.field, [row[:j] + row[j + 1 :] for row in m.rows[1:]])
        term = m.rows[0][j] * _cofactor_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def test_det_golden(running_frame_matrix):
    assert PolyMatrix.identity(QQ, 4).det() == P("1")
    m = PolyMatrix(QQ, [[P("-1"), P("s+1")], [P("1"), P("-s")]])
    assert m.det() == P("-1")
    d = running_frame_matrix.det()
    assert d.is_constant() and not d.is_zero()
    assert d == _cofactor_det(running_frame_matrix)


def test_det_random_vs_cofactor():
    rng = random.Random(17)
    for _ in range(20):
        m = PolyMatrix(
            QQ, [[Poly.from_ints(QQ, [rng.randint(-3, 3) for _ in range(3)]) for _ in range(3)] for _ in range(3)]
        )
        assert m.det() == _cofactor_det(m)


def test_matrix_product():
    m = PolyMatrix(QQ, [[P("s"), P("1")], [P("0"), P("s")]])
    sq = m * m
    assert sq == PolyMatrix(QQ, [[P("s^2"), P("2*s")], [P("0"), P("s^2")]])


def test_format_round_trip_spot():
    p = P("-1/2 + s - 3*s^4")
    assert parse_poly(format_poly(p)) == p
    assert format_poly(Poly.zero(QQ)) == "0"
