import random

import pytest

from omframe.fields import GF, QQ
from omframe.frame import (
    MovingFrame,
    bezout_from_profile,
    det_is_nonzero_constant,
    mu_basis_from_profile,
    optimal_moving_frame,
    profile_beta,
    profile_mu,
    verify_frame,
)
from omframe.parser import parse_poly, parse_vector
from omframe.poly import Poly, PolyError, PolyMatrix, PolyVec, row_times_matrix
from omframe.reference import random_poly_vec
from omframe.sylvester import build_system, partial_rref

from conftest import RUNNING_BASIC, RUNNING_PIVOTS


def test_running_example_exact(running_vec, running_frame_matrix):
    frame = optimal_moving_frame(running_vec)
    assert frame.matrix == running_frame_matrix
    assert frame.beta == 1
    assert frame.mu == (2, 2)
    assert frame.gcd == Poly.one(QQ)
    assert frame.profile.pivots == RUNNING_PIVOTS
    assert frame.profile.basic == RUNNING_BASIC


def test_unit_vector_gives_identity():
    for n in (2, 3, 5):
        a = PolyVec(QQ, [Poly.one(QQ)] + [Poly.zero(QQ)] * (n - 1))
        frame = optimal_moving_frame(a)
        assert frame.matrix == PolyMatrix.identity(QQ, n)
        assert frame.beta == 0
        assert frame.mu == (0,) * (n - 1)


def test_gcd_is_divided_out():
    a = parse_vector("s^2+s, s^2")
    frame = optimal_moving_frame(a)
    assert frame.gcd == parse_poly("s")
    assert frame.beta == 0
    assert frame.mu == (1,)
    # matches the expected frame up to the sign convention of the mu column
    assert frame.matrix == PolyMatrix.from_int_lists(QQ, [[[1], [0, -1]], [[-1], [1, 1]]])
    assert row_times_matrix(a, frame.matrix) == PolyVec(QQ, [parse_poly("s"), Poly.zero(QQ)])


def test_zero_leading_component():
    frame = optimal_moving_frame(parse_vector("0, 1, 0"))
    assert row_times_matrix(parse_vector("0, 1, 0"), frame.matrix) == parse_vector("1, 0, 0")
    assert verify_frame(parse_vector("0, 1, 0"), frame).ok


def test_input_validation():
    with pytest.raises(PolyError):
        optimal_moving_frame(PolyVec(QQ, [parse_poly("s")]))
    with pytest.raises(PolyError):
        optimal_moving_frame(PolyVec(QQ, [Poly.zero(QQ), Poly.zero(QQ)]))
    with pytest.raises(PolyError):
        optimal_moving_frame(parse_vector("s, s+1").transposed())


def test_extract_bezout_goldens(running_vec):
    prof = partial_rref(build_system(running_vec))
    bez = bezout_from_profile(prof)
    assert bez == parse_vector("2 - s, 1 + 2*s, -1 - s").transposed()
    assert running_vec.dot(bez) == Poly.one(QQ)

    prof = partial_rref(build_system(parse_vector("1, 0, 0")))
    assert bezout_from_profile(prof) == parse_vector("1, 0, 0").transposed()

    prof = partial_rref(build_system(parse_vector("s, s+1")))
    assert bezout_from_profile(prof) == parse_vector("-1, 1").transposed()


def test_extract_mu_basis_goldens(running_vec, running_frame_matrix):
    prof = partial_rref(build_system(running_vec))
    basis = mu_basis_from_profile(prof)
    assert basis == [running_frame_matrix.col(1), running_frame_matrix.col(2)]

    prof = partial_rref(build_system(parse_vector("1, 0, 0")))
    basis = mu_basis_from_profile(prof)
    assert basis == [parse_vector("0, 1, 0").transposed(), parse_vector("0, 0, 1").transposed()]

    prof = partial_rref(build_system(parse_vector("s, s+1")))
    basis = mu_basis_from_profile(prof)
    assert len(basis) == 1
    # one syzygy generator, fixed sign convention: -(s+1, -s)
    assert basis[0] == parse_vector("-1 - s, s").transposed()
    assert parse_vector("s, s+1").dot(basis[0]).is_zero()


def test_extracts_require_trivial_gcd():
    prof = partial_rref(build_system(parse_vector("s^2+s, s^2")))
    assert prof.gcd_nontrivial
    with pytest.raises(PolyError):
        bezout_from_profile(prof)
    with pytest.raises(PolyError):
        mu_basis_from_profile(prof)
    with pytest.raises(PolyError):
        profile_beta(prof)


def test_degree_formulas_match_columns(running_vec):
    prof = partial_rref(build_system(running_vec))
    assert profile_beta(prof) == bezout_from_profile(prof).degree
    assert profile_mu(prof) == tuple(u.degree for u in mu_basis_from_profile(prof))


def test_verify_frame_golden(running_vec, running_frame_matrix):
    report = verify_frame(running_vec, running_frame_matrix)
    assert report.ok
    assert [c.name for c in report.checks] == [
        "product",
        "det-constant",
        "mu-ordered",
        "degree-bounds",
        "bezout-degree",
        "mu-sum",
        "leading-vectors",
    ]


def test_verify_frame_identity_fails_product(running_vec):
    report = verify_frame(running_vec, PolyMatrix.identity(QQ, 3))
    by_name = report.as_dict()
    assert not by_name["product"]["ok"]
    assert not report.ok


def test_verify_upper_bound_witness():
    # a = [1, 0, s^d] with the companion frame of degree exactly d
    d = 5
    a = parse_vector("1, 0, s^5")
    rows = [
        [parse_poly("1"), parse_poly("0"), parse_poly("-s^5")],
        [parse_poly("0"), parse_poly("1"), parse_poly("0")],
        [parse_poly("0"), parse_poly("0"), parse_poly("1")],
    ]
    frame = PolyMatrix(QQ, rows)
    report = verify_frame(a, frame)
    assert report.ok
    assert frame.degree == d


def test_verify_non_constant_det_detected():
    a = parse_vector("s, s+1")
    bad = PolyMatrix(QQ, [[parse_poly("-1"), parse_poly("-1-s")], [parse_poly("1"), parse_poly("s")]])
    scaled = PolyMatrix(QQ, [[bad.rows[0][0], bad.rows[0][1] * parse_poly("s+1")], [bad.rows[1][0], bad.rows[1][1] * parse_poly("s+1")]])
    ok, _ = det_is_nonzero_constant(scaled)
    assert not ok
    singular = PolyMatrix(QQ, [[parse_poly("s"), parse_poly("s")], [parse_poly("1"), parse_poly("1")]])
    ok, _ = det_is_nonzero_constant(singular)
    assert not ok
    report = verify_frame(a, scaled)
    assert not report.as_dict()["det-constant"]["ok"]


def test_det_constancy_small_field_fallback():
    # over GF(2) a degree-2 bound exceeds the point supply, forcing the
    # fraction-free route; s^2 + s vanishes at every point of GF(2), so a
    # pointwise check alone would misclassify it
    F = GF(2)
    one, zero = Poly.one(F), Poly.zero(F)
    ok, _ = det_is_nonzero_constant(PolyMatrix(F, [[one, parse_poly("s^2", F)], [zero, one]]))
    assert ok
    ok, _ = det_is_nonzero_constant(PolyMatrix(F, [[one, zero], [zero, parse_poly("s^2+s", F)]]))
    assert not ok


def test_small_field_frames():
    rng = random.Random(97)
    for F in (GF(2), GF(3)):
        for _ in range(40):
            n, d = rng.randint(2, 4), rng.randint(0, 5)
            a = random_poly_vec(F, n, d, rng)
            frame = optimal_moving_frame(a)
            assert verify_frame(a, frame).ok, str(a)


def test_projective_invariance():
    a = parse_vector("1+s, s^2, 3")
    lam = parse_poly("s^2 + 2")
    base = optimal_moving_frame(a)
    scaled = optimal_moving_frame(a.scale_poly(lam))
    assert scaled.matrix == base.matrix
    assert scaled.gcd == lam.monic() * base.gcd
    assert (scaled.beta, scaled.mu) == (base.beta, base.mu)


def test_degrees_invariant_under_component_permutation():
    rng = random.Random(53)
    for _ in range(20):
        n, d = rng.randint(2, 5), rng.randint(1, 6)
        a = random_poly_vec(QQ, n, d, rng, gcd_one=True)
        perm = list(range(n))
        rng.shuffle(perm)
        b = PolyVec(QQ, [a.entries[i] for i in perm])
        fa, fb = optimal_moving_frame(a), optimal_moving_frame(b)
        assert fa.beta == fb.beta and fa.mu == fb.mu


def test_random_frames_verify():
    rng = random.Random(59)
    for field in (QQ, GF(101)):
        for _ in range(100):
            n, d = rng.randint(2, 6), rng.randint(0, 8)
            a = random_poly_vec(field, n, d, rng)
            if rng.random() < 0.3:
                lam = Poly(field, [field.random(rng) for _ in range(2)] + [field.one])
                a = a.scale_poly(lam)
            frame = optimal_moving_frame(a)
            report = verify_frame(a, frame)
            assert report.ok, (str(a), str(report))


def test_moving_frame_accessors(running_vec):
    frame = optimal_moving_frame(running_vec)
    assert frame.n == 3
    assert frame.degree == 2
    assert frame.column_degrees() == (1, 2, 2)
    assert frame.bezout_vector() == frame.matrix.col(0)
    assert [u.degree for u in frame.mu_basis()] == [2, 2]
    assert isinstance(frame, MovingFrame)
