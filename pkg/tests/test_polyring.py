"""Polynomial ring: arithmetic, view changes, the flat Laplacian and
exact evaluation."""

import random
from fractions import Fraction

import pytest

from spinor_s3.exactnum import GaussianRational, gauss
from spinor_s3.polyring import (
    G1_BAR,
    G2,
    G2_BAR,
    GM1,
    Polynomial,
    SpinorSection,
    X0,
    X1,
    X2,
    X3,
    X_VIEW,
    Z_VIEW,
    change_view,
    evaluate,
    laplacian_r4,
    poly_arith,
)

I = gauss(0, 1)
Z1 = -GM1
Z2 = G2


def random_poly(rng, view, max_degree=3, n_terms=4):
    terms = {}
    for _ in range(n_terms):
        exp = [0, 0, 0, 0]
        for _ in range(rng.randint(0, max_degree)):
            exp[rng.randrange(4)] += 1
        terms[tuple(exp)] = GaussianRational(
            Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
        )
    return Polynomial(terms, view)


def random_point(rng):
    return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(4))


def test_poly_arith_examples():
    assert poly_arith(G2, G2, "mul").terms == {(2, 0, 0, 0): gauss(1)}
    assert poly_arith(Z1 + Z2, Z1 - Z2, "mul") == Z1 * Z1 - Z2 * Z2
    assert poly_arith(poly_arith(G2, I, "scale"), I, "scale") == -G2


def test_no_zero_terms_stored():
    p = G2 - G2
    assert p.terms == {} and p.is_zero()
    assert (G2 * 0).is_zero()


def test_change_view_examples():
    assert change_view(X2, Z_VIEW) == (G2 + G2_BAR).scale(Fraction(1, 2))
    gm1_x = change_view(GM1, X_VIEW)
    assert gm1_x.terms == {(1, 0, 0, 0): gauss(-1), (0, 1, 0, 0): gauss(0, -1)}


def test_change_view_roundtrip_random():
    rng = random.Random(10)
    for _ in range(40):
        p = random_poly(rng, rng.choice([X_VIEW, Z_VIEW]))
        other = Z_VIEW if p.view == X_VIEW else X_VIEW
        assert change_view(change_view(p, other), p.view) == p


def test_change_view_is_ring_isomorphism():
    rng = random.Random(11)
    for _ in range(25):
        a = random_poly(rng, X_VIEW)
        b = random_poly(rng, X_VIEW)
        assert change_view(a + b, Z_VIEW) == change_view(a, Z_VIEW) + change_view(b, Z_VIEW)
        assert change_view(a * b, Z_VIEW) == change_view(a, Z_VIEW) * change_view(b, Z_VIEW)


def test_mixed_view_arithmetic_autoconverts():
    assert (X2 + G2).view == X_VIEW
    assert X2 + G2 == X2 * 2 + X3.scale(I)


def test_laplacian_examples():
    assert laplacian_r4(X0 * X0 - X1 * X1).is_zero()
    assert laplacian_r4(X0 * X0) == Polynomial.constant(2, X_VIEW)
    for k in range(9):
        assert laplacian_r4(G2**k).is_zero()


def test_laplacian_linear_and_degree_drop():
    rng = random.Random(12)
    for _ in range(25):
        a = random_poly(rng, X_VIEW)
        b = random_poly(rng, X_VIEW)
        assert laplacian_r4(a + b) == laplacian_r4(a) + laplacian_r4(b)
    for exp, want in (((4, 0, 0, 0), 2), ((2, 2, 0, 0), 2), ((1, 1, 1, 1), 2)):
        p = Polynomial.monomial(exp, 1, X_VIEW)
        lap = laplacian_r4(p)
        if not lap.is_zero():
            assert lap.degree() == p.degree() - 2


def test_evaluate_examples():
    assert evaluate(G2, (0, 0, 1, 0)) == gauss(1)
    assert evaluate(GM1, (1, 0, 0, 0)) == gauss(-1)


def test_evaluate_consistent_across_views():
    rng = random.Random(13)
    for _ in range(30):
        p = random_poly(rng, Z_VIEW)
        x = random_point(rng)
        assert p.evaluate(x) == change_view(p, X_VIEW).evaluate(x)


def test_homogeneous_scaling():
    rng = random.Random(14)
    for k in (1, 2, 3, 5):
        p = G2**k + GM1 * G1_BAR * (G2 ** (k - 2)) if k >= 2 else G2**k
        assert p.is_homogeneous() and p.degree() == k
        for _ in range(5):
            t = Fraction(rng.randint(1, 7), rng.randint(1, 7))
            x = random_point(rng)
            tx = tuple(t * c for c in x)
            assert p.evaluate(tx) == p.evaluate(x) * gauss(t**k)


def test_conjugate_matches_pointwise_conjugation():
    rng = random.Random(15)
    for _ in range(30):
        p = random_poly(rng, rng.choice([X_VIEW, Z_VIEW]))
        x = random_point(rng)
        assert p.conjugate().evaluate(x) == p.evaluate(x).conjugate()


def test_term_order_deterministic():
    p = G2 + G2_BAR * 3 + G2 * G2
    exps = [exp for exp, _ in p.terms_sorted()]
    assert exps == [(1, 0, 0, 0), (0, 1, 0, 0), (2, 0, 0, 0)]


def test_power_rejects_negative():
    with pytest.raises(ValueError):
        G2 ** (-1)


def test_spinor_section_evaluate_assembles_quaternion():
    rng = random.Random(16)
    s = SpinorSection(Z2, -Z1, 1)
    x = (Fraction(3, 5), Fraction(4, 5), Fraction(0), Fraction(0))
    v = s.evaluate(x)
    # f = z2 = 0 here, g = -z1 = -(3/5 + 4/5 i) acting on e2
    assert (v.c0, v.c1) == (0, 0)
    assert (v.c2, v.c3) == (Fraction(-3, 5), Fraction(-4, 5))
    for _ in range(10):
        f, g = random_poly(rng, Z_VIEW), random_poly(rng, Z_VIEW)
        s = SpinorSection(f, g)
        pt = random_point(rng)
        q = s.evaluate(pt)
        assert (GaussianRational(q.c0, q.c1), GaussianRational(q.c2, q.c3)) == (
            f.evaluate(pt),
            g.evaluate(pt),
        )


def test_spinor_right_mul_squares_to_minus_one():
    rng = random.Random(17)
    for _ in range(10):
        s = SpinorSection(random_poly(rng, Z_VIEW), random_poly(rng, Z_VIEW))
        for i in (1, 2, 3):
            twice = s.right_mul_basis(i).right_mul_basis(i)
            assert twice == SpinorSection(-s.f, -s.g)


def test_spinor_degree_inference():
    assert SpinorSection(G2**2, Polynomial.zero()).degree == 2
    assert SpinorSection(Polynomial.zero(), Polynomial.zero()).degree == 0
    assert SpinorSection(G2 + G2**2, Polynomial.zero()).degree is None
