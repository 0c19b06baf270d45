"""Geometric operators on sections and exact/numeric sphere integration."""

import math
import random
from fractions import Fraction

import pytest

from spinor_s3.exactnum import BASIS, E0, E3, clifford_multiply, gauss, quat
from spinor_s3.geometry import (
    IntegralValue,
    KillingPair,
    QuadratureSpec,
    dirac_section,
    eta_quadrature,
    gram_matrix,
    killing_derivative,
    l2_inner_product,
    laplace_section,
    laplace_section_via_hessian,
    levi_civita,
    monomial_integral,
    spin_connection,
)
from spinor_s3.polyring import (
    G1_BAR,
    G2,
    G2_BAR,
    GM1,
    Polynomial,
    SpinorSection,
    X_VIEW,
    Z_VIEW,
    change_view,
    laplacian_r4,
)
from spinor_s3.transfer import iso_closed_form

I = gauss(0, 1)
Z1 = -GM1
Z2 = G2


def random_poly(rng, view=Z_VIEW, max_degree=3, n_terms=4):
    terms = {}
    for _ in range(n_terms):
        exp = [0, 0, 0, 0]
        for _ in range(rng.randint(0, max_degree)):
            exp[rng.randrange(4)] += 1
        terms[tuple(exp)] = gauss(rng.randint(-9, 9), rng.randint(-9, 9))
    return Polynomial(terms, view)


# -- derivatives along the flows ------------------------------------------------


def test_killing_derivative_pinned_values():
    pair_diag = KillingPair(BASIS[1], BASIS[1])
    assert killing_derivative(Z2, pair_diag) == Z2.scale(gauss(0, -2))

    left = killing_derivative(Z2, KillingPair.left(1))
    assert left == Z2.scale(gauss(0, -1))

    # the diagonal flow is the composition of the two one-sided ones
    right = killing_derivative(Z2, KillingPair.right(1))
    assert killing_derivative(Z2, pair_diag) == left + right


def test_killing_derivative_kills_constants():
    rng = random.Random(20)
    c = Polynomial.constant(gauss(3, -2), Z_VIEW)
    for _ in range(10):
        pair = KillingPair(
            quat(0, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
            quat(0, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
        )
        assert killing_derivative(c, pair).is_zero()


def test_killing_field_tangent_to_sphere():
    points = [
        quat(Fraction(3, 5), Fraction(4, 5), 0, 0),
        quat(0, Fraction(5, 13), Fraction(12, 13), 0),
        quat(Fraction(1, 3), Fraction(2, 3), 0, Fraction(2, 3)),
    ]
    rng = random.Random(21)
    for _ in range(10):
        pair = KillingPair(
            quat(0, rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)),
            quat(0, rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)),
        )
        for x in points:
            assert x.norm_form() == 1
            v = pair.field_at(x)
            inner = sum(a * b for a, b in zip(x.components(), v.components()))
            assert inner == 0


def test_killing_derivative_same_in_both_views():
    rng = random.Random(22)
    for _ in range(20):
        p = random_poly(rng, Z_VIEW)
        pair = KillingPair(
            quat(0, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
            quat(0, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)),
        )
        via_z = killing_derivative(p, pair)
        via_x = killing_derivative(change_view(p, X_VIEW), pair)
        assert change_view(via_x, Z_VIEW) == via_z


def test_killing_derivative_preserves_degree_and_harmonicity():
    for k in range(1, 9):
        for p in range(k + 1):
            for q in range(k + 1):
                poly = iso_closed_form(k, p, q).poly
                for i in (1, 2, 3):
                    image = killing_derivative(poly, KillingPair.left(i))
                    if not image.is_zero():
                        assert image.is_homogeneous() and image.degree() == k
                        assert laplacian_r4(image).is_zero()


# -- Dirac and Laplace on sections ------------------------------------------------


def test_dirac_on_constant_section():
    sigma = SpinorSection(Polynomial.constant(1, Z_VIEW), Polynomial.zero(Z_VIEW), 0)
    out = dirac_section(sigma)
    assert out.f == Polynomial.constant(Fraction(-3, 2), Z_VIEW)
    assert out.g.is_zero()


@pytest.mark.parametrize("k", range(6))
def test_dirac_on_top_power(k):
    sigma = SpinorSection(G2**k, Polynomial.zero(Z_VIEW), k)
    expected = sigma.scale(Fraction(-2 * k - 3, 2))
    assert dirac_section(sigma) == expected


def test_dirac_k1_plus_section_by_hand():
    # f = -z1, g = -z2 is the transferred plus vector at k=1, q=0
    sigma = SpinorSection(GM1, -Z2, 1)
    assert dirac_section(sigma) == sigma.scale(Fraction(3, 2))


def test_laplace_examples():
    const = SpinorSection(Polynomial.constant(5, Z_VIEW), Polynomial.zero(Z_VIEW), 0)
    assert laplace_section(const).is_zero()

    sigma = SpinorSection(Z2, Polynomial.zero(Z_VIEW), 1)
    assert laplace_section(sigma) == sigma.scale(-3)

    for p in range(3):
        for q in range(3):
            sigma = SpinorSection(iso_closed_form(2, p, q).poly, Polynomial.zero(Z_VIEW), 2)
            assert laplace_section(sigma) == sigma.scale(-8)


def test_laplace_hessian_reduction():
    rng = random.Random(23)
    for _ in range(8):
        sigma = SpinorSection(random_poly(rng), random_poly(rng))
        assert laplace_section_via_hessian(sigma) == laplace_section(sigma)


def test_dirac_laplace_commute_on_random_sections():
    rng = random.Random(24)
    for _ in range(5):
        sigma = SpinorSection(random_poly(rng), random_poly(rng))
        assert laplace_section(dirac_section(sigma)) == dirac_section(laplace_section(sigma))


def test_levi_civita_constants():
    assert levi_civita(1, 1).is_zero()
    assert levi_civita(1, 2) == E3
    assert levi_civita(2, 1) == -E3
    with pytest.raises(ValueError):
        levi_civita(0, 1)


def test_spin_connection():
    for i in (1, 2, 3):
        assert spin_connection(i) == BASIS[i] * Fraction(-1, 2)
    total = quat()
    for i in (1, 2, 3):
        total = total + clifford_multiply(spin_connection(i), i)
    assert total == E0 * Fraction(-3, 2)


# -- exact integration -------------------------------------------------------------


def test_monomial_integral_values():
    assert monomial_integral(0, 0, 0, 0).coefficient == gauss(1)
    for k in range(9):
        assert monomial_integral(k, k, 0, 0).coefficient == gauss(Fraction(1, k + 1))
    assert monomial_integral(1, 0, 0, 0).is_zero()
    assert monomial_integral(0, 0, 1, 1).coefficient == gauss(Fraction(-1, 2))
    with pytest.raises(ValueError):
        monomial_integral(-1, 0, 0, 0)


def test_l2_norms_of_powers():
    for k in range(9):
        value = l2_inner_product(G2**k, G2**k)
        assert value.coefficient == gauss(Fraction(1, k + 1))


def test_l2_orthogonality_examples():
    assert l2_inner_product(G2, G1_BAR).is_zero()
    a = iso_closed_form(2, 0, 0).poly
    b = iso_closed_form(2, 1, 0).poly
    assert l2_inner_product(a, b).is_zero()


def test_l2_conjugate_linear_first_argument():
    a, b = G2 + GM1.scale(I), G2_BAR * G2
    scaled = l2_inner_product(a.scale(gauss(2, 3)), b)
    plain = l2_inner_product(a, b)
    assert scaled.coefficient == gauss(2, 3).conjugate() * plain.coefficient
    swapped = l2_inner_product(b, a.scale(gauss(2, 3)))
    assert swapped.coefficient == (scaled.coefficient).conjugate()


def test_l2_positive_on_real_norms():
    rng = random.Random(25)
    for _ in range(10):
        p = random_poly(rng)
        norm = l2_inner_product(p, p).coefficient
        assert norm.im == 0 and norm.re >= 0


# -- quadrature --------------------------------------------------------------------


def test_tensor_quadrature_pinned_values():
    spec = QuadratureSpec.tensor(9, 5)
    vol = eta_quadrature(Polynomial.constant(1, Z_VIEW), spec).value
    assert abs(vol - 2 * math.pi**2) < 1e-9

    mixed = eta_quadrature(G2 * G2_BAR, spec).value
    assert abs(mixed - math.pi**2) < 1e-9

    odd = eta_quadrature(G2, spec).value
    assert abs(odd) < 1e-9


def test_tensor_quadrature_matches_exact_on_degree_4():
    spec = QuadratureSpec.tensor(6, 4)
    for exps in ((1, 1, 0, 0), (0, 0, 2, 2), (1, 1, 1, 1), (2, 1, 1, 0)):
        exact = monomial_integral(*exps).float_value()
        numeric = eta_quadrature(Polynomial.monomial(exps, 1, Z_VIEW), spec).value
        assert abs(numeric - exact) <= 1e-8 * (1 + abs(exact))


def test_monte_carlo_within_three_sigma():
    result = eta_quadrature(G2 * G2_BAR, QuadratureSpec.monte_carlo(40_000, 7))
    exact = monomial_integral(1, 1, 0, 0).float_value()
    assert result.stderr is not None
    assert abs(result.value - exact) <= 3 * result.stderr + 1e-12


def test_monte_carlo_reproducible():
    spec = QuadratureSpec.monte_carlo(30_000, 42)
    a = eta_quadrature(G2 * G2_BAR, spec)
    b = eta_quadrature(G2 * G2_BAR, spec)
    assert a.value == b.value and a.stderr == b.stderr


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        eta_quadrature(G2, QuadratureSpec.tensor(0, 5))
    with pytest.raises(ValueError):
        eta_quadrature(G2, QuadratureSpec.tensor(5, 0))
    with pytest.raises(ValueError):
        eta_quadrature(G2, QuadratureSpec.monte_carlo(0, 1))
    with pytest.raises(ValueError):
        eta_quadrature(G2, QuadratureSpec("nodes"))


# -- Gram matrices ------------------------------------------------------------------


def test_gram_k0_is_volume():
    gram = gram_matrix(0)
    assert len(gram) == 1
    assert gram[0][0].coefficient == gauss(1)


def test_gram_k1_diagonal_with_known_entry():
    gram = gram_matrix(1)
    assert len(gram) == 4
    for i in range(4):
        for j in range(4):
            if i != j:
                assert gram[i][j].is_zero()
    assert gram[0][0].coefficient == gauss(Fraction(1, 2))


def test_gram_diagonal_proportional_to_binomial_pattern():
    for k in range(4):
        gram = gram_matrix(k)
        ratios = set()
        for p in range(k + 1):
            for q in range(k + 1):
                entry = gram[p * (k + 1) + q][p * (k + 1) + q].coefficient
                assert entry.im == 0
                ratios.add(entry.re * math.comb(k, p) * math.comb(k, q))
        assert len(ratios) == 1


def test_integral_value_float():
    assert IntegralValue(gauss(1)).float_value() == pytest.approx(2 * math.pi**2)
