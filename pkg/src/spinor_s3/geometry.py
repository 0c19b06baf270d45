"""Geometric operators on polynomial sections of the 3-sphere.

The unit sphere in H carries the left-invariant frame of the three
imaginary units.  Derivatives along the flows x -> t^{-1} x s are exact
polynomial operations (the generating vector fields x -> xS - Tx are
linear), and integrals over the sphere are exact rationals recorded in
units of the total volume 2*pi^2, so pi never enters the arithmetic.
Floating point appears only in the quadrature cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from . import linalg
from .exactnum import (
    BASIS,
    GAUSS_ZERO,
    GaussianRational,
    RationalQuaternion,
    gauss,
    quat,
    quat_multiply,
)
from .polyring import Polynomial, SpinorSection, X_VIEW, Z_VIEW


@dataclass(frozen=True)
class KillingPair:
    """Generator (S, T) of the isometry flow x -> exp(tT)^{-1} x exp(tS).

    The associated vector field x -> xS - Tx is linear in x and, for
    imaginary S and T, tangent to every sphere around the origin.
    """

    S: RationalQuaternion
    T: RationalQuaternion

    @staticmethod
    def left(i: int) -> "KillingPair":
        """The pair (e_i, 0) generating the left-invariant frame field."""
        if i not in (1, 2, 3):
            raise ValueError(f"axis index must be 1, 2 or 3, got {i}")
        return KillingPair(BASIS[i], quat())

    @staticmethod
    def right(i: int) -> "KillingPair":
        if i not in (1, 2, 3):
            raise ValueError(f"axis index must be 1, 2 or 3, got {i}")
        return KillingPair(quat(), BASIS[i])

    def field_at(self, x: RationalQuaternion) -> RationalQuaternion:
        return quat_multiply(x, self.S) - quat_multiply(self.T, x)


# Frame change between the real coordinates and the z-view generators
# (z2, conj z2, -z1, conj z1); rows express a generator in x coordinates.
_FRAME = [
    [gauss(0), gauss(0), gauss(1), gauss(0, 1)],
    [gauss(0), gauss(0), gauss(1), gauss(0, -1)],
    [gauss(-1), gauss(0, -1), gauss(0), gauss(0)],
    [gauss(1), gauss(0, -1), gauss(0), gauss(0)],
]
_FRAME_INV = [
    [gauss(0), gauss(0), gauss(Fraction(-1, 2)), gauss(Fraction(1, 2))],
    [gauss(0), gauss(0), gauss(0, Fraction(1, 2)), gauss(0, Fraction(1, 2))],
    [gauss(Fraction(1, 2)), gauss(Fraction(1, 2)), gauss(0), gauss(0)],
    [gauss(0, Fraction(-1, 2)), gauss(0, Fraction(1, 2)), gauss(0), gauss(0)],
]


@lru_cache(maxsize=None)
def killing_field_matrix(pair: KillingPair, view: str) -> tuple[tuple[GaussianRational, ...], ...]:
    """Matrix of the linear field x -> xS - Tx in the given view's frame."""
    cols = [pair.field_at(BASIS[n]).components() for n in range(4)]
    a = [[gauss(cols[n][m]) for n in range(4)] for m in range(4)]
    if view == X_VIEW:
        return tuple(tuple(row) for row in a)
    b = linalg.mat_mul(_FRAME, linalg.mat_mul(a, _FRAME_INV))
    return tuple(tuple(row) for row in b)


def killing_derivative(
    sigma: Union[Polynomial, SpinorSection], pair: KillingPair
) -> Union[Polynomial, SpinorSection]:
    """Exact derivative of sigma along the field x -> xS - Tx.

    Acts componentwise on spinor sections; preserves homogeneous degree
    and harmonicity (the field is skew-symmetric on R^4).
    """
    if isinstance(sigma, SpinorSection):
        return SpinorSection(
            killing_derivative(sigma.f, pair),
            killing_derivative(sigma.g, pair),
            sigma.degree,
        )
    matrix = killing_field_matrix(pair, sigma.view)
    acc = Polynomial.zero(sigma.view)
    for m in range(4):
        pd = sigma.partial(m)
        if pd.is_zero():
            continue
        component = Polynomial(
            {tuple(1 if n == j else 0 for n in range(4)): matrix[m][j] for j in range(4)},
            sigma.view,
        )
        acc = acc + pd * component
    return acc


def dbar_section(sigma: SpinorSection) -> SpinorSection:
    """The shifted operator -sum_i (l_i sigma) * e_i (no constant term)."""
    out = SpinorSection.zero(sigma.f.view)
    for i in (1, 2, 3):
        out = out - killing_derivative(sigma, KillingPair.left(i)).right_mul_basis(i)
    return out


def dirac_section(sigma: SpinorSection) -> SpinorSection:
    """The Dirac operator on a trivialised section.

    Assembles sigma as a quaternion-valued polynomial, takes the frame
    derivatives, right-multiplies by the frame units and subtracts the
    3/2 curvature constant:  D(sigma) = -sum_i (l_i sigma) * e_i - 3/2 sigma.
    """
    return dbar_section(sigma) - sigma.scale(Fraction(3, 2))


def laplace_section(sigma: SpinorSection) -> SpinorSection:
    """The Laplace operator sum_i l_i l_i sigma.

    With this sign it acts on degree-k eigensections by 1 - (k+1)^2, i.e.
    the analyst's negative-spectrum convention; negate for the geometer's
    positive Laplacian.
    """
    out = SpinorSection.zero(sigma.f.view)
    for i in (1, 2, 3):
        pair = KillingPair.left(i)
        out = out + killing_derivative(killing_derivative(sigma, pair), pair)
    return out


def laplace_section_via_hessian(sigma: SpinorSection) -> SpinorSection:
    """The Laplacian from the full Hessian formula.

    Computes sum_a [ l_a l_a sigma - D_{nabla_a a} sigma ] with the
    connection terms taken from :func:`levi_civita`; they vanish in this
    frame, which is exactly what reduces the Hessian form to
    :func:`laplace_section`.  Kept as an independent route for tests.
    """
    out = SpinorSection.zero(sigma.f.view)
    for a in (1, 2, 3):
        pair = KillingPair.left(a)
        out = out + killing_derivative(killing_derivative(sigma, pair), pair)
        correction = levi_civita(a, a)
        if not correction.is_zero():
            out = out - killing_derivative(sigma, KillingPair(correction, quat()))
    return out


def levi_civita(i: int, j: int) -> RationalQuaternion:
    """Covariant derivative constants of the frame: 0 on the diagonal,
    the quaternion product e_i e_j otherwise."""
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError("frame indices must be in 1..3")
    if i == j:
        return quat()
    return quat_multiply(BASIS[i], BASIS[j])


def spin_connection(i: int) -> RationalQuaternion:
    """Spin covariant derivative of the trivialising section: -e_i / 2."""
    if i not in (1, 2, 3):
        raise ValueError("frame index must be in 1..3")
    return BASIS[i] * Fraction(-1, 2)


# -- exact integration -------------------------------------------------------


@dataclass(frozen=True)
class IntegralValue:
    """An exact sphere integral, stored as a multiple of the volume 2*pi^2."""

    coefficient: GaussianRational

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def float_value(self) -> complex:
        return complex(self.coefficient) * (2.0 * math.pi**2)

    def to_json(self) -> dict:
        return {"unit": "2pi^2", "value": self.coefficient.to_json()}

    @staticmethod
    def from_json(obj: dict) -> "IntegralValue":
        if obj.get("unit") != "2pi^2":
            raise ValueError(f"unexpected integral unit {obj.get('unit')!r}")
        return IntegralValue(GaussianRational.from_json(obj["value"]))


def monomial_integral(l1: int, l2: int, l3: int, l4: int) -> IntegralValue:
    """Exact sphere integral of z2^l1 conj(z2)^l2 (-z1)^l3 conj(z1)^l4.

    Nonzero only when l1 == l2 and l3 == l4, in which case the value is
    (-1)^l4 * l1! l3! / (l1+l3+1)! in 2*pi^2 units.
    """
    if min(l1, l2, l3, l4) < 0:
        raise ValueError("exponents must be nonnegative")
    if l1 != l2 or l3 != l4:
        return IntegralValue(GAUSS_ZERO)
    value = Fraction(math.factorial(l1) * math.factorial(l3), math.factorial(l1 + l3 + 1))
    if l4 % 2:
        value = -value
    return IntegralValue(gauss(value))


def l2_inner_product(a: Polynomial, b: Polynomial) -> IntegralValue:
    """Exact L2 pairing integral of conj(a) * b, conjugate-linear in a."""
    product = a.conjugate().in_view(Z_VIEW) * b.in_view(Z_VIEW)
    total = GAUSS_ZERO
    for exp, coeff in product.terms.items():
        weight = monomial_integral(*exp).coefficient
        if not weight.is_zero():
            total = total + coeff * weight
    return IntegralValue(total)


# -- numeric quadrature -------------------------------------------------------


@dataclass(frozen=True)
class QuadratureSpec:
    """Node specification: a tensor rule (trapezoid x trapezoid x
    Gauss-Legendre) or seeded Monte Carlo."""

    rule: str
    n_angular: Optional[int] = None
    n_radial: Optional[int] = None
    samples: Optional[int] = None
    seed: Optional[int] = None

    @staticmethod
    def tensor(n_angular: int, n_radial: int) -> "QuadratureSpec":
        return QuadratureSpec("tensor", n_angular=n_angular, n_radial=n_radial)

    @staticmethod
    def monte_carlo(samples: int, seed: int) -> "QuadratureSpec":
        return QuadratureSpec("mc", samples=samples, seed=seed)

    def validate(self) -> None:
        if self.rule == "tensor":
            if not self.n_angular or self.n_angular < 1:
                raise ValueError("tensor rule needs n_angular >= 1")
            if not self.n_radial or self.n_radial < 1:
                raise ValueError("tensor rule needs n_radial >= 1")
        elif self.rule == "mc":
            if not self.samples or self.samples < 1:
                raise ValueError("monte carlo rule needs samples >= 1")
            if self.seed is None:
                raise ValueError("monte carlo rule needs an explicit seed")
        else:
            raise ValueError(f"unknown quadrature rule {self.rule!r}")

    def to_json(self) -> dict:
        if self.rule == "tensor":
            return {"rule": "tensor", "n_angular": self.n_angular, "n_radial": self.n_radial}
        return {"rule": "mc", "samples": self.samples, "seed": self.seed}

    @staticmethod
    def from_json(obj: dict) -> "QuadratureSpec":
        if obj["rule"] == "tensor":
            return QuadratureSpec.tensor(obj["n_angular"], obj["n_radial"])
        if obj["rule"] == "mc":
            return QuadratureSpec.monte_carlo(obj["samples"], obj["seed"])
        raise ValueError(f"unknown quadrature rule {obj['rule']!r}")


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    stderr: Optional[float] = None


def _complex_terms(f: Polynomial):
    fz = f.in_view(Z_VIEW)
    return [(exp, complex(coeff)) for exp, coeff in fz.terms_sorted()]


def _eval_terms(terms, z1, z2):
    u = (z2, np.conj(z2), -z1, np.conj(z1))
    total = np.zeros(np.broadcast(z1, z2).shape, dtype=complex)
    for (a, b, c, d), coeff in terms:
        total = total + coeff * u[0] ** a * u[1] ** b * u[2] ** c * u[3] ** d
    return total

_MC_CHUNK = 1 << 16


def eta_quadrature(f: Polynomial, spec: QuadratureSpec) -> QuadratureResult:
    """Numeric sphere integral of f through the torus-times-interval chart
    (t, s, rho) -> (e^{it} sqrt(rho), e^{is} sqrt(1-rho)), whose volume
    element is dt ds drho / 2.

    The tensor rule integrates any polynomial of total degree d exactly
    (up to roundoff) once n_angular > d and 2*n_radial - 1 >= d/2.  Monte
    Carlo draws its samples in fixed chunks of 2^16, one spawned child
    stream per chunk from SeedSequence(seed), so the estimate is
    reproducible no matter how chunks are scheduled.
    """
    spec.validate()
    terms = _complex_terms(f)
    if spec.rule == "tensor":
        nt, nr = spec.n_angular, spec.n_radial
        t = 2.0 * np.pi * np.arange(nt) / nt
        nodes, weights = np.polynomial.legendre.leggauss(nr)
        rho = (nodes + 1.0) / 2.0
        w_rho = weights / 2.0
        tt = t[:, None, None]
        ss = t[None, :, None]
        rr = rho[None, None, :]
        z1 = np.exp(1j * tt) * np.sqrt(rr)
        z2 = np.exp(1j * ss) * np.sqrt(1.0 - rr)
        values = _eval_terms(terms, z1, z2)
        cell = (2.0 * np.pi / nt) ** 2 * 0.5
        total = cell * np.sum(values * w_rho[None, None, :])
        return QuadratureResult(complex(total), None)

    total_re = total_im = sq_re = sq_im = 0.0
    n = spec.samples
    children = np.random.SeedSequence(spec.seed).spawn((n + _MC_CHUNK - 1) // _MC_CHUNK)
    drawn = 0
    for child in children:
        m = min(_MC_CHUNK, n - drawn)
        rng = np.random.default_rng(child)
        x = rng.standard_normal((m, 4))
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        z1 = x[:, 0] + 1j * x[:, 1]
        z2 = x[:, 2] + 1j * x[:, 3]
        values = _eval_terms(terms, z1, z2)
        total_re += float(np.sum(values.real))
        total_im += float(np.sum(values.imag))
        sq_re += float(np.sum(values.real**2))
        sq_im += float(np.sum(values.imag**2))
        drawn += m
    volume = 2.0 * math.pi**2
    mean = complex(total_re / n, total_im / n)
    var_re = max(sq_re / n - (total_re / n) ** 2, 0.0)
    var_im = max(sq_im / n - (total_im / n) ** 2, 0.0)
    stderr = volume * math.sqrt((var_re + var_im) / n)
    return QuadratureResult(mean * volume, stderr)


def gram_matrix(k: int) -> list[list[IntegralValue]]:
    """Exact Gram matrix of the (k+1)^2 transferred basis polynomials,
    rows and columns ordered by (p, q); diagonal by weight orthogonality."""
    from .transfer import iso_closed_form  # deferred: transfer imports this module

    if k < 0:
        raise ValueError("degree k must be >= 0")
    images = [
        iso_closed_form(k, p, q).poly for p in range(k + 1) for q in range(k + 1)
    ]
    return [[l2_inner_product(a, b) for b in images] for a in images]
