"""Transfer from the abstract ket basis to concrete harmonic polynomials.

The intertwining map sends |0>|0> to (a multiple of) z2^k and is pushed
along the two complexified lowering operators

    left:   -1/2 * d(. along x e2)  +  i/2 * d(. along x e3)
    right:  -1/2 * d(. along -e2 x) +  i/2 * d(. along -e3 x)

whose action on the degree-one generators forms the diamond

        z2
       /  \\            left arrows:   z2 -> -z1,  conj z1 -> conj z2
    -z1    conj z1      right arrows:  z2 -> conj z1,  -z1 -> conj z2
       \\  /
      conj z2           (all other arrows give 0)

Two independent constructions of the image of |p>|q> are provided: the
closed multinomial formula and the recursive lowering; the test suite
requires them to agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .abstract_dirac import eigenbasis_abstract
from .exactnum import gauss
from .geometry import KillingPair, killing_derivative
from .polyring import G2, Polynomial, SpinorSection, Z_VIEW

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class TransferImage:
    """Image of |p>|q>: the polynomial without the global scale factor.

    The omitted scalar is sqrt((k+1) / 2pi^2); it is irrational, so it is
    carried as the exact ratio ``norm_factor_squared`` = k+1 against the
    2pi^2 volume unit instead of numerically.
    """

    k: int
    p: int
    q: int
    poly: Polynomial
    norm_factor_squared: Fraction

    def to_json(self) -> dict:
        obj = self.poly.to_json()
        obj.update(
            {
                "k": self.k,
                "p": self.p,
                "q": self.q,
                "norm_factor_squared": f"{self.norm_factor_squared.numerator}/{self.norm_factor_squared.denominator}",
            }
        )
        return obj

    @staticmethod
    def from_json(obj: dict) -> "TransferImage":
        return TransferImage(
            obj["k"],
            obj["p"],
            obj["q"],
            Polynomial.from_json(obj),
            Fraction(obj["norm_factor_squared"]),
        )


@dataclass(frozen=True)
class LoweringOperator:
    """One of the two lowering directions, acting on polynomials."""

    side: str

    def __call__(self, p: Polynomial) -> Polynomial:
        return beta_lower(self.side, p)


def beta_lower(side: str, poly: Polynomial) -> Polynomial:
    """Apply the complexified lowering operator to a polynomial.

    Implemented through the actual flow derivatives (not the diamond
    shortcut): the diamond above is what the tests check it against.
    """
    if side == LEFT:
        pair2, pair3 = KillingPair.left(2), KillingPair.left(3)
    elif side == RIGHT:
        pair2, pair3 = KillingPair.right(2), KillingPair.right(3)
    else:
        raise ValueError(f"unknown side {side!r}")
    d2 = killing_derivative(poly, pair2)
    d3 = killing_derivative(poly, pair3)
    return d2.scale(Fraction(-1, 2)) + d3.scale(gauss(0, Fraction(1, 2)))


def _check_indices(k: int, p: int, q: int) -> None:
    if k < 0:
        raise IndexError("degree k must be >= 0")
    if not 0 <= p <= k or not 0 <= q <= k:
        raise IndexError(f"(p, q) = ({p}, {q}) outside 0..{k}")


def iso_closed_form(k: int, p: int, q: int) -> TransferImage:
    """Closed multinomial formula for the image of |p>|q>.

    The sum runs over the i with all four exponents nonnegative, i.e.
    max(0, p-q) <= i <= min(p, k-q); each term's exponents add up to k.
    """
    _check_indices(k, p, q)
    prefactor = Fraction(1, math.comb(k, p) * math.comb(k, q))
    total = Polynomial.zero(Z_VIEW)
    for i in range(max(0, p - q), min(p, k - q) + 1):
        exps = (k - q - i, p - i, i, q - p + i)
        coeff = Fraction(
            math.factorial(k),
            math.factorial(exps[0]) * math.factorial(exps[1])
            * math.factorial(exps[2]) * math.factorial(exps[3]),
        )
        total = total + Polynomial.monomial(exps, gauss(coeff * prefactor), Z_VIEW)
    return TransferImage(k, p, q, total, Fraction(k + 1))


def iso_recursive(k: int, p: int, q: int) -> TransferImage:
    """Independent construction of the image of |p>|q> by lowering.

    Starts from z2^k and applies the left lowering p times and the right
    lowering q times, dividing out the exact ladder factors (k)(k-1)...;
    must reproduce :func:`iso_closed_form` term for term.
    """
    _check_indices(k, p, q)
    poly = G2**k
    for j in range(p):
        poly = beta_lower(LEFT, poly).scale(Fraction(1, k - j))
    for j in range(q):
        poly = beta_lower(RIGHT, poly).scale(Fraction(1, k - j))
    return TransferImage(k, p, q, poly, Fraction(k + 1))


def transfer_table(k: int) -> dict[tuple[int, int], Polynomial]:
    """All (k+1)^2 closed-form images, keyed by (p, q)."""
    return {
        (p, q): iso_closed_form(k, p, q).poly
        for p in range(k + 1)
        for q in range(k + 1)
    }


@dataclass(frozen=True)
class TransferredEigenvector:
    """One Dirac eigensection with its provenance in the abstract basis."""

    section: SpinorSection
    eigenvalue: Fraction
    family: str  # "plus" or "minus"
    q: int
    p: int


def transfer_eigenbasis(k: int) -> list[TransferredEigenvector]:
    """Translate the abstract eigenvector families into polynomial
    sections; 2(k+1)^2 sections in deterministic (family, q, p) order."""
    if k < 0:
        raise ValueError("degree k must be >= 0")
    table = transfer_table(k)
    plus, minus = eigenbasis_abstract(k)
    out = []
    for family in (plus, minus):
        for vector, (q, p) in zip(family.vectors, family.positions):
            f = Polynomial.zero(Z_VIEW)
            g = Polynomial.zero(Z_VIEW)
            for (r, pp), c in vector.coeffs:
                image = table[(pp, q)].scale(c)
                if r == 0:
                    f = f + image
                else:
                    g = g + image
            out.append(
                TransferredEigenvector(
                    SpinorSection(f, g, k), family.dirac_eigenvalue, family.label, q, p
                )
            )
    out.sort(key=lambda e: (e.family != "plus", e.q, e.p))
    return out
