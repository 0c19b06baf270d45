"""Exact scalars: rationals, Gaussian rationals and rational quaternions.

Everything in this module is immutable and computes without rounding.
Rationals are plain ``fractions.Fraction`` (already stored reduced, with a
positive denominator), so equality is structural everywhere.

The quaternion basis is written e0, e1, e2, e3 with the multiplication
rules e1*e2 = e3, e2*e3 = e1, e3*e1 = e2 and ei*ei = -e0 for i = 1..3.
A quaternion is identified with a pair of complex numbers through the
basis (e0, e2); the complex scalar a + b*i acts by left multiplication
with a + b*e1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

#: Rational scalars are stdlib fractions; kept as an alias so call sites
#: say what they mean.
Rational = Fraction

RationalLike = Union[int, Fraction]


def rational_to_str(r: Fraction) -> str:
    """Encode a rational as ``"num/den"`` (den always present, e.g. "-3/2")."""
    return f"{r.numerator}/{r.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse ``"num/den"`` (or a bare integer string)."""
    return Fraction(s)


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = _coerce_gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return self + (-_coerce_gauss(other))

    def __rsub__(self, other) -> "GaussianRational":
        return _coerce_gauss(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        other = _coerce_gauss(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _coerce_gauss(other)
        n = other.norm_squared()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() * GaussianRational(Fraction(1, 1) / n, 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"({self.re})+({self.im})i"

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @staticmethod
    def from_json(obj: dict) -> "GaussianRational":
        return GaussianRational(rational_from_str(obj["re"]), rational_from_str(obj["im"]))


def gauss(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    """Shorthand constructor for a Gaussian rational."""
    return GaussianRational(Fraction(re), Fraction(im))


def _coerce_gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


GAUSS_ZERO = gauss(0)
GAUSS_ONE = gauss(1)
GAUSS_I = gauss(0, 1)


@dataclass(frozen=True)
class RationalQuaternion:
    """A quaternion c0*e0 + c1*e1 + c2*e2 + c3*e3 with rational components."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(
            self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3
        )

    def __neg__(self) -> "RationalQuaternion":
        return RationalQuaternion(-self.c0, -self.c1, -self.c2, -self.c3)

    def __sub__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return self + (-other)

    def __mul__(self, other) -> "RationalQuaternion":
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return RationalQuaternion(self.c0 * s, self.c1 * s, self.c2 * s, self.c3 * s)
        return quat_multiply(self, other)

    def __rmul__(self, other) -> "RationalQuaternion":
        if isinstance(other, (int, Fraction)):
            return self * other
        return quat_multiply(other, self)

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.c0, -self.c1, -self.c2, -self.c3)

    def norm_form(self) -> Fraction:
        """The multiplicative norm c0^2 + c1^2 + c2^2 + c3^2."""
        return self.c0**2 + self.c1**2 + self.c2**2 + self.c3**2

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.components())

    def __repr__(self) -> str:
        return f"quat({self.c0}, {self.c1}, {self.c2}, {self.c3})"

    # -- JSON -----------------------------------------------------------

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.components()]

    @staticmethod
    def from_json(obj: list) -> "RationalQuaternion":
        return quat(*(rational_from_str(c) for c in obj))


def quat(c0=0, c1=0, c2=0, c3=0) -> RationalQuaternion:
    return RationalQuaternion(Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))


E0 = quat(1, 0, 0, 0)
E1 = quat(0, 1, 0, 0)
E2 = quat(0, 0, 1, 0)
E3 = quat(0, 0, 0, 1)

#: Imaginary basis, indexed 1..3 (index 0 is the identity e0).
BASIS = (E0, E1, E2, E3)


def quat_multiply(a: RationalQuaternion, b: RationalQuaternion) -> RationalQuaternion:
    """Hamilton product with the convention e1*e2 = e3."""
    a0, a1, a2, a3 = a.components()
    b0, b1, b2, b3 = b.components()
    return RationalQuaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def complex_split(q: RationalQuaternion) -> tuple[GaussianRational, GaussianRational]:
    """Split q into its complex components along the basis (e0, e2).

    Returns (f, g) with q = (f.re + f.im*e1)*e0 + (g.re + g.im*e1)*e2.
    """
    return (
        GaussianRational(q.c0, q.c1),
        GaussianRational(q.c2, q.c3),
    )


def assemble(f: GaussianRational, g: GaussianRational) -> RationalQuaternion:
    """Inverse of :func:`complex_split`."""
    return RationalQuaternion(f.re, f.im, g.re, g.im)


def clifford_multiply(q: RationalQuaternion, i: int) -> RationalQuaternion:
    """Clifford action of the i-th imaginary direction on a spinor value.

    On the trivialised spinor bundle this is right multiplication by -e_i;
    applying it twice with the same i gives -q.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"axis index must be 1, 2 or 3, got {i}")
    return quat_multiply(q, -BASIS[i])
