"""The irreducible Sp(1) representation on symmetric powers.

H_k has the ket basis |p>, p = 0..k, where |p> carries p factors e2 and
k-p factors e0.  The infinitesimal actions of the imaginary units are

    l1 |p> = (2p - k) i |p>
    l2 |p> = (p - k) |p+1> + p |p-1>
    l3 |p> = (p - k) i |p+1> - p i |p-1>

with |-1> and |k+1> read as zero.  The (p - k) coefficient in l3 is the
only bandwidth-one choice compatible with [l2, l3] = 2 l1 given l1 and l2;
see VERIFICATION.md for the full pinning argument.

The complexified ladder operators are normalised so that

    H |p> = (k - 2p) |p>      (H = i * l1, highest weight +k on |0>)
    X |p> = p |p-1>           (X = (l2 + i*l3)/2, lowers p)
    Y |p> = (k - p) |p+1>     (Y = (-l2 + i*l3)/2, raises p)

which satisfy [H, X] = 2X, [H, Y] = -2Y and [X, Y] = H exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exactnum import GAUSS_I, GAUSS_ONE, GAUSS_ZERO, GaussianRational, gauss


@dataclass(frozen=True)
class KetVector:
    """A vector in H_k as a dense coefficient tuple over |0>..|k>."""

    k: int
    coeffs: tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("degree k must be >= 0")
        if len(self.coeffs) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @staticmethod
    def zero(k: int) -> "KetVector":
        return KetVector(k, (GAUSS_ZERO,) * (k + 1))

    @staticmethod
    def basis(k: int, p: int) -> "KetVector":
        if not 0 <= p <= k:
            raise ValueError(f"ket index p={p} outside 0..{k}")
        coeffs = [GAUSS_ZERO] * (k + 1)
        coeffs[p] = GAUSS_ONE
        return KetVector(k, tuple(coeffs))

    def __add__(self, other: "KetVector") -> "KetVector":
        assert self.k == other.k
        return KetVector(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "KetVector") -> "KetVector":
        assert self.k == other.k
        return KetVector(self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "KetVector":
        return KetVector(self.k, tuple(-a for a in self.coeffs))

    def scale(self, c) -> "KetVector":
        if not isinstance(c, GaussianRational):
            c = gauss(c)
        return KetVector(self.k, tuple(a * c for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def _shift_term(out: list, p: int, k: int, coeff: GaussianRational) -> None:
    # kets outside 0..k are identically zero
    if 0 <= p <= k and not coeff.is_zero():
        out[p] = out[p] + coeff


def apply_l(i: int, v: KetVector) -> KetVector:
    """Infinitesimal action of the i-th imaginary unit on H_k."""
    if i not in (1, 2, 3):
        raise ValueError(f"axis index must be 1, 2 or 3, got {i}")
    k = v.k
    out = [GAUSS_ZERO] * (k + 1)
    for p, c in enumerate(v.coeffs):
        if c.is_zero():
            continue
        if i == 1:
            _shift_term(out, p, k, c * gauss(0, 2 * p - k))
        elif i == 2:
            _shift_term(out, p + 1, k, c * gauss(p - k))
            _shift_term(out, p - 1, k, c * gauss(p))
        else:
            _shift_term(out, p + 1, k, c * gauss(0, p - k))
            _shift_term(out, p - 1, k, c * gauss(0, -p))
    return KetVector(k, tuple(out))


_HALF = gauss(Fraction(1, 2))
_I_HALF = gauss(0, Fraction(1, 2))


def apply_sl2(which: str, v: KetVector) -> KetVector:
    """Complexified ladder operators H, X, Y (see module docstring)."""
    if which == "H":
        return apply_l(1, v).scale(GAUSS_I)
    if which == "X":
        return apply_l(2, v).scale(_HALF) + apply_l(3, v).scale(_I_HALF)
    if which == "Y":
        return apply_l(2, v).scale(-_HALF) + apply_l(3, v).scale(_I_HALF)
    raise ValueError(f"unknown sl2 element {which!r}")


@dataclass(frozen=True)
class RepMatrix:
    """Exact (k+1) x (k+1) matrix in the ket basis."""

    k: int
    entries: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        n = self.k + 1
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("entry shape does not match k")
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))

    def rows(self) -> linalg.Matrix:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.k == other.k and self.entries == other.entries

    def to_json(self) -> dict:
        return {"k": self.k, "entries": [c.to_json() for row in self.entries for c in row]}

    @staticmethod
    def from_json(obj: dict) -> "RepMatrix":
        k = obj["k"]
        n = k + 1
        flat = [GaussianRational.from_json(c) for c in obj["entries"]]
        if len(flat) != n * n:
            raise ValueError("entry count does not match k")
        return RepMatrix(k, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def l_matrix(i: int, k: int) -> RepMatrix:
    """Matrix of apply_l(i, .) on H_k; column p is the image of |p>."""
    n = k + 1
    cols = [apply_l(i, KetVector.basis(k, p)).coeffs for p in range(n)]
    return RepMatrix(k, tuple(tuple(cols[p][r] for p in range(n)) for r in range(n)))


def casimir(k: int) -> RepMatrix:
    """The matrix of -(l1^2 + l2^2 + l3^2); equals k(k+2) times the identity."""
    if k < 0:
        raise ValueError("degree k must be >= 0")
    n = k + 1
    total = linalg.zeros(n, n)
    for i in (1, 2, 3):
        m = l_matrix(i, k).rows()
        total = linalg.mat_add(total, linalg.mat_mul(m, m))
    neg = linalg.mat_scale(total, gauss(-1))
    return RepMatrix(k, tuple(tuple(row) for row in neg))


def casimir_expected(k: int) -> RepMatrix:
    scaled = linalg.mat_scale(linalg.identity(k + 1), gauss(k * (k + 2)))
    return RepMatrix(k, tuple(tuple(row) for row in scaled))
