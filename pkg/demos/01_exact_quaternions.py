"""Exact quaternion arithmetic and the complex-pair view.

The whole library computes over the rationals: quaternions have four
rational components, complex scalars are Gaussian rationals, and no
operation ever rounds.  This script walks the basic algebra that the
higher layers are built on.
"""

from fractions import Fraction

from spinor_s3.exactnum import (
    E1, E2, E3,
    assemble,
    clifford_multiply,
    complex_split,
    quat,
    quat_multiply,
)

# The multiplication table: e1 e2 = e3 and cyclic, each imaginary unit
# squares to -1.
print("e1 * e2 =", quat_multiply(E1, E2))
print("e2 * e3 =", quat_multiply(E2, E3))
print("e2 * e1 =", quat_multiply(E2, E1), " (anticommutative)")
print("e1 * e1 =", quat_multiply(E1, E1))

# The norm form c0^2 + ... + c3^2 is multiplicative, exactly.
p = quat(Fraction(1, 2), -3, Fraction(2, 7), 1)
q = quat(4, Fraction(-1, 3), 0, Fraction(5, 2))
print("\nN(p) N(q) =", p.norm_form() * q.norm_form())
print("N(p q)    =", quat_multiply(p, q).norm_form())

# A quaternion splits into two complex numbers along the basis (e0, e2):
# q = (a + b i) e0 + (c + d i) e2, with i acting as left multiplication
# by e1.  This is the identification spinor sections are stored in.
f, g = complex_split(q)
print("\nsplit:", q, "->", f, ",", g)
print("assemble round-trips:", assemble(f, g) == q)

# The Clifford action of a frame direction on a spinor value is right
# multiplication by the negated unit; applying it twice negates.
v = quat(1, 2, 3, 4)
once = clifford_multiply(v, 2)
print("\nclifford e2:", v, "->", once)
print("applied twice:", clifford_multiply(once, 2), "= -v")
