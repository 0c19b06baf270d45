"""Exact spectrum and polynomial eigenbasis of the spin Dirac operator on
the round 3-sphere.

The library computes with big-integer rationals end to end: quaternion
algebra, harmonic polynomials, the Sp(1) representation operators, the
Dirac block matrices, the transfer to polynomial sections and the sphere
integrals are all exact.  Floating point enters only in the quadrature
cross-checks.
"""

from .exactnum import (
    GaussianRational,
    Rational,
    RationalQuaternion,
    assemble,
    clifford_multiply,
    complex_split,
    gauss,
    quat,
    quat_multiply,
)
from .polyring import (
    G1_BAR,
    G2,
    G2_BAR,
    GM1,
    Monomial,
    Polynomial,
    SpinorSection,
    X_VIEW,
    Z_VIEW,
    change_view,
    evaluate,
    laplacian_r4,
    poly_arith,
)
from .repspace import KetVector, RepMatrix, apply_l, apply_sl2, casimir
from .abstract_dirac import (
    EigenFamily,
    SpinorVector,
    dbar_apply,
    eigenbasis_abstract,
    quadratic_check,
    spectrum_table,
)
from .transfer import (
    TransferImage,
    TransferredEigenvector,
    beta_lower,
    iso_closed_form,
    iso_recursive,
    transfer_eigenbasis,
)
from .geometry import (
    IntegralValue,
    KillingPair,
    QuadratureResult,
    QuadratureSpec,
    dirac_section,
    eta_quadrature,
    gram_matrix,
    killing_derivative,
    l2_inner_product,
    laplace_section,
    levi_civita,
    monomial_integral,
    spin_connection,
)

__version__ = "0.1.0"
