"""Verification suites behind ``spinor-s3 verify``.

Each suite is a list of independent jobs (usually one per degree k) that
return :class:`CheckResult` records.  Jobs are pure, so they may run on a
thread pool; the report order is fixed afterwards by each record's sort
key, not by completion order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import linalg
from .abstract_dirac import dbar_apply, dbar_apply_first_principles, dbar_block_matrix, \
    eigenbasis_abstract, quadratic_check, SpinorVector
from .exactnum import BASIS, gauss, quat_multiply
from .geometry import (
    QuadratureSpec,
    eta_quadrature,
    gram_matrix,
    l2_inner_product,
    laplace_section,
    dirac_section,
    monomial_integral,
)
from .polyring import G2, Polynomial, Z_VIEW, laplacian_r4
from .repspace import casimir, casimir_expected, l_matrix
from .transfer import LEFT, RIGHT, beta_lower, iso_closed_form, iso_recursive, \
    transfer_eigenbasis

SUITE_NAMES = ("casimir", "quadratic", "dirac", "transfer", "laplace", "integral")

DEFAULT_K_MAX = {
    "casimir": 12,
    "quadratic": 12,
    "dirac": 6,
    "transfer": 8,
    "laplace": 6,
    "integral": 8,
}

TENSOR_REL_TOL = 1e-8
MC_SIGMAS = 3.0

#: Monte Carlo cross-check integrands, as z-view exponent tuples.
MC_MONOMIALS = (
    (0, 0, 0, 0),
    (1, 1, 0, 0),
    (1, 0, 0, 0),
    (2, 2, 0, 0),
    (1, 1, 1, 1),
    (0, 0, 2, 2),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str
    sort_key: tuple

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  [{self.suite}] {self.name}: {self.detail}"


def _result(suite: str, name: str, passed: bool, detail: str, key: tuple) -> CheckResult:
    return CheckResult(suite, name, passed, detail, (suite,) + key)


# -- casimir -------------------------------------------------------------


def _check_casimir_k(k: int) -> list[CheckResult]:
    out = []
    ok = casimir(k) == casimir_expected(k)
    out.append(_result("casimir", f"casimir k={k}", ok, f"-(l1^2+l2^2+l3^2) = {k * (k + 2)} id", (k, 0)))

    comm_ok = True
    for i, j in ((1, 2), (2, 3), (3, 1), (2, 1), (3, 2), (1, 3)):
        mi = l_matrix(i, k).rows()
        mj = l_matrix(j, k).rows()
        comm = linalg.mat_sub(linalg.mat_mul(mi, mj), linalg.mat_mul(mj, mi))
        prod = quat_multiply(BASIS[i], BASIS[j])
        m, sign = next(
            (idx, c) for idx, c in enumerate(prod.components()) if c != 0
        )
        expected = linalg.mat_scale(l_matrix(m, k).rows(), gauss(2 * sign))
        comm_ok = comm_ok and linalg.mat_eq(comm, expected)
    out.append(_result("casimir", f"commutators k={k}", comm_ok,
                       "[l_i, l_j] = 2 l_(e_i e_j) for all ordered pairs", (k, 1)))
    return out


# -- quadratic + spectrum ------------------------------------------------


def _check_quadratic_k(k: int) -> list[CheckResult]:
    out = []
    out.append(_result("quadratic", f"quadratic relation k={k}", quadratic_check(k),
                       f"(Dbar + {k})(Dbar - {k + 2}) = 0 on the 2(k+1) block", (k, 0)))

    n = 2 * (k + 1)
    block = dbar_block_matrix(k)
    char = linalg.charpoly(block)
    expected_char = linalg.charpoly_from_roots([(Fraction(k + 2), k), (Fraction(-k), k + 2)])
    plus_null = linalg.nullity(
        linalg.mat_add(block, linalg.mat_scale(linalg.identity(n), gauss(-(k + 2))))
    )
    minus_null = linalg.nullity(
        linalg.mat_add(block, linalg.mat_scale(linalg.identity(n), gauss(k)))
    )
    plus, minus = eigenbasis_abstract(k)
    diag_ok = (
        char == expected_char
        and plus_null * (k + 1) == k * (k + 1) == len(plus)
        and minus_null * (k + 1) == (k + 1) * (k + 2) == len(minus)
    )
    out.append(_result(
        "quadratic", f"spectrum two ways k={k}", diag_ok,
        f"families vs exact diagonalization: mult({Fraction(2 * k + 1, 2)}) = {k * (k + 1)}, "
        f"mult({Fraction(-2 * k - 3, 2)}) = {(k + 1) * (k + 2)}",
        (k, 1),
    ))

    rank_ok = True
    for q in range(k + 1):
        rows = [v.dense() for fam in (plus, minus) for v in fam.vectors if v.q == q]
        rank_ok = rank_ok and linalg.rank(rows) == n
    out.append(_result("quadratic", f"family union is a basis k={k}", rank_ok,
                       f"rank {n} on every q slice", (k, 2)))

    fp_ok = all(
        dbar_apply(SpinorVector.basis(k, 0, r, p)).coeffs
        == dbar_apply_first_principles(SpinorVector.basis(k, 0, r, p)).coeffs
        for r in (0, 2)
        for p in range(k + 1)
    )
    out.append(_result("quadratic", f"closed Dbar = first principles k={k}", fp_ok,
                       "-sum (l_i .) e_i reproduces the two-term formulas", (k, 3)))
    return out


# -- transfer ----------------------------------------------------------------


def _check_transfer_k(k: int) -> list[CheckResult]:
    out = []
    closed = {
        (p, q): iso_closed_form(k, p, q) for p in range(k + 1) for q in range(k + 1)
    }

    agree = all(
        iso_recursive(k, p, q).poly == img.poly for (p, q), img in closed.items()
    )
    out.append(_result("transfer", f"closed form = recursive k={k}", agree,
                       f"all {(k + 1) ** 2} images agree exactly", (k, 0)))

    equi = True
    for (p, q), img in closed.items():
        left = beta_lower(LEFT, img.poly)
        expect = closed[(p + 1, q)].poly.scale(k - p) if p < k else Polynomial.zero(Z_VIEW)
        equi = equi and left == expect
        right = beta_lower(RIGHT, img.poly)
        expect = closed[(p, q + 1)].poly.scale(k - q) if q < k else Polynomial.zero(Z_VIEW)
        equi = equi and right == expect
    out.append(_result("transfer", f"equivariance k={k}", equi,
                       "lowering commutes with the transfer on both sides", (k, 1)))

    harmonic = all(laplacian_r4(img.poly).is_zero() for img in closed.values())
    out.append(_result("transfer", f"harmonicity k={k}", harmonic,
                       "flat Laplacian annihilates every image", (k, 2)))

    books = all(
        all(e >= 0 for e in exp) and sum(exp) == k
        for img in closed.values()
        for exp in img.poly.terms
    )
    out.append(_result("transfer", f"exponent bookkeeping k={k}", books,
                       "all exponents >= 0 and sum to k", (k, 3)))

    columns = sorted({exp for img in closed.values() for exp in img.poly.terms})
    col_index = {exp: j for j, exp in enumerate(columns)}
    rows = []
    for img in closed.values():
        row = [gauss(0)] * len(columns)
        for exp, c in img.poly.terms.items():
            row[col_index[exp]] = c
        rows.append(row)
    full = linalg.rank(rows) == (k + 1) ** 2
    out.append(_result("transfer", f"images independent k={k}", full,
                       f"rank {(k + 1) ** 2} over the Gaussian rationals", (k, 4)))
    return out


# -- dirac / laplace on sections -------------------------------------------------


def _check_dirac_k(k: int) -> list[CheckResult]:
    good = 0
    sections = transfer_eigenbasis(k)
    for entry in sections:
        if (dirac_section(entry.section) - entry.section.scale(entry.eigenvalue)).is_zero():
            good += 1
    ok = good == len(sections) == 2 * (k + 1) ** 2
    return [_result("dirac", f"eigen-identity k={k}", ok,
                    f"{good}/{2 * (k + 1) ** 2} sections satisfy D sigma = lambda sigma exactly",
                    (k,))]


def _check_laplace_k(k: int) -> list[CheckResult]:
    lam = 1 - (k + 1) ** 2
    sections = transfer_eigenbasis(k)
    eig_ok = all(
        (laplace_section(e.section) - e.section.scale(lam)).is_zero() for e in sections
    )
    comm_ok = all(
        laplace_section(dirac_section(e.section)) == dirac_section(laplace_section(e.section))
        for e in sections
    )
    return [
        _result("laplace", f"laplace eigenvalue k={k}", eig_ok,
                f"Delta sigma = {lam} sigma on all {len(sections)} sections", (k, 0)),
        _result("laplace", f"dirac-laplace commute k={k}", comm_ok,
                "Delta D sigma = D Delta sigma on all sections", (k, 1)),
    ]


# -- integration -----------------------------------------------------------------


def _norm_check(k: int) -> bool:
    value = l2_inner_product(G2**k, G2**k)
    return value.coefficient == gauss(Fraction(1, k + 1))


def _check_integral_exact() -> list[CheckResult]:
    out = []
    ok = (
        monomial_integral(0, 0, 0, 0).coefficient == gauss(1)
        and monomial_integral(1, 0, 0, 0).is_zero()
        and monomial_integral(0, 0, 1, 1).coefficient == gauss(Fraction(-1, 2))
        and all(
            monomial_integral(k, k, 0, 0).coefficient == gauss(Fraction(1, k + 1))
            for k in range(9)
        )
    )
    out.append(_result("integral", "closed monomial formula", ok,
                       "(-1)^l4 l1! l3! / (l1+l3+1)! in 2pi^2 units", (0,)))

    norms = all(_norm_check(k) for k in range(9))
    out.append(_result("integral", "power norms", norms,
                       "<z2^k, z2^k> = 2pi^2/(k+1) for k <= 8", (1,)))
    return out


def _check_integral_tensor(max_degree: int = 8) -> list[CheckResult]:
    spec = QuadratureSpec.tensor(max_degree + 1, (max_degree + 2 + 1) // 2)
    worst = 0.0
    ok = True
    count = 0
    for l1 in range(max_degree + 1):
        for l2 in range(max_degree + 1 - l1):
            for l3 in range(max_degree + 1 - l1 - l2):
                for l4 in range(max_degree + 1 - l1 - l2 - l3):
                    exact = monomial_integral(l1, l2, l3, l4).float_value()
                    poly = Polynomial.monomial((l1, l2, l3, l4), 1, Z_VIEW)
                    numeric = eta_quadrature(poly, spec).value
                    err = abs(numeric - exact) / (1.0 + abs(exact))
                    worst = max(worst, err)
                    ok = ok and err <= TENSOR_REL_TOL
                    count += 1
    return [_result("integral", "tensor rule vs exact", ok,
                    f"{count} monomials of degree <= {max_degree}, worst relative error {worst:.12g}",
                    (2,))]


def _check_integral_mc(samples: int, seed: int) -> list[CheckResult]:
    ok = True
    details = []
    for exps in MC_MONOMIALS:
        exact = monomial_integral(*exps).float_value()
        poly = Polynomial.monomial(exps, 1, Z_VIEW)
        result = eta_quadrature(poly, QuadratureSpec.monte_carlo(samples, seed))
        bound = MC_SIGMAS * (result.stderr or 0.0) + 1e-12
        good = abs(result.value - exact) <= bound
        ok = ok and good
        details.append(f"{exps}:{abs(result.value - exact):.3g}<= {bound:.3g}")
    return [_result("integral", "monte carlo vs exact", ok,
                    f"{samples} samples, seed {seed}, |error| <= 3 sigma: " + ", ".join(details),
                    (3,))]


def _check_gram(k_max: int = 5) -> list[CheckResult]:
    out = []
    for k in range(k_max + 1):
        gram = gram_matrix(k)
        n = len(gram)
        diagonal = all(
            gram[i][j].is_zero() for i in range(n) for j in range(n) if i != j
        )
        ratios = set()
        real = True
        for p in range(k + 1):
            for q in range(k + 1):
                entry = gram[p * (k + 1) + q][p * (k + 1) + q].coefficient
                real = real and entry.im == 0
                ratios.add(entry.re * math.comb(k, p) * math.comb(k, q))
        ok = diagonal and real and len(ratios) == 1
        constant = next(iter(ratios)) if len(ratios) == 1 else None
        out.append(_result("integral", f"gram structure k={k}", ok,
                           f"diagonal, proportional to 1/(C(k,p)C(k,q)); constant {constant}",
                           (4, k)))
    return out


# -- suite assembly ---------------------------------------------------------------


def suite_jobs(
    suite: str,
    k_max: Optional[int] = None,
    rule: Optional[str] = None,
    samples: int = 1_000_000,
    seed: int = 0,
) -> list[Callable[[], list[CheckResult]]]:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}")
    top = DEFAULT_K_MAX[suite] if k_max is None else k_max
    per_k = {
        "casimir": _check_casimir_k,
        "quadratic": _check_quadratic_k,
        "dirac": _check_dirac_k,
        "transfer": _check_transfer_k,
        "laplace": _check_laplace_k,
    }
    if suite in per_k:
        fn = per_k[suite]
        return [(lambda kk=k: fn(kk)) for k in range(top + 1)]

    jobs: list[Callable[[], list[CheckResult]]] = [_check_integral_exact]
    if rule in (None, "tensor"):
        jobs.append(_check_integral_tensor)
    if rule in (None, "mc"):
        jobs.append(lambda: _check_integral_mc(samples, seed))
    jobs.append(lambda: _check_gram(min(top, 5)))
    return jobs


def run_suites(
    suites: list[str],
    k_max: Optional[int] = None,
    rule: Optional[str] = None,
    samples: int = 1_000_000,
    seed: int = 0,
    workers: int = 1,
) -> list[CheckResult]:
    jobs = []
    for suite in suites:
        jobs.extend(suite_jobs(suite, k_max=k_max, rule=rule, samples=samples, seed=seed))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda job: job(), jobs))
    else:
        batches = [job() for job in jobs]
    results = [r for batch in batches for r in batch]
    results.sort(key=lambda r: r.sort_key)
    return results
