# -*- coding: utf-8 -*-

"""Forms with poles along f = 0 and the degeneration of the pole spectral
sequence.

A meromorphic k-form is α / f^s with α polynomial. Its exterior derivative is
d(α / f^s) = d_f^(p) α / f^(s+1) with p = k - s, so questions about the pole
filtration become questions about the twisted differentials. The second page
equals the limit exactly when every (n-1)-form α with f² | d_f^(p) α
satisfies d_f^(p) α = d_f^(p)(f ζ) for some ζ; this module checks that
inclusion weight by weight.
"""

from dataclasses import dataclass, field
import logging
from typing import List, Optional

import pandas

from .cohomology import (
    basis_form,
    complex_slice,
    coordinates,
    graded_basis,
    parallel_map,
)
from .errors import PreconditionError
from .forms import (
    DifferentialForm,
    MultiVector,
    differential_of,
    exterior_derivative,
    form_weighted_degrees,
    interior_product,
    twisted_diff,
    wedge,
)
from .groebner import milnor_data, quasi_homogeneous_degree
from .linalg import LinearSolver, SparseMatrix, kernel

logger = logging.getLogger(__name__)


def _divide_form(alpha, g):
    """α / g if g divides every coefficient, else None."""
    data = {}
    for I, c in alpha.components.items():
        quotient = c.exact_divide(g)
        if quotient is None:
            return None
        data[I] = quotient
    return DifferentialForm(alpha.nvars, alpha.degree, data)


def divides_form(g, alpha, times=1):
    """Whether g^times divides every coefficient of α, by repeated division."""
    for _ in range(times):
        alpha = _divide_form(alpha, g)
        if alpha is None:
            return False
    return True


class MeromorphicForm:
    """numerator / f^pole_order, stored with the fewest possible powers of f.

    Parameters
    ----------
    numerator : DifferentialForm
        The polynomial form α.
    pole_order : int
        s ≥ 0.
    f : Polynomial
        The polynomial defining the poles.
    """

    __slots__ = ("numerator", "pole_order", "f")

    def __init__(self, numerator, pole_order, f):
        if pole_order < 0:
            raise PreconditionError(
                f"The pole order must be non-negative: {pole_order}"
            )
        if f.is_zero() or f.is_constant():
            raise PreconditionError("Poles need a nonconstant f")
        if numerator.nvars != f.nvars:
            raise PreconditionError("The numerator and f live in different variables")
        if numerator.is_zero():
            pole_order = 0
        while pole_order > 0:
            reduced = _divide_form(numerator, f)
            if reduced is None:
                break
            numerator = reduced
            pole_order -= 1
        self.numerator = numerator
        self.pole_order = pole_order
        self.f = f

    @property
    def degree(self):
        return self.numerator.degree

    @property
    def filtration_twist(self):
        """p = k - s, the twist under which d acts on the numerator."""
        return self.degree - self.pole_order

    def __eq__(self, other):
        if not isinstance(other, MeromorphicForm):
            return NotImplemented
        return (
            self.f == other.f
            and self.pole_order == other.pole_order
            and self.numerator == other.numerator
        )

    def __hash__(self):
        return hash((self.numerator, self.pole_order, self.f))

    def to_string(self, names=None):
        text = self.numerator.to_string(names)
        if self.pole_order == 0:
            return text
        denominator = f"({self.f.to_string(names)})"
        if self.pole_order > 1:
            denominator += f"^{self.pole_order}"
        return f"({text})/{denominator}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MeromorphicForm({self.to_string()!r})"


def meromorphic_d(omega, f, p):
    """d(α / f^s) = d_f^(p) α / f^(s+1), p = deg α - s."""
    if f != omega.f:
        raise PreconditionError("The form has poles along a different polynomial")
    if p + omega.pole_order != omega.degree:
        raise PreconditionError(
            f"p + s = {p} + {omega.pole_order} does not equal the degree {omega.degree}"
        )
    return MeromorphicForm(twisted_diff(f, p, omega.numerator), omega.pole_order + 1, f)


def singular_to_twisted(omega):
    """f^k ω = f^(k-s) α for a k-form ω = α / f^s with s ≤ k.

    This is a chain map to (Ω^•, d_f^(0)):
    f^(k+1) dω = d_f^(0)(f^k ω).
    """
    k = omega.degree
    s = omega.pole_order
    if s > k:
        raise PreconditionError(
            f"f^{k} ω is not polynomial for a {k}-form with pole order {s}"
        )
    return omega.numerator.scale(omega.f ** (k - s))


@dataclass
class FiltrationSliceReport:
    """Result of the inclusion d(Z_2) ⊆ B_1 weight by weight."""

    p: int
    q: int
    r: int = 2
    degrees: List[int] = field(default_factory=list)
    z_dims: List[int] = field(default_factory=list)
    inclusion: List[bool] = field(default_factory=list)
    witnesses: List[Optional[DifferentialForm]] = field(default_factory=list)
    projective: bool = False

    @property
    def passed(self):
        return all(self.inclusion)

    def add(self, degree, z_dim, holds, witness=None):
        self.degrees.append(degree)
        self.z_dims.append(z_dim)
        self.inclusion.append(holds)
        self.witnesses.append(witness)

    def to_dataframe(self):
        return pandas.DataFrame(
            {
                "weight": self.degrees,
                "dim Z": self.z_dims,
                "inclusion": self.inclusion,
            }
        )

    def to_dict(self, names=None):
        return {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "projective": self.projective,
            "passed": self.passed,
            "degrees": [
                {
                    "degree": d,
                    "z_dim": z,
                    "inclusion_holds": holds,
                    "witness": None if w is None else w.to_string(names),
                }
                for d, z, holds, w in zip(
                    self.degrees, self.z_dims, self.inclusion, self.witnesses
                )
            ],
        }


def _inclusion(f, W, p, k, d, domain, zetas):
    """Check d_f^(p)(Z) ⊆ d_f^(p)(f·span zetas) in weight d.

    Z is the subspace of span(domain) whose image is divisible by f².

    Returns
    -------
    (int, bool, DifferentialForm or None)
        dim Z, whether the inclusion holds, and a counterexample.
    """
    n = f.nvars
    N = quasi_homogeneous_degree(f, W)
    codomain = graded_basis(n, k + 1, W, d + N)
    index = {element: i for i, element in enumerate(codomain)}
    images = [coordinates(twisted_diff(f, p, alpha), index) for alpha in domain]
    square = f * f
    multiples = [
        coordinates(basis_form(element, n).scale(square), index)
        for element in graded_basis(n, k + 1, W, d - N)
    ]
    columns = {j: c for j, c in enumerate(images + multiples) if c}
    combined = SparseMatrix(len(codomain), len(images) + len(multiples), columns)
    Z = []
    for vector in kernel(combined):
        alpha = DifferentialForm.zero(n, k)
        for j, value in vector.items():
            if j < len(domain):
                alpha = alpha + domain[j].scale(value)
        if alpha:
            Z.append(alpha)

    boundaries = [
        coordinates(twisted_diff(f, p, zeta.scale(f)), index) for zeta in zetas
    ]
    solver = LinearSolver(
        SparseMatrix(
            len(codomain),
            len(boundaries),
            {j: c for j, c in enumerate(boundaries) if c},
        )
    )
    for alpha in Z:
        image = twisted_diff(f, p, alpha)
        if solver.solve(coordinates(image, index)) is None:
            logger.warning(f"inclusion fails in weight {d} for {alpha}")
            return len(Z), False, alpha
    return len(Z), True, None


def verify_witness(f, p, alpha):
    """Check a counterexample: f² divides d_f^(p) α exactly."""
    return divides_form(f, twisted_diff(f, p, alpha), times=2)


def e2_degeneration_check(f, W, p, q, D=None, threads=None):
    """Check the local degeneration criterion at every weight up to D.

    Parameters
    ----------
    f : Polynomial
        An isolated quasi-homogeneous singularity in n variables.
    W : WeightSystem
    p, q : int
        p + q = n - 1 and q > 0.
    D : int, optional
        The maximal weight, 2N + Σw by default.

    Returns
    -------
    FiltrationSliceReport
    """
    n = f.nvars
    if p + q != n - 1 or q <= 0:
        raise PreconditionError(f"Need p + q = {n - 1} and q > 0, got p={p}, q={q}")
    data = milnor_data(f, W)
    N = data.N
    if D is None:
        D = 2 * N + W.total
    k = n - 1

    def check(d):
        domain = [basis_form(e, n) for e in graded_basis(n, k, W, d)]
        zetas = [basis_form(e, n) for e in graded_basis(n, k, W, d - N)]
        return _inclusion(f, W, p, k, d, domain, zetas)

    report = FiltrationSliceReport(p, q)
    for d, (z_dim, holds, witness) in zip(
        range(D + 1), parallel_map(check, range(D + 1), threads)
    ):
        report.add(d, z_dim, holds, witness)
    logger.info(f"E2 check p={p} q={q}: {'pass' if report.passed else 'FAIL'}")
    return report


# Euler-primitive forms and the weighted projective case


def euler_primitive_basis(n, k, W, d):
    """A basis of {α of degree k and weight d : i_W α = 0}."""
    W.check_arity(n)
    elements = graded_basis(n, k, W, d)
    forms = [basis_form(e, n) for e in elements]
    if k == 0:
        return forms
    E = MultiVector.euler_field(W)
    codomain = graded_basis(n, k - 1, W, d)
    index = {element: i for i, element in enumerate(codomain)}
    columns = {}
    for j, alpha in enumerate(forms):
        column = coordinates(interior_product(E, alpha), index)
        if column:
            columns[j] = column
    matrix = SparseMatrix(len(codomain), len(forms), columns)
    result = []
    for vector in kernel(matrix):
        alpha = DifferentialForm.zero(n, k)
        for j, value in vector.items():
            alpha = alpha + forms[j].scale(value)
        result.append(alpha)
    return result


def is_primitive(alpha, W):
    if alpha.degree == 0:
        return True
    return interior_product(MultiVector.euler_field(W), alpha).is_zero()


def projective_degeneration_check(f, W, p, q, alpha=None):
    """Check the degeneration criterion on i_W-primitive forms of weight qN.

    Parameters
    ----------
    f : Polynomial
        Quasi-homogeneous in n + 1 variables with an isolated singularity.
    W : WeightSystem
    p, q : int
        The forms have degree p + q, at most n, and q > 0.
    alpha : DifferentialForm, optional
        Check only this primitive form instead of the whole space.

    Returns
    -------
    FiltrationSliceReport
    """
    m = f.nvars
    k = p + q
    if q <= 0 or not 0 <= k <= m - 1:
        raise PreconditionError(
            f"Need q > 0 and 0 ≤ p + q ≤ {m - 1}, got p={p}, q={q}"
        )
    data = milnor_data(f, W)
    N = data.N
    d = q * N
    if alpha is not None:
        if alpha.degree != k or form_weighted_degrees(alpha, W) - {d}:
            raise PreconditionError(
                f"The form must be a {k}-form of weighted degree {d}"
            )
        if not is_primitive(alpha, W):
            raise PreconditionError(f"{alpha} is not primitive: i_W α ≠ 0")
        domain = [alpha]
    else:
        domain = euler_primitive_basis(m, k, W, d)
    zetas = euler_primitive_basis(m, k, W, d - N) if d - N >= 0 else []
    z_dim, holds, witness = _inclusion(f, W, p, k, d, domain, zetas)
    report = FiltrationSliceReport(p, q, projective=True)
    report.add(d, z_dim, holds, witness)
    logger.info(f"projective check p={p} q={q}: {'pass' if holds else 'FAIL'}")
    return report


# Identities used by the degeneration arguments


def euler_identity_residual(f, W, p, alpha):
    """i_W d_f^(p) α + d_f^(p-1) i_W α - f (e - (k - p) N) α, for α of weight e.

    Vanishes identically for quasi-homogeneous f.
    """
    N = quasi_homogeneous_degree(f, W)
    n = f.nvars
    k = alpha.degree
    weights = form_weighted_degrees(alpha, W)
    if not weights:
        return DifferentialForm.zero(n, k)
    if len(weights) != 1:
        raise PreconditionError(f"{alpha} is not of a single weighted degree")
    e = weights.pop()
    E = MultiVector.euler_field(W)
    lhs = DifferentialForm.zero(n, k)
    if k < n:
        lhs = interior_product(E, twisted_diff(f, p, alpha))
    if k > 0:
        lhs = lhs + twisted_diff(f, p - 1, interior_product(E, alpha))
    return lhs - alpha.scale(f * (e - (k - p) * N))


def jacobian_membership_check(f, W, p, zeta):
    """Whether the coefficient of d_f^(p+1) ζ lies in the Jacobian ideal."""
    n = f.nvars
    if zeta.degree != n - 1:
        raise PreconditionError("ζ must be an (n-1)-form")
    data = milnor_data(f, W)
    eta = twisted_diff(f, p + 1, zeta)
    return data.jacobian_gb.contains(eta.top_coefficient)


def _is_coboundary(f, W, p, k, eta):
    """Whether the (k+1)-form η, of a single weight, is d_f^(p) of a k-form."""
    N = quasi_homogeneous_degree(f, W)
    weights = form_weighted_degrees(eta, W)
    if not weights:
        return True
    (e,) = weights
    if e - N < 0:
        return False
    s = complex_slice(f, W, p, k, e - N)
    target = coordinates(eta, s.codomain_index())
    return LinearSolver(s.matrix).solve(target) is not None


def primitive_lemma_check(f, W, p, g):
    """Compare g σ ∈ B^{m-1}_{f,p} with g ν ∈ B^m_{f,p+1}, σ = i_W ν.

    g must have weighted degree (m - 1 - p) N - Σw, the degree in which the
    degeneration argument uses the equivalence.

    Returns
    -------
    (bool, bool)
        Membership of g σ and of g ν.
    """
    m = f.nvars
    N = quasi_homogeneous_degree(f, W)
    expected = (m - 1 - p) * N - W.total
    if not g.is_zero() and g.weighted_degrees(W) != {expected}:
        raise PreconditionError(f"g must have weighted degree {expected}")
    nu = DifferentialForm.volume(m, g)
    sigma = interior_product(MultiVector.euler_field(W), nu)
    return (
        _is_coboundary(f, W, p, m - 2, sigma),
        _is_coboundary(f, W, p + 1, m - 1, nu),
    )


def quotient_rule_numerator(omega):
    """f^(s+1) dω from the quotient rule, as a polynomial form.

    d(α f^-s) = f^-(s+1) (f dα - s df∧α)
    """
    f = omega.f
    s = omega.pole_order
    alpha = omega.numerator
    df = differential_of(f)
    return exterior_derivative(alpha).scale(f) - wedge(df, alpha).scale(s)
